//! The verification suite: every structural fact and computed value the
//! library relies on, each as an independent row.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use bh_extra::extremal::{construct_dense_witness, construct_k2_star, eg_exact, eg_exhaustive};
use bh_extra::graph::{bipartition, edge_orbits, find_k33, girth, induced_subgraph, DEFAULT_ORBIT_SIZE_LIMIT};
use bh_extra::hypercube::{build_bh, build_xn, fiber_of, BhVertex, common_neighbor_spectrum, verify_lex_decomposition, DEFAULT_MATERIALIZE_LIMIT};
use bh_extra::pipeline::known_values_suite;
use bh_extra::{Budget, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRow {
    pub group: String,
    pub check: String,
    pub status: Status,
    pub detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub max_n: usize,
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn failed(&self) -> bool {
        self.rows.iter().any(|r| r.status == Status::Fail)
    }

    pub fn skipped(&self) -> bool {
        self.rows.iter().any(|r| r.status == Status::Skipped)
    }

    pub fn groups(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for r in &self.rows {
            if out.last() != Some(&r.group.as_str()) {
                out.push(&r.group);
            }
        }
        out
    }
}

/// Group names in the order they run.
pub const GROUPS: [&str; 9] = [
    "bipartite",
    "common-neighbors",
    "k33-free",
    "lex-decomposition",
    "quotient-girth",
    "edge-orbits",
    "eg-table",
    "dense-witnesses",
    "lambda-values",
];

type Check = Box<dyn FnOnce(&Budget) -> Result<(bool, String)>>;

fn checks(group: &str, max_n: usize) -> Vec<(String, Check)> {
    let mut out: Vec<(String, Check)> = Vec::new();
    let bh = |n| build_bh(n, DEFAULT_MATERIALIZE_LIMIT);
    match group {
        "bipartite" => {
            for n in 1..=max_n {
                out.push((
                    format!("BH_{n} is bipartite by the parity of a_0"),
                    Box::new(move |_| {
                        let g = bh(n)?;
                        Ok(match bipartition(&g) {
                            Ok(p) => {
                                let ok = p.part_x.iter().all(|&v| v % 2 == 0) && p.part_y.iter().all(|&v| v % 2 == 1);
                                (ok, format!("parts {} + {}", p.part_x.len(), p.part_y.len()))
                            }
                            Err(c) => (false, format!("odd cycle of length {}", c.0.len())),
                        })
                    }),
                ));
            }
        }
        "common-neighbors" => {
            for n in 1..=max_n {
                out.push((
                    format!("BH_{n} common neighbors in {{0, 2, 2n}}, one 2n-partner each"),
                    Box::new(move |_| {
                        let s = common_neighbor_spectrum(&bh(n)?, n)?;
                        let counts: Vec<String> = s.histogram.iter().map(|(k, c)| format!("{k}:{c}")).collect();
                        Ok((s.is_valid(), counts.join(" ")))
                    }),
                ));
            }
        }
        "k33-free" => {
            for n in 2..=max_n {
                out.push((
                    format!("BH_{n} has no K33 subgraph"),
                    Box::new(move |_| {
                        Ok(match find_k33(&bh(n)?) {
                            None => (true, "none".into()),
                            Some(k) => (false, format!("found {:?} / {:?}", k.left, k.right)),
                        })
                    }),
                ));
            }
        }
        "lex-decomposition" => {
            for n in 1..=max_n {
                out.push((
                    format!("BH_{n} = X_{n} lex 2K1"),
                    Box::new(move |_| {
                        let w = verify_lex_decomposition(n, DEFAULT_MATERIALIZE_LIMIT)?;
                        Ok((true, format!("{} edges checked both ways", w.edges_checked)))
                    }),
                ));
            }
        }
        "quotient-girth" => {
            for n in 2..=max_n {
                let expected = if n == 2 { 8 } else { 6 };
                out.push((
                    format!("girth(X_{n}) = {expected}"),
                    Box::new(move |_| {
                        let (xn, _) = build_xn(&bh(n)?, n)?;
                        Ok(match girth(&xn) {
                            Some(c) => {
                                let reps: Vec<String> = c
                                    .iter()
                                    .map(|&x| format!("({})", BhVertex::from_id(fiber_of(x).0, n).expect("in range")))
                                    .collect();
                                (c.len() == expected, format!("cycle {}", reps.join(" ")))
                            }
                            None => (false, "acyclic".into()),
                        })
                    }),
                ));
            }
        }
        "edge-orbits" => {
            for n in 1..=max_n.min(2) {
                out.push((
                    format!("BH_{n} is edge-transitive"),
                    Box::new(move |_| {
                        let r = edge_orbits(&bh(n)?, DEFAULT_ORBIT_SIZE_LIMIT)?;
                        Ok((r.orbit_count == 1, format!("{} orbit(s)", r.orbit_count)))
                    }),
                ));
            }
        }
        "eg-table" => {
            for n in 1..=max_n {
                for g in 2..=8usize.min(2 * n + 1) {
                    out.push((
                        format!("K2 star n={n} g={g} has 2g-2 edges"),
                        Box::new(move |_| {
                            let w = construct_k2_star(n, g)?;
                            Ok((w.induced_edge_count == 2 * g - 2, format!("{} edges", w.induced_edge_count)))
                        }),
                    ));
                }
            }
            for n in 2..=max_n {
                for g in 2..=8usize.min(2 * n - 1) {
                    out.push((
                        format!("e_{g}(BH_{n}) = {}", 2 * g - 2),
                        Box::new(move |budget: &Budget| {
                            let graph = bh(n)?;
                            if graph.order() > budget.exact_order_limit {
                                return Err(bh_extra::Error::TooLarge {
                                    what: format!("exact e_g on BH_{n}"),
                                    size: graph.order() as u128,
                                    limit: budget.exact_order_limit as u128,
                                });
                            }
                            let exact = eg_exact(&graph, g, budget)?;
                            let value = exact.witness.induced_edge_count;
                            let mut ok = exact.upper_bound == Some(value) && value == 2 * g - 2;
                            let mut detail = format!("{value} via {:?}", exact.route);
                            if let Ok(flat) = eg_exhaustive(&graph, g, budget) {
                                ok &= flat.induced_edge_count == value;
                                detail.push_str(", exhaustive agrees");
                            }
                            let sub = induced_subgraph(&graph, &exact.witness.vertices)?;
                            ok &= find_k33(&sub.graph).is_none();
                            Ok((ok, detail))
                        }),
                    ));
                }
            }
        }
        "dense-witnesses" => {
            let mut cases = vec![(5, 9), (6, 10), (6, 11), (7, 12)];
            for n in 5..=max_n {
                for g in 9..2 * n {
                    if !cases.contains(&(n, g)) {
                        cases.push((n, g));
                    }
                }
            }
            for (n, g) in cases {
                out.push((
                    format!("dense witness n={n} g={g} beats 2g-2 = {}", 2 * g - 2),
                    Box::new(move |_| {
                        let d = construct_dense_witness(n, g)?;
                        let e = d.witness.induced_edge_count;
                        Ok((
                            e >= d.guaranteed && e > 2 * g - 2,
                            format!("{e} edges ({}, at least {})", d.construction, d.guaranteed),
                        ))
                    }),
                ));
            }
        }
        "lambda-values" => {
            out.push((
                "known lambda values and conjecture grid".into(),
                Box::new(|budget: &Budget| {
                    let rows = known_values_suite(budget);
                    let failed: Vec<String> = rows
                        .iter()
                        .filter(|r| !r.pass)
                        .map(|r| format!("(n={}, g={})", r.n, r.g))
                        .collect();
                    let summary: Vec<String> = rows
                        .iter()
                        .map(|r| {
                            let got = r.computed.map_or("-".into(), |v| v.to_string());
                            format!("({},{}) {} vs {}", r.n, r.g, got, r.expected)
                        })
                        .collect();
                    Ok((failed.is_empty(), summary.join("; ")))
                }),
            ));
        }
        _ => {}
    }
    out
}

/// Runs the selected groups (`None` for all) in order. Once the wall budget
/// is spent, remaining rows are marked skipped.
pub fn verify_suite(max_n: usize, groups: Option<&[&str]>, budget: &Budget, timings: bool) -> SuiteReport {
    let start = Instant::now();
    let mut rows = Vec::new();
    for group in GROUPS {
        if groups.is_some_and(|g| !g.contains(&group)) {
            continue;
        }
        for (check, run) in checks(group, max_n) {
            let spent = start.elapsed();
            if spent >= budget.wall {
                rows.push(SuiteRow {
                    group: group.into(),
                    check,
                    status: Status::Skipped,
                    detail: "wall budget exhausted".into(),
                    elapsed_ms: None,
                });
                continue;
            }
            let remaining = budget.with_wall(budget.wall.saturating_sub(spent).max(Duration::from_millis(1)));
            let t = Instant::now();
            let (status, detail) = match run(&remaining) {
                Ok((true, d)) => (Status::Pass, d),
                Ok((false, d)) => (Status::Fail, d),
                Err(e) if e.is_refusal() => (Status::Skipped, e.to_string()),
                Err(e) => (Status::Fail, e.to_string()),
            };
            rows.push(SuiteRow {
                group: group.into(),
                check,
                status,
                detail,
                elapsed_ms: timings.then(|| t.elapsed().as_millis() as u64),
            });
        }
    }
    SuiteReport { max_n, rows }
}
