//! Extremal induced subgraphs: `e_g(G)`, the largest number of edges
//! induced by `g + 1` vertices.
//!
//! Three independent routes are provided:
//!
//! * [`eg_exhaustive`] walks every `(g+1)`-subset. It is the oracle.
//! * [`eg_exact`] tabulates the densest *connected* subset of each size and
//!   combines the table over integer partitions of `g + 1`. An induced
//!   subgraph's edges split over its components, so the best partition sum
//!   bounds `e_g` from above; a disjoint placement of component witnesses
//!   meeting the bound (or, failing that, a component-by-component branch
//!   and bound) certifies it.
//! * [`eg_paired_search`] and the explicit constructions give lower bounds
//!   on balanced hypercubes of any dimension.

mod bounds;
mod connected;
mod constructions;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::{binomial, Budget, Clock};
use crate::error::{Error, Result};
use crate::graph::{Graph, NeighborOracle, Vertex};

pub use bounds::{eg_bounds, EgBounds, LabelledWitness};
pub use connected::{max_edges_connected, rooted_connected_sets, ConnectedMax, ConnectedMaxTable};
pub use constructions::{
    construct_dense_witness, construct_k2_star, eg_paired_search, Construction, DenseWitness,
};

use connected::{max_edges_connected_with, GrowthBounds};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certification {
    /// The edge count is the true maximum.
    Exact,
    /// The edge count is attained, but larger values were not excluded.
    LowerBound,
    /// Only an upper bound is known; the witness is the best found.
    UpperBoundOnly,
}

/// A vertex set with its induced edge count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgraphWitness {
    pub vertices: Vec<Vertex>,
    pub induced_edge_count: usize,
    pub certification: Certification,
}

impl SubgraphWitness {
    pub fn new<G: NeighborOracle + ?Sized>(g: &G, mut vertices: Vec<Vertex>, certification: Certification) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        let induced_edge_count = g.count_induced_edges(&vertices);
        SubgraphWitness {
            vertices,
            induced_edge_count,
            certification,
        }
    }

    /// The `g` this witness speaks about (`|U| - 1`).
    pub fn g(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Recounts the induced edges and checks the set size against `g`.
    pub fn revalidate<G: NeighborOracle + ?Sized>(&self, graph: &G, g: usize) -> Result<()> {
        let mut sorted = self.vertices.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != g + 1 {
            return Err(Error::InvalidSubset(format!(
                "witness has {} distinct vertices, expected {}",
                sorted.len(),
                g + 1
            )));
        }
        let recount = graph.count_induced_edges(&sorted);
        if recount != self.induced_edge_count {
            return Err(Error::InvalidSubset(format!(
                "witness claims {} induced edges, recount gives {recount}",
                self.induced_edge_count
            )));
        }
        Ok(())
    }
}

fn subset_size(g: &Graph, gval: usize) -> Result<usize> {
    let k = gval + 1;
    if k > g.order() {
        return Err(Error::OutOfRange(format!(
            "g + 1 = {k} exceeds the graph order {}",
            g.order()
        )));
    }
    Ok(k)
}

/// `e_g` by visiting every `(g+1)`-subset; the witness is the
/// lexicographically smallest maximizer.
pub fn eg_exhaustive(g: &Graph, gval: usize, budget: &Budget) -> Result<SubgraphWitness> {
    let k = subset_size(g, gval)?;
    let count = binomial(g.order(), k);
    if count > budget.subsets {
        return Err(Error::BudgetExceeded(format!(
            "{count} subsets of size {k} exceed the enumeration budget {}; use eg_exact",
            budget.subsets
        )));
    }
    let rows = g.dense_rows("exhaustive e_g")?;
    let n = g.order();

    // Split on the first two members so the work spreads across threads;
    // prefixes are reduced in lexicographic order.
    let prefixes: Vec<Vec<Vertex>> = if k >= 2 {
        (0..n).flat_map(|a| (a + 1..n).map(move |b| vec![a, b])).collect()
    } else {
        (0..n).map(|a| vec![a]).collect()
    };
    let results: Vec<Option<(usize, Vec<Vertex>)>> = prefixes
        .par_iter()
        .map(|prefix| {
            let mut chosen = FixedBitSet::with_capacity(n);
            let mut stack = prefix.clone();
            let mut edges = 0;
            for &v in prefix {
                edges += rows[v].intersection_count(&chosen);
                chosen.insert(v);
            }
            let mut best = None;
            best_extension(rows, k, &mut stack, &mut chosen, edges, &mut best);
            best
        })
        .collect();
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    for r in results.into_iter().flatten() {
        if best.as_ref().map_or(true, |(b, _)| r.0 > *b) {
            best = Some(r);
        }
    }
    let (_, vertices) = best.ok_or_else(|| Error::Internal("no subset enumerated".into()))?;
    Ok(SubgraphWitness::new(g, vertices, Certification::Exact))
}

/// Lexicographic DFS over supersets of `stack` whose new members exceed its
/// last element; keeps the first strict maximum.
fn best_extension(
    rows: &[FixedBitSet],
    k: usize,
    stack: &mut Vec<Vertex>,
    chosen: &mut FixedBitSet,
    edges: usize,
    best: &mut Option<(usize, Vec<Vertex>)>,
) {
    if stack.len() == k {
        if best.as_ref().map_or(true, |(b, _)| edges > *b) {
            *best = Some((edges, stack.clone()));
        }
        return;
    }
    let n = rows.len();
    let start = stack.last().map_or(0, |&v| v + 1);
    let need = k - stack.len();
    for v in start..=n.saturating_sub(need) {
        let gained = rows[v].intersection_count(chosen);
        chosen.insert(v);
        stack.push(v);
        best_extension(rows, k, stack, chosen, edges + gained, best);
        stack.pop();
        chosen.set(v, false);
    }
}

/// Result of [`eg_exact`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EgExact {
    pub witness: SubgraphWitness,
    /// Certified upper bound on `e_g`; equals the witness count when exact.
    pub upper_bound: Option<usize>,
    /// How the value was certified.
    pub route: ExactRoute,
    pub table: ConnectedMaxTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExactRoute {
    /// A connected subset meets the partition bound.
    Connected,
    /// Disjoint component witnesses meet the partition bound.
    Placement,
    /// Branch and bound over component decompositions finished.
    Decomposition,
    /// Some search ran out of budget.
    Incomplete,
}

/// `best[m]`: largest `Σ c[s_i]` over multisets of sizes summing to `m`.
fn partition_bound(table: &ConnectedMaxTable, k: usize) -> Vec<Option<usize>> {
    let mut best: Vec<Option<usize>> = vec![None; k + 1];
    best[0] = Some(0);
    for m in 1..=k {
        for entry in table.iter().take(m) {
            if let (Some(c), Some(rest)) = (entry.max_edges, best[m - entry.size]) {
                let total = c + rest;
                if best[m].map_or(true, |b| total > b) {
                    best[m] = Some(total);
                }
            }
        }
    }
    best
}

/// Multisets of part sizes (descending) summing to `k` whose connected
/// maxima add up to `target`.
fn partitions_attaining(table: &ConnectedMaxTable, k: usize, target: usize) -> Vec<Vec<usize>> {
    fn rec(table: &ConnectedMaxTable, left: usize, cap: usize, value: usize, target: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            if value == target {
                out.push(acc.clone());
            }
            return;
        }
        for s in (1..=cap.min(left)).rev() {
            if let Some(c) = table[s - 1].max_edges {
                acc.push(s);
                rec(table, left - s, s, value + c, target, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(table, k, k, 0, target, &mut Vec::new(), &mut out);
    out
}

/// Picks one stored witness per part so that all are pairwise disjoint.
fn place_disjoint(table: &ConnectedMaxTable, parts: &[usize], used: &mut FixedBitSet, acc: &mut Vec<Vertex>) -> bool {
    let Some((&s, rest)) = parts.split_first() else {
        return true;
    };
    for cand in &table[s - 1].alternates {
        if cand.iter().any(|&v| used.contains(v)) {
            continue;
        }
        for &v in cand {
            used.insert(v);
        }
        acc.extend_from_slice(cand);
        if place_disjoint(table, rest, used, acc) {
            return true;
        }
        acc.truncate(acc.len() - cand.len());
        for &v in cand {
            used.set(v, false);
        }
    }
    false
}

/// `e_g` through the connected-maximum table; exact whenever the budget
/// allows, otherwise a lower-bound witness with the partition upper bound.
pub fn eg_exact(g: &Graph, gval: usize, budget: &Budget) -> Result<EgExact> {
    let k = subset_size(g, gval)?;
    let bounds = GrowthBounds::new(g);
    let mut table = Vec::with_capacity(k);
    for s in 1..=k {
        table.push(max_edges_connected_with(g, &bounds, s, usize::MAX, budget)?);
    }
    let complete = table.iter().all(|e| e.certification == Certification::Exact);
    let partition = partition_bound(&table, k);
    let upper = partition[k].ok_or_else(|| Error::Internal("no partition of g+1 is realizable".into()))?;

    let connected_witness = table[k - 1].witness.clone();
    if complete {
        if let (Some(c), Some(w)) = (table[k - 1].max_edges, &connected_witness) {
            if c == upper {
                return Ok(EgExact {
                    witness: SubgraphWitness::new(g, w.clone(), Certification::Exact),
                    upper_bound: Some(upper),
                    route: ExactRoute::Connected,
                    table,
                });
            }
        }
        for parts in partitions_attaining(&table, k, upper) {
            let mut used = FixedBitSet::with_capacity(g.order());
            let mut acc = Vec::new();
            if place_disjoint(&table, &parts, &mut used, &mut acc) {
                let witness = SubgraphWitness::new(g, acc, Certification::Exact);
                if witness.induced_edge_count != upper {
                    return Err(Error::Internal(format!(
                        "placement reached {} edges against a partition bound of {upper}",
                        witness.induced_edge_count
                    )));
                }
                return Ok(EgExact {
                    witness,
                    upper_bound: Some(upper),
                    route: ExactRoute::Placement,
                    table,
                });
            }
        }
        let mut clock = budget.clock();
        let mut search = Decompose {
            g,
            rows: g.dense_rows("component decomposition")?,
            partition: &partition,
            table: &table,
            clock: &mut clock,
            best: None,
        };
        let all = {
            let mut m = FixedBitSet::with_capacity(g.order());
            m.insert_range(..);
            m
        };
        search.run(k, &all, 0, 0, &mut Vec::new());
        let finished = !search.clock.expired();
        if let Some((value, set)) = search.best.take() {
            let cert = if finished {
                Certification::Exact
            } else {
                Certification::LowerBound
            };
            return Ok(EgExact {
                witness: SubgraphWitness::new(g, set, cert),
                upper_bound: Some(if finished { value } else { upper }),
                route: if finished {
                    ExactRoute::Decomposition
                } else {
                    ExactRoute::Incomplete
                },
                table,
            });
        }
    }

    // Budget ran out somewhere: report the best witness found.
    let witness = match connected_witness {
        Some(w) => SubgraphWitness::new(g, w, Certification::LowerBound),
        None => SubgraphWitness::new(g, (0..k).collect(), Certification::LowerBound),
    };
    Ok(EgExact {
        witness,
        upper_bound: complete.then_some(upper),
        route: ExactRoute::Incomplete,
        table,
    })
}

/// Branch and bound over induced subsets built component by component,
/// each new component rooted at a vertex above the previous root and kept
/// out of the closed neighborhoods of earlier components.
struct Decompose<'a> {
    g: &'a Graph,
    rows: &'a [FixedBitSet],
    partition: &'a [Option<usize>],
    table: &'a ConnectedMaxTable,
    clock: &'a mut Clock,
    best: Option<(usize, Vec<Vertex>)>,
}

impl Decompose<'_> {
    fn bound(&self, left: usize) -> usize {
        self.partition[left].unwrap_or(0)
    }

    fn run(&mut self, left: usize, allowed: &FixedBitSet, min_root: Vertex, acc_edges: usize, acc: &mut Vec<Vertex>) {
        if self.clock.tick() {
            return;
        }
        if left == 0 {
            if self.best.as_ref().map_or(true, |(b, _)| acc_edges > *b) {
                let mut set = acc.clone();
                set.sort_unstable();
                self.best = Some((acc_edges, set));
            }
            return;
        }
        if self.partition[left].is_none() {
            return;
        }
        if self.best.as_ref().is_some_and(|(b, _)| acc_edges + self.bound(left) <= *b) {
            return;
        }
        let roots: Vec<Vertex> = allowed.ones().filter(|&r| r >= min_root).collect();
        for r in roots {
            let mut members = vec![r];
            let mut mask = FixedBitSet::with_capacity(self.g.order());
            mask.insert(r);
            let mut closed = self.rows[r].clone();
            closed.insert(r);
            let mut ext = self.rows[r].clone();
            ext.intersect_with(allowed);
            ext.set_range(..r + 1, false);
            self.grow(left, allowed, r, &mut members, &mask, &closed, ext, 0, acc_edges, acc);
            if self.clock.expired() {
                return;
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        left: usize,
        allowed: &FixedBitSet,
        root: Vertex,
        members: &mut Vec<Vertex>,
        mask: &FixedBitSet,
        closed: &FixedBitSet,
        mut ext: FixedBitSet,
        comp_edges: usize,
        acc_edges: usize,
        acc: &mut Vec<Vertex>,
    ) {
        let t = members.len();
        // Close the component here and place the rest beyond its neighborhood.
        let mut rest = allowed.clone();
        rest.difference_with(closed);
        rest.set_range(..root + 1, false);
        let before = acc.len();
        acc.extend_from_slice(members);
        self.run(left - t, &rest, root + 1, acc_edges + comp_edges, acc);
        acc.truncate(before);

        if t == left || self.clock.expired() {
            return;
        }
        // Optimistic value if the component keeps growing.
        let optimistic = (t + 1..=left)
            .filter_map(|s| Some(self.table[s - 1].max_edges? + self.partition[left - s]?))
            .max();
        match optimistic {
            None => return,
            Some(v) if self.best.as_ref().is_some_and(|(b, _)| acc_edges + v <= *b) => return,
            _ => {}
        }
        while let Some(w) = ext.minimum() {
            ext.set(w, false);
            let row = &self.rows[w];
            let gained = row.intersection_count(mask);
            let mut child_ext = ext.clone();
            let mut fresh = row.clone();
            fresh.difference_with(closed);
            fresh.intersect_with(allowed);
            fresh.set_range(..root + 1, false);
            child_ext.union_with(&fresh);
            let mut child_mask = mask.clone();
            child_mask.insert(w);
            let mut child_closed = closed.clone();
            child_closed.union_with(row);
            members.push(w);
            self.grow(left, allowed, root, members, &child_mask, &child_closed, child_ext, comp_edges + gained, acc_edges, acc);
            members.pop();
            if self.clock.expired() {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests;
