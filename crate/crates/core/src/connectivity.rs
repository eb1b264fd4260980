//! Edge cuts with size constraints: `β_g`, `γ_g` and `λ_g`.
//!
//! For `U ⊆ V` write `∂(U)` for the number of edges leaving `U`.
//!
//! * `β_g = min ∂(U)` over `|U| = g + 1`.
//! * `γ_g = min ∂(U)` over `|U| >= g + 1` and `|Ū| >= g + 1`.
//! * `λ_g` is the smallest edge cut leaving every component with at least
//!   `g + 1` vertices.
//!
//! The sweeps compute `λ_g` as `min ∂(U)` over sets `U` such that every
//! component of `G[U]` and of `G[Ū]` has at least `g + 1` vertices. Such a
//! `[U, Ū]` is itself a g-extra cut. Conversely, deleting a minimum g-extra
//! cut `F` leaves components of size at least `g + 1`. Minimality forces
//! each edge of `F` to join two different components, so `F` is exactly the
//! set of edges between components. At least two components exist, so
//! taking `U` as one of them gives `[U, Ū] ⊆ F`, and `G[U]`, `G[Ū]` have
//! only components of `G - F` or unions of them as components.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::budget::{binomial, Budget};
use crate::error::{Error, Result};
use crate::extremal::{eg_exact, Certification};
use crate::graph::{boundary, components_where, Edge, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutKind {
    BetaG,
    GammaG,
    LambdaG,
}

/// A cut `[U, Ū]` with everything needed to recheck it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub side_u: Vec<Vertex>,
    /// Edges listed as (inside `U`, outside `U`).
    pub cut_edges: Vec<Edge>,
    pub cut_size: usize,
    pub min_component_u: usize,
    pub min_component_ubar: usize,
    pub certifies: CutKind,
    pub g: usize,
}

fn min_component(g: &Graph, inside: &[bool], side: bool) -> usize {
    components_where(g, |v| inside[v] == side)
        .iter()
        .map(Vec::len)
        .min()
        .unwrap_or(0)
}

impl CutWitness {
    /// Builds the witness for `U = side_u`, measuring everything from scratch.
    pub fn new(g: &Graph, side_u: &[Vertex], certifies: CutKind, gval: usize) -> Result<CutWitness> {
        let b = boundary(g, side_u)?;
        let side_u = g.normalize_set(side_u)?;
        let mut inside = vec![false; g.order()];
        for &v in &side_u {
            inside[v] = true;
        }
        Ok(CutWitness {
            min_component_u: min_component(g, &inside, true),
            min_component_ubar: min_component(g, &inside, false),
            side_u,
            cut_size: b.value,
            cut_edges: b.edges,
            certifies,
            g: gval,
        })
    }

    /// Whether the side sizes meet the constraint of `certifies`.
    pub fn qualifies(&self, order: usize) -> bool {
        let need = self.g + 1;
        let u = self.side_u.len();
        match self.certifies {
            CutKind::BetaG => u == need,
            CutKind::GammaG => u >= need && order - u >= need,
            CutKind::LambdaG => self.min_component_u >= need && self.min_component_ubar >= need,
        }
    }

    /// Recomputes the witness from `side_u` and compares every field.
    pub fn revalidate(&self, g: &Graph) -> Result<()> {
        let fresh = CutWitness::new(g, &self.side_u, self.certifies, self.g)?;
        if fresh != *self {
            return Err(Error::InvalidSubset(format!(
                "cut witness does not match a recount: claimed size {}, components ({}, {}); \
                 recount gives {}, ({}, {})",
                self.cut_size,
                self.min_component_u,
                self.min_component_ubar,
                fresh.cut_size,
                fresh.min_component_u,
                fresh.min_component_ubar
            )));
        }
        if !fresh.qualifies(g.order()) {
            return Err(Error::InvalidSubset(format!(
                "side sizes do not meet the {:?} constraint for g = {}",
                self.certifies, self.g
            )));
        }
        Ok(())
    }
}

fn check_size(g: &Graph, gval: usize) -> Result<usize> {
    let k = gval + 1;
    if k > g.order() {
        return Err(Error::OutOfRange(format!(
            "g + 1 = {k} exceeds the graph order {}",
            g.order()
        )));
    }
    Ok(k)
}

/// `β_g`. On a `k`-regular graph the shortcut `k(g+1) - 2e_g` is used
/// when requested and `e_g` is certified exact, and the result is checked
/// against the boundary of the `e_g` witness. Otherwise every
/// `(g+1)`-subset is visited.
pub fn beta_g(g: &Graph, gval: usize, use_regular_shortcut: bool, budget: &Budget) -> Result<CutWitness> {
    let k = check_size(g, gval)?;
    if k == g.order() {
        return Err(Error::OutOfRange(format!(
            "g + 1 = {k} leaves no vertex outside U"
        )));
    }
    if use_regular_shortcut {
        if let Some(deg) = g.regular_degree() {
            let eg = eg_exact(g, gval, budget)?;
            if eg.witness.certification == Certification::Exact {
                let value = deg * k - 2 * eg.witness.induced_edge_count;
                let w = CutWitness::new(g, &eg.witness.vertices, CutKind::BetaG, gval)?;
                if w.cut_size != value {
                    return Err(Error::Internal(format!(
                        "regular shortcut gives {value} but the witness boundary is {}",
                        w.cut_size
                    )));
                }
                return Ok(w);
            }
        }
    }
    let count = binomial(g.order(), k);
    if count > budget.subsets {
        return Err(Error::BudgetExceeded(format!(
            "{count} subsets of size {k} exceed the enumeration budget {}",
            budget.subsets
        )));
    }
    let rows = g.dense_rows("direct beta_g enumeration")?;
    let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    let mut chosen = FixedBitSet::with_capacity(g.order());
    min_boundary_subset(rows, &degrees, k, &mut Vec::new(), &mut chosen, 0, &mut best);
    let (_, set) = best.ok_or_else(|| Error::Internal("no subset enumerated".into()))?;
    CutWitness::new(g, &set, CutKind::BetaG, gval)
}

/// Lexicographic DFS; `bd` is the boundary of the current prefix.
fn min_boundary_subset(
    rows: &[FixedBitSet],
    degrees: &[usize],
    k: usize,
    stack: &mut Vec<Vertex>,
    chosen: &mut FixedBitSet,
    bd: usize,
    best: &mut Option<(usize, Vec<Vertex>)>,
) {
    if stack.len() == k {
        if best.as_ref().map_or(true, |(b, _)| bd < *b) {
            *best = Some((bd, stack.clone()));
        }
        return;
    }
    let n = rows.len();
    let start = stack.last().map_or(0, |&v| v + 1);
    for v in start..=n - (k - stack.len()) {
        let inner = rows[v].intersection_count(chosen);
        chosen.insert(v);
        stack.push(v);
        min_boundary_subset(rows, degrees, k, stack, chosen, bd + degrees[v] - 2 * inner, best);
        stack.pop();
        chosen.set(v, false);
    }
}

/// Bit masks of the neighborhoods, for sweeps over all subsets.
struct Masks {
    order: usize,
    nbr: Vec<u64>,
}

impl Masks {
    fn new(g: &Graph, budget: &Budget) -> Result<Masks> {
        let limit = budget.sweep_order_limit.min(64);
        if g.order() > limit {
            return Err(Error::TooLarge {
                what: "subset sweep: graph order".into(),
                size: g.order() as u128,
                limit: limit as u128,
            });
        }
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let nbr = (0..g.order())
            .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        Ok(Masks { order: g.order(), nbr })
    }

    fn full(&self) -> u64 {
        if self.order == 64 {
            u64::MAX
        } else {
            (1u64 << self.order) - 1
        }
    }

    /// Smallest component size of the subgraph induced by `set`.
    fn min_component(&self, set: u64) -> usize {
        let mut left = set;
        let mut smallest = usize::MAX;
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.nbr[v] & left & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            left &= !comp;
            smallest = smallest.min(comp.count_ones() as usize);
        }
        smallest
    }
}

/// True when `a` precedes `b` as sorted vertex lists.
fn lex_less(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    if diff == 0 {
        return false;
    }
    // Below the first difference the lists agree; the side holding it
    // wins unless the other list has already ended.
    let d = diff.trailing_zeros();
    let above = |m: u64| d < 63 && m >> (d + 1) != 0;
    if a >> d & 1 == 1 {
        above(b)
    } else {
        !above(a)
    }
}

/// Visits every `U` containing vertex 0 with `Ū` nonempty, in Gray-code
/// order, passing `(U, ∂(U))`. Every cut is seen once since `[U, Ū]` and
/// `[Ū, U]` are the same cut.
fn sweep(m: &Masks, mut visit: impl FnMut(u64, usize)) {
    let full = m.full();
    let mut set = 1u64;
    let mut bd = m.nbr[0].count_ones() as usize;
    let states = 1u64 << (m.order - 1);
    for i in 0..states {
        if i > 0 {
            let v = i.trailing_zeros() as usize + 1;
            let bit = 1u64 << v;
            let deg = m.nbr[v].count_ones() as usize;
            if set & bit == 0 {
                let inner = (m.nbr[v] & set).count_ones() as usize;
                set |= bit;
                bd = bd + deg - 2 * inner;
            } else {
                set &= !bit;
                let inner = (m.nbr[v] & set).count_ones() as usize;
                bd = bd + 2 * inner - deg;
            }
        }
        if set != full {
            visit(set, bd);
        }
    }
}

fn mask_vertices(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn sweep_min(g: &Graph, gval: usize, budget: &Budget, kind: CutKind) -> Result<Option<CutWitness>> {
    let m = Masks::new(g, budget)?;
    let need = gval + 1;
    let full = m.full();
    let mut best: Option<(usize, u64)> = None;
    sweep(&m, |set, bd| {
        if best.is_some_and(|(b, w)| bd > b || (bd == b && !lex_less(set, w))) {
            return;
        }
        let inside = set.count_ones() as usize;
        let ok = match kind {
            CutKind::GammaG => inside >= need && m.order - inside >= need,
            _ => {
                inside >= need
                    && m.order - inside >= need
                    && m.min_component(set) >= need
                    && m.min_component(full & !set) >= need
            }
        };
        if ok {
            best = Some((bd, set));
        }
    });
    best.map(|(_, set)| CutWitness::new(g, &mask_vertices(set), kind, gval))
        .transpose()
}

/// `γ_g` by sweeping all cuts. `None` when `|V| < 2(g+1)`.
pub fn gamma_g_bruteforce(g: &Graph, gval: usize, budget: &Budget) -> Result<Option<CutWitness>> {
    sweep_min(g, gval, budget, CutKind::GammaG)
}

/// `λ_g` by sweeping all cuts. `None` when the graph has no g-extra cut.
pub fn lambda_g_bruteforce(g: &Graph, gval: usize, budget: &Budget) -> Result<Option<CutWitness>> {
    sweep_min(g, gval, budget, CutKind::LambdaG)
}

/// The value `2(g+1)n - 4g + 4` once conjectured for `λ_g(BH_n)`.
pub fn conjecture_value(n: usize, g: usize) -> i64 {
    let (n, g) = (n as i64, g as i64);
    2 * (g + 1) * n - 4 * g + 4
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::graph::tests::arb_graph;
    use crate::hypercube::{build_bh, DEFAULT_MATERIALIZE_LIMIT};

    fn bh2() -> Graph {
        build_bh(2, DEFAULT_MATERIALIZE_LIMIT).unwrap()
    }

    /// Minimum over all subsets by plain enumeration, no Gray code.
    fn brute(g: &Graph, gval: usize, kind: CutKind) -> Option<usize> {
        let n = g.order();
        (1u64..(1 << n) - 1)
            .filter_map(|mask| {
                let set = mask_vertices(mask);
                let w = CutWitness::new(g, &set, kind, gval).unwrap();
                w.qualifies(n).then_some(w.cut_size)
            })
            .min()
    }

    #[test]
    fn beta_examples() {
        let b = Budget::default();
        let g = bh2();
        assert_eq!(beta_g(&g, 2, true, &b).unwrap().cut_size, 8);
        assert_eq!(beta_g(&g, 3, true, &b).unwrap().cut_size, 8);
        assert_eq!(beta_g(&Graph::cycle(4), 1, false, &b).unwrap().cut_size, 2);
        for gval in 0..=4 {
            let fast = beta_g(&g, gval, true, &b).unwrap();
            let slow = beta_g(&g, gval, false, &b).unwrap();
            assert_eq!(fast.cut_size, slow.cut_size, "g={gval}");
            fast.revalidate(&g).unwrap();
            slow.revalidate(&g).unwrap();
        }
    }

    #[test]
    fn gamma_and_lambda_examples() {
        let b = Budget::default();
        let g = bh2();
        let expected = [(1, 6), (2, 8), (3, 8)];
        for (gval, value) in expected {
            let gamma = gamma_g_bruteforce(&g, gval, &b).unwrap().unwrap();
            let lambda = lambda_g_bruteforce(&g, gval, &b).unwrap().unwrap();
            assert_eq!((gamma.cut_size, lambda.cut_size), (value, value), "g={gval}");
            gamma.revalidate(&g).unwrap();
            lambda.revalidate(&g).unwrap();
            assert!(lambda.side_u.contains(&0));
        }
        let c4 = Graph::cycle(4);
        assert_eq!(gamma_g_bruteforce(&c4, 0, &b).unwrap().unwrap().cut_size, 2);
    }

    #[test]
    fn sweep_refusals() {
        let b = Budget::default();
        let big = build_bh(3, DEFAULT_MATERIALIZE_LIMIT).unwrap();
        assert!(matches!(lambda_g_bruteforce(&big, 1, &b), Err(Error::TooLarge { .. })));
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(gamma_g_bruteforce(&split, 0, &b), Err(Error::Disconnected)));
        // A star has no 1-extra cut: every cut isolates a leaf.
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(lambda_g_bruteforce(&star, 1, &b).unwrap(), None);
    }

    #[test]
    fn lambda_is_monotone_on_bh2() {
        let b = Budget::default();
        let g = bh2();
        let values: Vec<usize> = (0..=7)
            .map_while(|gval| lambda_g_bruteforce(&g, gval, &b).unwrap().map(|w| w.cut_size))
            .collect();
        assert!(values.len() >= 4);
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "{values:?}");
    }

    #[test]
    fn lex_order_on_masks() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                assert_eq!(lex_less(a, b), mask_vertices(a) < mask_vertices(b), "{a:b} {b:b}");
            }
        }
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(conjecture_value(2, 2), 8);
        assert_eq!(conjecture_value(2, 3), 8);
        assert_eq!(conjecture_value(5, 9), 68);
    }

    /// Random 4-regular graphs: the circulant `C_n(1, 2)` scrambled by
    /// degree-preserving double-edge swaps.
    fn arb_quartic(max_order: usize) -> impl Strategy<Value = Graph> {
        (6..=max_order).prop_flat_map(|n| {
            proptest::collection::vec((0..2 * n, 0..2 * n), 0..40).prop_map(move |swaps| {
                let mut edges: Vec<Edge> = (0..n)
                    .flat_map(|v| [(v, (v + 1) % n), (v, (v + 2) % n)])
                    .map(|(a, b)| (a.min(b), a.max(b)))
                    .collect();
                for (i, j) in swaps {
                    let ((a, b), (c, d)) = (edges[i], edges[j]);
                    let (x, y) = ((a.min(d), a.max(d)), (c.min(b), c.max(b)));
                    if a == d || c == b || edges.contains(&x) || edges.contains(&y) {
                        continue;
                    }
                    edges[i] = x;
                    edges[j] = y;
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn sweeps_match_plain_enumeration(g in arb_graph(9), gval in 0usize..4) {
            prop_assume!(g.is_connected() && g.order() >= 2);
            let b = Budget::default();
            let gamma = gamma_g_bruteforce(&g, gval, &b).unwrap();
            let lambda = lambda_g_bruteforce(&g, gval, &b).unwrap();
            prop_assert_eq!(gamma.as_ref().map(|w| w.cut_size), brute(&g, gval, CutKind::GammaG));
            prop_assert_eq!(lambda.as_ref().map(|w| w.cut_size), brute(&g, gval, CutKind::LambdaG));
            if let (Some(gm), Some(lm)) = (&gamma, &lambda) {
                prop_assert!(gm.cut_size <= lm.cut_size);
            }
            if gval + 1 < g.order() {
                let beta = beta_g(&g, gval, false, &b).unwrap();
                if let Some(gm) = &gamma {
                    prop_assert!(gm.cut_size <= beta.cut_size);
                }
            }
        }

        #[test]
        fn shortcut_matches_enumeration_on_regular_graphs(
            g in arb_quartic(14),
            gval in 0usize..5,
        ) {
            prop_assume!(gval + 1 < g.order());
            let b = Budget::default();
            prop_assert_eq!(g.regular_degree(), Some(4));
            let fast = beta_g(&g, gval, true, &b).unwrap();
            let slow = beta_g(&g, gval, false, &b).unwrap();
            prop_assert_eq!(fast.cut_size, slow.cut_size);
        }
    }
}
