//! Explicit dense subsets of `BH_n`, built on the implicit graph so they
//! work in any dimension.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{rooted_connected_sets, Certification, SubgraphWitness};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{is_complete_bipartite, shortest_cycle_through, Graph, NeighborOracle, Vertex};
use crate::hypercube::{class_of, equivalent_id, BhImplicit, XnImplicit};

/// How a witness was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    /// An equivalent pair with `g - 1` common neighbors.
    K2Star,
    /// Both fibers of a 6-cycle of `X_n`, minus one edge's endpoints.
    DoubleCycleMinusEdge,
    /// Both fibers of a 6-cycle of `X_n`, minus one vertex.
    DoubleCycleMinusVertex,
    /// Both fibers of an induced unicyclic subgraph of `X_n`.
    DoubleUnicyclic,
    /// The same plus one outside vertex.
    DoubleUnicyclicPlusVertex,
    PairedSearch,
    ExactSearch,
    Exhaustive,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::K2Star => "k2-star",
            Construction::DoubleCycleMinusEdge => "double-cycle-minus-edge",
            Construction::DoubleCycleMinusVertex => "double-cycle-minus-vertex",
            Construction::DoubleUnicyclic => "double-unicyclic",
            Construction::DoubleUnicyclicPlusVertex => "double-unicyclic-plus-vertex",
            Construction::PairedSearch => "paired-search",
            Construction::ExactSearch => "exact-search",
            Construction::Exhaustive => "exhaustive",
        }
    }
}

impl std::fmt::Display for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Induced subgraph of an oracle graph on `set` (sorted), relabelled
/// `0..set.len()`.
fn induced_from_oracle<G: NeighborOracle + ?Sized>(g: &G, set: &[Vertex]) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, &v) in set.iter().enumerate() {
        for w in g.neighbors_of(v) {
            if w > v {
                if let Ok(j) = set.binary_search(&w) {
                    edges.push((i, j));
                }
            }
        }
    }
    Graph::new(set.len(), edges)
}

/// The vertex `0…0`, its equivalent vertex and `g - 1` of their `2n`
/// common neighbors. Induces `K_{2,g-1}`, so `2g - 2` edges.
pub fn construct_k2_star(n: usize, g: usize) -> Result<SubgraphWitness> {
    let bh = BhImplicit::new(n)?;
    if g < 2 {
        return Err(Error::OutOfRange(format!("the K2 star needs g >= 2, got g = {g}")));
    }
    if g - 1 > 2 * n {
        return Err(Error::OutOfRange(format!(
            "an equivalent pair in BH_{n} has only {} common neighbors, g - 1 = {} requested",
            2 * n,
            g - 1
        )));
    }
    let u = 0;
    let twin = equivalent_id(u);
    let mut set: Vec<Vertex> = bh.neighbors_of(u).into_iter().take(g - 1).collect();
    set.extend([u, twin]);
    set.sort_unstable();
    let sub = induced_from_oracle(&bh, &set)?;
    let expected = (2.min(g - 1), 2.max(g - 1));
    if is_complete_bipartite(&sub) != Some(expected) {
        return Err(Error::Internal(format!(
            "K2 star for n={n}, g={g} does not induce K_{{2,{}}}",
            g - 1
        )));
    }
    let w = SubgraphWitness::new(&bh, set, Certification::LowerBound);
    debug_assert_eq!(w.induced_edge_count, 2 * g - 2);
    Ok(w)
}

/// A witness from [`construct_dense_witness`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseWitness {
    pub witness: SubgraphWitness,
    pub construction: Construction,
    /// Edge count the construction guarantees.
    pub guaranteed: usize,
    /// Set when the growth had to accept a chord.
    pub note: Option<String>,
}

/// Classes outside `set` adjacent to it, with the number of neighbors in it.
fn frontier(xn: &XnImplicit, set: &BTreeSet<Vertex>) -> BTreeMap<Vertex, usize> {
    let mut out = BTreeMap::new();
    for &c in set {
        for d in xn.neighbors_of(c) {
            if !set.contains(&d) {
                *out.entry(d).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Grows the 6-cycle to `t` classes, each step adding the smallest class
/// with exactly one neighbor in the set so the result stays induced
/// unicyclic. Falls back to any adjacent class, with a note.
fn grow_unicyclic(xn: &XnImplicit, cycle: &[Vertex], t: usize) -> Result<(Vec<Vertex>, Option<String>)> {
    let mut set: BTreeSet<Vertex> = cycle.iter().copied().collect();
    let mut note = None;
    while set.len() < t {
        let front = frontier(xn, &set);
        let next = match front.iter().find(|(_, &k)| k == 1) {
            Some((&c, _)) => c,
            None => {
                let (&c, _) = front.iter().next().ok_or_else(|| {
                    Error::Internal(format!("X_n has no class adjacent to a set of {} classes", set.len()))
                })?;
                note = Some(format!("class {c} was added with more than one neighbor in the set"));
                c
            }
        };
        set.insert(next);
    }
    Ok((set.into_iter().collect(), note))
}

/// Dense `(g+1)`-subsets of `BH_n` for `9 <= g <= 2n - 1`, each with more
/// than `2g - 2` induced edges.
pub fn construct_dense_witness(n: usize, g: usize) -> Result<DenseWitness> {
    let bh = BhImplicit::new(n)?;
    if n < 3 {
        return Err(Error::OutOfRange(format!("dense witnesses need n >= 3, got n = {n}")));
    }
    if g < 9 || g + 1 > 2 * n {
        return Err(Error::OutOfRange(format!(
            "dense witnesses cover 9 <= g <= 2n - 1 = {}, got g = {g}",
            2 * n - 1
        )));
    }
    let xn = bh.quotient();
    let cycle = shortest_cycle_through(&xn, 0, 6)
        .filter(|c| c.len() == 6)
        .ok_or_else(|| Error::Internal("no 6-cycle through class 0 of X_n".into()))?;
    let h0 = xn.expand(&cycle);

    let (set, construction, guaranteed, note) = match g {
        9 => {
            let (u, v) = h0
                .iter()
                .flat_map(|&u| {
                    bh.neighbors_of(u)
                        .into_iter()
                        .filter(move |&v| v > u)
                        .map(move |v| (u, v))
                })
                .filter(|(_, v)| h0.binary_search(v).is_ok())
                .min()
                .ok_or_else(|| Error::Internal("the doubled cycle has no edge".into()))?;
            let rest: Vec<Vertex> = h0.iter().copied().filter(|&w| w != u && w != v).collect();
            (rest, Construction::DoubleCycleMinusEdge, 2 * g - 1, None)
        }
        10 => (h0[1..].to_vec(), Construction::DoubleCycleMinusVertex, 2 * g, None),
        _ if g % 2 == 1 => {
            let (classes, note) = grow_unicyclic(&xn, &cycle, (g + 1) / 2)?;
            (xn.expand(&classes), Construction::DoubleUnicyclic, 2 * g + 2, note)
        }
        _ => {
            let (classes, note) = grow_unicyclic(&xn, &cycle, g / 2)?;
            let mut set = xn.expand(&classes);
            let extra = (0..bh.order())
                .find(|v| set.binary_search(v).is_err())
                .ok_or_else(|| Error::Internal("no vertex outside the doubled set".into()))?;
            set.push(extra);
            set.sort_unstable();
            (set, Construction::DoubleUnicyclicPlusVertex, 2 * g, note)
        }
    };
    let witness = SubgraphWitness::new(&bh, set, Certification::LowerBound);
    witness.revalidate(&bh, g)?;
    if witness.induced_edge_count < guaranteed {
        return Err(Error::Internal(format!(
            "{construction} for n={n}, g={g} induces {} edges, below the guaranteed {guaranteed}",
            witness.induced_edge_count
        )));
    }
    Ok(DenseWitness {
        witness,
        construction,
        guaranteed,
        note,
    })
}

/// Best set whose bipartition sides are unions of equivalent pairs plus at
/// most one single vertex each. The pairs form a connected set of classes
/// through class 0 (vertex transitivity makes the choice of class free).
/// Always a lower bound on `e_g`.
pub fn eg_paired_search(n: usize, g: usize, budget: &Budget) -> Result<SubgraphWitness> {
    let bh = BhImplicit::new(n)?;
    let k = g + 1;
    if k > bh.order() {
        return Err(Error::OutOfRange(format!(
            "g + 1 = {k} exceeds the order 4^{n} = {}",
            bh.order()
        )));
    }
    let xn = bh.quotient();
    let mut clock = budget.clock();
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    let offer = |set: Vec<Vertex>, best: &mut Option<(usize, Vec<Vertex>)>| {
        let mut set = set;
        set.sort_unstable();
        let e = bh.count_induced_edges(&set);
        let better = match best {
            None => true,
            Some((b, w)) => e > *b || (e == *b && set < *w),
        };
        if better {
            *best = Some((e, set));
        }
    };

    // No pairs at all: one or two single vertices.
    match k {
        1 => offer(vec![0], &mut best),
        2 => offer(vec![0, bh.neighbors_of(0)[0]], &mut best),
        _ => {}
    }

    let max_classes = k / 2;
    if max_classes >= 1 {
        rooted_connected_sets(&xn, class_of(0), max_classes, |classes| {
            let singles = k - 2 * classes.len();
            if singles <= 2 {
                let base = xn.expand(classes);
                for extra in best_singles(&bh, &base, singles) {
                    let mut set = base.clone();
                    set.extend(extra);
                    offer(set, &mut best);
                }
            }
            !clock.tick()
        });
    }
    let (_, vertices) = best.ok_or_else(|| Error::Internal("paired search found no candidate".into()))?;
    Ok(SubgraphWitness::new(&bh, vertices, Certification::LowerBound))
}

/// Candidate single-vertex additions to `base`: the best one, or the best
/// pair taking one vertex from each side of the bipartition.
fn best_singles(bh: &BhImplicit, base: &[Vertex], count: usize) -> Vec<Vec<Vertex>> {
    if count == 0 {
        return vec![Vec::new()];
    }
    let outside = |v: &Vertex| base.binary_search(v).is_err();
    let mut score: BTreeMap<Vertex, usize> = BTreeMap::new();
    for &v in base {
        for w in bh.neighbors_of(v) {
            if outside(&w) {
                *score.entry(w).or_insert(0) += 1;
            }
        }
    }
    // Fallback candidates with no neighbor in the base, one per side.
    for parity in 0..2 {
        if let Some(v) = (0..bh.order()).find(|v| v & 1 == parity && outside(v) && !score.contains_key(v)) {
            score.insert(v, 0);
        }
    }
    let top = |parity: Option<usize>| {
        score
            .iter()
            .filter(|(v, _)| parity.map_or(true, |p| *v & 1 == p))
            .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(a.0)))
            .map(|(&v, &s)| (v, s))
    };
    if count == 1 {
        return top(None).map(|(v, _)| vec![vec![v]]).unwrap_or_default();
    }
    // One per side: score is d(a) + d(b) + [a ~ b]; adjacency adds at most
    // one, so only near-top candidates on each side matter.
    let (Some((_, ba)), Some((_, bb))) = (top(Some(0)), top(Some(1))) else {
        return Vec::new();
    };
    let near = |p: usize, best: usize| -> Vec<Vertex> {
        score
            .iter()
            .filter(|(v, s)| *v & 1 == p && **s + 1 >= best)
            .map(|(&v, _)| v)
            .collect()
    };
    let evens = near(0, ba);
    let odds = near(1, bb);
    let mut out = Vec::new();
    let mut best_val = 0;
    for &a in &evens {
        for &b in &odds {
            let val = score[&a] + score[&b] + usize::from(bh.adjacent(a, b));
            if out.is_empty() || val > best_val {
                best_val = val;
                out = vec![vec![a, b]];
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::eg_exhaustive;
    use crate::hypercube::{build_bh, DEFAULT_MATERIALIZE_LIMIT};

    #[test]
    fn k2_star_examples() {
        let w = construct_k2_star(2, 3).unwrap();
        assert_eq!((w.vertices.len(), w.induced_edge_count), (4, 4));
        let w = construct_k2_star(5, 8).unwrap();
        assert_eq!((w.vertices.len(), w.induced_edge_count), (9, 14));
        let w = construct_k2_star(2, 2).unwrap();
        assert_eq!((w.vertices.len(), w.induced_edge_count), (3, 2));
        assert!(matches!(construct_k2_star(2, 6), Err(Error::OutOfRange(_))));
        assert!(matches!(construct_k2_star(2, 1), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn dense_witness_examples() {
        let w = construct_dense_witness(5, 9).unwrap();
        assert_eq!(w.witness.vertices.len(), 10);
        assert!(w.witness.induced_edge_count >= 17);
        assert_eq!(w.construction, Construction::DoubleCycleMinusEdge);
        let w = construct_dense_witness(6, 10).unwrap();
        assert_eq!(w.witness.vertices.len(), 11);
        assert!(w.witness.induced_edge_count >= 20);
        let w = construct_dense_witness(6, 11).unwrap();
        assert_eq!(w.witness.vertices.len(), 12);
        assert!(w.witness.induced_edge_count >= 24);
        assert!(w.note.is_none());
        let w = construct_dense_witness(7, 12).unwrap();
        assert_eq!(w.witness.vertices.len(), 13);
        assert!(w.witness.induced_edge_count >= 24);
        assert!(construct_dense_witness(2, 9).is_err());
        assert!(construct_dense_witness(5, 10).is_err());
    }

    #[test]
    fn paired_search_examples() {
        let b = Budget::default();
        assert_eq!(eg_paired_search(2, 3, &b).unwrap().induced_edge_count, 4);
        assert_eq!(eg_paired_search(3, 5, &b).unwrap().induced_edge_count, 8);
        assert!(eg_paired_search(5, 9, &b).unwrap().induced_edge_count >= 17);
    }

    #[test]
    fn paired_search_matches_oracle_on_small_cubes() {
        let b = Budget::default();
        let bh2 = build_bh(2, DEFAULT_MATERIALIZE_LIMIT).unwrap();
        for g in 1..=3 {
            let paired = eg_paired_search(2, g, &b).unwrap();
            paired.revalidate(&bh2, g).unwrap();
            assert_eq!(paired.induced_edge_count, eg_exhaustive(&bh2, g, &b).unwrap().induced_edge_count, "g={g}");
        }
        let bh3 = build_bh(3, DEFAULT_MATERIALIZE_LIMIT).unwrap();
        for g in 1..=5 {
            let paired = eg_paired_search(3, g, &b).unwrap();
            assert_eq!(paired.induced_edge_count, eg_exhaustive(&bh3, g, &b).unwrap().induced_edge_count, "g={g}");
        }
    }
}
