//! Enumeration of connected induced subsets.
//!
//! Every connected set is generated exactly once, from its smallest vertex,
//! by the extension-set scheme: a child adds one vertex `w` of the current
//! extension set, and the child's extension set gains exactly those
//! neighbors of `w` above the root that are neither in nor adjacent to the
//! current set. Intermediate nodes of the recursion are themselves the
//! connected sets of smaller size, which the decomposition search relies on.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::Certification;
use crate::budget::{Budget, Clock};
use crate::error::{Error, Result};
use crate::graph::{bipartition, Graph, NeighborOracle, Vertex};

/// Maximum edge count among connected induced subsets of one size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedMax {
    pub size: usize,
    /// `None` when no connected subset of this size exists.
    pub max_edges: Option<usize>,
    /// Lexicographically smallest subset attaining `max_edges`.
    pub witness: Option<Vec<Vertex>>,
    /// Further subsets attaining `max_edges`, up to the budget's `top_k`.
    pub alternates: Vec<Vec<Vertex>>,
    /// `Exact`, or `LowerBound` if the search ran out of time.
    pub certification: Certification,
}

/// One row per size `1..=max_size`.
pub type ConnectedMaxTable = Vec<ConnectedMax>;

/// Static data for bounding how many edges a partial set can still gain.
pub(crate) struct GrowthBounds {
    max_degree: usize,
    /// `Some(side)` when the graph is bipartite.
    side: Option<Vec<bool>>,
}

impl GrowthBounds {
    pub(crate) fn new(g: &Graph) -> Self {
        GrowthBounds {
            max_degree: g.max_degree(),
            side: bipartition(g).ok().map(|p| p.sides(g.order())),
        }
    }

    /// Upper bound on the final edge count after adding `remaining` more
    /// vertices to a set with `edges` induced edges, `stubs` edges leaving
    /// it, and `(x, y)` vertices on the two sides of the bipartition.
    pub(crate) fn bound(&self, edges: usize, stubs: usize, remaining: usize, x: usize, y: usize) -> usize {
        let r = remaining;
        let among_new_max = if self.side.is_some() {
            (r / 2) * r.div_ceil(2)
        } else {
            r * r.saturating_sub(1) / 2
        };
        // gain = to_old + among_new, to_old <= stubs, to_old + 2*among_new <= r*Δ
        let cap = r * self.max_degree;
        let gain = if cap <= stubs {
            cap
        } else {
            let balance = ((cap - stubs) / 2).min(among_new_max);
            let f = |nn: usize| (stubs + nn).min(cap - nn);
            f(balance).max(f((balance + 1).min(among_new_max)))
        };
        let mut best = edges + gain;
        if self.side.is_some() {
            let part = (0..=r).map(|a| (x + a) * (y + r - a)).max().unwrap_or(0);
            best = best.min(part);
        }
        best
    }

    pub(crate) fn is_right(&self, v: Vertex) -> bool {
        self.side.as_ref().is_some_and(|s| s[v])
    }

    /// Ceiling on edges of any `size`-vertex subset.
    pub(crate) fn ceiling(&self, size: usize) -> usize {
        self.bound(0, 0, size, 0, 0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Find the maximum; prune anything that cannot beat it.
    Value,
    /// Collect subsets attaining a known maximum.
    Collect(usize),
}

struct Esu<'a> {
    rows: &'a [FixedBitSet],
    degrees: Vec<usize>,
    bounds: &'a GrowthBounds,
    size: usize,
    mode: Mode,
    stop_at: usize,
    clock: &'a mut Clock,
    best: Option<(usize, Vec<Vertex>)>,
    collected: Vec<Vec<Vertex>>,
    collect_limit: usize,
    done: bool,
}

struct Node {
    members: Vec<Vertex>,
    mask: FixedBitSet,
    closed: FixedBitSet,
    ext: FixedBitSet,
    edges: usize,
    stubs: usize,
    right: usize,
}

impl<'a> Esu<'a> {
    fn run_root(&mut self, root: Vertex) {
        let n = self.rows.len();
        let mut mask = FixedBitSet::with_capacity(n);
        mask.insert(root);
        let mut closed = self.rows[root].clone();
        closed.insert(root);
        let mut ext = self.rows[root].clone();
        ext.set_range(..root + 1, false);
        let node = Node {
            members: vec![root],
            mask,
            closed,
            ext,
            edges: 0,
            stubs: self.degrees[root],
            right: usize::from(self.bounds.is_right(root)),
        };
        self.descend(node, root);
    }

    fn descend(&mut self, node: Node, root: Vertex) {
        if self.done {
            return;
        }
        if self.clock.tick() {
            self.done = true;
            return;
        }
        let k = node.members.len();
        if k == self.size {
            self.record(&node);
            return;
        }
        let remaining = self.size - k;
        let bound = self
            .bounds
            .bound(node.edges, node.stubs, remaining, k - node.right, node.right);
        let prune = match self.mode {
            Mode::Value => self.best.as_ref().is_some_and(|(b, _)| bound <= *b),
            Mode::Collect(target) => bound < target,
        };
        if prune {
            return;
        }
        let mut ext = node.ext.clone();
        while let Some(w) = ext.minimum() {
            ext.set(w, false);
            let row = &self.rows[w];
            let gained = row.intersection_count(&node.mask);
            let mut child_ext = ext.clone();
            let mut fresh = row.clone();
            fresh.difference_with(&node.closed);
            fresh.set_range(..root + 1, false);
            child_ext.union_with(&fresh);
            let mut mask = node.mask.clone();
            mask.insert(w);
            let mut closed = node.closed.clone();
            closed.union_with(row);
            let mut members = node.members.clone();
            members.push(w);
            let child = Node {
                members,
                mask,
                closed,
                ext: child_ext,
                edges: node.edges + gained,
                stubs: node.stubs + self.degrees[w] - 2 * gained,
                right: node.right + usize::from(self.bounds.is_right(w)),
            };
            self.descend(child, root);
            if self.done {
                return;
            }
        }
    }

    fn record(&mut self, node: &Node) {
        let mut set = node.members.clone();
        set.sort_unstable();
        match self.mode {
            Mode::Value => {
                let better = match &self.best {
                    None => true,
                    Some((b, w)) => node.edges > *b || (node.edges == *b && set < *w),
                };
                if better {
                    self.best = Some((node.edges, set));
                }
                if self.best.as_ref().is_some_and(|(b, _)| *b >= self.stop_at) {
                    self.done = true;
                }
            }
            Mode::Collect(target) => {
                if node.edges != target {
                    return;
                }
                if self.best.as_ref().map_or(true, |(_, w)| set < *w) {
                    self.best = Some((target, set.clone()));
                }
                if self.collected.len() < self.collect_limit {
                    self.collected.push(set);
                }
            }
        }
    }
}

/// Exact maximum edge count over connected induced `size`-subsets.
///
/// `edge_bound` is any known upper bound; reaching it ends the search early.
pub fn max_edges_connected(g: &Graph, size: usize, edge_bound: usize, budget: &Budget) -> Result<ConnectedMax> {
    let bounds = GrowthBounds::new(g);
    max_edges_connected_with(g, &bounds, size, edge_bound, budget)
}

pub(crate) fn max_edges_connected_with(
    g: &Graph,
    bounds: &GrowthBounds,
    size: usize,
    edge_bound: usize,
    budget: &Budget,
) -> Result<ConnectedMax> {
    if size == 0 {
        return Err(Error::OutOfRange("subset size must be at least 1".into()));
    }
    let rows = g.dense_rows("connected subset search")?;
    let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    let mut clock = budget.clock();
    let stop_at = edge_bound.min(bounds.ceiling(size));

    let mut search = Esu {
        rows,
        degrees,
        bounds,
        size,
        mode: Mode::Value,
        stop_at,
        clock: &mut clock,
        best: None,
        collected: Vec::new(),
        collect_limit: 0,
        done: false,
    };
    for root in 0..g.order() {
        search.run_root(root);
        if search.done {
            break;
        }
    }
    let timed_out = search.clock.expired();
    let Some((value, first)) = search.best.take() else {
        return Ok(ConnectedMax {
            size,
            max_edges: None,
            witness: None,
            alternates: Vec::new(),
            certification: if timed_out {
                Certification::LowerBound
            } else {
                Certification::Exact
            },
        });
    };
    if timed_out {
        return Ok(ConnectedMax {
            size,
            max_edges: Some(value),
            witness: Some(first.clone()),
            alternates: vec![first],
            certification: Certification::LowerBound,
        });
    }

    // Second pass: lexicographically smallest witness plus alternates.
    search.mode = Mode::Collect(value);
    search.collect_limit = budget.top_k.max(1);
    search.done = false;
    for root in 0..g.order() {
        search.run_root(root);
        if search.done || search.collected.len() >= search.collect_limit {
            break;
        }
    }
    let (witness, alternates) = match search.best.take() {
        Some((_, w)) => (w, std::mem::take(&mut search.collected)),
        None => (first.clone(), vec![first]),
    };
    Ok(ConnectedMax {
        size,
        max_edges: Some(value),
        witness: Some(witness),
        alternates,
        certification: Certification::Exact,
    })
}

/// Visits every connected set of at most `max_size` vertices that contains
/// `root`, each once, on a graph given only by its neighbor oracle.
/// `visit` returns `false` to stop the whole enumeration.
pub fn rooted_connected_sets<G, F>(g: &G, root: Vertex, max_size: usize, mut visit: F)
where
    G: NeighborOracle + ?Sized,
    F: FnMut(&[Vertex]) -> bool,
{
    let mut cache: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    let mut nbrs = |v: Vertex, cache: &mut HashMap<Vertex, Vec<Vertex>>| -> Vec<Vertex> {
        cache.entry(v).or_insert_with(|| g.neighbors_of(v)).clone()
    };
    let root_nbrs = nbrs(root, &mut cache);
    let mut closed: HashSet<Vertex> = root_nbrs.iter().copied().collect();
    closed.insert(root);
    let ext: Vec<Vertex> = root_nbrs;
    let mut members = vec![root];

    #[allow(clippy::too_many_arguments)]
    fn rec<N: FnMut(Vertex, &mut HashMap<Vertex, Vec<Vertex>>) -> Vec<Vertex>>(
        members: &mut Vec<Vertex>,
        closed: &HashSet<Vertex>,
        mut ext: Vec<Vertex>,
        root: Vertex,
        max_size: usize,
        nbrs: &mut N,
        cache: &mut HashMap<Vertex, Vec<Vertex>>,
        visit: &mut dyn FnMut(&[Vertex]) -> bool,
    ) -> bool {
        if !visit(members) {
            return false;
        }
        if members.len() == max_size {
            return true;
        }
        while let Some(w) = ext.pop() {
            let wn = nbrs(w, cache);
            let mut child_ext = ext.clone();
            for &u in &wn {
                if u != root && !closed.contains(&u) {
                    child_ext.push(u);
                }
            }
            let mut child_closed = closed.clone();
            child_closed.extend(wn.iter().copied());
            members.push(w);
            let go_on = rec(members, &child_closed, child_ext, root, max_size, nbrs, cache, visit);
            members.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    let mut visit_dyn = |s: &[Vertex]| visit(s);
    if max_size == 0 {
        return;
    }
    rec(&mut members, &closed, ext, root, max_size, &mut nbrs, &mut cache, &mut visit_dyn);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercube::{build_bh, DEFAULT_MATERIALIZE_LIMIT};

    /// All connected subsets of `size` by flat enumeration of bitmasks.
    fn brute(g: &Graph, size: usize) -> Option<usize> {
        let n = g.order();
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == size)
            .filter_map(|m| {
                let set: Vec<Vertex> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
                let sub = crate::graph::induced_subgraph(g, &set).unwrap();
                sub.graph.is_connected().then(|| sub.graph.edge_count())
            })
            .max()
    }

    #[test]
    fn bh2_small_sizes() {
        let g = build_bh(2, DEFAULT_MATERIALIZE_LIMIT).unwrap();
        let b = Budget::default();
        let three = max_edges_connected(&g, 3, usize::MAX, &b).unwrap();
        assert_eq!(three.max_edges, Some(2));
        let four = max_edges_connected(&g, 4, usize::MAX, &b).unwrap();
        assert_eq!(four.max_edges, Some(4));
        assert_eq!(four.certification, Certification::Exact);
        let w = four.witness.unwrap();
        assert_eq!(g.induced_edge_count(&w), 4);
        // The C4 goes through a pair {u, u'} and two common neighbors.
        assert!(w.iter().any(|&v| w.contains(&(v ^ 2))));
    }

    #[test]
    fn matches_brute_force_on_bh2() {
        let g = build_bh(2, DEFAULT_MATERIALIZE_LIMIT).unwrap();
        for s in 1..=8 {
            let got = max_edges_connected(&g, s, usize::MAX, &Budget::default()).unwrap();
            assert_eq!(got.max_edges, brute(&g, s), "size {s}");
        }
    }

    #[test]
    fn every_rooted_set_visited_once() {
        let g = Graph::cycle(6);
        let mut seen = Vec::new();
        rooted_connected_sets(&g, 0, 3, |s| {
            let mut s = s.to_vec();
            s.sort_unstable();
            seen.push(s);
            true
        });
        let mut dedup = seen.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), seen.len());
        // {0}, two edges, three paths of length 2 through 0.
        assert_eq!(seen.len(), 1 + 2 + 3);
    }

    #[test]
    fn no_connected_set_of_that_size() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let r = max_edges_connected(&g, 3, usize::MAX, &Budget::default()).unwrap();
        assert_eq!(r.max_edges, None);
    }
}
