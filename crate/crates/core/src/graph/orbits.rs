//! Edge orbits of the full automorphism group, for small graphs.
//!
//! Two edges share an orbit iff some automorphism maps one onto the other.
//! For each edge not yet merged into a known orbit we try to map every orbit
//! representative onto it by backtracking; a success yields an automorphism
//! whose action on the whole edge set is folded into a union-find. A failed
//! search is exhaustive, so a new representative really is a new orbit.

use serde::{Deserialize, Serialize};

use super::{common_neighbors, Edge, Graph, Vertex};
use crate::error::{Error, Result};

pub const DEFAULT_ORBIT_SIZE_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeOrbitReport {
    pub orbit_count: usize,
    pub orbits: Vec<Vec<Edge>>,
    /// Automorphisms found along the way, as images `perm[v]`.
    pub generator_witnesses: Vec<Vec<Vertex>>,
}

pub fn edge_orbits(g: &Graph, size_limit: usize) -> Result<EdgeOrbitReport> {
    if g.order() > size_limit {
        return Err(Error::TooLarge {
            what: "edge orbit computation: graph order".into(),
            size: g.order() as u128,
            limit: size_limit as u128,
        });
    }
    let edges = g.edges();
    let invariants = vertex_invariants(g);
    let mut uf = UnionFind::new(edges.len());
    let mut reps: Vec<usize> = Vec::new();
    let mut generators = Vec::new();

    for e in 0..edges.len() {
        if reps.iter().any(|&r| uf.find(r) == uf.find(e)) {
            continue;
        }
        let (x, y) = edges[e];
        let found = reps.iter().find_map(|&r| {
            let (a, b) = edges[r];
            Search::new(g, &invariants)
                .map_edge((a, b), (x, y))
                .or_else(|| Search::new(g, &invariants).map_edge((a, b), (y, x)))
        });
        match found {
            Some(perm) => {
                for (i, &(u, v)) in edges.iter().enumerate() {
                    let image = (perm[u].min(perm[v]), perm[u].max(perm[v]));
                    let j = edges.binary_search(&image).map_err(|_| {
                        Error::Internal(format!("permutation maps edge {u}-{v} to a non-edge"))
                    })?;
                    uf.union(i, j);
                }
                generators.push(perm);
            }
            None => reps.push(e),
        }
    }

    let mut orbits: Vec<Vec<Edge>> = Vec::new();
    let mut slot_of_root = vec![usize::MAX; edges.len()];
    for (i, &edge) in edges.iter().enumerate() {
        let root = uf.find(i);
        if slot_of_root[root] == usize::MAX {
            slot_of_root[root] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot_of_root[root]].push(edge);
    }
    Ok(EdgeOrbitReport {
        orbit_count: orbits.len(),
        orbits,
        generator_witnesses: generators,
    })
}

/// Checks that `perm` is a bijection on vertices sending edges to edges.
pub fn is_automorphism(g: &Graph, perm: &[Vertex]) -> bool {
    if perm.len() != g.order() {
        return false;
    }
    let mut seen = vec![false; g.order()];
    for &p in perm {
        if p >= g.order() || std::mem::replace(&mut seen[p], true) {
            return false;
        }
    }
    g.edges().iter().all(|&(u, v)| g.has_edge(perm[u], perm[v]))
}

/// Degree plus the sorted multiset of common-neighbor counts with every
/// other vertex; automorphisms preserve it.
fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.order())
        .map(|v| {
            let mut counts: Vec<usize> = (0..g.order())
                .filter(|&w| w != v)
                .map(|w| common_neighbors(g, v, w).expect("in range").len())
                .collect();
            counts.sort_unstable();
            (g.degree(v), counts)
        })
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    inv: &'a [(usize, Vec<usize>)],
    image: Vec<Option<Vertex>>,
    used: Vec<bool>,
    order: Vec<Vertex>,
    anchor: Vec<Option<Vertex>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, inv: &'a [(usize, Vec<usize>)]) -> Self {
        Search {
            g,
            inv,
            image: vec![None; g.order()],
            used: vec![false; g.order()],
            order: Vec::new(),
            anchor: Vec::new(),
        }
    }

    fn map_edge(mut self, from: Edge, to: Edge) -> Option<Vec<Vertex>> {
        self.plan(from);
        if !self.try_assign(from.0, to.0) {
            return None;
        }
        if !self.try_assign(from.1, to.1) {
            return None;
        }
        if self.extend(2) {
            Some(self.image.iter().map(|i| i.expect("complete")).collect())
        } else {
            None
        }
    }

    /// BFS order from the seed edge, so every later vertex in a component
    /// has an earlier neighbor whose image constrains its candidates.
    fn plan(&mut self, seed: Edge) {
        let n = self.g.order();
        let mut placed = vec![false; n];
        let push = |v: Vertex, anchor: Option<Vertex>, s: &mut Self, placed: &mut Vec<bool>| {
            placed[v] = true;
            s.order.push(v);
            s.anchor.push(anchor);
        };
        push(seed.0, None, self, &mut placed);
        push(seed.1, Some(seed.0), self, &mut placed);
        let mut head = 0;
        loop {
            while head < self.order.len() {
                let v = self.order[head];
                head += 1;
                for &w in self.g.neighbors(v) {
                    if !placed[w] {
                        push(w, Some(v), self, &mut placed);
                    }
                }
            }
            match (0..n).find(|&v| !placed[v]) {
                Some(v) => push(v, None, self, &mut placed),
                None => break,
            }
        }
    }

    fn try_assign(&mut self, v: Vertex, x: Vertex) -> bool {
        if self.used[x] || self.inv[v] != self.inv[x] {
            return false;
        }
        for (w, img) in self.image.iter().enumerate() {
            if let Some(y) = *img {
                if self.g.has_edge(v, w) != self.g.has_edge(x, y) {
                    return false;
                }
            }
        }
        self.image[v] = Some(x);
        self.used[x] = true;
        true
    }

    fn unassign(&mut self, v: Vertex) {
        if let Some(x) = self.image[v].take() {
            self.used[x] = false;
        }
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let candidates: Vec<Vertex> = match self.anchor[depth] {
            Some(a) => self.g.neighbors(self.image[a].expect("anchor mapped")).to_vec(),
            None => (0..self.g.order()).collect(),
        };
        for x in candidates {
            if self.try_assign(v, x) {
                if self.extend(depth + 1) {
                    return true;
                }
                self.unassign(v);
            }
        }
        false
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}
