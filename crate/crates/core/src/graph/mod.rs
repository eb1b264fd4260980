//! Finite simple undirected graphs on vertices `0..order`.
//!
//! A [`Graph`] is immutable once built. Neighbor lists are kept sorted, the
//! edge list is kept sorted with `u < v`, and graphs of moderate order also
//! carry one adjacency bit row per vertex so that the subset solvers can
//! intersect neighborhoods with a handful of word operations.

mod io;
mod orbits;

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use orbits::{edge_orbits, is_automorphism, EdgeOrbitReport, DEFAULT_ORBIT_SIZE_LIMIT};

/// Graphs up to this order carry dense adjacency rows.
pub const DENSE_ROW_LIMIT: usize = 4096;

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    adj: Vec<Vec<Vertex>>,
    edges: Vec<Edge>,
    rows: Option<Vec<FixedBitSet>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Symmetric duplicates collapse into
    /// one edge; self-loops and out-of-range endpoints are rejected.
    pub fn new<I>(order: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::EndpointOutOfRange { u, v, order });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted_edges(order, list))
    }

    /// `edges` must be sorted, deduplicated, loop-free and normalized to
    /// `u < v < order`.
    pub(crate) fn from_sorted_edges(order: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let rows = (order <= DENSE_ROW_LIMIT).then(|| {
            adj.iter()
                .map(|list| {
                    let mut row = FixedBitSet::with_capacity(order);
                    for &w in list {
                        row.insert(w);
                    }
                    row
                })
                .collect()
        });
        Graph {
            order,
            adj,
            edges,
            rows,
        }
    }

    pub fn empty(order: usize) -> Graph {
        Self::from_sorted_edges(order, Vec::new())
    }

    pub fn cycle(len: usize) -> Graph {
        assert!(len >= 3, "a cycle needs at least three vertices");
        Graph::new(len, (0..len).map(|i| (i, (i + 1) % len))).expect("valid cycle")
    }

    pub fn path(len: usize) -> Graph {
        Graph::new(len, (1..len).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn complete(order: usize) -> Graph {
        let edges = (0..order).flat_map(|u| (u + 1..order).map(move |v| (u, v)));
        Graph::new(order, edges).expect("valid complete graph")
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::new(a + b, edges).expect("valid complete bipartite graph")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edge list, each edge as `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match &self.rows {
            Some(rows) => rows[u].contains(v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    /// Dense adjacency rows, present when `order <= DENSE_ROW_LIMIT`.
    pub fn rows(&self) -> Option<&[FixedBitSet]> {
        self.rows.as_deref()
    }

    pub(crate) fn dense_rows(&self, what: &str) -> Result<&[FixedBitSet]> {
        self.rows().ok_or_else(|| Error::TooLarge {
            what: format!("{what}: graph order"),
            size: self.order as u128,
            limit: DENSE_ROW_LIMIT as u128,
        })
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Sorted, deduplicated copy of `set` after range checking.
    pub(crate) fn normalize_set(&self, set: &[Vertex]) -> Result<Vec<Vertex>> {
        let mut out = set.to_vec();
        for &v in &out {
            self.check_vertex(v)?;
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Number of edges with both ends in `set` (assumed duplicate-free).
    pub fn induced_edge_count(&self, set: &[Vertex]) -> usize {
        let mut inside = vec![false; self.order];
        for &v in set {
            inside[v] = true;
        }
        set.iter()
            .map(|&v| self.adj[v].iter().filter(|&&w| w > v && inside[w]).count())
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || connected_components(self).len() == 1
    }
}

/// Neighborhood access shared by materialized graphs and implicit ones whose
/// adjacency is computed on demand.
pub trait NeighborOracle {
    /// Sorted, duplicate-free neighbors of `v`.
    fn neighbors_of(&self, v: Vertex) -> Vec<Vertex>;

    fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors_of(u).binary_search(&v).is_ok()
    }

    /// Edges with both ends in `set` (assumed duplicate-free).
    fn count_induced_edges(&self, set: &[Vertex]) -> usize {
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted
            .iter()
            .map(|&v| {
                self.neighbors_of(v)
                    .into_iter()
                    .filter(|&w| w > v && sorted.binary_search(&w).is_ok())
                    .count()
            })
            .sum()
    }
}

impl NeighborOracle for Graph {
    fn neighbors_of(&self, v: Vertex) -> Vec<Vertex> {
        self.adj[v].clone()
    }

    fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.has_edge(u, v)
    }

    fn count_induced_edges(&self, set: &[Vertex]) -> usize {
        self.induced_edge_count(set)
    }
}

/// A shortest cycle through `root` of length at most `max_len`, explored by
/// a BFS that never leaves radius `max_len / 2`. Works on implicit graphs of
/// any size. Among shortest cycles the canonical form is minimized.
pub fn shortest_cycle_through<G: NeighborOracle + ?Sized>(
    g: &G,
    root: Vertex,
    max_len: usize,
) -> Option<Vec<Vertex>> {
    use std::collections::HashMap;
    // vertex -> (distance, parent, first step away from root)
    let mut info: HashMap<Vertex, (usize, Vertex, Vertex)> = HashMap::new();
    info.insert(root, (0, root, root));
    let mut frontier = vec![root];
    let radius = max_len / 2;
    let mut best: Option<Vec<Vertex>> = None;
    let path_to_root = |info: &HashMap<Vertex, (usize, Vertex, Vertex)>, mut v: Vertex| {
        let mut path = vec![v];
        while v != root {
            v = info[&v].1;
            path.push(v);
        }
        path
    };
    for depth in 0..=radius {
        let mut next = Vec::new();
        for &x in &frontier {
            for y in g.neighbors_of(x) {
                match info.get(&y).copied() {
                    None => {
                        if depth < radius {
                            let branch = if x == root { y } else { info[&x].2 };
                            info.insert(y, (depth + 1, x, branch));
                            next.push(y);
                        }
                    }
                    Some((dy, py, by)) => {
                        let (dx, px, bx) = info[&x];
                        if py == x || px == y || bx == by || x == root || y == root {
                            continue;
                        }
                        let len = dx + dy + 1;
                        if len > max_len || best.as_ref().is_some_and(|b| len > b.len()) {
                            continue;
                        }
                        let mut cycle = path_to_root(&info, x);
                        cycle.reverse();
                        let mut back = path_to_root(&info, y);
                        back.pop();
                        cycle.extend(back);
                        let cycle = canonical_cycle(&cycle);
                        if best.as_ref().map_or(true, |b| (cycle.len(), &cycle) < (b.len(), b)) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|b| b.len() <= 2 * depth + 2) {
            break;
        }
        frontier = next;
    }
    best
}

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    components_where(g, |_| true)
}

/// Components of the subgraph induced by the vertices satisfying `keep`.
pub(crate) fn components_where(g: &Graph, keep: impl Fn(Vertex) -> bool) -> Vec<Vec<Vertex>> {
    let mut seen = vec![false; g.order];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..g.order {
        if seen[start] || !keep(start) {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut block = Vec::new();
        while let Some(v) = queue.pop_front() {
            block.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] && keep(w) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        block.sort_unstable();
        out.push(block);
    }
    out
}

/// Two color classes covering every vertex with no edge inside a class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub part_x: Vec<Vertex>,
    pub part_y: Vec<Vertex>,
}

impl Bipartition {
    /// `side[v]` is `false` for part X and `true` for part Y.
    pub fn sides(&self, order: usize) -> Vec<bool> {
        let mut side = vec![false; order];
        for &v in &self.part_y {
            side[v] = true;
        }
        side
    }
}

/// Odd closed walk certifying that a graph is not bipartite. The walk is a
/// simple cycle listed once around, without repeating the first vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle(pub Vec<Vertex>);

/// 2-colors each component by BFS from its smallest vertex, which lands in
/// part X.
pub fn bipartition(g: &Graph) -> std::result::Result<Bipartition, OddCycle> {
    let n = g.order;
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].expect("colored on enqueue");
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => {
                        return Err(OddCycle(tree_cycle(&parent, &depth, v, w)));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let (mut part_x, mut part_y) = (Vec::new(), Vec::new());
    for v in 0..n {
        if color[v] == Some(false) {
            part_x.push(v);
        } else {
            part_y.push(v);
        }
    }
    Ok(Bipartition { part_x, part_y })
}

/// Cycle closed by the non-tree edge `x`–`y` through their lowest common
/// ancestor in a BFS tree.
fn tree_cycle(parent: &[usize], depth: &[usize], x: Vertex, y: Vertex) -> Vec<Vertex> {
    let (mut a, mut b) = (x, y);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Rotates and orients a cycle so that it starts at its smallest vertex and
/// the second entry is the smaller of that vertex's two cycle neighbors.
pub(crate) fn canonical_cycle(cycle: &[Vertex]) -> Vec<Vertex> {
    let len = cycle.len();
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap_or(0);
    let fwd: Vec<Vertex> = (0..len).map(|i| cycle[(start + i) % len]).collect();
    let bwd: Vec<Vertex> = (0..len).map(|i| cycle[(start + len - i) % len]).collect();
    fwd.min(bwd)
}

/// Length of a shortest cycle with the lexicographically smallest canonical
/// witness, or `None` for a forest. Disconnected graphs report the minimum
/// over their components.
pub fn girth(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.order;
    let mut best: Option<Vec<Vertex>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        let mut reached = Vec::new();
        while let Some(v) = queue.pop_front() {
            reached.push(v);
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        for &x in &reached {
            for &y in g.neighbors(x) {
                if y < x || parent[x] == y || parent[y] == x {
                    continue;
                }
                let walk = dist[x] + dist[y] + 1;
                if best.as_ref().is_some_and(|b| walk > b.len()) {
                    continue;
                }
                let cycle = canonical_cycle(&tree_cycle(&parent, &dist, x, y));
                let better = match &best {
                    None => true,
                    Some(b) => (cycle.len(), &cycle) < (b.len(), b),
                };
                if better {
                    best = Some(cycle);
                }
            }
        }
    }
    best
}

/// Checks that `cycle` is a simple cycle of `g`.
pub fn is_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let len = cycle.len();
    if len < 3 || cycle.iter().any(|&v| v >= g.order) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == len && (0..len).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % len]))
}

/// Induced subgraph together with the new-id → old-id map (sorted).
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertices: Vec<Vertex>,
}

impl InducedSubgraph {
    pub fn new_id(&self, old: Vertex) -> Option<usize> {
        self.vertices.binary_search(&old).ok()
    }
}

pub fn induced_subgraph(g: &Graph, set: &[Vertex]) -> Result<InducedSubgraph> {
    let vertices = g.normalize_set(set)?;
    let mut edges = Vec::new();
    for (i, &v) in vertices.iter().enumerate() {
        for &w in g.neighbors(v) {
            if w > v {
                if let Ok(j) = vertices.binary_search(&w) {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(InducedSubgraph {
        graph: Graph::from_sorted_edges(vertices.len(), edges),
        vertices,
    })
}

/// `G ∘ H` with vertex `(u, v)` numbered `u * |V(H)| + v`.
#[derive(Debug, Clone)]
pub struct LexProduct {
    pub graph: Graph,
    pub inner_order: usize,
}

impl LexProduct {
    pub fn id(&self, outer: Vertex, inner: Vertex) -> Vertex {
        outer * self.inner_order + inner
    }

    pub fn coords(&self, id: Vertex) -> (Vertex, Vertex) {
        (id / self.inner_order, id % self.inner_order)
    }
}

pub fn lexicographic_product(outer: &Graph, inner: &Graph) -> LexProduct {
    let k = inner.order();
    let mut edges = Vec::with_capacity(outer.edge_count() * k * k + outer.order() * inner.edge_count());
    for u in 0..outer.order() {
        for &(a, b) in inner.edges() {
            edges.push((u * k + a, u * k + b));
        }
    }
    for &(u1, u2) in outer.edges() {
        for a in 0..k {
            for b in 0..k {
                edges.push((u1 * k + a, u2 * k + b));
            }
        }
    }
    edges.sort_unstable();
    LexProduct {
        graph: Graph::from_sorted_edges(outer.order() * k, edges),
        inner_order: k,
    }
}

/// `N(u) ∩ N(v)` in increasing order; `u == v` yields `N(u)`.
pub fn common_neighbors(g: &Graph, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    Ok(out)
}

/// A `K_{3,3}` subgraph (not necessarily induced).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct K33 {
    pub left: [Vertex; 3],
    pub right: [Vertex; 3],
}

/// Lexicographically first triple `a < b < c` with at least three common
/// neighbors, paired with its three smallest common neighbors.
pub fn find_k33(g: &Graph) -> Option<K33> {
    if g.edge_count() < 9 {
        return None;
    }
    let n = g.order;
    for a in 0..n {
        if g.degree(a) < 3 {
            continue;
        }
        for b in a + 1..n {
            let ab = common_neighbors(g, a, b).expect("in range");
            if ab.len() < 3 {
                continue;
            }
            for c in b + 1..n {
                let abc: Vec<Vertex> = ab.iter().copied().filter(|&w| g.has_edge(c, w)).collect();
                if abc.len() >= 3 {
                    return Some(K33 {
                        left: [a, b, c],
                        right: [abc[0], abc[1], abc[2]],
                    });
                }
            }
        }
    }
    None
}

/// Part sizes `(smaller, larger)` when `g` is a connected complete
/// bipartite graph; a single vertex is reported as `(1, 0)`.
pub fn is_complete_bipartite(g: &Graph) -> Option<(usize, usize)> {
    match g.order {
        0 => return None,
        1 => return Some((1, 0)),
        _ => {}
    }
    if !g.is_connected() {
        return None;
    }
    let parts = bipartition(g).ok()?;
    let (x, y) = (parts.part_x.len(), parts.part_y.len());
    (g.edge_count() == x * y).then_some((x.min(y), x.max(y)))
}

/// `∂(U)` and the edges `[U, Ū]`, each listed as (inside, outside).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Boundary {
    pub value: usize,
    pub edges: Vec<Edge>,
}

pub fn boundary(g: &Graph, set: &[Vertex]) -> Result<Boundary> {
    let set = g.normalize_set(set)?;
    if set.is_empty() || set.len() == g.order {
        return Err(Error::InvalidSubset(format!(
            "boundary needs a nonempty proper subset, got {} of {} vertices",
            set.len(),
            g.order
        )));
    }
    let mut inside = vec![false; g.order];
    for &v in &set {
        inside[v] = true;
    }
    let mut edges = Vec::new();
    for &v in &set {
        for &w in g.neighbors(v) {
            if !inside[w] {
                edges.push((v, w));
            }
        }
    }
    Ok(Boundary {
        value: edges.len(),
        edges,
    })
}
