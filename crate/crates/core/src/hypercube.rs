//! The balanced hypercube `BH_n` and its equivalent-vertex quotient `X_n`.
//!
//! A vertex of `BH_n` is a string `(a_0, …, a_{n-1})` of base-4 digits and
//! is numbered `Σ a_i · 4^i`. Its `2n` neighbors are obtained by moving
//! `a_0` to `a_0 ± 1 (mod 4)` and then either leaving the other digits alone
//! or shifting exactly one digit `a_i` (`i ≥ 1`) by `+1` when `a_0` is even
//! and by `-1` when `a_0` is odd.
//!
//! Vertices `v` and `v'` that differ only by `a_0 ↦ a_0 + 2` have identical
//! neighborhoods. Collapsing each such pair gives `X_n`; the class of a
//! vertex is numbered by its representative with `a_0 ∈ {0, 1}` with bit 1
//! of the id deleted, and fiber index 0 is that representative.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{common_neighbors, lexicographic_product, Graph, NeighborOracle, Vertex};

pub const DEFAULT_MATERIALIZE_LIMIT: usize = 1 << 20;
/// Largest dimension whose ids fit comfortably in a `usize`.
pub const MAX_DIMENSION: usize = 30;

/// A `BH_n` vertex as its digit string, `a_0` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct BhVertex {
    digits: Vec<u8>,
}

impl BhVertex {
    pub fn new(digits: Vec<u8>) -> Result<BhVertex> {
        check_dimension(digits.len())?;
        if let Some((i, d)) = digits.iter().enumerate().find(|(_, &d)| d > 3) {
            return Err(Error::InvalidVertex(format!(
                "digit {d} at position {i} is not in 0..=3"
            )));
        }
        Ok(BhVertex { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn dimension(&self) -> usize {
        self.digits.len()
    }

    pub fn id(&self) -> Vertex {
        self.digits
            .iter()
            .rev()
            .fold(0, |acc, &d| (acc << 2) | d as usize)
    }

    pub fn from_id(id: Vertex, n: usize) -> Result<BhVertex> {
        check_dimension(n)?;
        if id >= 1 << (2 * n) {
            return Err(Error::InvalidVertex(format!(
                "id {id} is not below 4^{n}"
            )));
        }
        Ok(BhVertex {
            digits: (0..n).map(|i| ((id >> (2 * i)) & 3) as u8).collect(),
        })
    }
}

impl fmt::Display for BhVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for BhVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<BhVertex> {
        let digits = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::InvalidVertex(format!("`{part}` is not a digit in {s:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        BhVertex::new(digits)
    }
}

impl TryFrom<String> for BhVertex {
    type Error = Error;

    fn try_from(s: String) -> Result<BhVertex> {
        s.parse()
    }
}

impl From<BhVertex> for String {
    fn from(v: BhVertex) -> String {
        v.to_string()
    }
}

fn check_dimension(n: usize) -> Result<()> {
    if (1..=MAX_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "dimension {n} outside 1..={MAX_DIMENSION}"
        )))
    }
}

pub fn bh_encode(digits: &[u8]) -> Result<Vertex> {
    Ok(BhVertex::new(digits.to_vec())?.id())
}

pub fn bh_decode(id: Vertex, n: usize) -> Result<BhVertex> {
    BhVertex::from_id(id, n)
}

/// Neighbor ids of `id` in `BH_n`, sorted. The caller guarantees
/// `id < 4^n`.
fn neighbor_ids(n: usize, id: Vertex) -> Vec<Vertex> {
    let a0 = id & 3;
    // (-1)^{a_0} as a residue mod 4
    let shift = if a0 % 2 == 0 { 1 } else { 3 };
    let mut out = Vec::with_capacity(2 * n);
    for step in [1, 3] {
        let base = (id & !3) | ((a0 + step) & 3);
        out.push(base);
        for i in 1..n {
            let digit = (id >> (2 * i)) & 3;
            let moved = (digit + shift) & 3;
            out.push((base & !(3 << (2 * i))) | (moved << (2 * i)));
        }
    }
    out.sort_unstable();
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "neighbors must be distinct");
    out
}

/// The `2n` neighbors of `v`, sorted by id.
pub fn bh_neighbors(n: usize, v: &BhVertex) -> Result<Vec<BhVertex>> {
    if v.dimension() != n {
        return Err(Error::InvalidVertex(format!(
            "{v} has {} digits, expected {n}",
            v.dimension()
        )));
    }
    let ids = neighbor_ids(n, v.id());
    if ids.len() != 2 * n || ids.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Internal(format!("{v} does not have 2n distinct neighbors")));
    }
    ids.into_iter().map(|id| BhVertex::from_id(id, n)).collect()
}

/// `(a_0 + 2) mod 4` with the other digits unchanged.
pub fn equivalent_vertex(v: &BhVertex) -> BhVertex {
    let mut digits = v.digits.clone();
    digits[0] = (digits[0] + 2) % 4;
    BhVertex { digits }
}

#[inline]
pub fn equivalent_id(id: Vertex) -> Vertex {
    id ^ 2
}

/// Class of `id` in `X_n`.
#[inline]
pub fn class_of(id: Vertex) -> Vertex {
    (id & 1) | ((id >> 2) << 1)
}

/// 0 for the representative with `a_0 ∈ {0, 1}`, 1 for its partner.
#[inline]
pub fn fiber_index(id: Vertex) -> usize {
    (id >> 1) & 1
}

/// The two `BH_n` ids in class `class`, fiber index 0 first.
#[inline]
pub fn fiber_of(class: Vertex) -> (Vertex, Vertex) {
    let rep = (class & 1) | ((class >> 1) << 2);
    (rep, rep | 2)
}

/// `BH_n` with adjacency computed on demand; usable at dimensions where
/// `4^n` vertices cannot be stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BhImplicit {
    n: usize,
}

impl BhImplicit {
    pub fn new(n: usize) -> Result<BhImplicit> {
        check_dimension(n)?;
        Ok(BhImplicit { n })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        1 << (2 * self.n)
    }

    pub fn vertex(&self, id: Vertex) -> Result<BhVertex> {
        BhVertex::from_id(id, self.n)
    }

    pub fn quotient(&self) -> XnImplicit {
        XnImplicit { bh: *self }
    }

    /// Connected components of `BH_n - set`, each given by its size and
    /// smallest member, by BFS over all `4^n` vertices.
    pub fn components_avoiding(&self, set: &[Vertex]) -> Vec<(usize, Vertex)> {
        let order = self.order();
        let mut seen = vec![false; order];
        for &v in set {
            seen[v] = true;
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for start in 0..order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut size = 0;
            while let Some(v) = stack.pop() {
                size += 1;
                for w in neighbor_ids(self.n, v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push((size, start));
        }
        out
    }
}

impl NeighborOracle for BhImplicit {
    fn neighbors_of(&self, v: Vertex) -> Vec<Vertex> {
        neighbor_ids(self.n, v)
    }
}

/// `X_n` with adjacency computed on demand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XnImplicit {
    bh: BhImplicit,
}

impl XnImplicit {
    pub fn order(&self) -> usize {
        self.bh.order() / 2
    }

    pub fn bh(&self) -> BhImplicit {
        self.bh
    }

    /// Both fibers of every class in `classes`, sorted.
    pub fn expand(&self, classes: &[Vertex]) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = classes
            .iter()
            .flat_map(|&c| {
                let (a, b) = fiber_of(c);
                [a, b]
            })
            .collect();
        out.sort_unstable();
        out
    }
}

impl NeighborOracle for XnImplicit {
    fn neighbors_of(&self, class: Vertex) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = neighbor_ids(self.bh.n, fiber_of(class).0)
            .into_iter()
            .map(class_of)
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// Materializes `BH_n`: `4^n` vertices, `n·4^n` edges, `2n`-regular.
pub fn build_bh(n: usize, materialize_limit: usize) -> Result<Graph> {
    check_dimension(n)?;
    let order = 1usize << (2 * n);
    if order > materialize_limit {
        return Err(Error::TooLarge {
            what: format!("BH_{n} vertex count (use BhImplicit for on-demand adjacency)"),
            size: order as u128,
            limit: materialize_limit as u128,
        });
    }
    let mut edges = Vec::with_capacity(n * order);
    for u in 0..order {
        for v in neighbor_ids(n, u) {
            if u < v {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(order, edges))
}

/// Histogram of `|N(u) ∩ N(v)|` over unordered pairs `u ≠ v`, plus the
/// number of full-overlap partners of each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommonNeighborSpectrum {
    pub n: usize,
    /// `(value, number of pairs)`, ascending by value.
    pub histogram: Vec<(usize, usize)>,
    /// Pairs attaining `2n`, each as `(u, v)` with `u < v`.
    pub full_pairs: Vec<(Vertex, Vertex)>,
    /// For each vertex, how many partners attain `2n`.
    pub partner_counts: Vec<usize>,
}

impl CommonNeighborSpectrum {
    /// Values lie in `{0, 2, 2n}` and every vertex has exactly one partner at
    /// `2n`.
    pub fn is_valid(&self) -> bool {
        let allowed = [0, 2, 2 * self.n];
        self.histogram.iter().all(|(v, _)| allowed.contains(v))
            && self.partner_counts.iter().all(|&c| c == 1)
    }
}

pub fn common_neighbor_spectrum(bh: &Graph, n: usize) -> Result<CommonNeighborSpectrum> {
    let order = bh.order();
    if order != 1 << (2 * n) {
        return Err(Error::OutOfRange(format!(
            "graph of order {order} is not BH_{n}"
        )));
    }
    let rows = bh.dense_rows("common-neighbor spectrum")?;
    let mut counts = std::collections::BTreeMap::new();
    let mut full_pairs = Vec::new();
    let mut partner_counts = vec![0; order];
    for u in 0..order {
        for v in u + 1..order {
            let c = rows[u].intersection_count(&rows[v]);
            *counts.entry(c).or_insert(0usize) += 1;
            if c == 2 * n {
                full_pairs.push((u, v));
                partner_counts[u] += 1;
                partner_counts[v] += 1;
            }
        }
    }
    Ok(CommonNeighborSpectrum {
        n,
        histogram: counts.into_iter().collect(),
        full_pairs,
        partner_counts,
    })
}

/// `class_of` and `fiber_of` tabulated for one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientMap {
    pub class_of: Vec<Vertex>,
    pub fiber_of: Vec<(Vertex, Vertex)>,
}

/// `X_n` from a materialized `BH_n`. Fails if some class does not consist
/// of two vertices with equal neighborhoods.
pub fn build_xn(bh: &Graph, n: usize) -> Result<(Graph, QuotientMap)> {
    let order = bh.order();
    if order != 1 << (2 * n) {
        return Err(Error::OutOfRange(format!(
            "graph of order {order} is not BH_{n}"
        )));
    }
    let classes = order / 2;
    let map = QuotientMap {
        class_of: (0..order).map(class_of).collect(),
        fiber_of: (0..classes).map(fiber_of).collect(),
    };
    for (c, &(a, b)) in map.fiber_of.iter().enumerate() {
        if map.class_of[a] != c || map.class_of[b] != c || bh.neighbors(a) != bh.neighbors(b) {
            return Err(Error::Internal(format!(
                "class {c} = {{{a}, {b}}} is not a pair of equivalent vertices"
            )));
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> = bh
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (map.class_of[u], map.class_of[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    Ok((Graph::new(classes, edges)?, map))
}

/// Explicit isomorphism `BH_n → X_n ∘ 2K_1`, `u ↦ (class_of(u), fiber_index(u))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoWitness {
    pub n: usize,
    pub bijection: Vec<(Vertex, usize)>,
    /// Edges checked in each direction.
    pub edges_checked: usize,
}

pub fn verify_lex_decomposition(n: usize, materialize_limit: usize) -> Result<IsoWitness> {
    let bh = build_bh(n, materialize_limit)?;
    let (xn, _) = build_xn(&bh, n)?;
    let product = lexicographic_product(&xn, &Graph::empty(2));
    let bijection: Vec<(Vertex, usize)> = (0..bh.order()).map(|u| (class_of(u), fiber_index(u))).collect();
    let forward: Vec<Vertex> = bijection.iter().map(|&(c, i)| product.id(c, i)).collect();
    let mut backward = vec![usize::MAX; bh.order()];
    for (u, &p) in forward.iter().enumerate() {
        if p >= backward.len() || backward[p] != usize::MAX {
            return Err(Error::Internal(format!("vertex map is not a bijection at {u}")));
        }
        backward[p] = u;
    }
    let describe = |u: Vertex| bh_decode(u, n).map(|v| v.to_string()).unwrap_or_default();
    for &(u, v) in bh.edges() {
        if !product.graph.has_edge(forward[u], forward[v]) {
            return Err(Error::Internal(format!(
                "BH_{n} edge ({})-({}) has no image in X_{n} ∘ 2K_1",
                describe(u),
                describe(v)
            )));
        }
    }
    for &(p, q) in product.graph.edges() {
        let (u, v) = (backward[p], backward[q]);
        if !bh.has_edge(u, v) {
            return Err(Error::Internal(format!(
                "X_{n} ∘ 2K_1 edge {:?}-{:?} pulls back to the non-edge ({})-({})",
                product.coords(p),
                product.coords(q),
                describe(u),
                describe(v)
            )));
        }
    }
    if bh.edge_count() != product.graph.edge_count() {
        return Err(Error::Internal("edge counts differ".into()));
    }
    Ok(IsoWitness {
        n,
        bijection,
        edges_checked: bh.edge_count(),
    })
}

/// Unique vertex sharing its whole neighborhood with `u`, found by search
/// rather than by the closed form.
pub fn equivalent_by_search(bh: &Graph, u: Vertex) -> Result<Option<Vertex>> {
    let deg = bh.degree(u);
    let mut found = None;
    for w in 0..bh.order() {
        if w != u && common_neighbors(bh, u, w)?.len() == deg {
            if found.is_some() {
                return Ok(None);
            }
            found = Some(w);
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests;
