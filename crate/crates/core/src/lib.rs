//! Balanced hypercubes `BH_n`, their equivalent-vertex quotients `X_n`,
//! extremal induced subgraphs and g-extra edge-connectivity.
//!
//! Every solver returns a witness (a vertex set, a cycle, a cut, an
//! automorphism) that can be rechecked independently of the code that found
//! it. The `book/` directory next to this crate walks through the concepts;
//! its code listings are compiled as doctests of this crate.

pub mod budget;
pub mod connectivity;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod hypercube;
pub mod pipeline;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Graph, Vertex};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/graphs.md")]
    struct Graphs;
    #[doc = include_str!("../../../book/src/balanced-hypercube.md")]
    struct BalancedHypercube;
    #[doc = include_str!("../../../book/src/extremal.md")]
    struct Extremal;
    #[doc = include_str!("../../../book/src/connectivity.md")]
    struct Connectivity;
}
