use proptest::prelude::*;

use super::*;
use crate::graph::tests::{arb_bipartite, arb_graph};
use crate::graph::{bipartition, find_k33, induced_subgraph};
use crate::hypercube::{build_bh, DEFAULT_MATERIALIZE_LIMIT};

fn bh(n: usize) -> Graph {
    build_bh(n, DEFAULT_MATERIALIZE_LIMIT).unwrap()
}

#[test]
fn exhaustive_examples_on_bh2() {
    let g = bh(2);
    let b = Budget::default();
    assert_eq!(eg_exhaustive(&g, 1, &b).unwrap().induced_edge_count, 1);
    assert_eq!(eg_exhaustive(&g, 2, &b).unwrap().induced_edge_count, 2);
    let c4 = eg_exhaustive(&g, 3, &b).unwrap();
    assert_eq!(c4.induced_edge_count, 4);
    assert_eq!(c4.certification, Certification::Exact);
    let sub = induced_subgraph(&g, &c4.vertices).unwrap();
    assert_eq!(sub.graph.regular_degree(), Some(2));
}

#[test]
fn exhaustive_witness_is_lexicographically_first() {
    let g = Graph::cycle(6);
    let w = eg_exhaustive(&g, 2, &Budget::default()).unwrap();
    assert_eq!(w.vertices, vec![0, 1, 2]);
}

#[test]
fn exhaustive_refuses_over_budget() {
    let g = bh(2);
    let b = Budget {
        subsets: 10,
        ..Budget::default()
    };
    assert!(matches!(eg_exhaustive(&g, 3, &b), Err(Error::BudgetExceeded(_))));
    assert!(matches!(eg_exhaustive(&g, 16, &b), Err(Error::OutOfRange(_))));
}

#[test]
fn exact_examples() {
    let b = Budget::default();
    let r = eg_exact(&bh(2), 3, &b).unwrap();
    assert_eq!(r.witness.induced_edge_count, 4);
    assert_eq!(r.witness.certification, Certification::Exact);
    let bh3 = bh(3);
    let r = eg_exact(&bh3, 5, &b).unwrap();
    assert_eq!((r.witness.induced_edge_count, r.upper_bound), (8, Some(8)));
    assert_eq!(r.table[5].max_edges, Some(8));
    let r = eg_exact(&bh3, 2, &b).unwrap();
    assert_eq!(r.witness.induced_edge_count, 2);
    assert_eq!(r.table[0].max_edges, Some(0));
}

#[test]
fn exact_matches_exhaustive_on_bh2() {
    let g = bh(2);
    let b = Budget::default();
    for gval in 0..=6 {
        let fast = eg_exact(&g, gval, &b).unwrap();
        let slow = eg_exhaustive(&g, gval, &b).unwrap();
        assert_eq!(fast.witness.induced_edge_count, slow.induced_edge_count, "g={gval}");
        assert_eq!(fast.witness.certification, Certification::Exact);
        fast.witness.revalidate(&g, gval).unwrap();
    }
}

#[test]
fn disconnected_optimum_needs_placement() {
    // Two disjoint C4s: the best 8-set is disconnected.
    let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]).unwrap();
    let r = eg_exact(&g, 7, &Budget::default()).unwrap();
    assert_eq!(r.witness.induced_edge_count, 8);
    assert_eq!(r.route, ExactRoute::Placement);
}

#[test]
fn unattainable_partition_bound_falls_back_to_decomposition() {
    // One edge and two isolated vertices: sizes (2, 2) promise two edges,
    // but only one edge exists.
    let g = Graph::new(4, [(0, 1)]).unwrap();
    let r = eg_exact(&g, 3, &Budget::default()).unwrap();
    assert_eq!(r.route, ExactRoute::Decomposition);
    assert_eq!((r.witness.induced_edge_count, r.upper_bound), (1, Some(1)));
    assert_eq!(r.witness.certification, Certification::Exact);
}

#[test]
fn witnesses_on_small_cubes_are_k33_free() {
    let b = Budget::default();
    for n in 2..=3 {
        let g = bh(n);
        for gval in 1..=7 {
            let w = eg_exact(&g, gval, &b).unwrap().witness;
            let sub = induced_subgraph(&g, &w.vertices).unwrap();
            assert!(find_k33(&sub.graph).is_none());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_agrees_with_exhaustive(g in arb_graph(12), k in 1usize..8) {
        prop_assume!(k <= g.order());
        let b = Budget::default();
        let fast = eg_exact(&g, k - 1, &b).unwrap();
        let slow = eg_exhaustive(&g, k - 1, &b).unwrap();
        prop_assert_eq!(fast.witness.induced_edge_count, slow.induced_edge_count);
        prop_assert_eq!(fast.witness.certification, Certification::Exact);
        prop_assert_eq!(fast.upper_bound, Some(slow.induced_edge_count));
        fast.witness.revalidate(&g, k - 1).unwrap();
    }

    #[test]
    fn exact_agrees_with_exhaustive_with_one_alternate(g in arb_graph(11), k in 1usize..8) {
        prop_assume!(k <= g.order());
        let b = Budget { top_k: 1, ..Budget::default() };
        let fast = eg_exact(&g, k - 1, &b).unwrap();
        let slow = eg_exhaustive(&g, k - 1, &b).unwrap();
        prop_assert_eq!(fast.witness.induced_edge_count, slow.induced_edge_count);
        prop_assert_eq!(fast.witness.certification, Certification::Exact);
    }

    #[test]
    fn bipartite_witnesses_respect_side_product(g in arb_bipartite(7), k in 1usize..10) {
        prop_assume!(k <= g.order());
        prop_assert!(bipartition(&g).is_ok());
        let w = eg_exact(&g, k - 1, &Budget::default()).unwrap().witness;
        prop_assert!(w.induced_edge_count <= (k / 2) * k.div_ceil(2));
    }
}
