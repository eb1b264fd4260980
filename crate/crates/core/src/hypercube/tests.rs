use proptest::prelude::*;

use super::*;
use crate::graph::{bipartition, find_k33, girth, is_complete_bipartite, shortest_cycle_through};

fn v(s: &str) -> BhVertex {
    s.parse().unwrap()
}

fn ids(list: &[BhVertex]) -> Vec<String> {
    list.iter().map(ToString::to_string).collect()
}

#[test]
fn codec_examples() {
    assert_eq!(bh_encode(&[0, 0]).unwrap(), 0);
    assert_eq!(bh_encode(&[2, 0]).unwrap(), 2);
    assert_eq!(bh_encode(&[3, 1]).unwrap(), 7);
    assert_eq!(bh_decode(7, 2).unwrap(), v("3,1"));
    assert!(bh_encode(&[4, 0]).is_err());
    assert!(bh_decode(16, 2).is_err());
    assert!(bh_decode(0, 0).is_err());
    assert_eq!(v("2, 0,1").to_string(), "2,0,1");
    assert!("2,x".parse::<BhVertex>().is_err());
}

#[test]
fn neighbor_examples() {
    let n1 = bh_neighbors(1, &v("0")).unwrap();
    assert_eq!(ids(&n1), ["1", "3"]);

    let mut got = ids(&bh_neighbors(2, &v("0,0")).unwrap());
    got.sort();
    assert_eq!(got, ["1,0", "1,1", "3,0", "3,1"]);

    let mut got = ids(&bh_neighbors(2, &v("1,0")).unwrap());
    got.sort();
    assert_eq!(got, ["0,0", "0,3", "2,0", "2,3"]);

    assert!(bh_neighbors(3, &v("1,0")).is_err());
}

#[test]
fn neighbor_lists_symmetric_and_full() {
    for n in 1..=3 {
        let bh = BhImplicit::new(n).unwrap();
        for u in 0..bh.order() {
            let nu = bh.neighbors_of(u);
            assert_eq!(nu.len(), 2 * n);
            assert!(nu.windows(2).all(|w| w[0] < w[1]));
            for w in nu {
                assert!(bh.adjacent(w, u), "n={n}: {u} ~ {w} not symmetric");
            }
        }
    }
}

#[test]
fn build_examples() {
    let bh1 = build_bh(1, DEFAULT_MATERIALIZE_LIMIT).unwrap();
    assert_eq!(bh1, Graph::cycle(4));
    for (n, order, edges) in [(2, 16, 32), (3, 64, 192)] {
        let g = build_bh(n, DEFAULT_MATERIALIZE_LIMIT).unwrap();
        assert_eq!(g.order(), order);
        assert_eq!(g.edge_count(), edges);
        assert_eq!(g.regular_degree(), Some(2 * n));
        assert!(g.is_connected());
    }
    assert!(matches!(build_bh(3, 63), Err(Error::TooLarge { .. })));
}

#[test]
fn equivalent_examples() {
    assert_eq!(equivalent_vertex(&v("0,0,0,0")), v("2,0,0,0"));
    let x = v("3,1,2");
    assert_eq!(equivalent_vertex(&equivalent_vertex(&x)), x);

    assert_eq!(equivalent_vertex(&v("1,0")), v("3,0"));
    assert_eq!(
        bh_neighbors(2, &v("1,0")).unwrap(),
        bh_neighbors(2, &v("3,0")).unwrap()
    );
}

#[test]
fn closed_form_equivalent_matches_search() {
    for n in 1..=3 {
        let g = build_bh(n, DEFAULT_MATERIALIZE_LIMIT).unwrap();
        for u in 0..g.order() {
            assert_eq!(equivalent_by_search(&g, u).unwrap(), Some(equivalent_id(u)));
            assert_ne!(equivalent_id(u), u);
            assert_eq!(g.neighbors(u), g.neighbors(equivalent_id(u)));
        }
    }
}

#[test]
fn spectrum_examples() {
    let s1 = common_neighbor_spectrum(&build_bh(1, 16).unwrap(), 1).unwrap();
    assert!(s1.is_valid());
    assert!(s1.histogram.iter().all(|(v, _)| [0, 2].contains(v)));
    assert_eq!(s1.histogram.iter().map(|(_, c)| c).sum::<usize>(), 6);

    let s2 = common_neighbor_spectrum(&build_bh(2, 16).unwrap(), 2).unwrap();
    assert!(s2.is_valid());
    assert_eq!(s2.full_pairs.len(), 8);

    let s3 = common_neighbor_spectrum(&build_bh(3, 64).unwrap(), 3).unwrap();
    assert!(s3.is_valid());
    assert!(s3.histogram.iter().all(|(v, _)| [0, 2, 6].contains(v)));
}

#[test]
fn quotient_examples() {
    let (x1, map) = build_xn(&build_bh(1, 16).unwrap(), 1).unwrap();
    assert_eq!(x1, Graph::complete(2));
    assert_eq!(map.fiber_of, vec![(0, 2), (1, 3)]);

    let (x2, _) = build_xn(&build_bh(2, 16).unwrap(), 2).unwrap();
    assert_eq!(x2.order(), 8);
    assert_eq!(x2.regular_degree(), Some(2));
    assert!(x2.is_connected());
    assert_eq!(girth(&x2).unwrap().len(), 8);

    let (x3, _) = build_xn(&build_bh(3, 64).unwrap(), 3).unwrap();
    assert_eq!(x3.order(), 32);
    assert_eq!(x3.regular_degree(), Some(3));
    assert!(x3.is_connected());
    assert_eq!(girth(&x3).unwrap().len(), 6);
}

#[test]
fn quotient_maps_invert() {
    for id in 0..256 {
        let (a, b) = fiber_of(class_of(id));
        assert!(id == a || id == b);
        assert_eq!(fiber_index(id), usize::from(id == b));
        assert_eq!(equivalent_id(a), b);
    }
}

#[test]
fn implicit_quotient_matches_materialized() {
    let bh = build_bh(3, 64).unwrap();
    let (x3, _) = build_xn(&bh, 3).unwrap();
    let xi = BhImplicit::new(3).unwrap().quotient();
    assert_eq!(xi.order(), 32);
    for c in 0..32 {
        assert_eq!(xi.neighbors_of(c), x3.neighbors(c));
    }
    let cycle = shortest_cycle_through(&xi, 0, 8).unwrap();
    assert_eq!(cycle.len(), 6);
    assert!(crate::graph::is_cycle(&x3, &cycle));
}

#[test]
fn lex_decomposition_examples() {
    for (n, edges) in [(1, 4), (2, 32), (3, 192)] {
        let w = verify_lex_decomposition(n, DEFAULT_MATERIALIZE_LIMIT).unwrap();
        assert_eq!(w.edges_checked, edges);
        assert_eq!(w.bijection.len(), 1 << (2 * n));
    }
}

#[test]
fn bipartite_by_parity_of_first_digit() {
    let g = build_bh(2, 16).unwrap();
    let parts = bipartition(&g).unwrap();
    assert_eq!(parts.part_x.len(), 8);
    assert_eq!(parts.part_y.len(), 8);
    assert!(parts.part_x.iter().all(|&u| u % 2 == 0));
    assert!(parts.part_y.iter().all(|&u| u % 2 == 1));
}

#[test]
fn k33_free_small_dimensions() {
    assert_eq!(find_k33(&build_bh(2, 16).unwrap()), None);
    assert_eq!(find_k33(&build_bh(3, 64).unwrap()), None);
}

#[test]
fn common_neighbor_examples() {
    let g = build_bh(2, 16).unwrap();
    let a = v("0,0").id();
    assert_eq!(common_neighbors(&g, a, v("2,0").id()).unwrap().len(), 4);
    assert_eq!(common_neighbors(&g, a, v("1,0").id()).unwrap().len(), 0);
}

#[test]
fn star_of_a_pair_is_k2_2() {
    // {u, u'} plus two of their common neighbors
    let g = build_bh(2, 16).unwrap();
    let sub = crate::graph::induced_subgraph(&g, &[0, 2, 1, 3]).unwrap();
    assert_eq!(is_complete_bipartite(&sub.graph), Some((2, 2)));
}

#[test]
fn components_avoiding_a_neighborhood() {
    let bh = BhImplicit::new(2).unwrap();
    // Removing N(0) cuts off 0 and its twin 2.
    let comps = bh.components_avoiding(&bh.neighbors_of(0));
    let mut sizes: Vec<usize> = comps.iter().map(|c| c.0).collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 1, 10]);
}

proptest! {
    #[test]
    fn codec_round_trip(digits in proptest::collection::vec(0u8..4, 1..12)) {
        let vtx = BhVertex::new(digits.clone()).unwrap();
        let id = vtx.id();
        prop_assert!(id < 1 << (2 * digits.len()));
        prop_assert_eq!(bh_decode(id, digits.len()).unwrap(), vtx.clone());
        prop_assert_eq!(vtx.to_string().parse::<BhVertex>().unwrap(), vtx);
    }
}
