use bh_extra::connectivity::{beta_g, gamma_g_bruteforce, lambda_g_bruteforce, CutWitness};
use bh_extra::extremal::{
    construct_dense_witness, construct_k2_star, eg_bounds, eg_exact, eg_exhaustive, eg_paired_search,
    SubgraphWitness,
};
use bh_extra::graph::{find_k33, induced_subgraph};
use bh_extra::hypercube::{build_bh, BhImplicit, BhVertex, DEFAULT_MATERIALIZE_LIMIT};
use bh_extra::pipeline::{theorem_pipeline, PipelineReport, Verdict};
use bh_extra::Budget;

#[test]
fn solvers_agree_on_bh3() {
    let g = build_bh(3, DEFAULT_MATERIALIZE_LIMIT).unwrap();
    let b = Budget::default();
    for gval in 2..=5 {
        let exact = eg_exact(&g, gval, &b).unwrap();
        let flat = eg_exhaustive(&g, gval, &b).unwrap();
        let paired = eg_paired_search(3, gval, &b).unwrap();
        assert_eq!(exact.witness.induced_edge_count, 2 * gval - 2);
        assert_eq!(flat.induced_edge_count, 2 * gval - 2);
        assert_eq!(paired.induced_edge_count, 2 * gval - 2);
        let sub = induced_subgraph(&g, &flat.vertices).unwrap();
        assert!(find_k33(&sub.graph).is_none());
    }
}

#[test]
fn every_cut_oracle_on_bh2_is_consistent() {
    let g = build_bh(2, DEFAULT_MATERIALIZE_LIMIT).unwrap();
    let b = Budget::default();
    for gval in 1..=3 {
        let beta = beta_g(&g, gval, true, &b).unwrap();
        let gamma = gamma_g_bruteforce(&g, gval, &b).unwrap().unwrap();
        let lambda = lambda_g_bruteforce(&g, gval, &b).unwrap().unwrap();
        assert!(gamma.cut_size <= beta.cut_size);
        assert_eq!(gamma.cut_size, lambda.cut_size);
        let eg = eg_exact(&g, gval, &b).unwrap().witness.induced_edge_count;
        assert_eq!(beta.cut_size, 4 * (gval + 1) - 2 * eg);
    }
}

#[test]
fn witnesses_survive_json() {
    let b = Budget::default();
    let bh = BhImplicit::new(5).unwrap();
    let w = construct_dense_witness(5, 9).unwrap().witness;
    let text = serde_json::to_string(&w).unwrap();
    let back: SubgraphWitness = serde_json::from_str(&text).unwrap();
    back.revalidate(&bh, 9).unwrap();
    assert_eq!(back, w);

    let g = build_bh(2, DEFAULT_MATERIALIZE_LIMIT).unwrap();
    let cut = lambda_g_bruteforce(&g, 2, &b).unwrap().unwrap();
    let back: CutWitness = serde_json::from_str(&serde_json::to_string(&cut).unwrap()).unwrap();
    back.revalidate(&g).unwrap();

    let report = theorem_pipeline(5, 9, &b).unwrap();
    let back: PipelineReport = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(back, report);

    let v: BhVertex = "2,0,1".parse().unwrap();
    assert_eq!(serde_json::to_string(&v).unwrap(), "\"2,0,1\"");
}

#[test]
fn tampered_witnesses_are_rejected() {
    let bh = BhImplicit::new(3).unwrap();
    let mut w = construct_k2_star(3, 4).unwrap();
    w.revalidate(&bh, 4).unwrap();
    w.induced_edge_count += 1;
    assert!(w.revalidate(&bh, 4).is_err());

    let g = build_bh(2, DEFAULT_MATERIALIZE_LIMIT).unwrap();
    let mut cut = lambda_g_bruteforce(&g, 1, &Budget::default()).unwrap().unwrap();
    cut.cut_size -= 1;
    assert!(cut.revalidate(&g).is_err());
}

#[test]
fn bounds_exceed_the_star_from_g_equals_nine() {
    let b = Budget::default();
    for (n, g) in [(5, 9), (6, 10), (6, 11)] {
        let r = eg_bounds(n, g, &b).unwrap();
        assert!(r.lower > 2 * g - 2, "n={n} g={g}: {}", r.lower);
    }
    assert_eq!(theorem_pipeline(5, 9, &b).unwrap().verdict, Verdict::BelowConjecture);
}
