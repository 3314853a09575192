//! Exact structural facts about the 13-vertex fixture, anchored by literal
//! enumeration.

use bullmwss::bitset::VertexSet;
use bullmwss::generator::fixture;
use bullmwss::graph::Weights;
use bullmwss::mwss::{exact_mwss, DEFAULT_NODE_BUDGET};
use bullmwss::patterns::{c5_census, classify_c5, find_hole};
use bullmwss::solver::{solve_p7bull, SolveOptions};

#[test]
fn unit_optimum_is_six_by_full_enumeration() {
    let (g, _, _) = fixture();
    assert_eq!(g.n(), 13);
    let edges = g.edges();
    let mut best = 0u32;
    for mask in 0u32..(1 << 13) {
        if edges.iter().any(|&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1) {
            continue;
        }
        best = best.max(mask.count_ones());
    }
    assert_eq!(best, 6);

    let w = Weights::unit(13);
    assert_eq!(exact_mwss(&g, &w, DEFAULT_NODE_BUDGET).unwrap().weight, 6);
    let (sol, _) = solve_p7bull(&g, &w, &SolveOptions::default()).unwrap();
    assert_eq!(sol.weight, 6);
}

#[test]
fn ring_part_carries_the_unanchored_cycle() {
    let (g, _, d) = fixture();
    // Core split: anchors are N(d) within the core, the ring + apex is the
    // unanchored side.
    let core = g.anti_neighborhood_components(0)[0];
    let anchors = g.neighbors(d).and(&core);
    assert_eq!(anchors.to_vec(), vec![2, 3, 4, 5, 6]);

    // The five ring vertices hold a five-hole on their own.
    let ring = VertexSet::from_iter(13, 7..12);
    let cycle = find_hole(&g, 5, &ring).unwrap().expect("ring is a five-hole");
    let typed = classify_c5(&g, &cycle, &anchors).unwrap();
    assert_eq!(typed.q, 0, "the ring cycle carries no anchors");

    // The core census sees all three anchoring types: the bare ring cycle
    // (type 0), anchor-plus-four-ring cycles like 2-8-9-10-11 (type 1), and
    // two-anchor cycles like 2-8-4-10-11 (type 2).
    let census = c5_census(&g, &core, &anchors, 0).unwrap();
    assert!(census.by_type[0].is_some());
    assert!(census.by_type[1].is_some());
    assert!(census.by_type[2].is_some());
    let t2 = census.by_type[2].as_ref().unwrap();
    assert!(!g.has_edge(t2.h_vertices[0], t2.h_vertices[1]));
}
