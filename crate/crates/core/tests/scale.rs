//! Large instances near the vertex cap, verified against closed forms
//! instead of an oracle: on a ring of stable parts the optimum is the best
//! rotation of part-weight sums, and on a stable-twin expansion it equals
//! the base optimum under aggregated class weights.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bullmwss::generator::{c7_blowup, fixture, twin_expand};
use bullmwss::graph::Weights;
use bullmwss::mwss::{exact_mwss, verify_solution, ORACLE_NODE_BUDGET};
use bullmwss::solver::{solve_p7bull, solve_s123bull, SolveOptions};

#[test]
fn weighted_ring_blowups_match_the_rotation_formula() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x005C_A1E1);
    let opts = SolveOptions::default();
    for &s in &[10usize, 31, 73] {
        let sizes = [s; 7];
        let g = c7_blowup(&sizes).unwrap();
        let w = Weights((0..g.n()).map(|_| rng.random_range(0..=50u64)).collect());
        let part_total: Vec<u64> =
            (0..7).map(|i| (i * s..(i + 1) * s).map(|v| w.get(v)).sum()).collect();
        let expected = (0..7)
            .map(|i| part_total[i] + part_total[(i + 2) % 7] + part_total[(i + 4) % 7])
            .max()
            .unwrap();
        let (sol, _) = solve_p7bull(&g, &w, &opts).unwrap();
        assert_eq!(sol.weight, expected, "s={s}");
        assert!(verify_solution(&g, &w, &sol));
    }
}

#[test]
fn weighted_twin_expansions_match_the_aggregated_base() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x005C_A1E2);
    let opts = SolveOptions::default();
    let (base, _, _) = fixture();
    for &t in &[8usize, 17, 30] {
        let g = twin_expand(&base, t).unwrap();
        let w = Weights((0..g.n()).map(|_| rng.random_range(0..=50u64)).collect());
        // Classes are stable, so a stable set takes whole classes at will:
        // aggregate each class onto its base vertex and solve the base.
        let agg = Weights(
            (0..base.n()).map(|v| (v * t..(v + 1) * t).map(|x| w.get(x)).sum()).collect(),
        );
        let expected = exact_mwss(&base, &agg, ORACLE_NODE_BUDGET).unwrap().weight;
        let (sol, _) = solve_p7bull(&g, &w, &opts).unwrap();
        assert_eq!(sol.weight, expected, "t={t}");
        assert!(verify_solution(&g, &w, &sol));
    }
}

#[test]
fn both_solvers_take_the_cap_sized_complete_multipartite_graph() {
    // Seven stable parts, pairwise complete: in both classes, optimum is
    // the heaviest part.
    let mut rng = ChaCha8Rng::seed_from_u64(0x005C_A1E3);
    let s = 73;
    let n = 7 * s;
    let mut edges = Vec::new();
    for i in 0..7 {
        for j in (i + 1)..7 {
            for u in i * s..(i + 1) * s {
                for v in j * s..(j + 1) * s {
                    edges.push((u, v));
                }
            }
        }
    }
    let g = bullmwss::graph::Graph::build(n, &edges).unwrap();
    let w = Weights((0..n).map(|_| rng.random_range(0..=50u64)).collect());
    let expected = (0..7)
        .map(|i| (i * s..(i + 1) * s).map(|v| w.get(v)).sum::<u64>())
        .max()
        .unwrap();
    let (sol, _) = solve_p7bull(&g, &w, &SolveOptions::default()).unwrap();
    assert_eq!(sol.weight, expected);
    let (sol, _) = solve_s123bull(&g, &w, &SolveOptions::default()).unwrap();
    assert_eq!(sol.weight, expected);
}
