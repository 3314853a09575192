//! Seven-slot rings with non-trivial slot graphs (cliques, paths, mixed),
//! validated by the detectors and solved both through the ring partition
//! and end to end. Slot contents make the per-slot leaf solves earn their
//! keep, unlike stable-part blowups where a slot's optimum is everything.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bullmwss::graph::{Graph, Weights};
use bullmwss::mwss::{exact_mwss, verify_solution, ORACLE_NODE_BUDGET};
use bullmwss::patterns::{find_hole, in_class, GraphClass};
use bullmwss::solver::{case1_solve, seven_partition, solve_p7bull, SolveOptions};

#[derive(Clone, Copy, Debug)]
enum Slot {
    Stable(usize),
    Clique(usize),
    Path(usize),
}

fn ring(slots: &[Slot; 7]) -> Graph {
    let sizes: Vec<usize> = slots
        .iter()
        .map(|s| match *s {
            Slot::Stable(k) | Slot::Clique(k) | Slot::Path(k) => k,
        })
        .collect();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &k| {
            let at = *acc;
            *acc += k;
            Some(at)
        })
        .collect();
    let n: usize = sizes.iter().sum();
    let mut edges = Vec::new();
    for (i, slot) in slots.iter().enumerate() {
        let base = offsets[i];
        match *slot {
            Slot::Stable(_) => {}
            Slot::Clique(k) => {
                for u in 0..k {
                    for v in (u + 1)..k {
                        edges.push((base + u, base + v));
                    }
                }
            }
            Slot::Path(k) => {
                for u in 0..k.saturating_sub(1) {
                    edges.push((base + u, base + u + 1));
                }
            }
        }
    }
    for i in 0..7 {
        let j = (i + 1) % 7;
        for u in 0..sizes[i] {
            for v in 0..sizes[j] {
                edges.push((offsets[i] + u, offsets[j] + v));
            }
        }
    }
    Graph::build(n, &edges).unwrap()
}

#[test]
fn mixed_rings_partition_and_solve_exactly() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0816_0816);
    let opts = SolveOptions::default();
    for round in 0..60 {
        let slots: [Slot; 7] = std::array::from_fn(|_| {
            let k = rng.random_range(1..=3usize);
            match rng.random_range(0..3u8) {
                0 => Slot::Stable(k),
                1 => Slot::Clique(k),
                _ => Slot::Path(k),
            }
        });
        let g = ring(&slots);
        let all = g.vertex_set();

        // The family must stay inside the class with a C7 and no C5;
        // confirmed by the detectors rather than assumed.
        assert!(in_class(&g, GraphClass::P7Bull), "{slots:?}");
        assert!(find_hole(&g, 5, &all).unwrap().is_none(), "{slots:?}");
        assert!(find_hole(&g, 7, &all).unwrap().is_some(), "{slots:?}");

        let w = Weights((0..g.n()).map(|_| rng.random_range(0..=30u64)).collect());
        let expected = exact_mwss(&g, &w, ORACLE_NODE_BUDGET).unwrap().weight;

        let partition = seven_partition(&g, &all).unwrap_or_else(|e| panic!("{slots:?}: {e}"));
        assert!(partition.verify(&g), "{slots:?}");
        let ring_sol = case1_solve(&g, &w, &partition, ORACLE_NODE_BUDGET).unwrap();
        assert_eq!(ring_sol.weight, expected, "ring optimum off on {slots:?}");
        assert!(verify_solution(&g, &w, &ring_sol));

        let (sol, _) = solve_p7bull(&g, &w, &opts).unwrap();
        assert_eq!(sol.weight, expected, "end-to-end off on {slots:?} (round {round})");
    }
}

#[test]
fn clique_slots_pick_one_heaviest_vertex_each() {
    // All-clique ring with distinct weights: the optimum takes the heaviest
    // vertex from each of three pairwise non-adjacent slots.
    let slots = [Slot::Clique(3); 7];
    let g = ring(&slots);
    let w = Weights((0..g.n() as u64).collect());
    let partition = seven_partition(&g, &g.vertex_set()).unwrap();
    let sol = case1_solve(&g, &w, &partition, ORACLE_NODE_BUDGET).unwrap();
    // Heaviest per slot: 2, 5, 8, 11, 14, 17, 20; best rotation maximizes
    // three alternating slots: slots 4, 6, 1 -> 14 + 20 + 5 = 39.
    let per_slot = [2u64, 5, 8, 11, 14, 17, 20];
    let expected = (0..7)
        .map(|i| per_slot[i] + per_slot[(i + 2) % 7] + per_slot[(i + 4) % 7])
        .max()
        .unwrap();
    assert_eq!(sol.weight, expected);
    assert_eq!(sol.set.len(), 3);
}
