//! Peeling engine for graphs with no induced S{1,2,3} and no bull.
//!
//! Contexts in this class are simpler than in the P7 case: every C5 in a
//! component carries one or two anchored vertices, and one anchor chosen by
//! red-edge score (or any anchor with a neighbor outside the trace when no
//! red edge exists) clears every C5 in a single neighborhood peel. C5-free
//! pieces go straight to the leaf solver.

use crate::bitset::VertexSet;
use crate::error::{Error, Result, Witness};
use crate::graph::{Graph, Solution, Weights};
use crate::mwss::exact_mwss_limited;
use crate::patterns::{c5_census, find_hole};
use crate::solver::{better, red_edges, Ctx, RedEdges, SolveStats};

pub(crate) struct Engine<'a> {
    pub g: &'a Graph,
    pub w: &'a Weights,
    pub leaf_budget: u64,
    pub stats: &'a mut SolveStats,
}

impl Engine<'_> {
    pub fn solve_context(&mut self, c: usize, k: VertexSet) -> Result<Solution> {
        self.stats.c5_scans += 1;
        if find_hole(self.g, 5, &k)?.is_none() {
            self.assert_no_c7(&k)?;
            return self.leaf(k);
        }
        let d = self
            .g
            .neighbors(c)
            .iter()
            .find(|&d| self.g.neighbors(d).intersects(&k))
            .ok_or_else(|| Error::input("component has no outside anchor"))?;
        let h = self.g.neighbors(d).and(&k);
        let ctx = Ctx { c: Some(c), d: Some(d), z: k.minus(&h), h, synthetic: false };
        self.solve_component(&ctx, k, 1)
    }

    fn leaf(&mut self, live: VertexSet) -> Result<Solution> {
        let mut total = Solution::empty(self.g.n());
        for comp in self.g.components_within(&live) {
            self.stats.leaves += 1;
            let (sol, nodes) = exact_mwss_limited(self.g, self.w, &comp, self.leaf_budget, None)?;
            self.stats.bb_nodes += nodes;
            total.weight += sol.weight;
            total.set.union_with(&sol.set);
        }
        Ok(total)
    }

    /// Contexts never hold a hole of length seven; spot-checked on small
    /// pieces in debug builds.
    fn assert_no_c7(&mut self, live: &VertexSet) -> Result<()> {
        if cfg!(debug_assertions) && live.len() <= 26 {
            if let Some(c7) = find_hole(self.g, 7, live)? {
                return Err(Error::not_in_class(
                    "a seven-hole inside a component context",
                    Witness::new("c7-in-context", c7),
                ));
            }
        }
        Ok(())
    }

    fn solve_component(&mut self, ctx: &Ctx, live: VertexSet, depth: u64) -> Result<Solution> {
        self.stats.recursions += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        if live.is_empty() {
            return Ok(Solution::empty(self.g.n()));
        }
        let comps = self.g.components_within(&live);
        if comps.len() > 1 {
            let mut total = Solution::empty(self.g.n());
            for comp in comps {
                let sol = self.solve_component(ctx, comp, depth)?;
                total.weight += sol.weight;
                total.set.union_with(&sol.set);
            }
            return Ok(total);
        }

        self.stats.c5_scans += 1;
        let census = c5_census(self.g, &live, &ctx.h, 0b111)?;
        let Some(found) = census.first_any() else {
            self.assert_no_c7(&live)?;
            return self.leaf(live);
        };
        if found.q == 0 {
            return Err(Error::not_in_class(
                "a C5 with no anchored vertex inside a component context",
                Witness::new("c5-unanchored", found.cycle.to_vec()),
            ));
        }

        let h_live = ctx.h.and(&live);
        let z_live = ctx.z.and(&live);
        let red = red_edges(self.g, &h_live, &z_live);
        let h0 = pick_h0(self.g, &red, &h_live, &z_live)?;

        // (a): one neighborhood peel must clear every C5.
        let sub = live.minus(self.g.neighbors(h0));
        self.stats.c5_scans += 1;
        if let Some(survivor) = find_hole(self.g, 5, &sub)? {
            return Err(Error::not_in_class(
                "a C5 survives peeling the chosen anchor's neighborhood",
                Witness::new("c5-survives-anchor-peel", survivor),
            ));
        }
        self.assert_no_c7(&sub)?;
        let a = self.leaf(sub)?;
        // (b): drop the anchor and recurse; at most |H| times.
        let b = self.solve_component(ctx, live.minus_vertex(h0), depth + 1)?;
        Ok(better(a, b))
    }
}

/// The peel anchor: maximum red-edge score when a red edge exists, otherwise
/// any anchor with a neighbor outside the trace, otherwise the first anchor.
/// Ties break to the smaller index.
pub(crate) fn pick_h0(
    g: &Graph,
    red: &RedEdges,
    h_live: &VertexSet,
    z_live: &VertexSet,
) -> Result<usize> {
    if h_live.is_empty() {
        return Err(Error::not_in_class(
            "a context lost all anchored vertices",
            Witness::new("no-anchors", Vec::new()),
        ));
    }
    if !red.edges.is_empty() {
        return Ok(red.max_score_vertex(h_live).expect("h_live is non-empty"));
    }
    Ok(h_live
        .iter()
        .find(|&h| g.neighbors(h).intersects(z_live))
        .unwrap_or_else(|| h_live.first().expect("h_live is non-empty")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{random_in_class, TargetClass};
    use crate::mwss::{exact_mwss, verify_solution, ORACLE_NODE_BUDGET};
    use crate::solver::{solve_s123bull, SolveOptions};

    fn cycle(k: usize) -> Graph {
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::build(k, &edges).unwrap()
    }

    #[test]
    fn solve_small_examples() {
        let opts = SolveOptions::default();
        let (sol, _) = solve_s123bull(&cycle(5), &Weights::unit(5), &opts).unwrap();
        assert_eq!(sol.weight, 2);

        // The claw is in the class; its three leaves are the optimum.
        let claw = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (sol, _) = solve_s123bull(&claw, &Weights::unit(4), &opts).unwrap();
        assert_eq!(sol.weight, 3);
        assert_eq!(sol.set.to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn pick_h0_rules() {
        // No red edges: the anchor with a neighbor outside the trace wins.
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let red = RedEdges { edges: vec![], score: vec![0; 4] };
        let h_live = VertexSet::from_iter(4, [0, 2]);
        let z_live = VertexSet::from_iter(4, [3]);
        // 0 has no neighbor in z; 2 does.
        assert_eq!(pick_h0(&g, &red, &h_live, &z_live).unwrap(), 2);

        // Red edges present: maximum score, ties to the smaller index.
        let red = RedEdges { edges: vec![(9, 9)], score: vec![3, 0, 3, 0] };
        assert_eq!(pick_h0(&g, &red, &h_live, &z_live).unwrap(), 0);

        // Nothing anchored at all is a violation.
        assert!(matches!(
            pick_h0(&g, &red, &VertexSet::empty(4), &z_live),
            Err(Error::NotInClass { .. })
        ));
    }

    #[test]
    fn randomized_instances_match_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(777);
        let mut done = 0;
        let mut seed = 0u64;
        while done < 200 {
            seed += 1;
            let n = 8 + (seed as usize) % 11;
            let g = match random_in_class(n, 0.3, TargetClass::S123Bull, 5000 + seed) {
                Ok(g) => g,
                Err(_) => continue,
            };
            let w = Weights((0..n).map(|_| rng.random_range(0..=20u64)).collect());
            let (sol, _) = match solve_s123bull(&g, &w, &SolveOptions::default()) {
                Ok(out) => out,
                Err(Error::NotInClass { reason, .. }) => {
                    panic!("claim fired on an in-class instance: {reason}")
                }
                Err(e) => panic!("{e}"),
            };
            let expected = exact_mwss(&g, &w, ORACLE_NODE_BUDGET).unwrap().weight;
            assert_eq!(sol.weight, expected, "seed {seed} {:?}", g);
            assert!(verify_solution(&g, &w, &sol));
            done += 1;
        }
    }
}
