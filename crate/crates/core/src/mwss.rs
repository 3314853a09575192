//! Exact maximum weight stable set by branch and bound. Used both as the
//! leaf solver inside the decomposition and, with a larger budget, as the
//! ground-truth reference for the test suites.

use std::time::Instant;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Solution, Weights};

/// Node budget for leaf solves inside the decomposition.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;
/// Node budget for reference ("oracle") solves.
pub const ORACLE_NODE_BUDGET: u64 = 1_000_000_000;

/// True iff `sol.set` is stable in `g` and `sol.weight` is its exact weight.
pub fn verify_solution(g: &Graph, w: &Weights, sol: &Solution) -> bool {
    sol.set.iter().all(|v| v < g.n())
        && g.is_stable(&sol.set)
        && w.sum_over(&sol.set) == sol.weight
}

/// Exact MWSS over the whole graph.
pub fn exact_mwss(g: &Graph, w: &Weights, node_budget: u64) -> Result<Solution> {
    exact_mwss_within(g, w, &g.vertex_set(), node_budget)
}

/// Exact MWSS restricted to the vertices in `within`.
pub fn exact_mwss_within(
    g: &Graph,
    w: &Weights,
    within: &VertexSet,
    node_budget: u64,
) -> Result<Solution> {
    exact_mwss_limited(g, w, within, node_budget, None).map(|(sol, _)| sol)
}

/// Like [`exact_mwss_within`], with an optional wall-clock deadline and the
/// explored node count reported back.
pub fn exact_mwss_limited(
    g: &Graph,
    w: &Weights,
    within: &VertexSet,
    node_budget: u64,
    deadline: Option<Instant>,
) -> Result<(Solution, u64)> {
    assert_eq!(w.len(), g.n(), "weight vector length must equal vertex count");
    if w.0.iter().try_fold(0u64, |acc, &x| acc.checked_add(x)).is_none() {
        return Err(Error::input("total vertex weight overflows u64"));
    }
    let mut search = Search {
        g,
        w,
        nodes: 0,
        budget: node_budget,
        deadline,
        best: Solution::empty(g.n()),
    };
    let exhausted = search
        .branch(*within, 0, VertexSet::empty(g.n()))
        .is_err();
    if exhausted {
        return Err(Error::BudgetExhausted { best: search.best });
    }
    debug_assert!(verify_solution(g, w, &search.best));
    Ok((search.best, search.nodes))
}

struct Search<'a> {
    g: &'a Graph,
    w: &'a Weights,
    nodes: u64,
    budget: u64,
    deadline: Option<Instant>,
    best: Solution,
}

struct Exhausted;

impl Search<'_> {
    fn branch(
        &mut self,
        mut live: VertexSet,
        mut cur_weight: u64,
        mut cur_set: VertexSet,
    ) -> std::result::Result<(), Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Exhausted);
        }
        if let Some(deadline) = self.deadline {
            if self.nodes.is_multiple_of(4096) && Instant::now() >= deadline {
                return Err(Exhausted);
            }
        }

        // Vertices with no live neighbor are always taken. Removing them
        // leaves every other live degree unchanged, so one pass suffices.
        let snapshot = live;
        let mut branch_v = None;
        let mut branch_deg = 0usize;
        for v in snapshot.iter() {
            let deg = self.g.neighbors(v).and(&live).len();
            if deg == 0 {
                cur_weight += self.w.get(v);
                cur_set.insert(v);
                live.remove(v);
            } else if deg > branch_deg {
                branch_deg = deg;
                branch_v = Some(v);
            }
        }

        if cur_weight > self.best.weight {
            self.best = Solution { set: cur_set, weight: cur_weight };
        }
        let Some(v) = branch_v else {
            return Ok(());
        };

        if cur_weight + self.clique_cover_bound(&live) <= self.best.weight {
            return Ok(());
        }

        // Include v, dropping its closed neighborhood; then exclude it.
        // Taking the include side first finds strong incumbents early.
        self.branch(
            live.minus(&self.g.closed_neighborhood(v)),
            cur_weight + self.w.get(v),
            cur_set.with_vertex(v),
        )?;
        self.branch(live.minus_vertex(v), cur_weight, cur_set)
    }

    /// Upper bound: group the live vertices into cliques greedily (first
    /// fit, ascending index); a stable set takes at most the heaviest
    /// vertex of each clique.
    fn clique_cover_bound(&self, live: &VertexSet) -> u64 {
        let mut cliques: Vec<(VertexSet, u64)> = Vec::new();
        for v in live.iter() {
            let nv = self.g.neighbors(v);
            let wv = self.w.get(v);
            match cliques.iter_mut().find(|(members, _)| members.is_subset_of(nv)) {
                Some((members, max_w)) => {
                    members.insert(v);
                    *max_w = (*max_w).max(wv);
                }
                None => cliques.push((VertexSet::singleton(self.g.n(), v), wv)),
            }
        }
        cliques.iter().map(|&(_, max_w)| max_w).sum()
    }
}
