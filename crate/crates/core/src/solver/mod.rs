//! Decomposition solvers for the two target classes. Both share the same
//! outer loop: reduce to prime graphs by module contraction, then for every
//! vertex `c` solve each component of its non-neighborhood through a
//! class-specific peeling engine and keep the best candidate.

mod context;
pub mod p7bull;
pub mod s123bull;

pub(crate) use context::{red_edges, Ctx, RedEdges};
pub use p7bull::{case1_solve, seven_partition, SevenPartition};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Solution, Weights};
use crate::modular::solve_via_modules;
use crate::mwss::{verify_solution, DEFAULT_NODE_BUDGET};
use crate::patterns::{class_witness, GraphClass};

/// Counters reported by a solve.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Peeling-engine invocations (component dispatches and inner peels).
    pub recursions: u64,
    /// Leaf solver invocations.
    pub leaves: u64,
    /// Full C5 enumeration passes.
    pub c5_scans: u64,
    /// Branch-and-bound nodes explored inside leaves.
    pub bb_nodes: u64,
    /// Deepest peeling chain seen in any single context.
    pub max_depth: u64,
    /// Times the eliminator had to fall back to trying every live vertex.
    /// Stays zero on class members; anything else is worth investigating.
    pub eliminator_fallbacks: u64,
}

impl SolveStats {
    pub fn merge(&mut self, other: &SolveStats) {
        self.recursions += other.recursions;
        self.leaves += other.leaves;
        self.c5_scans += other.c5_scans;
        self.bb_nodes += other.bb_nodes;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.eliminator_fallbacks += other.eliminator_fallbacks;
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Check class membership up front and refuse with a witness otherwise.
    pub strict: bool,
    /// Worker threads for the per-vertex loop. 1 keeps stats deterministic.
    pub threads: usize,
    /// Node budget per leaf solve.
    pub leaf_budget: u64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { strict: false, threads: 1, leaf_budget: DEFAULT_NODE_BUDGET }
    }
}

/// Exact MWSS for graphs with no induced P7 and no induced bull.
pub fn solve_p7bull(g: &Graph, w: &Weights, opts: &SolveOptions) -> Result<(Solution, SolveStats)> {
    solve_class(g, w, opts, GraphClass::P7Bull)
}

/// Exact MWSS for graphs with no induced S{1,2,3} and no induced bull.
pub fn solve_s123bull(
    g: &Graph,
    w: &Weights,
    opts: &SolveOptions,
) -> Result<(Solution, SolveStats)> {
    solve_class(g, w, opts, GraphClass::S123Bull)
}

fn solve_class(
    g: &Graph,
    w: &Weights,
    opts: &SolveOptions,
    class: GraphClass,
) -> Result<(Solution, SolveStats)> {
    if w.len() != g.n() {
        return Err(Error::input("weight vector length must equal vertex count"));
    }
    if w.0.iter().try_fold(0u64, |acc, &x| acc.checked_add(x)).is_none() {
        return Err(Error::input("total vertex weight overflows u64"));
    }
    if opts.strict {
        if let Some(hit) = class_witness(g, class) {
            return Err(Error::not_in_class(
                format!("forbidden pattern `{}` present", hit.pattern),
                hit.witness(),
            ));
        }
    }
    let mut stats = SolveStats::default();
    let sol = {
        let mut prime = |pg: &Graph, pw: &Weights| solve_prime(pg, pw, opts, class, &mut stats);
        solve_via_modules(g, w, &mut prime)?
    };
    debug_assert!(verify_solution(g, w, &sol));
    Ok((sol, stats))
}

/// Exact MWSS on a prime connected graph: the best over all vertices `c` of
/// `w(c)` plus the optima of the components of `c`'s non-neighborhood.
fn solve_prime(
    g: &Graph,
    w: &Weights,
    opts: &SolveOptions,
    class: GraphClass,
    stats: &mut SolveStats,
) -> Result<Solution> {
    let n = g.n();
    if n == 0 {
        return Ok(Solution::empty(0));
    }
    debug_assert!(n <= 2 || g.components().len() == 1, "prime graphs with n > 2 are connected");

    if opts.threads <= 1 {
        let mut best: Option<Solution> = None;
        for c in 0..n {
            let cand = candidate_for(g, w, opts, class, stats, c)?;
            if best.as_ref().is_none_or(|b| cand.weight > b.weight) {
                best = Some(cand);
            }
        }
        return Ok(best.expect("n >= 1"));
    }

    let threads = opts.threads.min(n);
    let chunk = n.div_ceil(threads);
    let mut worker_out: Vec<(Vec<Result<Solution>>, SolveStats)> = Vec::new();
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads {
            let lo = t * chunk;
            let hi = ((t + 1) * chunk).min(n);
            handles.push(scope.spawn(move || {
                let mut local = SolveStats::default();
                let sols: Vec<Result<Solution>> = (lo..hi)
                    .map(|c| candidate_for(g, w, opts, class, &mut local, c))
                    .collect();
                (sols, local)
            }));
        }
        for handle in handles {
            worker_out.push(handle.join().expect("solver worker panicked"));
        }
    });

    let mut best: Option<Solution> = None;
    for (sols, local) in worker_out {
        stats.merge(&local);
        for cand in sols {
            let cand = cand?;
            if best.as_ref().is_none_or(|b| cand.weight > b.weight) {
                best = Some(cand);
            }
        }
    }
    Ok(best.expect("n >= 1"))
}

/// Best stable set containing `c`: `c` itself plus the optimum of every
/// component of its non-neighborhood.
fn candidate_for(
    g: &Graph,
    w: &Weights,
    opts: &SolveOptions,
    class: GraphClass,
    stats: &mut SolveStats,
    c: usize,
) -> Result<Solution> {
    let mut set = VertexSet::singleton(g.n(), c);
    let mut weight = w.get(c);
    for k in g.anti_neighborhood_components(c) {
        let sol = match class {
            GraphClass::P7Bull => {
                p7bull::Engine { g, w, leaf_budget: opts.leaf_budget, stats }.solve_context(c, k)?
            }
            GraphClass::S123Bull => {
                s123bull::Engine { g, w, leaf_budget: opts.leaf_budget, stats }.solve_context(c, k)?
            }
        };
        weight += sol.weight;
        set.union_with(&sol.set);
    }
    Ok(Solution { set, weight })
}

/// Best of two solutions; on equal weight the first argument wins, keeping
/// branch order deterministic.
pub(crate) fn better(a: Solution, b: Solution) -> Solution {
    if b.weight > a.weight {
        b
    } else {
        a
    }
}
