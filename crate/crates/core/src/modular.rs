//! Homogeneous-set discovery and the reduction of MWSS from arbitrary class
//! members to prime ones: contract each proper homogeneous set to a single
//! representative carrying the set's own optimum, solve the prime quotient,
//! then expand representatives back into their witness sets.

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::{Graph, Solution, Weights};

/// A proper homogeneous set of `g`, if one exists. Seeds every vertex pair
/// and grows it with outside splitters until fixpoint; the first proper
/// module under index order wins, so the result is deterministic.
pub fn find_proper_homogeneous_set(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    for u in 0..n {
        for v in (u + 1)..n {
            let module = smallest_module_containing(g, u, v);
            if module.len() < n {
                return Some(module);
            }
        }
    }
    None
}

/// Smallest homogeneous set containing both seeds (possibly all of V).
fn smallest_module_containing(g: &Graph, u: usize, v: usize) -> VertexSet {
    let n = g.n();
    let mut module = VertexSet::from_iter(n, [u, v]);
    loop {
        let mut grew = false;
        for w in module.inverted().iter() {
            let nw = g.neighbors(w);
            // A splitter sees part of the module: grow the module over it.
            if nw.intersects(&module) && !module.is_subset_of(nw) {
                module.insert(w);
                grew = true;
            }
        }
        if !grew || module.len() == n {
            return module;
        }
    }
}

/// True iff every vertex outside `s` is complete or anticomplete to `s`.
pub fn is_homogeneous(g: &Graph, s: &VertexSet) -> bool {
    s.inverted()
        .iter()
        .all(|w| !g.neighbors(w).intersects(s) || s.is_subset_of(g.neighbors(w)))
}

/// Exact MWSS on an arbitrary graph, given a solver that is exact on prime
/// connected graphs. Components are split off first; then proper homogeneous
/// sets are contracted one at a time (representative = minimum index, weight
/// = the set's own optimum) until the graph is prime.
pub fn solve_via_modules<F>(g: &Graph, w: &Weights, prime_solver: &mut F) -> Result<Solution>
where
    F: FnMut(&Graph, &Weights) -> Result<Solution>,
{
    assert_eq!(w.len(), g.n());
    let n = g.n();
    if n == 0 {
        return Ok(Solution::empty(0));
    }

    let comps = g.components();
    if comps.len() > 1 {
        let mut set = VertexSet::empty(n);
        let mut weight = 0u64;
        for comp in comps {
            let (sub, map) = g.induced(&comp);
            let sol = solve_via_modules(&sub, &w.restrict(&comp), prime_solver)?;
            weight += sol.weight;
            for v in sol.set.iter() {
                set.insert(map[v]);
            }
        }
        return Ok(Solution { set, weight });
    }

    if let Some(module) = find_proper_homogeneous_set(g) {
        debug_assert!(is_homogeneous(g, &module));
        // Optimum inside the module, recursively.
        let (sub, module_map) = g.induced(&module);
        let inner = solve_via_modules(&sub, &w.restrict(&module), prime_solver)?;

        // Contract the module onto its minimum-index vertex.
        let rep = module.first().expect("proper modules have two vertices");
        let keep = g.vertex_set().minus(&module).with_vertex(rep);
        let (quotient, keep_map) = g.induced(&keep);
        let mut qw: Vec<u64> = keep.iter().map(|v| w.get(v)).collect();
        let rep_q = keep_map.iter().position(|&v| v == rep).unwrap();
        qw[rep_q] = inner.weight;

        let outer = solve_via_modules(&quotient, &Weights(qw), prime_solver)?;

        // Expand the representative back into the module's witness set.
        let mut set = VertexSet::empty(n);
        let mut took_rep = false;
        for v in outer.set.iter() {
            if keep_map[v] == rep {
                took_rep = true;
            } else {
                set.insert(keep_map[v]);
            }
        }
        if took_rep {
            for v in inner.set.iter() {
                set.insert(module_map[v]);
            }
        }
        return Ok(Solution { set, weight: outer.weight });
    }

    prime_solver(g, w)
}
