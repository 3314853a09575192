//! Immutable simple graphs over vertex indices `0..n` with one adjacency
//! bit row per vertex. All higher-level machinery expresses vertex deletion
//! through [`VertexSet`] masks instead of rebuilding graphs.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an unordered edge list. Duplicate pairs collapse;
    /// self-loops and out-of-range endpoints are input errors.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::input(format!(
                "vertex count {n} exceeds cap {MAX_VERTICES}"
            )));
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u},{v}) has an endpoint >= n = {n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|row| row.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Closed neighborhood `{v} ∪ N(v)`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with_vertex(v)
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::universe(self.n)
    }

    /// Induced subgraph on `s`, plus the map from new indices back to the
    /// host's. New indices follow the ascending order of `s`.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let k = map.len();
        let mut adj = vec![VertexSet::empty(k); k];
        for (i, &v) in map.iter().enumerate() {
            for u in self.adj[v].and(s).iter() {
                adj[i].insert(back[u]);
            }
        }
        (Graph { n: k, adj }, map)
    }

    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            adj.push(self.adj[v].inverted().minus_vertex(v));
        }
        Graph { n: self.n, adj }
    }

    /// Connected components, ordered by their minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }

    /// Connected components of the induced subgraph on `mask`, ordered by
    /// their minimum vertex.
    pub fn components_within(&self, mask: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for seed in mask.iter() {
            if seen.contains(seed) {
                continue;
            }
            let mut comp = VertexSet::singleton(self.n, seed);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::empty(self.n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v].and(mask).minus(&comp));
                }
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Components of `G \ ({c} ∪ N(c))`, the non-neighborhood of `c`.
    pub fn anti_neighborhood_components(&self, c: usize) -> Vec<VertexSet> {
        let rest = self.vertex_set().minus(&self.closed_neighborhood(c));
        self.components_within(&rest)
    }

    /// True iff every `a`–`b` pair with `a ∈ A`, `b ∈ B` is an edge.
    /// `A` and `B` must be disjoint.
    pub fn is_complete_to(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        if a.intersects(b) {
            return Err(Error::input("is_complete_to: sets overlap"));
        }
        Ok(a.iter().all(|v| b.is_subset_of(&self.adj[v])))
    }

    /// True iff no `a`–`b` pair is an edge. `A` and `B` must be disjoint.
    pub fn is_anticomplete_to(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        if a.intersects(b) {
            return Err(Error::input("is_anticomplete_to: sets overlap"));
        }
        Ok(a.iter().all(|v| !self.adj[v].intersects(b)))
    }

    /// No pre-checks; callers guarantee disjointness.
    pub(crate) fn complete_unchecked(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| b.is_subset_of(&self.adj[v]))
    }

    pub(crate) fn anticomplete_unchecked(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| !self.adj[v].intersects(b))
    }

    /// True iff `s` is pairwise non-adjacent.
    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_connected_within(&self, mask: &VertexSet) -> bool {
        if mask.is_empty() {
            return true;
        }
        self.components_within(mask).len() == 1
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Nonnegative integer weight per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights(pub Vec<u64>);

impl Weights {
    pub fn unit(n: usize) -> Weights {
        Weights(vec![1; n])
    }

    pub fn get(&self, v: usize) -> u64 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum_over(&self, s: &VertexSet) -> u64 {
        s.iter().map(|v| self.0[v]).sum()
    }

    /// Restriction to `s` in the index order produced by [`Graph::induced`].
    pub fn restrict(&self, s: &VertexSet) -> Weights {
        Weights(s.iter().map(|v| self.0[v]).collect())
    }
}

/// A stable set together with its total weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub set: VertexSet,
    pub weight: u64,
}

impl Solution {
    pub fn empty(n: usize) -> Solution {
        Solution { set: VertexSet::empty(n), weight: 0 }
    }
}
