//! The component context both peeling engines revolve around, and the
//! red-edge score index driving the choice of peel vertices.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A component `K` of some vertex's non-neighborhood, split by the trace of
/// a selected outside anchor `d`: `H = N(d) ∩ K`, `Z = K \ H`. Synthetic
/// contexts are rebuilt around an anchor trace for pieces that became
/// isolated during peeling.
#[derive(Clone, Debug)]
pub(crate) struct Ctx {
    /// Kept for diagnostics; the peeling itself only reads `h` and `z`.
    #[allow(dead_code)]
    pub c: Option<usize>,
    #[allow(dead_code)]
    pub d: Option<usize>,
    pub h: VertexSet,
    pub z: VertexSet,
    pub synthetic: bool,
}

/// An edge `uv` inside `Z` is red when it extends to an induced path
/// `h'-u-v-h''` with both ends in `H`. The score of `h ∈ H` counts red
/// edges touching `N(h)`.
#[derive(Clone, Debug, Default)]
pub(crate) struct RedEdges {
    pub edges: Vec<(usize, usize)>,
    /// Indexed by host vertex; meaningful for vertices of `H`.
    pub score: Vec<u64>,
}

impl RedEdges {
    /// Maximum-score vertex of `h_live`, ties to the smaller index.
    pub fn max_score_vertex(&self, h_live: &VertexSet) -> Option<usize> {
        let mut best: Option<(usize, u64)> = None;
        for h in h_live.iter() {
            let sc = self.score[h];
            if best.is_none_or(|(_, b)| sc > b) {
                best = Some((h, sc));
            }
        }
        best.map(|(h, _)| h)
    }
}

/// Computes the red edges among `z_live` against the anchors `h_live`, and
/// every anchor's score.
pub(crate) fn red_edges(g: &Graph, h_live: &VertexSet, z_live: &VertexSet) -> RedEdges {
    let mut out = RedEdges { edges: Vec::new(), score: vec![0; g.n()] };
    for u in z_live.iter() {
        for v in g.neighbors(u).and(z_live).iter() {
            if v <= u {
                continue;
            }
            // Ends seeing exactly one of u, v.
            let ends_u = g.neighbors(u).and(h_live).minus(g.neighbors(v));
            let ends_v = g.neighbors(v).and(h_live).minus(g.neighbors(u));
            if ends_u.is_empty() || ends_v.is_empty() {
                continue;
            }
            let red = ends_u.iter().any(|a| !ends_v.minus(g.neighbors(a)).is_empty());
            if red {
                out.edges.push((u, v));
            }
        }
    }
    for &(u, v) in &out.edges {
        for h in h_live.iter() {
            if g.neighbors(h).contains(u) || g.neighbors(h).contains(v) {
                out.score[h] += 1;
            }
        }
    }
    out
}
