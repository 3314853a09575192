//! Induced-subgraph search: the catalogue of named forbidden patterns, a
//! generic backtracking embedder, hole and wheel detectors, neighbor
//! profiles against a cycle, and C5 classification against a marked set.

use std::ops::ControlFlow;
use std::sync::OnceLock;

use crate::bitset::VertexSet;
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;

/// Largest pattern the embedder accepts.
pub const MAX_PATTERN: usize = 8;

/// A named pattern graph with optional distinguished vertices.
#[derive(Clone, Debug)]
pub struct Pattern {
    pub name: &'static str,
    pub graph: Graph,
    pub roles: &'static [(&'static str, usize)],
}

impl Pattern {
    pub fn new(name: &'static str, graph: Graph) -> Pattern {
        Pattern { name, graph, roles: &[] }
    }

    pub fn role(&self, name: &str) -> Option<usize> {
        self.roles.iter().find(|(r, _)| *r == name).map(|&(_, v)| v)
    }
}

/// An ordered embedding of a pattern into a host graph: `embedding[i]` hosts
/// pattern vertex `i`, edges and non-edges both match.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternHit {
    pub pattern: &'static str,
    pub embedding: Vec<usize>,
}

impl PatternHit {
    pub fn witness(&self) -> Witness {
        Witness::new(self.pattern, self.embedding.clone())
    }
}

fn path(k: usize) -> Graph {
    let edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
    Graph::build(k, &edges).unwrap()
}

fn cycle(k: usize) -> Graph {
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    Graph::build(k, &edges).unwrap()
}

/// The ten named patterns.
///
/// * `bull`: triangle 1,2,4 with horns 0–1 and 3–2.
/// * `p5`, `p7`, `c5`, `c7`: paths and cycles.
/// * `s123`: a claw whose edges are subdivided into 1, 2 and 3 edges;
///   vertex 0 is the center.
/// * `umbrella`: a 5-wheel (hub 5) plus a pendant 6 on the hub.
/// * `parasol`: a P5 0..4, a vertex 5 complete to it, a pendant 6 on 5.
/// * `g1`: C5 0..4, a pendant 5 on 4, and 6 adjacent to 4, 0, 1.
/// * `g2`: C5 0..4, a pendant 5 on 4, and 6 adjacent to 0, 1, 2.
pub fn catalogue() -> &'static [Pattern] {
    static CATALOGUE: OnceLock<Vec<Pattern>> = OnceLock::new();
    CATALOGUE.get_or_init(|| {
        let bull = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 4)]).unwrap();
        let s123 = Graph::build(7, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).unwrap();
        let umbrella = Graph::build(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4), (5, 6)],
        )
        .unwrap();
        let parasol = Graph::build(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (5, 1), (5, 2), (5, 3), (5, 4), (5, 6)],
        )
        .unwrap();
        let g1 = Graph::build(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 4), (6, 4), (6, 0), (6, 1)],
        )
        .unwrap();
        let g2 = Graph::build(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 4), (6, 0), (6, 1), (6, 2)],
        )
        .unwrap();
        vec![
            Pattern { name: "bull", graph: bull, roles: &[("apex", 4)] },
            Pattern { name: "p5", graph: path(5), roles: &[] },
            Pattern { name: "p7", graph: path(7), roles: &[] },
            Pattern { name: "c5", graph: cycle(5), roles: &[] },
            Pattern { name: "c7", graph: cycle(7), roles: &[] },
            Pattern { name: "s123", graph: s123, roles: &[("center", 0)] },
            Pattern { name: "umbrella", graph: umbrella, roles: &[("hub", 5), ("pendant", 6)] },
            Pattern { name: "parasol", graph: parasol, roles: &[("hub", 5), ("pendant", 6)] },
            Pattern { name: "g1", graph: g1, roles: &[("d", 5), ("a", 6)] },
            Pattern { name: "g2", graph: g2, roles: &[("d", 5), ("a", 6)] },
        ]
    })
}

pub fn pattern(name: &str) -> &'static Pattern {
    catalogue().iter().find(|p| p.name == name).expect("unknown pattern name")
}

/// Searches for an induced embedding of `pat` into `g` that avoids the
/// `forbidden` vertices. Exhaustive backtracking over degree-compatible
/// candidates; the first hit under the deterministic search order is
/// returned. Pattern vertices are placed in descending-degree order.
pub fn find_induced(g: &Graph, pat: &Pattern, forbidden: &VertexSet) -> Result<Option<PatternHit>> {
    let k = pat.graph.n();
    if k > MAX_PATTERN {
        return Err(Error::Unsupported(format!(
            "pattern `{}` has {k} vertices; the embedder caps at {MAX_PATTERN}",
            pat.name
        )));
    }
    if k == 0 {
        return Ok(Some(PatternHit { pattern: pat.name, embedding: Vec::new() }));
    }
    if k > g.n() {
        return Ok(None);
    }

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pat.graph.degree(v)), v));

    let mut assign = vec![usize::MAX; k];
    let mut used = VertexSet::empty(g.n());
    let allowed = forbidden.inverted();
    if search(g, pat, &order, 0, &mut assign, &mut used, &allowed) {
        debug_assert!(hit_is_induced(g, pat, &assign));
        return Ok(Some(PatternHit { pattern: pat.name, embedding: assign }));
    }
    Ok(None)
}

fn search(
    g: &Graph,
    pat: &Pattern,
    order: &[usize],
    level: usize,
    assign: &mut Vec<usize>,
    used: &mut VertexSet,
    allowed: &VertexSet,
) -> bool {
    if level == order.len() {
        return true;
    }
    let pv = order[level];
    let pdeg = pat.graph.degree(pv);

    let mut cand = allowed.minus(used);
    for &pp in &order[..level] {
        let host = assign[pp];
        if pat.graph.has_edge(pv, pp) {
            cand.intersect_with(g.neighbors(host));
        } else {
            cand.subtract(g.neighbors(host));
        }
    }
    for x in cand.iter() {
        if g.degree(x) < pdeg {
            continue;
        }
        assign[pv] = x;
        used.insert(x);
        if search(g, pat, order, level + 1, assign, used, allowed) {
            return true;
        }
        used.remove(x);
        assign[pv] = usize::MAX;
    }
    false
}

/// Re-validates a claimed embedding edge-by-edge and non-edge-by-non-edge.
pub fn hit_is_induced(g: &Graph, pat: &Pattern, embedding: &[usize]) -> bool {
    let k = pat.graph.n();
    if embedding.len() != k {
        return false;
    }
    let mut seen = VertexSet::empty(g.n());
    for &v in embedding {
        if v >= g.n() || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if g.has_edge(embedding[i], embedding[j]) != pat.graph.has_edge(i, j) {
                return false;
            }
        }
    }
    true
}

/// Walks every induced cycle of exact length `k` inside `within`, in a fixed
/// deterministic order (minimum cycle vertex first, ascending extensions).
/// Returns true if the visitor broke early.
pub(crate) fn for_each_induced_cycle<F>(g: &Graph, k: usize, within: &VertexSet, f: &mut F) -> bool
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    debug_assert!(k >= 4);
    let n = g.n();
    for v0 in within.iter() {
        // Only cycles whose minimum vertex is v0.
        let mut base = *within;
        for v in 0..=v0 {
            if v < n {
                base.remove(v);
            }
        }
        let mut path = vec![v0];
        let mut used = VertexSet::singleton(n, v0);
        let forbidden = VertexSet::empty(n);
        if extend_cycle(g, k, &base, v0, &mut path, &mut used, &forbidden, f).is_break() {
            return true;
        }
    }
    false
}

#[allow(clippy::too_many_arguments)]
fn extend_cycle<F>(
    g: &Graph,
    k: usize,
    base: &VertexSet,
    v0: usize,
    path: &mut Vec<usize>,
    used: &mut VertexSet,
    forbidden: &VertexSet,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let i = path.len();
    let prev = path[i - 1];
    let mut cand = g.neighbors(prev).and(base).minus(used).minus(forbidden);
    if i == k - 1 {
        cand.intersect_with(g.neighbors(v0));
    } else if i >= 2 {
        cand.subtract(g.neighbors(v0));
    }
    if i == k - 1 {
        for x in cand.iter() {
            // Orientation dedup: second vertex smaller than the last.
            if x > path[1] {
                path.push(x);
                let flow = f(path);
                path.pop();
                flow?;
            }
        }
        return ControlFlow::Continue(());
    }
    // Later vertices must avoid the neighborhoods of interior path vertices;
    // v0's adjacency is constrained separately above.
    let next_forbidden = if i == 1 { *forbidden } else { forbidden.or(g.neighbors(prev)) };
    for x in cand.iter() {
        path.push(x);
        used.insert(x);
        let flow = extend_cycle(g, k, base, v0, path, used, &next_forbidden, f);
        used.remove(x);
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

fn first_induced_cycle(g: &Graph, k: usize, within: &VertexSet) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced_cycle(g, k, within, &mut |cyc| {
        found = Some(cyc.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// First induced cycle of exact length `k` inside `within`, in cyclic order.
/// Supports 4 ≤ k ≤ 7.
pub fn find_hole(g: &Graph, k: usize, within: &VertexSet) -> Result<Option<Vec<usize>>> {
    if !(4..=7).contains(&k) {
        return Err(Error::Unsupported(format!("hole length {k} outside 4..=7")));
    }
    Ok(first_induced_cycle(g, k, within))
}

/// Searches for a hole of length ≥ `k_min` plus a vertex complete to it.
/// Returns `(rim in cyclic order, center)`. Antiwheels are found by running
/// this on the complement. Requires `k_min ≥ 6`.
pub fn find_wheel(g: &Graph, k_min: usize) -> Option<(Vec<usize>, usize)> {
    assert!(k_min >= 6, "find_wheel expects k_min >= 6");
    if g.n() < k_min + 1 {
        return None;
    }
    for center in 0..g.n() {
        let rim_space = *g.neighbors(center);
        let deg = rim_space.len();
        for k in k_min..=deg {
            if let Some(cyc) = first_induced_cycle(g, k, &rim_space) {
                return Some((cyc, center));
            }
        }
    }
    None
}

/// The neighbors a vertex has on an ordered hole: their count and cyclic
/// positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborProfile {
    pub cycle_len: usize,
    pub positions: Vec<usize>,
}

impl NeighborProfile {
    pub fn count(&self) -> usize {
        self.positions.len()
    }

    fn has_window(&self, offsets: &[usize]) -> bool {
        let k = self.cycle_len;
        (0..k).any(|i| {
            offsets.iter().all(|&d| self.positions.contains(&((i + d) % k)))
        })
    }

    /// Admissible shapes of 2- and 3-neighbors of a C5 in a bull-free graph:
    /// 2-neighbors sit at cyclic distance two, 3-neighbors are consecutive.
    /// Other counts are unconstrained here.
    pub fn admissible_on_c5(&self) -> bool {
        debug_assert_eq!(self.cycle_len, 5);
        match self.count() {
            2 => self.has_window(&[0, 2]),
            3 => self.has_window(&[0, 1, 2]),
            _ => true,
        }
    }

    /// Admissible shapes against a C7 in a bull-free graph: 2-neighbors at
    /// distance two or three, 3-neighbors consecutive or `{i, i+2, i+4}`,
    /// and no 4-, 5- or 6-neighbors at all.
    pub fn admissible_on_c7(&self) -> bool {
        debug_assert_eq!(self.cycle_len, 7);
        match self.count() {
            2 => self.has_window(&[0, 2]) || self.has_window(&[0, 3]),
            3 => self.has_window(&[0, 1, 2]) || self.has_window(&[0, 2, 4]),
            4..=6 => false,
            _ => true,
        }
    }
}

/// Profile of `x` against the ordered hole `cycle`; `x` must not lie on it.
pub fn neighbor_profile(g: &Graph, cycle: &[usize], x: usize) -> Result<NeighborProfile> {
    if cycle.contains(&x) {
        return Err(Error::input(format!("vertex {x} lies on the cycle")));
    }
    let positions: Vec<usize> =
        (0..cycle.len()).filter(|&i| g.has_edge(x, cycle[i])).collect();
    Ok(NeighborProfile { cycle_len: cycle.len(), positions })
}

/// A C5 classified by how many of its vertices lie in a marked set `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedC5 {
    /// The cycle in cyclic order.
    pub cycle: [usize; 5],
    pub q: u8,
    pub h_vertices: Vec<usize>,
}

/// Classifies an induced C5 against `h`. Valid contexts only ever produce
/// q ∈ {0,1,2} with the two q=2 vertices non-adjacent; anything else is a
/// class-violation signal.
pub fn classify_c5(g: &Graph, cycle: &[usize], h: &VertexSet) -> Result<TypedC5> {
    if cycle.len() != 5 {
        return Err(Error::input("classify_c5 expects five vertices"));
    }
    for i in 0..5 {
        for j in (i + 1)..5 {
            let adjacent = g.has_edge(cycle[i], cycle[j]);
            let consecutive = (j - i) == 1 || (j - i) == 4;
            if adjacent != consecutive {
                return Err(Error::input("classify_c5: vertices do not induce a C5 in order"));
            }
        }
    }
    let h_vertices: Vec<usize> = cycle.iter().copied().filter(|&v| h.contains(v)).collect();
    let q = h_vertices.len();
    if q > 2 {
        return Err(Error::not_in_class(
            format!("a C5 carries {q} marked vertices (at most 2 allowed)"),
            Witness::new("bad-c5-type", cycle.to_vec()),
        ));
    }
    if q == 2 && g.has_edge(h_vertices[0], h_vertices[1]) {
        return Err(Error::not_in_class(
            "a C5 carries two adjacent marked vertices",
            Witness::new("bad-c5-type", cycle.to_vec()),
        ));
    }
    Ok(TypedC5 { cycle: [cycle[0], cycle[1], cycle[2], cycle[3], cycle[4]], q: q as u8, h_vertices })
}

/// One pass over the C5s of `within`, classified against `h`: records the
/// first cycle of each type, stopping early once a type from `stop_mask`
/// (bit `q` set) has been seen. Every scanned cycle is validated, so an
/// impossible classification surfaces as a class violation.
#[derive(Clone, Debug, Default)]
pub struct C5Census {
    pub by_type: [Option<TypedC5>; 3],
}

impl C5Census {
    pub fn is_empty(&self) -> bool {
        self.by_type.iter().all(|t| t.is_none())
    }

    pub fn first_any(&self) -> Option<&TypedC5> {
        // Scan order below guarantees at most one entry when stopping at any.
        self.by_type.iter().flatten().next()
    }
}

pub fn c5_census(g: &Graph, within: &VertexSet, h: &VertexSet, stop_mask: u8) -> Result<C5Census> {
    let mut census = C5Census::default();
    let mut violation: Option<Error> = None;
    for_each_induced_cycle(g, 5, within, &mut |cyc| {
        match classify_c5(g, cyc, h) {
            Ok(typed) => {
                let q = typed.q as usize;
                if census.by_type[q].is_none() {
                    census.by_type[q] = Some(typed);
                }
                if stop_mask >> q & 1 == 1 {
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            }
            Err(e) => {
                violation = Some(e);
                ControlFlow::Break(())
            }
        }
    });
    match violation {
        Some(e) => Err(e),
        None => Ok(census),
    }
}

/// Target hereditary classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    P7Bull,
    S123Bull,
}

impl GraphClass {
    pub fn name(self) -> &'static str {
        match self {
            GraphClass::P7Bull => "p7bull",
            GraphClass::S123Bull => "s123bull",
        }
    }

    fn forbidden_patterns(self) -> [&'static Pattern; 2] {
        match self {
            GraphClass::P7Bull => [pattern("bull"), pattern("p7")],
            GraphClass::S123Bull => [pattern("bull"), pattern("s123")],
        }
    }
}

impl std::fmt::Display for GraphClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// None if `g` belongs to the class, otherwise an embedding of the violated
/// pattern.
pub fn class_witness(g: &Graph, class: GraphClass) -> Option<PatternHit> {
    let none = VertexSet::empty(g.n());
    for pat in class.forbidden_patterns() {
        if let Some(hit) = find_induced(g, pat, &none).expect("catalogue patterns fit the cap") {
            return Some(hit);
        }
    }
    None
}

pub fn in_class(g: &Graph, class: GraphClass) -> bool {
    class_witness(g, class).is_none()
}
