//! Test-instance generators: class-constrained random graphs repaired by
//! witness-edge deletion, ring blowups, twin expansions, and a fixed
//! 13-vertex fixture that defeats every single-vertex peel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::modular::find_proper_homogeneous_set;
use crate::patterns::{find_induced, pattern, Pattern};

/// What a generated instance must avoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetClass {
    P7Bull,
    S123Bull,
    /// Bull-free and prime; non-prime draws are rejected.
    BullFreePrime,
}

impl TargetClass {
    fn forbidden(self) -> Vec<&'static Pattern> {
        match self {
            TargetClass::P7Bull => vec![pattern("bull"), pattern("p7")],
            TargetClass::S123Bull => vec![pattern("bull"), pattern("s123")],
            TargetClass::BullFreePrime => vec![pattern("bull")],
        }
    }
}

const REPAIR_BUDGET: usize = 10_000;

/// Draws an Erdős–Rényi graph and repairs it into the class: while some
/// forbidden pattern embeds, delete one uniformly chosen edge of the
/// witness. Deletion is monotone, so the loop always terminates. For
/// [`TargetClass::BullFreePrime`] a non-prime result is rejected with a
/// generation error; callers retry with another seed.
pub fn random_in_class(n: usize, p: f64, class: TargetClass, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input("edge probability must lie in [0,1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    let mut g = Graph::build(n, &edges)?;
    let forbidden = class.forbidden();
    let none = VertexSet::empty(n);

    let mut repairs = 0;
    loop {
        let mut hit = None;
        for pat in &forbidden {
            if let Some(found) = find_induced(&g, pat, &none)? {
                hit = Some((*pat, found));
                break;
            }
        }
        let Some((pat, found)) = hit else { break };
        repairs += 1;
        if repairs > REPAIR_BUDGET {
            return Err(Error::Generation(format!(
                "repair budget exhausted after {REPAIR_BUDGET} deletions (seed {seed})"
            )));
        }
        let witness_edges: Vec<(usize, usize)> = pat
            .graph
            .edges()
            .iter()
            .map(|&(a, b)| (found.embedding[a], found.embedding[b]))
            .collect();
        let (du, dv) = witness_edges[rng.random_range(0..witness_edges.len())];
        let mut kept = g.edges();
        kept.retain(|&(a, b)| (a, b) != (du.min(dv), du.max(dv)));
        g = Graph::build(n, &kept)?;
    }

    if class == TargetClass::BullFreePrime && find_proper_homogeneous_set(&g).is_some() {
        return Err(Error::Generation(format!(
            "repaired draw is not prime (seed {seed})"
        )));
    }
    Ok(g)
}

/// Ring of seven stable sets: part `i` (of the given size) is complete to
/// parts `i±1` and anticomplete to the rest. Parts occupy consecutive index
/// ranges in order.
pub fn c7_blowup(sizes: &[usize; 7]) -> Result<Graph> {
    if sizes.contains(&0) {
        return Err(Error::input("all seven part sizes must be positive"));
    }
    let (g, _) = c7_blowup_with_parts(sizes)?;
    Ok(g)
}

/// Like [`c7_blowup`], also returning the seven parts.
pub fn c7_blowup_with_parts(sizes: &[usize; 7]) -> Result<(Graph, [VertexSet; 7])> {
    let n: usize = sizes.iter().sum();
    let mut parts_idx: Vec<Vec<usize>> = Vec::with_capacity(7);
    let mut next = 0;
    for &s in sizes {
        parts_idx.push((next..next + s).collect());
        next += s;
    }
    let mut edges = Vec::new();
    for i in 0..7 {
        for &a in &parts_idx[i] {
            for &b in &parts_idx[(i + 1) % 7] {
                edges.push((a, b));
            }
        }
    }
    let g = Graph::build(n, &edges)?;
    let parts = std::array::from_fn(|i| VertexSet::from_iter(n, parts_idx[i].iter().copied()));
    Ok((g, parts))
}

/// Replaces every vertex of `g` by a stable set of `t` true twins. Vertex
/// `v` becomes indices `v*t .. (v+1)*t`.
pub fn twin_expand(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::input("twin factor must be positive"));
    }
    let n = g.n() * t;
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        for a in 0..t {
            for b in 0..t {
                edges.push((u * t + a, v * t + b));
            }
        }
    }
    Graph::build(n, &edges)
}

/// A fixed 13-vertex triangle-free instance: vertex 0 (`c`) sees only 1
/// (`d`); `d` is complete to the five anchors 2..=6; anchor `i` sees the two
/// ring vertices at distance one on the five-ring 7..=11 and the apex 12.
/// In the core (everything but 0 and 1), removing any single closed
/// neighborhood still leaves a C5, which defeats single-peel strategies.
/// Returns `(graph, c, d)`.
pub fn fixture() -> (Graph, usize, usize) {
    let c = 0;
    let d = 1;
    let h = |i: usize| 2 + i; // anchors h0..h4
    let ring = |i: usize| 7 + i % 5; // ring c0..c4
    let z = 12;
    let mut edges = vec![(c, d)];
    for i in 0..5 {
        edges.push((d, h(i)));
        edges.push((h(i), ring(i + 4))); // ring index i-1
        edges.push((h(i), ring(i + 1)));
        edges.push((h(i), z));
        edges.push((ring(i), ring(i + 1)));
    }
    let g = Graph::build(13, &edges).expect("fixture edges are valid");
    (g, c, d)
}
