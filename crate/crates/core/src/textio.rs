//! Text graph format shared by the CLI and the generators.
//!
//! ```text
//! # comment
//! p mwss <n> <m>
//! v <i> <w>        one per weighted vertex, 1-indexed; missing means weight 1
//! e <u> <v>        one per edge, 1-indexed
//! ```
//!
//! Parsing is strict: the `p` line comes first, `v` lines precede `e` lines,
//! `m` must equal the number of `e` lines, and unknown line kinds are errors.

use crate::error::{Error, Result};
use crate::graph::{Graph, Weights};

pub fn parse_graph(text: &str) -> Result<(Graph, Weights)> {
    let mut header: Option<(usize, usize)> = None;
    let mut weights: Vec<u64> = Vec::new();
    let mut weight_seen: Vec<bool> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let kind = parts.next().unwrap();
        let fields: Vec<&str> = parts.collect();
        let at = |msg: String| Error::Input(format!("line {}: {}", lineno + 1, msg));

        match kind {
            "p" => {
                if header.is_some() {
                    return Err(at("duplicate p line".into()));
                }
                if fields.len() != 3 || fields[0] != "mwss" {
                    return Err(at("expected `p mwss <n> <m>`".into()));
                }
                let n: usize = fields[1]
                    .parse()
                    .map_err(|_| at(format!("bad vertex count `{}`", fields[1])))?;
                let m: usize = fields[2]
                    .parse()
                    .map_err(|_| at(format!("bad edge count `{}`", fields[2])))?;
                weights = vec![1; n];
                weight_seen = vec![false; n];
                header = Some((n, m));
            }
            "v" => {
                let (n, _) = header.ok_or_else(|| at("v line before p line".into()))?;
                if !edges.is_empty() {
                    return Err(at("v line after e lines".into()));
                }
                if fields.len() != 2 {
                    return Err(at("expected `v <i> <w>`".into()));
                }
                let i: usize = fields[0]
                    .parse()
                    .map_err(|_| at(format!("bad vertex index `{}`", fields[0])))?;
                let w: u64 = fields[1]
                    .parse()
                    .map_err(|_| at(format!("bad weight `{}`", fields[1])))?;
                if i == 0 || i > n {
                    return Err(at(format!("vertex index {i} out of range 1..={n}")));
                }
                if weight_seen[i - 1] {
                    return Err(at(format!("duplicate weight for vertex {i}")));
                }
                weight_seen[i - 1] = true;
                weights[i - 1] = w;
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| at("e line before p line".into()))?;
                if fields.len() != 2 {
                    return Err(at("expected `e <u> <v>`".into()));
                }
                let u: usize = fields[0]
                    .parse()
                    .map_err(|_| at(format!("bad endpoint `{}`", fields[0])))?;
                let v: usize = fields[1]
                    .parse()
                    .map_err(|_| at(format!("bad endpoint `{}`", fields[1])))?;
                if u == 0 || u > n || v == 0 || v > n {
                    return Err(at(format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(at(format!("self-loop at vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(at(format!("unknown line kind `{other}`")));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| Error::input("missing `p mwss <n> <m>` line"))?;
    if edges.len() != m {
        return Err(Error::Input(format!(
            "p line declares {m} edges but {} e lines found",
            edges.len()
        )));
    }
    let graph = Graph::build(n, &edges)?;
    Ok((graph, Weights(weights)))
}

/// Canonical writer: weights are emitted only where they differ from the
/// default of 1, edges in ascending order.
pub fn write_graph(g: &Graph, w: &Weights) -> String {
    let edges = g.edges();
    let mut out = String::new();
    out.push_str(&format!("p mwss {} {}\n", g.n(), edges.len()));
    for v in 0..g.n() {
        if w.get(v) != 1 {
            out.push_str(&format!("v {} {}\n", v + 1, w.get(v)));
        }
    }
    for (u, v) in edges {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
