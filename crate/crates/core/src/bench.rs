//! Scaling benchmark: runs the decomposition solver against an exhaustive
//! enumeration oracle across instance families of growing size, reporting
//! wall times, recursion counts, the log–log growth slope of the counts,
//! and the speedup at the largest size the oracle still finishes.
//!
//! The comparator here is deliberately the unpruned enumerator, not the
//! branch-and-bound leaf solver: enumeration cost grows with the number of
//! stable sets and turns from seconds into hours right around n ≈ 30 on
//! these families, which is the scaling contrast the sweep documents.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::generator::{c7_blowup, fixture, twin_expand};
use crate::graph::{Graph, Weights};
use crate::solver::{solve_p7bull, SolveOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchFamily {
    /// Ring of seven stable sets; any n ≥ 7, parts as equal as possible.
    C7Blowup,
    /// Twin-expanded 13-vertex fixture; n must be a multiple of 13.
    FixtureTwin,
}

impl BenchFamily {
    pub fn name(self) -> &'static str {
        match self {
            BenchFamily::C7Blowup => "c7blowup",
            BenchFamily::FixtureTwin => "fixturetwin",
        }
    }

    pub fn instance(self, n: usize) -> Result<Graph> {
        match self {
            BenchFamily::C7Blowup => {
                if n < 7 {
                    return Err(Error::input("c7blowup sizes must be at least 7"));
                }
                let base = n / 7;
                let rem = n % 7;
                let sizes = std::array::from_fn(|i| base + usize::from(i < rem));
                c7_blowup(&sizes)
            }
            BenchFamily::FixtureTwin => {
                if n == 0 || !n.is_multiple_of(13) {
                    return Err(Error::input("fixturetwin sizes must be positive multiples of 13"));
                }
                let (g, _, _) = fixture();
                twin_expand(&g, n / 13)
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub solve_ms: f64,
    pub recursions: u64,
    pub leaves: u64,
    /// Median wall time of exhaustive enumeration; None once it blows the cap.
    pub oracle_ms: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub family: BenchFamily,
    pub rows: Vec<BenchRow>,
    pub slope_recursions: f64,
    pub slope_leaves: f64,
    pub largest_oracle_n: Option<usize>,
    pub speedup_at_largest: Option<f64>,
}

/// Runs both solvers on every size. `repeat` controls how many timed runs
/// feed each median; weights are seeded uniform in 1..=100.
pub fn run_bench(
    family: BenchFamily,
    sizes: &[usize],
    repeat: usize,
    seed: u64,
    oracle_cap: Duration,
) -> Result<BenchReport> {
    if sizes.is_empty() {
        return Err(Error::input("size list is empty"));
    }
    let repeat = repeat.max(1);
    let opts = SolveOptions::default();
    let mut rows = Vec::with_capacity(sizes.len());

    for &n in sizes {
        let g = family.instance(n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64));
        let w = Weights((0..g.n()).map(|_| rng.random_range(1..=100u64)).collect());

        let mut solve_times = Vec::with_capacity(repeat);
        let mut stats = None;
        let mut solve_weight = 0;
        for _ in 0..repeat {
            let start = Instant::now();
            let (sol, st) = solve_p7bull(&g, &w, &opts)?;
            solve_times.push(start.elapsed().as_secs_f64() * 1e3);
            solve_weight = sol.weight;
            stats.get_or_insert(st);
        }
        let stats = stats.expect("at least one run");

        let mut oracle_times = Vec::with_capacity(repeat);
        let mut oracle_ok = true;
        for _ in 0..repeat {
            let start = Instant::now();
            match exhaustive_best(&g, &w, start + oracle_cap) {
                Some(best) => {
                    oracle_times.push(start.elapsed().as_secs_f64() * 1e3);
                    if best != solve_weight {
                        return Err(Error::input(format!(
                            "solver disagrees with exhaustive enumeration at n={n}: {} vs {best}",
                            solve_weight
                        )));
                    }
                }
                None => {
                    oracle_ok = false;
                    break;
                }
            }
        }

        rows.push(BenchRow {
            n,
            solve_ms: median(&mut solve_times),
            recursions: stats.recursions,
            leaves: stats.leaves,
            oracle_ms: if oracle_ok { Some(median(&mut oracle_times)) } else { None },
        });
    }

    let slope_recursions = loglog_slope(rows.iter().map(|r| (r.n, r.recursions)));
    let slope_leaves = loglog_slope(rows.iter().map(|r| (r.n, r.leaves)));
    let largest = rows.iter().rev().find(|r| r.oracle_ms.is_some());
    let (largest_oracle_n, speedup_at_largest) = match largest {
        Some(row) => (
            Some(row.n),
            row.oracle_ms.map(|o| o / row.solve_ms.max(1e-9)),
        ),
        None => (None, None),
    };

    Ok(BenchReport {
        family,
        rows,
        slope_recursions,
        slope_leaves,
        largest_oracle_n,
        speedup_at_largest,
    })
}

/// Walks every stable set by plain include/exclude recursion over the
/// vertices, no bounding, and returns the best weight. `None` once the
/// deadline passes.
pub fn exhaustive_best(g: &Graph, w: &Weights, deadline: Instant) -> Option<u64> {
    struct Walk<'a> {
        g: &'a Graph,
        w: &'a Weights,
        deadline: Instant,
        steps: u64,
        best: u64,
    }
    impl Walk<'_> {
        fn go(&mut self, v: usize, cur: u64, banned: VertexSet) -> Option<()> {
            self.steps += 1;
            if self.steps.is_multiple_of(8192) && Instant::now() >= self.deadline {
                return None;
            }
            if v == self.g.n() {
                self.best = self.best.max(cur);
                return Some(());
            }
            if !banned.contains(v) {
                self.go(v + 1, cur + self.w.get(v), banned.or(self.g.neighbors(v)))?;
            }
            self.go(v + 1, cur, banned)
        }
    }
    let mut walk = Walk { g, w, deadline, steps: 0, best: 0 };
    walk.go(0, 0, VertexSet::empty(g.n())).map(|()| walk.best)
}

fn median(times: &mut [f64]) -> f64 {
    times.sort_by(|a, b| a.partial_cmp(b).unwrap());
    times[times.len() / 2]
}

/// Least-squares slope of ln(count) against ln(n).
pub fn loglog_slope<I: Iterator<Item = (usize, u64)>>(points: I) -> f64 {
    let pts: Vec<(f64, f64)> = points
        .map(|(n, c)| ((n as f64).ln(), (c.max(1) as f64).ln()))
        .collect();
    let m = pts.len() as f64;
    if pts.len() < 2 {
        return 0.0;
    }
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let denom = m * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        return 0.0;
    }
    (m * sxy - sx * sy) / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_have_requested_sizes() {
        assert_eq!(BenchFamily::C7Blowup.instance(14).unwrap().n(), 14);
        assert_eq!(BenchFamily::C7Blowup.instance(30).unwrap().n(), 30);
        assert_eq!(BenchFamily::FixtureTwin.instance(26).unwrap().n(), 26);
        assert!(BenchFamily::FixtureTwin.instance(20).is_err());
        assert!(BenchFamily::C7Blowup.instance(3).is_err());
    }

    #[test]
    fn slope_of_a_power_law() {
        let slope = loglog_slope((1..=10).map(|n| (n * 10, (n * n * 100) as u64)));
        assert!((slope - 2.0).abs() < 0.05, "slope {slope}");
    }

    #[test]
    fn small_bench_runs() {
        let report = run_bench(
            BenchFamily::C7Blowup,
            &[14, 21],
            1,
            7,
            Duration::from_secs(5),
        )
        .unwrap();
        assert_eq!(report.rows.len(), 2);
        assert!(report.rows.iter().all(|r| r.oracle_ms.is_some()));
    }
}
