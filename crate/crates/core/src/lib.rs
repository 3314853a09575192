//! Exact maximum weight stable set (MWSS) solvers for two hereditary graph
//! classes: graphs with no induced P7 and no induced bull, and graphs with no
//! induced S{1,2,3} and no induced bull.
//!
//! The solvers reduce an arbitrary class member to prime ones by contracting
//! homogeneous sets, then decompose each prime graph around per-vertex
//! component contexts, peeling vertices chosen by a red-edge scoring rule
//! until every remaining piece is C5-free and can be handed to an exact
//! branch-and-bound leaf solver. Structural facts the peeling relies on are
//! re-checked at runtime, so inputs outside the class produce a diagnostic
//! witness instead of a wrong answer.

pub mod bench;
pub mod bitset;
pub mod error;
pub mod generator;
pub mod graph;
pub mod modular;
pub mod mwss;
pub mod patterns;
pub mod solver;
pub mod textio;

pub use bitset::{VertexSet, MAX_VERTICES};
pub use error::{Error, Result, Witness};
pub use graph::{Graph, Solution, Weights};
pub use mwss::{exact_mwss, verify_solution, DEFAULT_NODE_BUDGET, ORACLE_NODE_BUDGET};
pub use solver::{solve_s123bull, solve_p7bull, SolveOptions, SolveStats};
