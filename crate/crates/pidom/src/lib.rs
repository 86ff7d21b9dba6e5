//! Exact computation toolkit for perfect Italian domination and related
//! domination parameters on simple undirected graphs.
//!
//! A *perfect Italian dominating function* (PID-function) is a labeling
//! `f : V -> {0,1,2}` such that the labels on the open neighborhood of every
//! 0-labeled vertex sum to exactly 2. The minimum weight of such a labeling
//! is `pid(G)`. This crate provides:
//!
//! * [`graph`] — immutable simple-graph values, graph algebra and an
//!   edge-list text format,
//! * [`graph6`] — a bit-exact graph6 codec (short and 3-byte medium forms),
//! * [`families`] — deterministic generators for the parametric families the
//!   solvers are exercised on (paths, wheels, complete multipartite graphs,
//!   threshold graphs, jewels, `KC(a,r,b,s)`, split graphs, fish gadgets),
//! * [`labeling`] — verifiers for every labeling / set predicate
//!   (PID, Roman, Roman {2}, k-fair domination, induced matchings),
//! * [`solver`] — exact solvers: a definitional brute-force oracle and a
//!   pruned branch-and-bound with weight / node / time budgets,
//! * [`characterize`] — polynomial-time tests for `pid = 2` and `pid = 3`,
//!   closed forms for known families and a-priori bounds,
//! * [`reduction`] — the exact-cover-by-3-sets reductions and the fish
//!   gadget enumeration checks.
//!
//! The heavy enumeration loops run data-parallel via rayon when the
//! `parallel` feature (default) is enabled; disabling it falls back to the
//! identical sequential code path. Reported values are schedule-independent
//! either way.

pub mod characterize;
pub mod exec;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod labeling;
pub mod reduction;
pub mod solver;

pub use exec::Exec;
pub use graph::{EdgeSet, Graph, VertexSet};
pub use labeling::{Labeling, Verdict};
pub use solver::{SearchBudget, SolveResult, Status, Witness};
