//! Exact solvers for *line planning on all lines*: given a public transport
//! network with frequency requirements per edge, choose simple paths (lines)
//! and frequencies of minimum total cost, where any simple path of the
//! network may become a line.
//!
//! The crate provides
//!
//! * core types for instances and line concepts with exact rational costs,
//! * a polynomial solver for stars ([`solve_star`]),
//! * a pseudo-polynomial dynamic program for trees ([`solve_tree_dp`]) and a
//!   polynomial solver for trees with fixed frequencies
//!   ([`solve_tree_fixed_freq`]),
//! * a branch-and-bound oracle for small general instances
//!   ([`oracle_solve`], [`oracle_decide`]), and
//! * instance constructions that connect line planning to number
//!   partitioning problems and compose hard instances (see [`reductions`]).
//!
//! ```
//! use lpal::{Cost, EdgeData, Graph, Instance, MaxFrequency};
//!
//! // A path on three stops where the first edge needs two trips hourly.
//! let instance = Instance::new(
//!     Graph::path(3),
//!     Cost::ZERO,          // dfix: fixed cost per line
//!     Cost::from_int(1),   // cfix: cost per unit of frequency
//!     [
//!         EdgeData { cost: Cost::ZERO, fmin: 2, fmax: MaxFrequency::Finite(4) },
//!         EdgeData { cost: Cost::ZERO, fmin: 1, fmax: MaxFrequency::Finite(4) },
//!     ],
//! )
//! .unwrap();
//!
//! // Optimal: one line over the whole path plus one over the first edge.
//! let solution = lpal::solve_tree_dp(&instance, None, true).unwrap();
//! assert_eq!(solution.cost, Cost::from_int(2));
//! let concept = solution.concept.unwrap();
//! assert!(instance.is_feasible(&concept).unwrap().is_feasible());
//! ```

mod concept;
mod cost;
mod error;
mod graph;
mod instance;
pub mod io;
mod oracle;
pub mod reductions;
mod star;
mod tree;

pub use concept::{Line, LineConcept};
pub use cost::Cost;
pub use error::{Error, Result};
pub use graph::Graph;
pub use instance::{EdgeData, EdgeViolation, FeasibilityReport, Instance, MaxFrequency};
pub use oracle::{
    enumerate_simple_paths, oracle_decide, oracle_solve, OracleConfig, OracleSolution, PathCatalog,
};
pub use star::{optimality_condition, solve_star, OptimalityCondition};
pub use tree::{
    cost_vector_leaf, cost_vector_introduce_parent, cost_vector_merge, solve_tree_dp,
    solve_tree_fixed_freq, CostVector, TreeSolution,
};
