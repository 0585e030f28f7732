//! Offensive k-alliances in graphs: predicates, exact solvers, closed forms
//! for standard families, bounds, and a checker that tests the bounds and
//! structural results against exhaustive search.
//!
//! A nonempty S ⊆ V is an offensive k-alliance when every vertex outside S
//! with a neighbour in S has at least k more neighbours inside S than
//! outside; it is global when it also dominates the graph.
//!
//! ```
//! use alliance_core::{generators, solvers::Oracle};
//!
//! let q3 = generators::hypercube(3).unwrap();
//! assert_eq!(Oracle::default().gamma_k(&q3, 2).unwrap().value, 4);
//! ```

pub mod alliances;
pub mod edgelist;
pub mod error;
pub mod families;
pub mod generators;
pub mod graph;
pub mod intmath;
pub mod solvers;
pub mod theory;
pub mod verify;

pub use alliances::{AllianceQuery, Rational};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use solvers::{SolveResult, Solver, SolverRegistry};
