//! Minimum-alliance solvers behind a common [`Solver`] trait, selectable by
//! name through a [`SolverRegistry`].
//!
//! * `oracle`: exhaustive enumeration by cardinality, then lexicographically.
//!   Ground truth; refuses graphs above its cap.
//! * `bnb`: branch and bound with degree-based lower bounds. Exact, same
//!   witness as the oracle.
//! * `greedy`: constraint-violation greedy. An upper bound only.

mod bnb;
mod greedy;
mod oracle;

use std::fmt;

use serde::Serialize;

use crate::alliances::AllianceQuery;
use crate::error::Result;
use crate::graph::VertexSet;

pub use bnb::BranchAndBound;
pub use greedy::Greedy;
pub use oracle::{Oracle, DEFAULT_ORACLE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    BranchAndBound,
    Greedy,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::BranchAndBound => "branch_and_bound",
            Method::Greedy => "greedy",
        })
    }
}

/// Outcome of one optimisation. `witness` satisfies the queried predicate and
/// has `value` members; exact methods return the lexicographically least
/// optimal set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub method: Method,
}

impl SolveResult {
    pub(crate) fn new(witness: VertexSet, nodes_explored: u64, method: Method) -> Self {
        Self { value: witness.len(), witness, nodes_explored, method }
    }
}

pub trait Solver: Send + Sync {
    /// Registry key.
    fn name(&self) -> &'static str;

    /// Whether `value` is the true optimum rather than an upper bound.
    fn is_exact(&self) -> bool;

    /// Minimum (global, per the query) offensive k-alliance.
    fn solve(&self, query: &AllianceQuery<'_>) -> Result<SolveResult>;
}

/// Solvers by name, in registration order.
#[derive(Default)]
pub struct SolverRegistry {
    solvers: Vec<Box<dyn Solver>>,
}

impl SolverRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// `oracle` (with the given cap), `bnb` and `greedy`.
    pub fn builtin(oracle_cap: usize) -> Result<Self> {
        let mut reg = Self::new();
        reg.register(Box::new(Oracle::with_cap(oracle_cap)?));
        reg.register(Box::new(BranchAndBound::new()));
        reg.register(Box::new(Greedy));
        Ok(reg)
    }

    /// Adds a solver, replacing any previous one with the same name.
    pub fn register(&mut self, solver: Box<dyn Solver>) {
        self.solvers.retain(|s| s.name() != solver.name());
        self.solvers.push(solver);
    }

    pub fn get(&self, name: &str) -> Option<&dyn Solver> {
        self.solvers.iter().find(|s| s.name() == name).map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.solvers.iter().map(|s| s.name()).collect()
    }
}
