//! Exact decision procedures for offensive k-alliances and their relatives.
//!
//! A nonempty S ⊆ V is an offensive k-alliance when every boundary vertex
//! v ∈ ∂(S) has δ_S(v) ≥ δ_S̄(v) + k, equivalently δ(v) ≥ 2·δ_S̄(v) + k. It is
//! global when it also dominates. k is restricted to `2 − Δ ..= Δ`; S = V is
//! accepted for every such k because its boundary is empty.

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Exact rational used for τ thresholds. Always reduced with a positive
/// denominator.
pub type Rational = Ratio<i64>;

/// The admissible k range `(2 − Δ, Δ)`.
pub fn k_range(g: &Graph) -> Result<(i64, i64)> {
    let max_deg = g.max_degree() as i64;
    if max_deg < 1 {
        return Err(Error::Edgeless);
    }
    Ok((2 - max_deg, max_deg))
}

pub fn check_k(g: &Graph, k: i64) -> Result<()> {
    let (lo, hi) = k_range(g).map_err(|_| Error::KOutOfRange { k, lo: 2, hi: 0 })?;
    if k < lo || k > hi {
        return Err(Error::KOutOfRange { k, lo, hi });
    }
    Ok(())
}

fn check_nonempty(g: &Graph, s: &VertexSet) -> Result<()> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

/// One solvable problem instance: minimise |S| over (global) offensive
/// k-alliances of `graph`.
#[derive(Clone, Copy, Debug)]
pub struct AllianceQuery<'g> {
    pub graph: &'g Graph,
    pub k: i64,
    pub global: bool,
}

impl<'g> AllianceQuery<'g> {
    pub fn new(graph: &'g Graph, k: i64, global: bool) -> Result<Self> {
        check_k(graph, k)?;
        Ok(Self { graph, k, global })
    }

    pub fn global(graph: &'g Graph, k: i64) -> Result<Self> {
        Self::new(graph, k, true)
    }

    pub fn offensive(graph: &'g Graph, k: i64) -> Result<Self> {
        Self::new(graph, k, false)
    }

    /// Whether `s` is feasible for this query.
    pub fn accepts(&self, s: &VertexSet) -> Result<bool> {
        if self.global {
            is_global_offensive_k_alliance(self.graph, s, self.k)
        } else {
            is_offensive_k_alliance(self.graph, s, self.k)
        }
    }
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> Result<bool> {
    check_nonempty(g, s)?;
    Ok(dominates(g, s))
}

/// Domination without the nonempty precondition (∅ dominates only the empty graph).
pub(crate) fn dominates(g: &Graph, s: &VertexSet) -> bool {
    s.complement().iter().all(|v| g.degree_in(v, s) > 0)
}

/// min over v ∈ ∂(S) of δ_S(v) − δ_S̄(v), or `None` when ∂(S) = ∅.
///
/// S satisfies the offensive condition for k exactly when this is `None` or ≥ k.
pub fn offensive_slack(g: &Graph, s: &VertexSet) -> Option<i64> {
    s.complement()
        .iter()
        .filter_map(|v| {
            let inside = g.degree_in(v, s) as i64;
            (inside > 0).then(|| 2 * inside - g.degree(v) as i64)
        })
        .min()
}

/// The offensive inequality for an arbitrary integer k, with no range or
/// nonemptiness checks. For k below 2 − Δ it holds for every S; above Δ only
/// when ∂(S) = ∅.
pub fn meets_offensive_condition(g: &Graph, s: &VertexSet, k: i64) -> bool {
    offensive_slack(g, s).is_none_or(|slack| slack >= k)
}

/// [`meets_offensive_condition`] plus domination.
pub fn meets_global_condition(g: &Graph, s: &VertexSet, k: i64) -> bool {
    meets_offensive_condition(g, s, k) && dominates(g, s)
}

pub fn is_offensive_k_alliance(g: &Graph, s: &VertexSet, k: i64) -> Result<bool> {
    check_nonempty(g, s)?;
    check_k(g, k)?;
    Ok(meets_offensive_condition(g, s, k))
}

pub fn is_global_offensive_k_alliance(g: &Graph, s: &VertexSet, k: i64) -> Result<bool> {
    check_nonempty(g, s)?;
    check_k(g, k)?;
    Ok(meets_global_condition(g, s, k))
}

/// Largest S for which minimality is decided by full subset enumeration.
pub const MINIMALITY_LIMIT: usize = 20;

/// Whether no proper subset of `s` is a global offensive k-alliance.
///
/// Removing single vertices is tried first as a cheap necessary condition;
/// alliances are not closed under supersets, so every nonempty proper subset
/// is then enumerated (|S| ≤ [`MINIMALITY_LIMIT`]).
pub fn is_minimal_global_offensive(g: &Graph, s: &VertexSet, k: i64) -> Result<bool> {
    if !is_global_offensive_k_alliance(g, s, k)? {
        return Err(Error::Precondition("set is not a global offensive k-alliance".into()));
    }
    let members = s.to_vec();
    if members.len() > MINIMALITY_LIMIT {
        return Err(Error::Precondition(format!("minimality check limited to |S| ≤ {MINIMALITY_LIMIT}")));
    }
    for &v in &members {
        let mut t = s.clone();
        t.remove(v);
        if !t.is_empty() && meets_global_condition(g, &t, k) {
            return Ok(false);
        }
    }
    let size = members.len();
    let full = (1u32 << size) - 1;
    for sub in 1..full {
        if sub.count_ones() as usize >= size - 1 {
            continue;
        }
        let t = VertexSet::from_members(
            g.n(),
            members.iter().enumerate().filter(|(i, _)| sub >> i & 1 == 1).map(|(_, &v)| v),
        );
        if meets_global_condition(g, &t, k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// δ_S(v) ≤ r for all v ∈ S.
pub fn is_r_dependent(g: &Graph, s: &VertexSet, r: i64) -> Result<bool> {
    g.check_set(s)?;
    if r < 0 {
        return Err(Error::NegativeR(r));
    }
    Ok(s.iter().all(|v| g.degree_in(v, s) as i64 <= r))
}

pub fn check_tau(tau: Rational) -> Result<()> {
    if tau <= Rational::from_integer(0) || tau > Rational::from_integer(1) {
        return Err(Error::InvalidTau(tau.to_string()));
    }
    Ok(())
}

/// δ_S(v) ≥ τ·δ(v) for every v ∈ S̄, compared as δ_S(v)·den ≥ num·δ(v).
pub fn is_tau_dominating(g: &Graph, s: &VertexSet, tau: Rational) -> Result<bool> {
    g.check_set(s)?;
    if g.min_degree() == 0 {
        return Err(Error::IsolatedVertex);
    }
    check_tau(tau)?;
    Ok(meets_tau(g, s, tau))
}

pub(crate) fn meets_tau(g: &Graph, s: &VertexSet, tau: Rational) -> bool {
    s.complement().iter().all(|v| g.degree_in(v, s) as i64 * tau.denom() >= tau.numer() * g.degree(v) as i64)
}

/// A named predicate, for callers that pick one at runtime.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Predicate {
    Dominating,
    Offensive { k: i64 },
    GlobalOffensive { k: i64 },
    RDependent { r: i64 },
    TauDominating { tau: Rational },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    AtLeast,
    AtMost,
}

/// A vertex where a predicate fails: δ_S(v) should stand in `relation` to
/// `required` but does not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: usize,
    pub degree_in: usize,
    pub degree_out: usize,
    pub required: i64,
    pub relation: Relation,
}

impl Predicate {
    pub fn check(&self, g: &Graph, s: &VertexSet) -> Result<bool> {
        match *self {
            Predicate::Dominating => is_dominating(g, s),
            Predicate::Offensive { k } => is_offensive_k_alliance(g, s, k),
            Predicate::GlobalOffensive { k } => is_global_offensive_k_alliance(g, s, k),
            Predicate::RDependent { r } => is_r_dependent(g, s, r),
            Predicate::TauDominating { tau } => is_tau_dominating(g, s, tau),
        }
    }

    /// Every vertex that breaks the predicate, ascending. Empty iff
    /// [`Predicate::check`] returns `Ok(true)`.
    pub fn violations(&self, g: &Graph, s: &VertexSet) -> Result<Vec<Violation>> {
        self.check(g, s)?;
        let at = |v: usize, required: i64, relation| Violation {
            vertex: v,
            degree_in: g.degree_in(v, s),
            degree_out: g.degree_outside(v, s),
            required,
            relation,
        };
        let outside = s.complement();
        let found = match *self {
            Predicate::Dominating => {
                outside.iter().filter(|&v| g.degree_in(v, s) == 0).map(|v| at(v, 1, Relation::AtLeast)).collect()
            }
            Predicate::Offensive { k } | Predicate::GlobalOffensive { k } => {
                let global = matches!(self, Predicate::GlobalOffensive { .. });
                outside
                    .iter()
                    .filter_map(|v| {
                        let inside = g.degree_in(v, s) as i64;
                        let need = g.degree_outside(v, s) as i64 + k;
                        if inside == 0 {
                            global.then(|| at(v, need.max(1), Relation::AtLeast))
                        } else {
                            (inside < need).then(|| at(v, need, Relation::AtLeast))
                        }
                    })
                    .collect()
            }
            Predicate::RDependent { r } => {
                s.iter().filter(|&v| g.degree_in(v, s) as i64 > r).map(|v| at(v, r, Relation::AtMost)).collect()
            }
            Predicate::TauDominating { tau } => outside
                .iter()
                .filter_map(|v| {
                    let need = crate::intmath::ceil_div(tau.numer() * g.degree(v) as i64, *tau.denom());
                    ((g.degree_in(v, s) as i64) < need).then(|| at(v, need, Relation::AtLeast))
                })
                .collect(),
        };
        Ok(found)
    }
}
