//! Thresholds relating global offensive k-alliances to τ-dominating sets.

use serde::Serialize;

use crate::alliances::AllianceQuery;
use crate::alliances::{check_k, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::Solver;

/// `low = min{(k+δ)/2δ, (k+Δ)/2Δ}`, `high = max{…}`, unclamped.
///
/// Every global offensive k-alliance is τ-dominating for τ in
/// [`TauThresholds::alliance_implies_tau`]; every τ-dominating set is a global
/// offensive k-alliance for τ in [`TauThresholds::tau_implies_alliance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TauThresholds {
    #[serde(serialize_with = "ser_ratio")]
    pub low: Rational,
    #[serde(serialize_with = "ser_ratio")]
    pub high: Rational,
}

fn ser_ratio<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl TauThresholds {
    /// 0 < τ ≤ low (and τ ≤ 1).
    pub fn alliance_implies_tau(&self, tau: Rational) -> bool {
        tau > Rational::from_integer(0) && tau <= self.low && tau <= Rational::from_integer(1)
    }

    /// high ≤ τ ≤ 1.
    pub fn tau_implies_alliance(&self, tau: Rational) -> bool {
        tau >= self.high && tau <= Rational::from_integer(1) && tau > Rational::from_integer(0)
    }
}

pub fn tau_thresholds(g: &Graph, k: i64) -> Result<TauThresholds> {
    let (min_deg, max_deg) = (g.min_degree() as i64, g.max_degree() as i64);
    if min_deg == 0 {
        return Err(Error::IsolatedVertex);
    }
    let a = Rational::new(k + min_deg, 2 * min_deg);
    let b = Rational::new(k + max_deg, 2 * max_deg);
    Ok(TauThresholds { low: a.min(b), high: a.max(b) })
}

/// For δ > 0, Δ ≥ 2, j ∈ [2−Δ, 0] and k ≤ −jδ/Δ: computes γₖᵒ and γⱼᵒ with
/// `solver` and reports whether γₖᵒ + γⱼᵒ ≤ n.
pub fn sum_bound_holds(g: &Graph, j: i64, k: i64, solver: &dyn Solver) -> Result<bool> {
    let (min_deg, max_deg) = (g.min_degree() as i64, g.max_degree() as i64);
    if min_deg == 0 {
        return Err(Error::IsolatedVertex);
    }
    if max_deg < 2 {
        return Err(Error::Precondition("needs Δ ≥ 2".into()));
    }
    if j < 2 - max_deg || j > 0 {
        return Err(Error::Precondition(format!("needs 2−Δ ≤ j ≤ 0, got j = {j}")));
    }
    // k ≤ −jδ/Δ  ⇔  kΔ ≤ −jδ
    if k * max_deg > -j * min_deg {
        return Err(Error::Precondition(format!("needs k ≤ −jδ/Δ, got k = {k}, j = {j}")));
    }
    check_k(g, k)?;
    let gk = solver.solve(&AllianceQuery::global(g, k)?)?.value;
    let gj = solver.solve(&AllianceQuery::global(g, j)?)?.value;
    Ok(gk + gj <= g.n())
}
