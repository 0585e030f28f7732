//! Links between global offensive alliances and ordinary dominating sets,
//! including dominating sets of the complement graph.

use crate::alliances::{dominates, is_dominating, is_minimal_global_offensive, meets_global_condition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::intmath::ceil_div;

/// For k ≤ 1 on a graph without isolated vertices, the complement of a
/// minimal global offensive k-alliance dominates. Returns whether it does.
pub fn minimal_implies_complement_dominating(g: &Graph, s: &VertexSet, k: i64) -> Result<bool> {
    if g.min_degree() == 0 {
        return Err(Error::IsolatedVertex);
    }
    if k > 1 {
        return Err(Error::Precondition(format!("needs k ≤ 1, got {k}")));
    }
    if !is_minimal_global_offensive(g, s, k)? {
        return Err(Error::Precondition("set is not a minimal global offensive k-alliance".into()));
    }
    let rest = s.complement();
    Ok(!rest.is_empty() && dominates(g, &rest))
}

/// For S dominating in the complement Γ̄: whether
/// δ_S(v) − δ_S̄(v) + n + k − 1 ≤ 2|S| for every v ∉ S, degrees taken in Γ.
/// This holds exactly when S is a global offensive k-alliance in Γ̄.
pub fn complement_alliance_check(g: &Graph, s: &VertexSet, k: i64) -> Result<bool> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if !dominates_in_complement(g, s) {
        return Err(Error::Precondition("set does not dominate the complement graph".into()));
    }
    let (n, size) = (g.n() as i64, s.len() as i64);
    Ok(s.complement().iter().all(|v| {
        let inside = g.degree_in(v, s) as i64;
        let outside = g.degree_outside(v, s) as i64;
        inside - outside + n + k - 1 <= 2 * size
    }))
}

/// Whether S dominates Γ̄, read off Γ: each v ∉ S has a non-neighbour in S.
pub fn dominates_in_complement(g: &Graph, s: &VertexSet) -> bool {
    s.complement().iter().all(|v| g.degree_in(v, s) < s.len())
}

/// `(⌈(n+k+Δ−1)/2⌉, ⌈(2n+k−δ−2)/2⌉)`: a dominating set of Γ̄ with at least the
/// first many vertices is a global offensive k-alliance in Γ̄, and a dominating
/// set of Γ with at least the second many is one in Γ.
pub fn dominating_size_thresholds(g: &Graph, k: i64) -> (i64, i64) {
    let (n, min_deg, max_deg) = (g.n() as i64, g.min_degree() as i64, g.max_degree() as i64);
    (ceil_div(n + k + max_deg - 1, 2), ceil_div(2 * n + k - min_deg - 2, 2))
}

/// Checks both size-threshold claims by enumerating every set at or above
/// the thresholds (n ≤ 20). Returns the number of dominating sets examined.
pub fn check_dominating_thresholds(g: &Graph, k: i64) -> Result<u64> {
    let n = g.n();
    if n > 20 {
        return Err(Error::OracleCap { n, cap: 20 });
    }
    let comp = g.complement();
    let (t_comp, t_graph) = dominating_size_thresholds(g, k);
    let mut examined = 0;
    for mask in 1u64..(1 << n) {
        let s = VertexSet::from_mask(n, mask);
        let size = s.len() as i64;
        if size >= t_graph && is_dominating(g, &s)? {
            examined += 1;
            if !meets_global_condition(g, &s, k) {
                return Err(Error::VerificationFailed(format!(
                    "dominating set {s:?} of size {size} ≥ {t_graph} is not a global offensive {k}-alliance"
                )));
            }
        }
        if size >= t_comp && dominates(&comp, &s) {
            examined += 1;
            if !meets_global_condition(&comp, &s, k) {
                return Err(Error::VerificationFailed(format!(
                    "complement-dominating set {s:?} of size {size} ≥ {t_comp} is not a global offensive {k}-alliance there"
                )));
            }
        }
    }
    Ok(examined)
}
