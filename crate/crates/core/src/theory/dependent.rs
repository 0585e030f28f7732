//! Complements of r-dependent sets and of global offensive alliances.

use crate::alliances::{is_global_offensive_k_alliance, is_r_dependent, meets_global_condition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::intmath::floor_div;

/// For an r-dependent S with 0 ≤ r ≤ ⌊(δ−1)/2⌋, returns `(S̄, δ − 2r)`;
/// S̄ is checked to be a global offensive (δ−2r)-alliance.
pub fn dependent_complement_transfer(g: &Graph, s: &VertexSet, r: i64) -> Result<(VertexSet, i64)> {
    if !is_r_dependent(g, s, r)? {
        return Err(Error::Precondition(format!("set is not {r}-dependent")));
    }
    let min_deg = g.min_degree() as i64;
    let r_max = floor_div(min_deg - 1, 2);
    if r > r_max {
        return Err(Error::Precondition(format!("needs r ≤ ⌊(δ−1)/2⌋ = {r_max}, got {r}")));
    }
    let rest = s.complement();
    let k = min_deg - 2 * r;
    if !is_global_offensive_k_alliance(g, &rest, k)? {
        return Err(Error::VerificationFailed(format!(
            "complement of {r}-dependent {s:?} is not a global offensive {k}-alliance"
        )));
    }
    Ok((rest, k))
}

/// For a global offensive k-alliance S, returns `(S̄, ⌊(Δ−k)/2⌋)`; S̄ is
/// checked to be ⌊(Δ−k)/2⌋-dependent.
pub fn alliance_to_dependent(g: &Graph, s: &VertexSet, k: i64) -> Result<(VertexSet, i64)> {
    if !is_global_offensive_k_alliance(g, s, k)? {
        return Err(Error::Precondition("set is not a global offensive k-alliance".into()));
    }
    let r = floor_div(g.max_degree() as i64 - k, 2);
    let rest = s.complement();
    if !is_r_dependent(g, &rest, r)? {
        return Err(Error::VerificationFailed(format!(
            "complement of global offensive {k}-alliance {s:?} is not {r}-dependent"
        )));
    }
    Ok((rest, r))
}

/// On a δ-regular graph (δ > 0) and 0 ≤ r ≤ ⌊(δ−1)/2⌋: whether "S is
/// r-dependent" and "S̄ is a global offensive (δ−2r)-alliance" agree.
pub fn regular_dependence_equivalence(g: &Graph, s: &VertexSet, r: i64) -> Result<bool> {
    if !g.is_regular() || g.min_degree() == 0 {
        return Err(Error::Precondition("needs a regular graph with δ > 0".into()));
    }
    let k = g.min_degree() as i64 - 2 * r;
    let rest = s.complement();
    let rhs = !rest.is_empty() && meets_global_condition(g, &rest, k);
    Ok(is_r_dependent(g, s, r)? == rhs)
}
