//! Alliances in Cartesian products Γ₁ × Γ₂, built from or projected onto the
//! factors. Product vertex (i, j) has index i·n₂ + j.
//!
//! Every function re-checks its conclusion with the predicates in
//! [`crate::alliances`] and reports a failed conclusion as
//! [`Error::VerificationFailed`], distinct from a failed hypothesis.

use crate::alliances::{
    is_global_offensive_k_alliance, is_offensive_k_alliance, meets_global_condition, meets_offensive_condition,
};
use crate::error::{Error, Result};
use crate::graph::{product_set, project_full_factor, Graph, VertexSet};

fn failed(msg: String) -> Error {
    Error::VerificationFailed(msg)
}

fn check_order(g: &Graph, s: &VertexSet) -> Result<()> {
    g.check_set(s)?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(())
}

/// Sᵢ offensive kᵢ-alliances in Γᵢ give the offensive k-alliance S₁ × S₂ in
/// Γ₁ × Γ₂ with k = min{k₂ − Δ₁, k₁ − Δ₂}.
pub fn product_offensive_construct(
    g1: &Graph,
    s1: &VertexSet,
    k1: i64,
    g2: &Graph,
    s2: &VertexSet,
    k2: i64,
) -> Result<(VertexSet, i64)> {
    if !is_offensive_k_alliance(g1, s1, k1)? || !is_offensive_k_alliance(g2, s2, k2)? {
        return Err(Error::Precondition("factor sets must be offensive alliances".into()));
    }
    let k = (k2 - g1.max_degree() as i64).min(k1 - g2.max_degree() as i64);
    let x = product_set(s1, s2);
    let prod = g1.cartesian_product(g2);
    if !meets_offensive_condition(&prod, &x, k) {
        return Err(failed(format!("S₁ × S₂ is not an offensive {k}-alliance")));
    }
    Ok((x, k))
}

/// Offensive thresholds the factors inherit from an offensive k-alliance
/// S₁ × S₂: `(k + δ₂, k + δ₁)`.
///
/// Also checks `k ≤ Δ₁ − δ₂` when ∂S₁ ≠ ∅ and `k ≤ Δ₂ − δ₁` when ∂S₂ ≠ ∅;
/// with an empty boundary (for instance Sᵢ = Vᵢ on a connected factor) the
/// condition is vacuous and k is unconstrained.
pub fn product_offensive_project(g1: &Graph, s1: &VertexSet, g2: &Graph, s2: &VertexSet, k: i64) -> Result<(i64, i64)> {
    check_order(g1, s1)?;
    check_order(g2, s2)?;
    let prod = g1.cartesian_product(g2);
    if !meets_offensive_condition(&prod, &product_set(s1, s2), k) {
        return Err(Error::Precondition(format!("S₁ × S₂ is not an offensive {k}-alliance")));
    }
    let (d1, d2) = (g1.min_degree() as i64, g2.min_degree() as i64);
    let (big1, big2) = (g1.max_degree() as i64, g2.max_degree() as i64);
    let (k1, k2) = (k + d2, k + d1);
    if !meets_offensive_condition(g1, s1, k1) {
        return Err(failed(format!("S₁ is not an offensive {k1}-alliance")));
    }
    if !meets_offensive_condition(g2, s2, k2) {
        return Err(failed(format!("S₂ is not an offensive {k2}-alliance")));
    }
    if !g1.boundary(s1)?.is_empty() && k > big1 - d2 {
        return Err(failed(format!("k = {k} exceeds Δ₁ − δ₂ = {}", big1 - d2)));
    }
    if !g2.boundary(s2)?.is_empty() && k > big2 - d1 {
        return Err(failed(format!("k = {k} exceeds Δ₂ − δ₁ = {}", big2 - d1)));
    }
    Ok((k1, k2))
}

/// A global offensive k-alliance S in Γ₁ gives the global offensive
/// (k − Δ₂)-alliance S × V₂.
pub fn product_global_construct(g1: &Graph, s: &VertexSet, k: i64, g2: &Graph) -> Result<(VertexSet, i64)> {
    if !is_global_offensive_k_alliance(g1, s, k)? {
        return Err(Error::Precondition("set is not a global offensive k-alliance".into()));
    }
    let k_out = k - g2.max_degree() as i64;
    let x = product_set(s, &VertexSet::full(g2.n()));
    if !meets_global_condition(&g1.cartesian_product(g2), &x, k_out) {
        return Err(failed(format!("S × V₂ is not a global offensive {k_out}-alliance")));
    }
    Ok((x, k_out))
}

/// Recovers S from a global offensive k-alliance S × V₂ and checks that S is
/// a global offensive (k + δ₂)-alliance. Also checks `k ≤ Δ₁ − δ₂` when
/// S ≠ V₁ (S = V₁ leaves no vertex to constrain k).
pub fn product_global_project(g1: &Graph, g2: &Graph, x: &VertexSet, k: i64) -> Result<(VertexSet, i64)> {
    let s = project_full_factor(x, g1.n(), g2.n())?;
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if !meets_global_condition(&g1.cartesian_product(g2), x, k) {
        return Err(Error::Precondition(format!("S × V₂ is not a global offensive {k}-alliance")));
    }
    let d2 = g2.min_degree() as i64;
    let k_out = k + d2;
    if !meets_global_condition(g1, &s, k_out) {
        return Err(failed(format!("S is not a global offensive {k_out}-alliance")));
    }
    let limit = g1.max_degree() as i64 - d2;
    if !s.is_full() && k > limit {
        return Err(failed(format!("k = {k} exceeds Δ₁ − δ₂ = {limit}")));
    }
    Ok((s, k_out))
}

/// For a δ-regular Γ₂: whether "S is a global offensive k-alliance in Γ₁"
/// and "S × V₂ is a global offensive (k − δ)-alliance" agree.
pub fn regular_product_equivalence(g1: &Graph, s: &VertexSet, k: i64, g2: &Graph) -> Result<bool> {
    if !g2.is_regular() {
        return Err(Error::Precondition("second factor must be regular".into()));
    }
    check_order(g1, s)?;
    let x = product_set(s, &VertexSet::full(g2.n()));
    let lhs = meets_global_condition(g1, s, k);
    let rhs = meets_global_condition(&g1.cartesian_product(g2), &x, k - g2.min_degree() as i64);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied())
    }

    #[test]
    fn offensive_construct_examples() {
        let c4 = cycle(4).unwrap();
        let k4 = complete(4).unwrap();
        let (x, k) = product_offensive_construct(&c4, &set(4, &[0]), 0, &k4, &set(4, &[0, 1]), 1).unwrap();
        assert_eq!((x.to_vec(), k), (vec![0, 1], -3));

        let (x, _) = product_offensive_construct(&c4, &VertexSet::full(4), 0, &k4, &VertexSet::full(4), 1).unwrap();
        assert!(x.is_full());

        assert!(matches!(
            product_offensive_construct(&c4, &set(4, &[0]), 2, &k4, &set(4, &[0]), 1),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn offensive_project_examples() {
        let c4 = cycle(4).unwrap();
        let k4 = complete(4).unwrap();
        assert_eq!(product_offensive_project(&c4, &set(4, &[0]), &k4, &set(4, &[0, 1]), -3), Ok((0, -1)));
        // S₁ = V₁, S₂ = V₂: any k is vacuous, the factor bound is not enforced
        assert!(product_offensive_project(&c4, &VertexSet::full(4), &k4, &VertexSet::full(4), 9).is_ok());
    }

    #[test]
    fn global_construct_and_project() {
        let c6 = cycle(6).unwrap();
        let k3 = complete(3).unwrap();
        let s = set(6, &[0, 3]);
        let (x, k) = product_global_construct(&c6, &s, 0, &k3).unwrap();
        assert_eq!((x.len(), k), (6, -2));
        let (back, k_back) = product_global_project(&c6, &k3, &x, k).unwrap();
        assert_eq!((back, k_back), (s.clone(), 0));
        assert!(regular_product_equivalence(&c6, &s, 0, &k3).unwrap());

        let k1 = complete(1).unwrap();
        let (x, k) = product_global_construct(&c6, &s, 0, &k1).unwrap();
        assert_eq!((x, k), (s, 0));

        let c4 = cycle(4).unwrap();
        let (x, k) = product_global_construct(&c4, &set(4, &[0, 2]), 2, &c4).unwrap();
        assert_eq!((x.len(), k), (8, 0));

        let odd = set(18, &[0, 4]);
        assert!(matches!(product_global_project(&c6, &k3, &odd, 0), Err(Error::ShapeViolation(_))));
    }
}
