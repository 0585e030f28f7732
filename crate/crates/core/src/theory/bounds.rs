//! Closed-form lower and upper bounds on γₖᵒ.
//!
//! A bound whose hypotheses fail returns [`Error::Inapplicable`] with the
//! reason; callers that aggregate bounds treat that as data.

use crate::alliances::{check_k, is_global_offensive_k_alliance};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::intmath::{ceil_div, ceil_half_b_minus_sqrt, floor_div};

fn inapplicable(msg: impl Into<String>) -> Error {
    Error::Inapplicable(msg.into())
}

/// γₖᵒ ≥ ⌈((n+2Δ+k) − √((n+2Δ+k)² − 4(2m+kn))) / 2⌉ for 2 − δ ≤ k ≤ δ.
///
/// The square root never touches floating point; see
/// [`ceil_half_b_minus_sqrt`].
pub fn bound_quadratic(g: &Graph, k: i64) -> Result<i64> {
    let (n, m) = (g.n() as i128, g.m() as i128);
    let (min_deg, max_deg) = (g.min_degree() as i64, g.max_degree() as i64);
    if k < 2 - min_deg || k > min_deg {
        return Err(inapplicable(format!("needs 2-δ ≤ k ≤ δ, got k = {k}, δ = {min_deg}")));
    }
    let b = n + 2 * max_deg as i128 + k as i128;
    let disc = b * b - 4 * (2 * m + k as i128 * n);
    if disc < 0 {
        return Err(inapplicable(format!("negative discriminant {disc}")));
    }
    Ok(ceil_half_b_minus_sqrt(b, disc) as i64)
}

/// (⌈(2m+kn)/(3Δ+k)⌉, n − ⌊(δ−k+2)/2⌋).
pub fn bounds_degree(g: &Graph, k: i64) -> Result<(i64, i64)> {
    check_k(g, k)?;
    let (n, m) = (g.n() as i64, g.m() as i64);
    let (min_deg, max_deg) = (g.min_degree() as i64, g.max_degree() as i64);
    // k ≥ 2 − Δ and Δ ≥ 1 give 3Δ + k ≥ 2Δ + 2 > 0
    let lower = ceil_div(2 * m + k * n, 3 * max_deg + k);
    let upper = n - floor_div(min_deg - k + 2, 2);
    Ok((lower, upper))
}

/// Lower bound on γₖᵒ(L(Γ)) from the degree sequence of Γ:
/// ⌈(Σδᵢ² + m(k−2)) / (3(δ₁+δ₂−2)+k)⌉ with δ₁ ≥ δ₂ the two largest degrees.
pub fn bound_line_graph(g: &Graph, k: i64) -> Result<i64> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    let mut degs: Vec<i64> = g.degrees().map(|d| d as i64).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let second = degs.get(1).copied().unwrap_or(0);
    let denom = 3 * (degs[0] + second - 2) + k;
    if denom <= 0 {
        return Err(inapplicable(format!("denominator 3(δ₁+δ₂−2)+k = {denom} ≤ 0")));
    }
    let squares: i64 = degs.iter().map(|d| d * d).sum();
    Ok(ceil_div(squares + g.m() as i64 * (k - 2), denom))
}

/// Given a global offensive k-alliance S ≠ V whose complement induces a
/// subgraph of minimum degree p, returns ⌈(p+k)n/(Δ+p+k)⌉ ≤ |S|.
pub fn bound_p_induced(g: &Graph, s: &VertexSet, k: i64) -> Result<i64> {
    if !is_global_offensive_k_alliance(g, s, k)? {
        return Err(Error::Precondition("set is not a global offensive k-alliance".into()));
    }
    let rest = s.complement();
    if rest.is_empty() {
        return Err(inapplicable("S = V leaves no complement"));
    }
    let p = g.induced(&rest).min_degree() as i64;
    let (n, max_deg) = (g.n() as i64, g.max_degree() as i64);
    // Δ + k ≥ 2
    Ok(ceil_div((p + k) * n, max_deg + p + k))
}

/// Bounds from maximum r-dependent sets: `lower = n − α_{⌊(Δ−k)/2⌋}` for every
/// admissible k, and `upper = n − α_{⌊(δ−k)/2⌋}` for 1 ≤ k ≤ δ. On a
/// δ-regular graph with δ > 0 the two coincide with γₖᵒ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DependentSandwich {
    pub lower: i64,
    pub upper: Option<i64>,
}

pub fn bounds_dependent_sandwich(
    g: &Graph,
    k: i64,
    alpha: &dyn Fn(&Graph, i64) -> Result<usize>,
) -> Result<DependentSandwich> {
    check_k(g, k)?;
    let n = g.n() as i64;
    let (min_deg, max_deg) = (g.min_degree() as i64, g.max_degree() as i64);
    let alpha = |r: i64| match alpha(g, r) {
        Ok(a) => Ok(a as i64),
        Err(Error::OracleCap { n, cap }) => {
            Err(inapplicable(format!("α_r needs exhaustive search: n = {n} > cap {cap}")))
        }
        Err(e) => Err(e),
    };
    let lower = n - alpha(floor_div(max_deg - k, 2))?;
    let upper = if (1..=min_deg).contains(&k) { Some(n - alpha(floor_div(min_deg - k, 2))?) } else { None };
    Ok(DependentSandwich { lower, upper })
}

/// Bounds on γₖᵒ(Kₙ × Cₜ) and γₖᵒ(Kₙ × Pₜ), each as (lower, upper).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompleteProductBounds {
    pub cycle: Option<(i64, i64)>,
    pub path: (i64, i64),
}

/// For 4 − n ≤ k ≤ n − 1:
/// `⌈t(n+k−3)/2⌉ ≤ γₖᵒ(Kₙ×Cₜ) ≤ t⌈(n+k+1)/2⌉` (t ≥ 3) and
/// `⌈(t(n+k−3)+2)/2⌉ ≤ γₖᵒ(Kₙ×Pₜ) ≤ t⌈(n+k+1)/2⌉` (t ≥ 2).
pub fn bounds_product_complete_cycle_path(n: i64, t: i64, k: i64) -> Result<CompleteProductBounds> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("needs n ≥ 2, got {n}")));
    }
    if t < 2 {
        return Err(Error::InvalidParameter(format!("needs t ≥ 2, got {t}")));
    }
    if k < 4 - n || k > n - 1 {
        return Err(Error::KOutOfRange { k, lo: 4 - n, hi: n - 1 });
    }
    let upper = t * ceil_div(n + k + 1, 2);
    let cycle = (t >= 3).then(|| (ceil_div(t * (n + k - 3), 2), upper));
    let path = (ceil_div(t * (n + k - 3) + 2, 2), upper);
    Ok(CompleteProductBounds { cycle, path })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::solvers::Oracle;

    fn set(n: usize, m: &[usize]) -> VertexSet {
        VertexSet::from_members(n, m.iter().copied())
    }

    #[test]
    fn quadratic_examples() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(bound_quadratic(&q3, 2), Ok(4));
        assert_eq!(bound_quadratic(&q3, -1), Ok(2));
        assert_eq!(bound_quadratic(&q3, 3), Ok(4));
        assert_eq!(bound_quadratic(&complete(5).unwrap(), 1), Ok(3));
        assert!(matches!(bound_quadratic(&path(4).unwrap(), 0), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn degree_examples() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(bounds_degree(&q3, 2), Ok((4, 7)));
        assert_eq!(bounds_degree(&q3, -1).unwrap().0, 2);
        for n in 2..=10usize {
            let kn = complete(n).unwrap();
            let (lo, hi) = crate::alliances::k_range(&kn).unwrap();
            for k in lo..=hi {
                assert_eq!(bounds_degree(&kn, k).unwrap().1, ceil_div(n as i64 + k - 1, 2));
            }
        }
        assert!(bounds_degree(&q3, 4).is_err());
        assert_eq!(bounds_degree(&cycle(6).unwrap(), 0).unwrap().0, 2);
    }

    #[test]
    fn line_graph_examples() {
        let oracle = Oracle::default();
        let k4 = complete(4).unwrap();
        assert_eq!(bound_line_graph(&k4, 1), Ok(3));
        assert!(oracle.gamma_k(&k4.line_graph().unwrap(), 1).unwrap().value >= 3);

        // L(P₃) = K₂ only admits k = 1
        let p3 = path(3).unwrap();
        assert_eq!(bound_line_graph(&p3, 0), Ok(1));
        assert!(oracle.gamma_k(&p3.line_graph().unwrap(), 0).is_err());
        assert_eq!(bound_line_graph(&p3, 1), Ok(1));
        assert_eq!(oracle.gamma_k(&p3.line_graph().unwrap(), 1).unwrap().value, 1);

        let c5 = cycle(5).unwrap();
        assert_eq!(bound_line_graph(&c5, 0), Ok(2));
        assert_eq!(oracle.gamma_k(&c5.line_graph().unwrap(), 0).unwrap().value, 2);

        // K2: δ₁ + δ₂ − 2 = 0
        assert!(matches!(bound_line_graph(&complete(2).unwrap(), 0), Err(Error::Inapplicable(_))));
        assert_eq!(bound_line_graph(&Graph::build(2, &[]).unwrap(), 0), Err(Error::Edgeless));
    }

    #[test]
    fn p_induced_examples() {
        let q3 = hypercube(3).unwrap();
        assert_eq!(bound_p_induced(&q3, &set(8, &[0, 7]), -1), Ok(2));
        assert_eq!(bound_p_induced(&q3, &set(8, &[0, 3, 5, 6]), 2), Ok(4));
        // C6, S = {0,3}: S̄ induces two edges, p = 1, bound ⌈6/3⌉ = 2
        assert_eq!(bound_p_induced(&cycle(6).unwrap(), &set(6, &[0, 3]), 0), Ok(2));
        assert!(matches!(bound_p_induced(&q3, &VertexSet::full(8), 0), Err(Error::Inapplicable(_))));
        assert!(matches!(bound_p_induced(&q3, &set(8, &[0]), 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn sandwich_examples() {
        let oracle = Oracle::default();
        let alpha = |g: &Graph, r: i64| oracle.alpha_r(g, r).map(|r| r.value);
        let c6 = cycle(6).unwrap();
        assert_eq!(bounds_dependent_sandwich(&c6, 1, &alpha), Ok(DependentSandwich { lower: 3, upper: Some(3) }));
        let q3 = hypercube(3).unwrap();
        assert_eq!(bounds_dependent_sandwich(&q3, 3, &alpha), Ok(DependentSandwich { lower: 4, upper: Some(4) }));
        let k4 = complete(4).unwrap();
        assert_eq!(bounds_dependent_sandwich(&k4, 2, &alpha).unwrap().lower, 3);
        assert_eq!(bounds_dependent_sandwich(&k4, 0, &alpha).unwrap().upper, None);
        let big = cycle(30).unwrap();
        assert!(matches!(bounds_dependent_sandwich(&big, 1, &alpha), Err(Error::Inapplicable(_))));
    }

    #[test]
    fn complete_product_examples() {
        let b = bounds_product_complete_cycle_path(4, 3, 1).unwrap();
        assert_eq!(b.cycle, Some((3, 9)));
        assert_eq!(b.path, (4, 9));
        assert_eq!(bounds_product_complete_cycle_path(5, 3, 0).unwrap().cycle, Some((3, 9)));
        assert_eq!(bounds_product_complete_cycle_path(4, 2, 1).unwrap().cycle, None);
        assert!(bounds_product_complete_cycle_path(4, 3, -1).is_err());
        assert!(bounds_product_complete_cycle_path(4, 1, 0).is_err());
    }
}
