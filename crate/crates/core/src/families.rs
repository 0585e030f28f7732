//! Closed forms for γₖᵒ on complete graphs, cycles, paths and complete
//! bipartite graphs.
//!
//! All ceilings and floors round toward ±∞ via [`crate::intmath`], including
//! for negative numerators. Outside a formula's domain the functions return
//! [`Error::NoClosedForm`] or [`Error::KOutOfRange`] instead of extrapolating.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::intmath::{ceil_div, floor_div};

fn count(n: usize) -> i64 {
    n as i64
}

/// ⌈(n+k−1)/2⌉ for n ≥ 2 and 3−n ≤ k ≤ n−1.
pub fn gamma_complete(n: usize, k: i64) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("complete graph needs n ≥ 2, got {n}")));
    }
    let n = count(n);
    if k < 3 - n || k > n - 1 {
        return Err(Error::KOutOfRange { k, lo: 3 - n, hi: n - 1 });
    }
    Ok(ceil_div(n + k - 1, 2) as usize)
}

/// ⌈n/3⌉ for k = 0, ⌈n/2⌉ for k ∈ {1, 2}.
pub fn gamma_cycle(n: usize, k: i64) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n ≥ 3, got {n}")));
    }
    let n = count(n);
    match k {
        0 => Ok(ceil_div(n, 3) as usize),
        1 | 2 => Ok(ceil_div(n, 2) as usize),
        _ => Err(Error::NoClosedForm { family: "cycle", k }),
    }
}

/// ⌈n/3⌉ for k = 0, ⌊n/2⌋+k−1 for k ∈ {1, 2}; k = 2 needs n ≥ 3.
pub fn gamma_path(n: usize, k: i64) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("path needs n ≥ 2, got {n}")));
    }
    let max_deg = if n == 2 { 1 } else { 2 };
    if k > max_deg {
        return Err(Error::KOutOfRange { k, lo: 2 - max_deg, hi: max_deg });
    }
    let n = count(n);
    match k {
        0 => Ok(ceil_div(n, 3) as usize),
        1 | 2 => Ok((floor_div(n, 2) + k - 1) as usize),
        _ => Err(Error::NoClosedForm { family: "path", k }),
    }
}

/// Which of the four complete-bipartite cases applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BipartiteCase {
    /// k ≥ t+1: the larger part.
    LargePart,
    /// k ≤ t and ⌈(r+k)/2⌉+⌈(t+k)/2⌉ ≥ t: the smaller part.
    SmallPart,
    /// −t < k ≤ t and the sum is below t: the sum itself.
    SplitSum,
    /// k ≤ −t and the sum is below t: min{t, 1+⌈(r+k)/2⌉}.
    SplitMin,
}

impl BipartiteCase {
    pub fn label(self) -> char {
        match self {
            BipartiteCase::LargePart => 'a',
            BipartiteCase::SmallPart => 'b',
            BipartiteCase::SplitSum => 'c',
            BipartiteCase::SplitMin => 'd',
        }
    }
}

fn check_bipartite(r: usize, t: usize, k: i64) -> Result<()> {
    if t < 1 || t > r {
        return Err(Error::InvalidParameter(format!("needs 1 ≤ t ≤ r, got r = {r}, t = {t}")));
    }
    let r = count(r);
    if k < 2 - r || k > r {
        return Err(Error::KOutOfRange { k, lo: 2 - r, hi: r });
    }
    Ok(())
}

/// Evaluates every case condition and returns the single one that holds
/// together with its value.
pub fn bipartite_case(r: usize, t: usize, k: i64) -> Result<(BipartiteCase, usize)> {
    check_bipartite(r, t, k)?;
    let (r, t) = (count(r), count(t));
    let half_r = ceil_div(r + k, 2);
    let half_t = ceil_div(t + k, 2);
    let sum = half_r + half_t;
    let candidates = [
        (BipartiteCase::LargePart, k > t, r),
        (BipartiteCase::SmallPart, k <= t && sum >= t, t),
        (BipartiteCase::SplitSum, -t < k && k <= t && sum < t, sum),
        (BipartiteCase::SplitMin, k <= -t && sum < t, t.min(1 + half_r)),
    ];
    let mut fired = candidates.iter().filter(|c| c.1);
    let (case, _, value) = *fired.next().expect("the four cases cover every admissible (r, t, k)");
    assert!(fired.next().is_none(), "cases overlap at r = {r}, t = {t}, k = {k}");
    Ok((case, value as usize))
}

pub fn gamma_complete_bipartite(r: usize, t: usize, k: i64) -> Result<usize> {
    bipartite_case(r, t, k).map(|(_, v)| v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alliances::k_range;
    use crate::generators::*;
    use crate::solvers::Oracle;

    #[test]
    fn formula_examples() {
        assert_eq!(gamma_complete(5, 1), Ok(3));
        assert_eq!(gamma_complete(5, -2), Ok(1));
        assert_eq!(gamma_complete(8, 4), Ok(6));
        assert!(gamma_complete(5, 5).is_err());
        assert!(gamma_complete(5, -3).is_err());

        assert_eq!(gamma_cycle(6, 0), Ok(2));
        assert_eq!(gamma_cycle(7, 1), Ok(4));
        assert_eq!(gamma_cycle(4, 2), Ok(2));
        assert_eq!(gamma_cycle(6, -1), Err(Error::NoClosedForm { family: "cycle", k: -1 }));

        assert_eq!(gamma_path(7, 0), Ok(3));
        assert_eq!(gamma_path(5, 2), Ok(3));
        assert_eq!(gamma_path(5, 1), Ok(2));
        assert_eq!(gamma_path(2, 1), Ok(1));
        assert!(matches!(gamma_path(2, 2), Err(Error::KOutOfRange { .. })));
    }

    #[test]
    fn bipartite_examples() {
        assert_eq!(bipartite_case(5, 2, 3), Ok((BipartiteCase::LargePart, 5)));
        assert_eq!(bipartite_case(3, 3, 0), Ok((BipartiteCase::SmallPart, 3)));
        assert_eq!(bipartite_case(10, 10, -8), Ok((BipartiteCase::SplitSum, 2)));
        assert_eq!(bipartite_case(10, 4, -5), Ok((BipartiteCase::SplitMin, 4)));
        assert!(bipartite_case(2, 3, 0).is_err());
        assert!(bipartite_case(3, 2, 4).is_err());
    }

    #[test]
    fn bipartite_cases_are_exhaustive() {
        for r in 1..=30 {
            for t in 1..=r {
                for k in 2 - r as i64..=r as i64 {
                    bipartite_case(r, t, k).unwrap();
                }
            }
        }
    }

    #[test]
    fn small_families_match_oracle() {
        let oracle = Oracle::default();
        for n in 2..=8 {
            let g = complete(n).unwrap();
            for k in 3 - n as i64..=n as i64 - 1 {
                assert_eq!(gamma_complete(n, k).unwrap(), oracle.gamma_k(&g, k).unwrap().value);
            }
        }
        for n in 3..=9 {
            for k in 0..=2 {
                let c = cycle(n).unwrap();
                assert_eq!(gamma_cycle(n, k).unwrap(), oracle.gamma_k(&c, k).unwrap().value);
                let p = path(n).unwrap();
                assert_eq!(gamma_path(n, k).unwrap(), oracle.gamma_k(&p, k).unwrap().value);
            }
        }
        for r in 1..=4 {
            for t in 1..=r {
                let g = complete_bipartite(r, t).unwrap();
                let (lo, hi) = k_range(&g).unwrap();
                for k in lo..=hi {
                    assert_eq!(
                        gamma_complete_bipartite(r, t, k).unwrap(),
                        oracle.gamma_k(&g, k).unwrap().value,
                        "K_{{{r},{t}}} k = {k}"
                    );
                }
            }
        }
    }
}
