use super::{Method, SolveResult, Solver};
use crate::alliances::{check_k, AllianceQuery};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::intmath::ceil_div;

/// Builds a global offensive k-alliance by repeatedly adding the vertex that
/// removes the most total violation, ties to the smaller index.
///
/// The violation of v ∉ S is `max(0, req(v) − δ_S(v))` with
/// `req(v) = max(1, ⌈(δ(v) + k)/2⌉)`. Any violated vertex removes its own
/// violation when added, so every step makes progress and the loop ends at
/// S = V at worst. The result is global, hence also a valid (non-global)
/// offensive alliance.
#[derive(Clone, Copy, Debug, Default)]
pub struct Greedy;

pub(crate) fn greedy_global(g: &Graph, k: i64) -> (VertexSet, u64) {
    let n = g.n();
    let req: Vec<i64> = g.degrees().map(|d| ceil_div(d as i64 + k, 2).max(1)).collect();
    let mut inside = vec![0i64; n];
    let mut s = VertexSet::empty(n);
    let mut steps = 0;
    let viol = |v: usize, inside: &[i64]| (req[v] - inside[v]).max(0);
    loop {
        let mut best: Option<(i64, usize)> = None;
        for u in (0..n).filter(|&u| !s.contains(u)) {
            let gain = viol(u, &inside)
                + g.neighbors(u).iter().filter(|&&w| !s.contains(w) && viol(w, &inside) > 0).count() as i64;
            if best.is_none_or(|(b, _)| gain > b) {
                best = Some((gain, u));
            }
        }
        match best {
            Some((gain, u)) if gain > 0 => {
                s.insert(u);
                steps += 1;
                for &w in g.neighbors(u) {
                    inside[w] += 1;
                }
            }
            // req ≥ 1 everywhere, so S = ∅ is never violation-free
            _ => return (s, steps),
        }
    }
}

impl Solver for Greedy {
    fn name(&self) -> &'static str {
        "greedy"
    }

    fn is_exact(&self) -> bool {
        false
    }

    fn solve(&self, q: &AllianceQuery<'_>) -> Result<SolveResult> {
        check_k(q.graph, q.k)?;
        let (s, steps) = greedy_global(q.graph, q.k);
        Ok(SolveResult::new(s, steps, Method::Greedy))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alliances::is_global_offensive_k_alliance;
    use crate::generators::{complete, cycle, hypercube, random_gnp};
    use crate::solvers::Oracle;

    #[test]
    fn greedy_examples() {
        let k2 = complete(2).unwrap();
        assert_eq!(Greedy.solve(&AllianceQuery::global(&k2, 1).unwrap()).unwrap().value, 1);

        let q3 = hypercube(3).unwrap();
        let r = Greedy.solve(&AllianceQuery::global(&q3, 3).unwrap()).unwrap();
        assert!((4..=8).contains(&r.value));

        let c6 = cycle(6).unwrap();
        let r = Greedy.solve(&AllianceQuery::global(&c6, 0).unwrap()).unwrap();
        assert!(r.value >= 2);
        assert_eq!(r.method, Method::Greedy);
    }

    #[test]
    fn greedy_is_feasible_upper_bound() {
        let oracle = Oracle::default();
        for seed in 0..40 {
            let g = random_gnp(8, 0.4, seed).unwrap();
            let Ok((lo, hi)) = crate::alliances::k_range(&g) else { continue };
            for k in lo..=hi {
                let r = Greedy.solve(&AllianceQuery::global(&g, k).unwrap()).unwrap();
                assert!(is_global_offensive_k_alliance(&g, &r.witness, k).unwrap());
                assert!(r.value >= oracle.gamma_k(&g, k).unwrap().value);
            }
        }
    }
}
