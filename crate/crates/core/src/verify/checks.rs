//! Built-in corpus checks.

use super::{ensure, FnCheck, Instance, Outcome};
use crate::alliances::{
    is_global_offensive_k_alliance, is_offensive_k_alliance, is_r_dependent, is_tau_dominating, k_range,
    meets_global_condition, meets_offensive_condition, AllianceQuery, Rational,
};
use crate::error::{Error, Result};
use crate::generators::{complete, complete_bipartite, cycle, path};
use crate::graph::{product_set, Graph, VertexSet};
use crate::intmath::floor_div;
use crate::solvers::{BranchAndBound, Greedy, Oracle, Solver};
use crate::theory::{
    alliance_to_dependent, bound_line_graph, bound_p_induced, bound_report, bounds_dependent_sandwich,
    check_dominating_thresholds, complement_alliance_check, dependent_complement_transfer, dominates_in_complement,
    minimal_implies_complement_dominating, product_global_construct, product_global_project,
    product_offensive_construct, product_offensive_project, regular_dependence_equivalence,
    regular_product_equivalence, sum_bound_holds, tau_thresholds,
};

pub(super) fn builtin() -> Vec<FnCheck> {
    vec![
        FnCheck {
            name: "monotonicity",
            statement: "γ(Γ) ≤ γₖᵒ ≤ γₖ₊₁ᵒ and aₖᵒ ≤ γₖᵒ",
            run: monotonicity,
        },
        FnCheck {
            name: "parity_collapse",
            statement: "all degrees even: γ₂ₗ₋₁ᵒ = γ₂ₗᵒ; all degrees odd: γ₂ₗᵒ = γ₂ₗ₊₁ᵒ",
            run: parity_collapse,
        },
        FnCheck {
            name: "dependent_complement",
            statement: "S r-dependent, r ≤ ⌊(δ−1)/2⌋ ⇒ S̄ global offensive (δ−2r)-alliance",
            run: dependent_complement,
        },
        FnCheck {
            name: "alliance_complement_dependent",
            statement: "S global offensive k-alliance ⇒ S̄ is ⌊(Δ−k)/2⌋-dependent",
            run: alliance_complement_dependent,
        },
        FnCheck {
            name: "regular_dependence_iff",
            statement: "δ-regular: S r-dependent ⇔ S̄ global offensive (δ−2r)-alliance",
            run: regular_dependence_iff,
        },
        FnCheck {
            name: "dependent_sandwich",
            statement: "n − α_⌊(Δ−k)/2⌋ ≤ γₖᵒ ≤ n − α_⌊(δ−k)/2⌋, equal on regular graphs",
            run: dependent_sandwich,
        },
        FnCheck {
            name: "alliance_is_tau_dominating",
            statement: "global offensive k-alliance ⇒ τ-dominating for 0 < τ ≤ min{(k+δ)/2δ, (k+Δ)/2Δ}",
            run: alliance_is_tau_dominating,
        },
        FnCheck {
            name: "tau_dominating_is_alliance",
            statement: "τ-dominating with max{(k+δ)/2δ, (k+Δ)/2Δ} ≤ τ ≤ 1 ⇒ global offensive k-alliance",
            run: tau_dominating_is_alliance,
        },
        FnCheck {
            name: "sum_bound",
            statement: "2−Δ ≤ j ≤ 0, kΔ ≤ −jδ ⇒ γₖᵒ + γⱼᵒ ≤ n",
            run: sum_bound,
        },
        FnCheck { name: "half_order", statement: "δ > 0 ⇒ γ₀ᵒ ≤ n/2", run: half_order },
        FnCheck {
            name: "tau_pair_sum",
            statement: "γ_τ + γ_{1−τ} ≤ n for τ ∈ {1/4, 1/3, 1/2}",
            run: tau_pair_sum,
        },
        FnCheck {
            name: "minimal_complement_dominates",
            statement: "k ≤ 1, δ > 0, S minimal global offensive k-alliance ⇒ S̄ dominating",
            run: minimal_complement_dominates,
        },
        FnCheck {
            name: "complement_inequality",
            statement: "S dominating in Γ̄: global offensive k-alliance in Γ̄ ⇔ δ_S − δ_S̄ + n + k − 1 ≤ 2|S| on S̄",
            run: complement_inequality,
        },
        FnCheck {
            name: "dominating_thresholds",
            statement: "dominating sets of size ≥ ⌈(n+k+Δ−1)/2⌉ in Γ̄ and ≥ ⌈(2n+k−δ−2)/2⌉ in Γ are global offensive k-alliances",
            run: dominating_thresholds,
        },
        FnCheck {
            name: "product_offensive",
            statement: "Sᵢ offensive kᵢ-alliances ⇒ S₁×S₂ offensive min{k₂−Δ₁, k₁−Δ₂}-alliance, and the factor projection",
            run: product_offensive,
        },
        FnCheck {
            name: "product_global",
            statement: "S global offensive k-alliance ⇔ projection of S×V₂ with thresholds k−Δ₂ and k+δ₂",
            run: product_global,
        },
        FnCheck {
            name: "product_regular_iff",
            statement: "Γ₂ δ-regular: S global offensive k-alliance ⇔ S×V₂ global offensive (k−δ)-alliance",
            run: product_regular_iff,
        },
        FnCheck {
            name: "product_numbers",
            statement: "γ_{k−Δ₂}ᵒ(Γ₁×Γ₂) ≤ n₂γₖᵒ(Γ₁) and aₖᵒ(Γ₁×Γ₂) ≤ a_{k₁}ᵒ(Γ₁)a_{k₂}ᵒ(Γ₂)",
            run: product_numbers,
        },
        FnCheck {
            name: "line_graph_bound",
            statement: "γₖᵒ(L(Γ)) ≥ ⌈(Σδᵢ² + m(k−2)) / (3(δ₁+δ₂−2)+k)⌉",
            run: line_graph_bound,
        },
        FnCheck {
            name: "p_induced_bound",
            statement: "S global offensive k-alliance, δ(⟨S̄⟩) = p ⇒ |S| ≥ ⌈(p+k)n/(Δ+p+k)⌉",
            run: p_induced_bound,
        },
        FnCheck {
            name: "bound_soundness",
            statement: "every applicable bound brackets the exact γₖᵒ",
            run: bound_soundness,
        },
        FnCheck {
            name: "solver_agreement",
            statement: "branch and bound matches the oracle exactly; greedy is feasible and no better",
            run: solver_agreement,
        },
    ]
}

fn set(g: &Graph, mask: u64) -> VertexSet {
    VertexSet::from_mask(g.n(), mask)
}

fn monotonicity(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let p = &inst.profile;
    let mut checked = 0;
    for k in p.ks() {
        let g = p.gamma(k).value;
        ensure(g >= p.domination, || format!("γ_{k} = {g} < γ = {}", p.domination))?;
        ensure(g >= p.a(k).value, || format!("γ_{k} = {g} < a_{k} = {}", p.a(k).value))?;
        if k < p.k_hi {
            let next = p.gamma(k + 1).value;
            ensure(next >= g, || format!("γ_{} = {next} < γ_{k} = {g}", k + 1))?;
        }
        checked += 3;
    }
    Ok(Outcome::Checked(checked))
}

fn parity_collapse(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let g = &inst.graph;
    let p = &inst.profile;
    let parity = if g.degrees().all(|d| d % 2 == 0) {
        1
    } else if g.degrees().all(|d| d % 2 == 1) {
        0
    } else {
        return Ok(Outcome::Skipped("degrees of mixed parity".into()));
    };
    // pairs (k, k+1) with k ≡ parity mod 2 collapse
    let mut checked = 0;
    for k in p.ks() {
        if k.rem_euclid(2) == parity && k < p.k_hi {
            let (a, b) = (p.gamma(k).value, p.gamma(k + 1).value);
            ensure(a == b, || format!("γ_{k} = {a} ≠ γ_{} = {b}", k + 1))?;
            checked += 1;
        }
    }
    Ok(Outcome::Checked(checked))
}

fn max_r(g: &Graph) -> i64 {
    floor_div(g.min_degree() as i64 - 1, 2)
}

fn dependent_complement(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let g = &inst.graph;
    if max_r(g) < 0 {
        return Ok(Outcome::Skipped("δ = 0".into()));
    }
    let mut checked = 0;
    for r in 0..=max_r(g) {
        for mask in 0..1u64 << g.n() {
            let s = set(g, mask);
            if is_r_dependent(g, &s, r)? {
                dependent_complement_transfer(g, &s, r)?;
                checked += 1;
            }
        }
    }
    Ok(Outcome::Checked(checked))
}

fn alliance_complement_dependent(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let (g, p) = (&inst.graph, &inst.profile);
    let mut checked = 0;
    for k in p.ks() {
        for mask in p.masks().filter(|&m| p.global(m, k)) {
            alliance_to_dependent(g, &set(g, mask), k)?;
            checked += 1;
        }
    }
    Ok(Outcome::Checked(checked))
}

fn regular_dependence_iff(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let g = &inst.graph;
    if !g.is_regular() || g.min_degree() == 0 {
        return Ok(Outcome::Skipped("not regular with δ > 0".into()));
    }
    let mut checked = 0;
    for r in 0..=max_r(g) {
        for mask in 0..1u64 << g.n() {
            let s = set(g, mask);
            ensure(regular_dependence_equivalence(g, &s, r)?, || {
                format!("r-dependence of {s:?} and alliance status of its complement disagree (r = {r})")
            })?;
            checked += 1;
        }
    }
    Ok(Outcome::Checked(checked))
}

fn dependent_sandwich(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let (g, p) = (&inst.graph, &inst.profile);
    let alpha = |_: &Graph, r: i64| Ok(p.alpha.get(r as usize).copied().unwrap_or(g.n()));
    let regular = g.is_regular() && g.min_degree() > 0;
    let mut checked = 0;
    for k in p.ks() {
        let b = bounds_dependent_sandwich(g, k, &alpha)?;
        let exact = p.gamma(k).value as i64;
        ensure(b.lower <= exact, || format!("lower {} > γ_{k} = {exact}", b.lower))?;
        checked += 1;
        if let Some(upper) = b.upper {
            ensure(exact <= upper, || format!("upper {upper} < γ_{k} = {exact}"))?;
            checked += 1;
            if regular {
                ensure(b.lower == upper, || format!("regular graph: lower {} ≠ upper {upper} at k = {k}", b.lower))?;
                checked += 1;
            }
        }
    }
    Ok(Outcome::Checked(checked))
}

/// All p/q with 1 ≤ p ≤ q ≤ `max_den`, ascending and deduplicated.
fn tau_grid(max_den: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=max_den).flat_map(|q| (1..=q).map(move |p| Rational::new(p, q))).collect();
    out.sort();
    out.dedup();
    out
}

fn alliance_is_tau_dominating(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let (g, p) = (&inst.graph, &inst.profile);
    if g.min_degree() == 0 {
        return Ok(Outcome::Skipped("isolated vertex".into()));
    }
    let grid = tau_grid(2 * g.max_degree() as i64);
    let mut checked = 0;
    for k in p.ks() {
        let t = tau_thresholds(g, k)?;
        let taus: Vec<Rational> = grid.iter().copied().filter(|&tau| t.alliance_implies_tau(tau)).collect();
        for mask in p.masks().filter(|&m| p.global(m, k)) {
            let s = set(g, mask);
            for &tau in &taus {
                ensure(is_tau_dominating(g, &s, tau)?, || {
                    format!("global offensive {k}-alliance {s:?} is not {tau}-dominating")
                })?;
                checked += 1;
            }
        }
    }
    Ok(Outcome::Checked(checked))
}

fn tau_dominating_is_alliance(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let (g, p) = (&inst.graph, &inst.profile);
    if g.min_degree() == 0 {
        return Ok(Outcome::Skipped("isolated vertex".into()));
    }
    let grid = tau_grid(2 * g.max_degree() as i64);
    let mut checked = 0;
    for k in p.ks() {
        let t = tau_thresholds(g, k)?;
        let mut taus: Vec<Rational> = grid.iter().copied().filter(|&tau| t.tau_implies_alliance(tau)).collect();
        if t.tau_implies_alliance(t.high) && !taus.contains(&t.high) {
            taus.push(t.high);
        }
        for &tau in &taus {
            for mask in p.masks() {
                let s = set(g, mask);
                if is_tau_dominating(g, &s, tau)? {
                    ensure(is_global_offensive_k_alliance(g, &s, k)?, || {
                        format!("{tau}-dominating {s:?} is not a global offensive {k}-alliance")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(Outcome::Checked(checked))
}

fn sum_bound(inst: &Instance, oracle: &Oracle) -> Result<Outcome> {
    let g = &inst.graph;
    let (min_deg, max_deg) = (g.min_degree() as i64, g.max_degree() as i64);
    if min_deg == 0 || max_deg < 2 {
        return Ok(Outcome::Skipped("needs δ > 0 and Δ ≥ 2".into()));
    }
    let mut checked = 0;
    for j in 2 - max_deg..=0 {
        for k in 2 - max_deg..=max_deg {
            if k * max_deg > -j * min_deg {
                continue;
            }
            ensure(sum_bound_holds(g, j, k, oracle)?, || {
                format!(
                    "γ_{k} + γ_{j} > n (γ_{k} = {}, γ_{j} = {})",
                    inst.profile.gamma(k).value,
                    inst.profile.gamma(j).value
                )
            })?;
            checked += 1;
        }
    }
    Ok(Outcome::Checked(checked))
}

fn half_order(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let (g, p) = (&inst.graph, &inst.profile);
    if g.min_degree() == 0 || !p.ks().contains(&0) {
        return Ok(Outcome::Skipped("needs δ > 0 and k = 0 in range".into()));
    }
    let v = p.gamma(0).value;
    ensure(2 * v <= g.n(), || format!("γ₀ = {v} > n/2"))?;
    Ok(Outcome::Checked(1))
}

fn tau_pair_sum(inst: &Instance, oracle: &Oracle) -> Result<Outcome> {
    let g = &inst.graph;
    if g.min_degree() == 0 {
        return Ok(Outcome::Skipped("isolated vertex".into()));
    }
    let mut checked = 0;
    for tau in [Rational::new(1, 4), Rational::new(1, 3), Rational::new(1, 2)] {
        let a = oracle.gamma_tau(g, tau)?.value;
        let b = oracle.gamma_tau(g, Rational::from_integer(1) - tau)?.value;
        ensure(a + b <= g.n(), || format!("γ_{tau} + γ_{} = {} > n", Rational::from_integer(1) - tau, a + b))?;
        checked += 1;
    }
    Ok(Outcome::Checked(checked))
}

fn minimal_complement_dominates(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let (g, p) = (&inst.graph, &inst.profile);
    if g.min_degree() == 0 {
        return Ok(Outcome::Skipped("isolated vertex".into()));
    }
    let mut checked = 0;
    for k in p.ks().filter(|&k| k <= 1) {
        for mask in p.masks().filter(|&m| p.global(m, k)) {
            // skip quickly when a proper submask is already an alliance
            let mut sub = (mask - 1) & mask;
            let mut minimal = true;
            while sub != 0 {
                if p.global(sub, k) {
                    minimal = false;
                    break;
                }
                sub = (sub - 1) & mask;
            }
            if !minimal {
                continue;
            }
            let s = set(g, mask);
            ensure(minimal_implies_complement_dominating(g, &s, k)?, || {
                format!("complement of minimal global offensive {k}-alliance {s:?} does not dominate")
            })?;
            checked += 1;
        }
    }
    Ok(Outcome::Checked(checked))
}

fn complement_inequality(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let g = &inst.graph;
    let comp = g.complement();
    let n = g.n() as i64;
    let mut checked = 0;
    for mask in 1..1u64 << g.n() {
        let s = set(g, mask);
        if !dominates_in_complement(g, &s) {
            continue;
        }
        for k in -n..=n {
            let inequality = complement_alliance_check(g, &s, k)?;
            let direct = meets_global_condition(&comp, &s, k);
            ensure(inequality == direct, || format!("{s:?}, k = {k}: inequality form {inequality}, direct {direct}"))?;
            checked += 1;
        }
    }
    Ok(Outcome::Checked(checked))
}

fn dominating_thresholds(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let mut checked = 0;
    for k in inst.profile.ks() {
        checked += check_dominating_thresholds(&inst.graph, k)?;
    }
    Ok(Outcome::Checked(checked))
}

/// Product partners; only pairs with at most this many product vertices run.
const PRODUCT_LIMIT: usize = 16;

fn partners() -> Vec<Graph> {
    [complete(2), path(3), complete(3), cycle(4), complete(4), path(4), complete_bipartite(3, 1)]
        .into_iter()
        .collect::<Result<_>>()
        .expect("fixed partner graphs are valid")
}

/// (Γ₁, Γ₂) pairs with the instance as either factor.
fn product_pairs(g: &Graph) -> Vec<(Graph, Graph)> {
    let mut out = Vec::new();
    for h in partners() {
        if g.n() * h.n() <= PRODUCT_LIMIT {
            out.push((g.clone(), h.clone()));
            out.push((h, g.clone()));
        }
    }
    out
}

fn skip_if_no_pairs(pairs: &[(Graph, Graph)]) -> Option<Outcome> {
    pairs.is_empty().then(|| Outcome::Skipped(format!("no partner keeps the product within {PRODUCT_LIMIT} vertices")))
}

fn nonempty_sets(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    (1..1u64 << g.n()).map(move |m| set(g, m))
}

fn product_offensive(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let pairs = product_pairs(&inst.graph);
    if let Some(skip) = skip_if_no_pairs(&pairs) {
        return Ok(skip);
    }
    let mut checked = 0;
    for (g1, g2) in &pairs {
        let prod = g1.cartesian_product(g2);
        let (lo1, hi1) = k_range(g1)?;
        let (lo2, hi2) = k_range(g2)?;
        let (lo, hi) = k_range(&prod)?;
        for s1 in nonempty_sets(g1) {
            for s2 in nonempty_sets(g2) {
                for k1 in lo1..=hi1 {
                    if !is_offensive_k_alliance(g1, &s1, k1)? {
                        continue;
                    }
                    for k2 in lo2..=hi2 {
                        if is_offensive_k_alliance(g2, &s2, k2)? {
                            product_offensive_construct(g1, &s1, k1, g2, &s2, k2)?;
                            checked += 1;
                        }
                    }
                }
                let x = product_set(&s1, &s2);
                for k in lo..=hi {
                    if meets_offensive_condition(&prod, &x, k) {
                        product_offensive_project(g1, &s1, g2, &s2, k)?;
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(Outcome::Checked(checked))
}

fn product_global(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let pairs = product_pairs(&inst.graph);
    if let Some(skip) = skip_if_no_pairs(&pairs) {
        return Ok(skip);
    }
    let mut checked = 0;
    for (g1, g2) in &pairs {
        let prod = g1.cartesian_product(g2);
        let (lo1, hi1) = k_range(g1)?;
        let (lo, hi) = k_range(&prod)?;
        let full2 = VertexSet::full(g2.n());
        for s in nonempty_sets(g1) {
            for k in lo1..=hi1 {
                if is_global_offensive_k_alliance(g1, &s, k)? {
                    product_global_construct(g1, &s, k, g2)?;
                    checked += 1;
                }
            }
            let x = product_set(&s, &full2);
            for k in lo..=hi {
                if meets_global_condition(&prod, &x, k) {
                    product_global_project(g1, g2, &x, k)?;
                    checked += 1;
                }
            }
        }
    }
    Ok(Outcome::Checked(checked))
}

fn product_regular_iff(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let pairs: Vec<_> = product_pairs(&inst.graph).into_iter().filter(|(_, g2)| g2.is_regular()).collect();
    if let Some(skip) = skip_if_no_pairs(&pairs) {
        return Ok(skip);
    }
    let mut checked = 0;
    for (g1, g2) in &pairs {
        let (lo1, hi1) = k_range(g1)?;
        for s in nonempty_sets(g1) {
            for k in lo1..=hi1 {
                ensure(regular_product_equivalence(g1, &s, k, g2)?, || {
                    format!("{s:?}, k = {k}: factor and product alliance status disagree")
                })?;
                checked += 1;
            }
        }
    }
    Ok(Outcome::Checked(checked))
}

fn product_numbers(inst: &Instance, oracle: &Oracle) -> Result<Outcome> {
    let pairs = product_pairs(&inst.graph);
    if let Some(skip) = skip_if_no_pairs(&pairs) {
        return Ok(skip);
    }
    let mut checked = 0;
    for (g1, g2) in &pairs {
        let prod = g1.cartesian_product(g2);
        let (lo1, hi1) = k_range(g1)?;
        let (lo2, hi2) = k_range(g2)?;
        let (lo, _) = k_range(&prod)?;
        let big2 = g2.max_degree() as i64;
        for k in lo1..=hi1 {
            let lhs = oracle.gamma_k(&prod, k - big2)?.value;
            let rhs = g2.n() * oracle.gamma_k(g1, k)?.value;
            ensure(lhs <= rhs, || format!("γ_{}(Γ₁×Γ₂) = {lhs} > n₂γ_{k}(Γ₁) = {rhs}", k - big2))?;
            checked += 1;
        }
        // aₖ is non-decreasing in k, so the largest admissible k is the binding one
        let a1: Vec<usize> = (lo1..=hi1).map(|k| oracle.a_k(g1, k).map(|r| r.value)).collect::<Result<_>>()?;
        let a2: Vec<usize> = (lo2..=hi2).map(|k| oracle.a_k(g2, k).map(|r| r.value)).collect::<Result<_>>()?;
        for k1 in lo1..=hi1 {
            for k2 in lo2..=hi2 {
                let k = (k1 - big2).min(k2 - g1.max_degree() as i64);
                if k < lo {
                    continue;
                }
                let lhs = oracle.a_k(&prod, k)?.value;
                let rhs = a1[(k1 - lo1) as usize] * a2[(k2 - lo2) as usize];
                ensure(lhs <= rhs, || format!("a_{k}(Γ₁×Γ₂) = {lhs} > a_{k1}·a_{k2} = {rhs}"))?;
                checked += 1;
            }
        }
    }
    Ok(Outcome::Checked(checked))
}

/// Exact γₖᵒ, by oracle within its cap and by branch and bound beyond.
fn exact_gamma(g: &Graph, k: i64, oracle: &Oracle) -> Result<usize> {
    let q = AllianceQuery::global(g, k)?;
    if oracle.admits(g) {
        oracle.solve(&q).map(|r| r.value)
    } else {
        BranchAndBound::new().solve(&q).map(|r| r.value)
    }
}

fn line_graph_bound(inst: &Instance, oracle: &Oracle) -> Result<Outcome> {
    let g = &inst.graph;
    let lg = g.line_graph()?;
    let Ok((lo, hi)) = k_range(&lg) else {
        return Ok(Outcome::Skipped("line graph has no edges".into()));
    };
    let mut checked = 0;
    for k in lo..=hi {
        let bound = match bound_line_graph(g, k) {
            Ok(b) => b,
            Err(Error::Inapplicable(_)) => continue,
            Err(e) => return Err(e),
        };
        let exact = exact_gamma(&lg, k, oracle)? as i64;
        ensure(bound <= exact, || format!("bound {bound} > γ_{k}(L(Γ)) = {exact}"))?;
        checked += 1;
    }
    Ok(Outcome::Checked(checked))
}

fn p_induced_bound(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let (g, p) = (&inst.graph, &inst.profile);
    let full = (1u64 << g.n()) - 1;
    let mut checked = 0;
    for k in p.ks() {
        for mask in p.masks().filter(|&m| m != full && p.global(m, k)) {
            let s = set(g, mask);
            let bound = bound_p_induced(g, &s, k)?;
            ensure(bound <= s.len() as i64, || format!("bound {bound} > |S| for {s:?}, k = {k}"))?;
            checked += 1;
        }
    }
    Ok(Outcome::Checked(checked))
}

fn bound_soundness(inst: &Instance, oracle: &Oracle) -> Result<Outcome> {
    let mut checked = 0;
    for k in inst.profile.ks() {
        let report = bound_report(&inst.graph, k, oracle)?;
        report.check_consistency()?;
        checked += report.entries.iter().filter(|e| e.applicable).count() as u64;
    }
    Ok(Outcome::Checked(checked))
}

fn solver_agreement(inst: &Instance, _: &Oracle) -> Result<Outcome> {
    let (g, p) = (&inst.graph, &inst.profile);
    let mut checked = 0;
    for k in p.ks() {
        for global in [true, false] {
            let q = AllianceQuery::new(g, k, global)?;
            let exact = if global { p.gamma(k) } else { p.a(k) };
            let b = BranchAndBound::new().solve(&q)?;
            ensure(b.value == exact.value && b.witness == exact.witness, || {
                format!("k = {k}, global = {global}: bnb {:?} vs oracle {:?}", b.witness, exact.witness)
            })?;
            let gr = Greedy.solve(&q)?;
            ensure(q.accepts(&gr.witness)? && gr.value >= exact.value, || {
                format!("k = {k}, global = {global}: greedy {:?} infeasible or below optimum", gr.witness)
            })?;
            checked += 2;
        }
    }
    Ok(Outcome::Checked(checked))
}
