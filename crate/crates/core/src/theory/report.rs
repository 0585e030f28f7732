//! Every applicable bound on γₖᵒ for one (graph, k), gathered through a
//! [`BoundRegistry`] of named [`Bound`]s.

use serde::Serialize;

use super::bounds::{bound_quadratic, bounds_degree, bounds_dependent_sandwich};
use crate::alliances::check_k;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::intmath::floor_div;
use crate::solvers::Oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// Inputs shared by all bounds.
pub struct BoundContext<'a> {
    pub graph: &'a Graph,
    pub k: i64,
    /// Used by bounds that need α_r.
    pub oracle: &'a Oracle,
}

pub trait Bound: Send + Sync {
    fn name(&self) -> &'static str;
    fn kind(&self) -> BoundKind;
    /// Human-readable formula.
    fn formula(&self) -> &'static str;
    /// The bound's value, or [`Error::Inapplicable`] when its hypotheses fail.
    fn evaluate(&self, ctx: &BoundContext<'_>) -> Result<i64>;
}

struct DegreeLower;
struct DegreeUpper;
struct Quadratic;
struct DependentLower;
struct DependentUpper;
struct HalfOrder;

impl Bound for DegreeLower {
    fn name(&self) -> &'static str {
        "degree_lower"
    }
    fn kind(&self) -> BoundKind {
        BoundKind::Lower
    }
    fn formula(&self) -> &'static str {
        "ceil((2m + kn) / (3Δ + k))"
    }
    fn evaluate(&self, ctx: &BoundContext<'_>) -> Result<i64> {
        bounds_degree(ctx.graph, ctx.k).map(|b| b.0)
    }
}

impl Bound for DegreeUpper {
    fn name(&self) -> &'static str {
        "degree_upper"
    }
    fn kind(&self) -> BoundKind {
        BoundKind::Upper
    }
    fn formula(&self) -> &'static str {
        "n - floor((δ - k + 2) / 2)"
    }
    fn evaluate(&self, ctx: &BoundContext<'_>) -> Result<i64> {
        bounds_degree(ctx.graph, ctx.k).map(|b| b.1)
    }
}

impl Bound for Quadratic {
    fn name(&self) -> &'static str {
        "quadratic"
    }
    fn kind(&self) -> BoundKind {
        BoundKind::Lower
    }
    fn formula(&self) -> &'static str {
        "ceil(((n + 2Δ + k) - sqrt((n + 2Δ + k)^2 - 4(2m + kn))) / 2), 2 - δ ≤ k ≤ δ"
    }
    fn evaluate(&self, ctx: &BoundContext<'_>) -> Result<i64> {
        bound_quadratic(ctx.graph, ctx.k)
    }
}

fn alpha(oracle: &Oracle) -> impl Fn(&Graph, i64) -> Result<usize> + '_ {
    move |g, r| oracle.alpha_r(g, r).map(|res| res.value)
}

impl Bound for DependentLower {
    fn name(&self) -> &'static str {
        "dependent_lower"
    }
    fn kind(&self) -> BoundKind {
        BoundKind::Lower
    }
    fn formula(&self) -> &'static str {
        "n - α_{floor((Δ - k) / 2)}"
    }
    fn evaluate(&self, ctx: &BoundContext<'_>) -> Result<i64> {
        bounds_dependent_sandwich(ctx.graph, ctx.k, &alpha(ctx.oracle)).map(|b| b.lower)
    }
}

impl Bound for DependentUpper {
    fn name(&self) -> &'static str {
        "dependent_upper"
    }
    fn kind(&self) -> BoundKind {
        BoundKind::Upper
    }
    fn formula(&self) -> &'static str {
        "n - α_{floor((δ - k) / 2)}, 1 ≤ k ≤ δ"
    }
    fn evaluate(&self, ctx: &BoundContext<'_>) -> Result<i64> {
        let min_deg = ctx.graph.min_degree() as i64;
        if !(1..=min_deg).contains(&ctx.k) {
            return Err(Error::Inapplicable(format!("needs 1 ≤ k ≤ δ = {min_deg}")));
        }
        let b = bounds_dependent_sandwich(ctx.graph, ctx.k, &alpha(ctx.oracle))?;
        Ok(b.upper.expect("k lies in 1..=δ"))
    }
}

impl Bound for HalfOrder {
    fn name(&self) -> &'static str {
        "half_order"
    }
    fn kind(&self) -> BoundKind {
        BoundKind::Upper
    }
    fn formula(&self) -> &'static str {
        "floor(n / 2) for k = 0, δ > 0"
    }
    fn evaluate(&self, ctx: &BoundContext<'_>) -> Result<i64> {
        if ctx.k != 0 {
            return Err(Error::Inapplicable("only for k = 0".into()));
        }
        if ctx.graph.min_degree() == 0 {
            return Err(Error::Inapplicable("needs δ > 0".into()));
        }
        Ok(floor_div(ctx.graph.n() as i64, 2))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub kind: BoundKind,
    pub formula: &'static str,
    pub applicable: bool,
    pub value: Option<i64>,
    /// Why the bound does not apply.
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub k: i64,
    pub entries: Vec<BoundEntry>,
    /// Exact γₖᵒ when the graph is within the oracle cap.
    pub oracle: Option<usize>,
    pub oracle_skipped: Option<String>,
}

impl BoundReport {
    fn applicable(&self, kind: BoundKind) -> impl Iterator<Item = i64> + '_ {
        self.entries.iter().filter(move |e| e.kind == kind).filter_map(|e| e.value)
    }

    pub fn best_lower(&self) -> Option<i64> {
        self.applicable(BoundKind::Lower).max()
    }

    pub fn best_upper(&self) -> Option<i64> {
        self.applicable(BoundKind::Upper).min()
    }

    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Every applicable lower bound is at most every applicable upper bound,
    /// and the oracle value (if any) lies between them.
    pub fn check_consistency(&self) -> Result<()> {
        let lower = self.best_lower();
        let upper = self.best_upper();
        if let (Some(lo), Some(hi)) = (lower, upper) {
            if lo > hi {
                return Err(Error::VerificationFailed(format!("lower bound {lo} exceeds upper bound {hi}")));
            }
        }
        if let Some(exact) = self.oracle {
            let exact = exact as i64;
            for e in &self.entries {
                let Some(v) = e.value else { continue };
                let ok = match e.kind {
                    BoundKind::Lower => v <= exact,
                    BoundKind::Upper => v >= exact,
                };
                if !ok {
                    return Err(Error::VerificationFailed(format!(
                        "{} = {v} contradicts γ = {exact} (k = {})",
                        e.name, self.k
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Bounds by name, in registration order.
pub struct BoundRegistry {
    bounds: Vec<Box<dyn Bound>>,
}

impl BoundRegistry {
    pub fn empty() -> Self {
        Self { bounds: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(DegreeLower));
        reg.register(Box::new(Quadratic));
        reg.register(Box::new(DependentLower));
        reg.register(Box::new(DegreeUpper));
        reg.register(Box::new(DependentUpper));
        reg.register(Box::new(HalfOrder));
        reg
    }

    /// Adds a bound, replacing any with the same name.
    pub fn register(&mut self, bound: Box<dyn Bound>) {
        self.bounds.retain(|b| b.name() != bound.name());
        self.bounds.push(bound);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.bounds.iter().map(|b| b.name()).collect()
    }

    /// Evaluates every bound. Hypothesis failures become inapplicable
    /// entries; only an out-of-range k is an error.
    pub fn report(&self, g: &Graph, k: i64, oracle: &Oracle) -> Result<BoundReport> {
        check_k(g, k)?;
        let ctx = BoundContext { graph: g, k, oracle };
        let mut entries = Vec::with_capacity(self.bounds.len());
        for b in &self.bounds {
            let (value, reason) = match b.evaluate(&ctx) {
                Ok(v) => (Some(v), None),
                Err(Error::Inapplicable(why)) => (None, Some(why)),
                Err(e) => return Err(e),
            };
            entries.push(BoundEntry {
                name: b.name(),
                kind: b.kind(),
                formula: b.formula(),
                applicable: value.is_some(),
                value,
                reason,
            });
        }
        let (exact, skipped) = match oracle.gamma_k(g, k) {
            Ok(r) => (Some(r.value), None),
            Err(Error::OracleCap { n, cap }) => (None, Some(format!("n = {n} exceeds oracle cap {cap}"))),
            Err(e) => return Err(e),
        };
        Ok(BoundReport { k, entries, oracle: exact, oracle_skipped: skipped })
    }
}

impl Default for BoundRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

pub fn bound_report(g: &Graph, k: i64, oracle: &Oracle) -> Result<BoundReport> {
    BoundRegistry::builtin().report(g, k, oracle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn value(r: &BoundReport, name: &str) -> Option<i64> {
        r.get(name).unwrap().value
    }

    #[test]
    fn report_examples() {
        let oracle = Oracle::default();
        let r = bound_report(&hypercube(3).unwrap(), 2, &oracle).unwrap();
        assert_eq!(value(&r, "quadratic"), Some(4));
        assert_eq!(value(&r, "degree_lower"), Some(4));
        assert_eq!(value(&r, "degree_upper"), Some(7));
        assert_eq!(r.oracle, Some(4));
        r.check_consistency().unwrap();

        let r = bound_report(&complete(5).unwrap(), 1, &oracle).unwrap();
        assert_eq!((value(&r, "quadratic"), r.oracle), (Some(3), Some(3)));

        let r = bound_report(&cycle(6).unwrap(), 0, &oracle).unwrap();
        assert_eq!((value(&r, "degree_lower"), r.oracle), (Some(2), Some(2)));
        assert_eq!(value(&r, "half_order"), Some(3));
        assert!(!r.get("dependent_upper").unwrap().applicable);

        let r = bound_report(&cycle(30).unwrap(), 0, &oracle).unwrap();
        assert_eq!(r.oracle, None);
        assert!(r.oracle_skipped.is_some());
        assert!(!r.get("dependent_lower").unwrap().applicable);
        r.check_consistency().unwrap();

        assert!(bound_report(&cycle(5).unwrap(), 3, &oracle).is_err());
    }

    #[test]
    fn registry_replaces_by_name() {
        let mut reg = BoundRegistry::builtin();
        let before = reg.names().len();
        reg.register(Box::new(Quadratic));
        assert_eq!(reg.names().len(), before);
        assert_eq!(*reg.names().last().unwrap(), "quadratic");
    }
}
