//! Machine checks of the bounds, dualities and constructions in
//! [`crate::theory`] and the closed forms in [`crate::families`], run against
//! exhaustive search on small graphs.
//!
//! A [`TheoremCheck`] is evaluated on one corpus [`Instance`] at a time;
//! checks live in a [`CheckRegistry`] and are selected by name. Family and
//! single-case checks live in [`cases`]. Instances run in parallel, but the
//! verdict list is always ordered by instance id, then by check name.

pub mod cases;
mod checks;
pub mod corpus;

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::alliances::{dominates, k_range, offensive_slack};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{Oracle, SolveResult};

pub use corpus::{CorpusSpec, Instance};

/// Largest order for which per-subset tables are built.
pub const PROFILE_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// Computed value differs from a published claim, while every inequality
    /// that is actually asserted holds.
    Discrepancy,
    Skipped,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Discrepancy => "discrepancy-check",
            Status::Skipped => "skipped",
            Status::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub instance: String,
    pub status: Status,
    /// Number of individual assertions evaluated.
    pub checked: u64,
    pub detail: Option<String>,
}

impl Verdict {
    pub fn pass(check: &str, instance: &str, checked: u64) -> Self {
        Self { check: check.into(), instance: instance.into(), status: Status::Pass, checked, detail: None }
    }

    pub fn with_status(check: &str, instance: &str, status: Status, checked: u64, detail: String) -> Self {
        Self { check: check.into(), instance: instance.into(), status, checked, detail: Some(detail) }
    }

    fn from_outcome(check: &str, instance: &str, outcome: Result<Outcome>) -> Self {
        match outcome {
            Ok(Outcome::Checked(n)) => Self::pass(check, instance, n),
            Ok(Outcome::Skipped(why)) => Self::with_status(check, instance, Status::Skipped, 0, why),
            Err(e) => Self::with_status(check, instance, Status::Fail, 0, e.to_string()),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} checked={}", self.status, self.check, self.instance, self.checked)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

/// What a check returns when its hypotheses are met or not met. A falsified
/// conclusion is an `Err`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Checked(u64),
    Skipped(String),
}

pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::VerificationFailed(msg()))
    }
}

/// Oracle data about one graph, computed once and shared by all checks.
pub struct Profile {
    pub k_lo: i64,
    pub k_hi: i64,
    gamma: Vec<SolveResult>,
    a: Vec<SolveResult>,
    pub domination: usize,
    /// α_r for r = 0..=Δ.
    pub alpha: Vec<usize>,
    /// Offensive slack of every nonzero mask, indexed by mask.
    slack: Vec<Option<i64>>,
    dominating: Vec<bool>,
}

impl Profile {
    pub fn new(g: &Graph, oracle: &Oracle) -> Result<Self> {
        let n = g.n();
        if n > PROFILE_LIMIT {
            return Err(Error::OracleCap { n, cap: PROFILE_LIMIT });
        }
        let (k_lo, k_hi) = k_range(g)?;
        let mut gamma = Vec::new();
        let mut a = Vec::new();
        for k in k_lo..=k_hi {
            gamma.push(oracle.gamma_k(g, k)?);
            a.push(oracle.a_k(g, k)?);
        }
        let alpha =
            (0..=g.max_degree() as i64).map(|r| oracle.alpha_r(g, r).map(|s| s.value)).collect::<Result<_>>()?;
        let mut slack = vec![None; 1 << n];
        let mut dominating = vec![false; 1 << n];
        for mask in 1..1u64 << n {
            let s = VertexSet::from_mask(n, mask);
            slack[mask as usize] = offensive_slack(g, &s);
            dominating[mask as usize] = dominates(g, &s);
        }
        Ok(Self { k_lo, k_hi, gamma, a, domination: oracle.domination(g)?.value, alpha, slack, dominating })
    }

    pub fn ks(&self) -> std::ops::RangeInclusive<i64> {
        self.k_lo..=self.k_hi
    }

    pub fn gamma(&self, k: i64) -> &SolveResult {
        &self.gamma[(k - self.k_lo) as usize]
    }

    pub fn a(&self, k: i64) -> &SolveResult {
        &self.a[(k - self.k_lo) as usize]
    }

    /// Offensive k-alliance test from the table, for any integer k.
    pub fn offensive(&self, mask: u64, k: i64) -> bool {
        mask != 0 && self.slack[mask as usize].is_none_or(|s| s >= k)
    }

    pub fn global(&self, mask: u64, k: i64) -> bool {
        self.offensive(mask, k) && self.dominating[mask as usize]
    }

    pub fn dominating(&self, mask: u64) -> bool {
        mask != 0 && self.dominating[mask as usize]
    }

    /// Nonzero masks over the graph's vertices.
    pub fn masks(&self) -> std::ops::Range<u64> {
        1..self.slack.len() as u64
    }
}

pub trait TheoremCheck: Send + Sync {
    /// Registry key.
    fn name(&self) -> &'static str;
    /// One-line statement of what is checked.
    fn statement(&self) -> &'static str;
    fn check(&self, inst: &Instance, oracle: &Oracle) -> Result<Outcome>;
}

/// A check backed by a plain function.
pub struct FnCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub run: fn(&Instance, &Oracle) -> Result<Outcome>,
}

impl TheoremCheck for FnCheck {
    fn name(&self) -> &'static str {
        self.name
    }

    fn statement(&self) -> &'static str {
        self.statement
    }

    fn check(&self, inst: &Instance, oracle: &Oracle) -> Result<Outcome> {
        (self.run)(inst, oracle)
    }
}

/// Checks by name, in registration order.
pub struct CheckRegistry {
    checks: Vec<Box<dyn TheoremCheck>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        Self { checks: Vec::new() }
    }

    pub fn builtin() -> Self {
        let mut reg = Self::empty();
        for c in checks::builtin() {
            reg.register(Box::new(c));
        }
        reg
    }

    /// Adds a check, replacing any with the same name.
    pub fn register(&mut self, check: Box<dyn TheoremCheck>) {
        self.checks.retain(|c| c.name() != check.name());
        self.checks.push(check);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn get(&self, name: &str) -> Option<&dyn TheoremCheck> {
        self.checks.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    /// Keeps only the named checks; unknown names are an error.
    pub fn select(mut self, names: &[&str]) -> Result<Self> {
        if let Some(bad) = names.iter().find(|n| self.get(n).is_none()) {
            return Err(Error::InvalidParameter(format!("unknown check `{bad}`")));
        }
        self.checks.retain(|c| names.contains(&c.name()));
        Ok(self)
    }

    /// Runs every check on every instance, in parallel over instances.
    pub fn run(&self, instances: &[Instance], oracle: &Oracle) -> Vec<Verdict> {
        let mut verdicts: Vec<Verdict> = instances
            .par_iter()
            .flat_map_iter(|inst| {
                self.checks
                    .iter()
                    .map(|c| Verdict::from_outcome(c.name(), &inst.id, c.check(inst, oracle)))
                    .collect::<Vec<_>>()
            })
            .collect();
        verdicts.sort_by(|a, b| (&a.instance, &a.check).cmp(&(&b.instance, &b.check)));
        verdicts
    }
}

impl Default for CheckRegistry {
    fn default() -> Self {
        Self::builtin()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: u64,
    pub discrepancy: u64,
    pub skipped: u64,
    pub fail: u64,
    pub checked: u64,
}

/// Verdicts plus per-check totals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub verdicts: Vec<Verdict>,
    pub summary: BTreeMap<String, Tally>,
}

impl VerifyReport {
    pub fn new(verdicts: Vec<Verdict>) -> Self {
        let mut summary: BTreeMap<String, Tally> = BTreeMap::new();
        for v in &verdicts {
            let t = summary.entry(v.check.clone()).or_default();
            t.checked += v.checked;
            match v.status {
                Status::Pass => t.pass += 1,
                Status::Discrepancy => t.discrepancy += 1,
                Status::Skipped => t.skipped += 1,
                Status::Fail => t.fail += 1,
            }
        }
        Self { verdicts, summary }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.status == Status::Fail)
    }

    pub fn failed(&self) -> bool {
        self.failures().next().is_some()
    }
}
