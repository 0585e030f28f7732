//! Exhaustive subset enumeration over `u64` masks.
//!
//! Subsets are visited by cardinality and, within one cardinality, in
//! lexicographic order of their ascending member lists, so the first hit is
//! both minimum and lexicographically least. The mask kernels here restate
//! the definitions directly and share no code with the other solvers.

use super::{Method, SolveResult, Solver};
use crate::alliances::{check_k, check_tau, AllianceQuery, Rational};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_ORACLE_CAP: usize = 20;

/// Masks cap the representable order.
const HARD_CAP: usize = 63;

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { cap: DEFAULT_ORACLE_CAP }
    }
}

struct Masks {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<i64>,
}

impl Masks {
    fn new(g: &Graph) -> Self {
        Self {
            n: g.n(),
            adj: (0..g.n()).map(|v| g.neighbor_set(v).to_mask()).collect(),
            deg: g.degrees().map(|d| d as i64).collect(),
        }
    }

    fn inside(&self, v: usize, s: u64) -> i64 {
        (self.adj[v] & s).count_ones() as i64
    }

    fn outside(&self, s: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| s >> v & 1 == 0)
    }

    fn offensive(&self, s: u64, k: i64, global: bool) -> bool {
        self.outside(s).all(|v| {
            let inside = self.inside(v, s);
            if inside == 0 {
                !global
            } else {
                inside >= self.deg[v] - inside + k
            }
        })
    }

    fn dominating(&self, s: u64) -> bool {
        self.outside(s).all(|v| self.adj[v] & s != 0)
    }

    fn r_dependent(&self, s: u64, r: i64) -> bool {
        (0..self.n).filter(|&v| s >> v & 1 == 1).all(|v| self.inside(v, s) <= r)
    }

    fn tau_dominating(&self, s: u64, tau: Rational) -> bool {
        self.outside(s).all(|v| self.inside(v, s) * tau.denom() >= tau.numer() * self.deg[v])
    }
}

/// Calls `f` on every `size`-subset of `0..n` in lexicographic order until it
/// returns true. Returns the accepted mask and the number of subsets visited.
fn first_of_size(n: usize, size: usize, mut f: impl FnMut(u64) -> bool) -> (Option<u64>, u64) {
    if size > n {
        return (None, 0);
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut visited = 0;
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | 1 << i);
        visited += 1;
        if f(mask) {
            return (Some(mask), visited);
        }
        // advance to the next combination
        let mut i = size;
        loop {
            if i == 0 {
                return (None, visited);
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn first_by_size(n: usize, sizes: impl Iterator<Item = usize>, mut f: impl FnMut(u64) -> bool) -> (Option<u64>, u64) {
    let mut total = 0;
    for size in sizes {
        let (hit, visited) = first_of_size(n, size, &mut f);
        total += visited;
        if hit.is_some() {
            return (hit, total);
        }
    }
    (None, total)
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Result<Self> {
        if cap > HARD_CAP {
            return Err(Error::InvalidParameter(format!("oracle cap {cap} exceeds {HARD_CAP}")));
        }
        Ok(Self { cap })
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn admits(&self, g: &Graph) -> bool {
        g.n() <= self.cap
    }

    fn masks(&self, g: &Graph) -> Result<Masks> {
        if !self.admits(g) {
            return Err(Error::OracleCap { n: g.n(), cap: self.cap });
        }
        Ok(Masks::new(g))
    }

    fn finish(n: usize, hit: (Option<u64>, u64)) -> SolveResult {
        let (mask, visited) = hit;
        let mask = mask.expect("enumeration covers a feasible set");
        SolveResult::new(VertexSet::from_mask(n, mask), visited, Method::Oracle)
    }

    /// γₖᵒ(Γ).
    pub fn gamma_k(&self, g: &Graph, k: i64) -> Result<SolveResult> {
        self.solve(&AllianceQuery::global(g, k)?)
    }

    /// aₖᵒ(Γ).
    pub fn a_k(&self, g: &Graph, k: i64) -> Result<SolveResult> {
        self.solve(&AllianceQuery::offensive(g, k)?)
    }

    /// γ(Γ).
    pub fn domination(&self, g: &Graph) -> Result<SolveResult> {
        let m = self.masks(g)?;
        Ok(Self::finish(m.n, first_by_size(m.n, 1..=m.n, |s| m.dominating(s))))
    }

    /// α_r(Γ): a maximum r-dependent set, lexicographically least among maxima.
    pub fn alpha_r(&self, g: &Graph, r: i64) -> Result<SolveResult> {
        if r < 0 {
            return Err(Error::NegativeR(r));
        }
        let m = self.masks(g)?;
        Ok(Self::finish(m.n, first_by_size(m.n, (0..=m.n).rev(), |s| m.r_dependent(s, r))))
    }

    /// γ_τ(Γ).
    pub fn gamma_tau(&self, g: &Graph, tau: Rational) -> Result<SolveResult> {
        if g.min_degree() == 0 {
            return Err(Error::IsolatedVertex);
        }
        check_tau(tau)?;
        let m = self.masks(g)?;
        Ok(Self::finish(m.n, first_by_size(m.n, 1..=m.n, |s| m.tau_dominating(s, tau))))
    }
}

impl Solver for Oracle {
    fn name(&self) -> &'static str {
        "oracle"
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn solve(&self, q: &AllianceQuery<'_>) -> Result<SolveResult> {
        check_k(q.graph, q.k)?;
        let m = self.masks(q.graph)?;
        let (k, global) = (q.k, q.global);
        Ok(Self::finish(m.n, first_by_size(m.n, 1..=m.n, |s| m.offensive(s, k, global))))
    }
}
