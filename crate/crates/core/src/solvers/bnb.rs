//! Branch and bound over in/out decisions per vertex.
//!
//! Runs in two phases:
//!
//! 1. Optimise: vertices are decided in descending-degree order (index breaks
//!    ties), starting from the greedy incumbent and the root lower bounds
//!    `⌈(2m+kn)/(3Δ+k)⌉` and the quadratic bound. Finds the optimum value.
//! 2. Canonicalise: an index-order search, "in" branch first, restricted to
//!    sets of exactly the optimum size. Its first hit is the lexicographically
//!    least optimal set, the same witness the oracle returns.
//!
//! Pruning is admissible: an out-vertex is infeasible only if giving it every
//! undecided neighbour still leaves δ_S(v) < req(v), and the node bound only
//! counts deficits of vertices already decided out.

use super::greedy::greedy_global;
use super::{Method, SolveResult, Solver};
use crate::alliances::{check_k, AllianceQuery};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::intmath::ceil_div;
use crate::theory::bounds::{bound_quadratic, bounds_degree};

#[derive(Clone, Copy, Debug, Default)]
pub struct BranchAndBound {
    /// Skip the root bounds (used to measure their effect).
    pub no_root_bounds: bool,
}

impl BranchAndBound {
    pub fn new() -> Self {
        Self::default()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum State {
    Undecided,
    In,
    Out,
}

struct Search<'g> {
    g: &'g Graph,
    global: bool,
    /// ⌈(δ(v)+k)/2⌉, raised to 1 when domination is required.
    req: Vec<i64>,
    state: Vec<State>,
    nbr_in: Vec<i64>,
    nbr_out: Vec<i64>,
    n_in: usize,
    nodes: u64,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, k: i64, global: bool) -> Self {
        let n = g.n();
        let req = g
            .degrees()
            .map(|d| {
                let r = ceil_div(d as i64 + k, 2);
                if global {
                    r.max(1)
                } else {
                    r
                }
            })
            .collect();
        Self {
            g,
            global,
            req,
            state: vec![State::Undecided; n],
            nbr_in: vec![0; n],
            nbr_out: vec![0; n],
            n_in: 0,
            nodes: 0,
        }
    }

    fn undecided_nbrs(&self, v: usize) -> i64 {
        self.g.degree(v) as i64 - self.nbr_in[v] - self.nbr_out[v]
    }

    /// Whether a decided-out vertex can still be satisfied.
    fn out_ok(&self, v: usize) -> bool {
        if !self.global && self.nbr_in[v] == 0 {
            // may stay off the boundary
            return true;
        }
        self.nbr_in[v] + self.undecided_nbrs(v) >= self.req[v]
    }

    /// Still-missing in-neighbours of an out-vertex that must be satisfied.
    fn deficit(&self, v: usize) -> i64 {
        if !self.global && self.nbr_in[v] == 0 {
            0
        } else {
            (self.req[v] - self.nbr_in[v]).max(0)
        }
    }

    fn assign(&mut self, v: usize, st: State) -> bool {
        self.state[v] = st;
        let delta_in = (st == State::In) as i64;
        let delta_out = (st == State::Out) as i64;
        self.n_in += delta_in as usize;
        for &w in self.g.neighbors(v) {
            self.nbr_in[w] += delta_in;
            self.nbr_out[w] += delta_out;
        }
        (st != State::Out || self.out_ok(v))
            && self.g.neighbors(v).iter().all(|&w| self.state[w] != State::Out || self.out_ok(w))
    }

    fn unassign(&mut self, v: usize) {
        let st = self.state[v];
        let delta_in = (st == State::In) as i64;
        let delta_out = (st == State::Out) as i64;
        self.n_in -= delta_in as usize;
        for &w in self.g.neighbors(v) {
            self.nbr_in[w] -= delta_in;
            self.nbr_out[w] -= delta_out;
        }
        self.state[v] = State::Undecided;
    }

    /// Additional in-vertices any completion needs.
    fn extra_needed(&self) -> i64 {
        let mut max_deficit = 0;
        let mut total = 0;
        for v in 0..self.state.len() {
            if self.state[v] == State::Out {
                let d = self.deficit(v);
                max_deficit = max_deficit.max(d);
                total += d;
            }
        }
        if total == 0 {
            return if self.n_in == 0 { 1 } else { 0 };
        }
        // each new in-vertex lowers the total by at most its out-neighbour count
        let reach = (0..self.state.len())
            .filter(|&u| self.state[u] == State::Undecided)
            .map(|u| self.nbr_out[u])
            .max()
            .unwrap_or(0);
        if reach == 0 {
            return i64::MAX / 4;
        }
        max_deficit.max(ceil_div(total, reach))
    }

    /// Whether "current in-set, everything undecided out" is feasible.
    fn closes_now(&self) -> bool {
        if self.n_in == 0 {
            return false;
        }
        (0..self.state.len()).filter(|&v| self.state[v] != State::In).all(|v| {
            let inside = self.nbr_in[v];
            if inside == 0 {
                !self.global
            } else {
                inside >= self.req[v]
            }
        })
    }

    fn in_set(&self) -> VertexSet {
        VertexSet::from_members(self.state.len(), (0..self.state.len()).filter(|&v| self.state[v] == State::In))
    }

    /// Phase 1: improve `best` (size, set) below its current size.
    fn optimise(&mut self, order: &[usize], depth: usize, root_lb: usize, best: &mut (usize, VertexSet)) {
        self.nodes += 1;
        let lb = (self.n_in as i64 + self.extra_needed()).max(root_lb as i64);
        if lb >= best.0 as i64 {
            return;
        }
        if self.closes_now() {
            *best = (self.n_in, self.in_set());
            return;
        }
        if depth == order.len() {
            return;
        }
        let v = order[depth];
        for st in [State::In, State::Out] {
            if self.assign(v, st) {
                self.optimise(order, depth + 1, root_lb, best);
            }
            self.unassign(v);
            if best.0 <= root_lb {
                return;
            }
        }
    }

    /// Phase 2: first set of exactly `target` members in index order, "in"
    /// before "out".
    fn first_of_size(&mut self, v: usize, target: usize) -> Option<VertexSet> {
        self.nodes += 1;
        let n = self.state.len();
        if self.n_in > target || self.n_in + (n - v) < target {
            return None;
        }
        if self.n_in as i64 + self.extra_needed() > target as i64 {
            return None;
        }
        if self.n_in == target {
            return self.closes_now().then(|| self.in_set());
        }
        for st in [State::In, State::Out] {
            let found = if self.assign(v, st) { self.first_of_size(v + 1, target) } else { None };
            self.unassign(v);
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Descending degree, index tie-break.
fn branching_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

impl Solver for BranchAndBound {
    fn name(&self) -> &'static str {
        "bnb"
    }

    fn is_exact(&self) -> bool {
        true
    }

    fn solve(&self, q: &AllianceQuery<'_>) -> Result<SolveResult> {
        let g = q.graph;
        check_k(g, q.k)?;
        let (greedy_set, _) = greedy_global(g, q.k);
        let mut root_lb = 1usize;
        if q.global && !self.no_root_bounds {
            let (lower, _) = bounds_degree(g, q.k)?;
            root_lb = root_lb.max(lower.max(0) as usize);
            if let Ok(quad) = bound_quadratic(g, q.k) {
                root_lb = root_lb.max(quad.max(0) as usize);
            }
        }

        let mut search = Search::new(g, q.k, q.global);
        let mut best = (greedy_set.len(), greedy_set);
        if best.0 > root_lb {
            let order = branching_order(g);
            search.optimise(&order, 0, root_lb, &mut best);
        }
        let phase1 = search.nodes;

        let mut canon = Search::new(g, q.k, q.global);
        let witness = canon.first_of_size(0, best.0).expect("an optimal set of this size was already found");
        debug_assert!(q.accepts(&witness).unwrap_or(false));
        Ok(SolveResult::new(witness, phase1 + canon.nodes, Method::BranchAndBound))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::solvers::Oracle;

    fn bnb(g: &Graph, k: i64) -> SolveResult {
        BranchAndBound::new().solve(&AllianceQuery::global(g, k).unwrap()).unwrap()
    }

    #[test]
    fn bnb_examples() {
        let q3 = hypercube(3).unwrap();
        let r = bnb(&q3, 2);
        assert_eq!(r.value, 4);
        assert!(r.nodes_explored < 256);
        assert_eq!(bnb(&complete(12).unwrap(), 3).value, 7);
        assert_eq!(bnb(&cycle(10).unwrap(), 0).value, 4);
        assert!(BranchAndBound::new().solve(&AllianceQuery { graph: &q3, k: 4, global: true }).is_err());
    }

    #[test]
    fn order_is_degree_then_index() {
        let g = Graph::build(5, &[(0, 4), (1, 4), (2, 4), (2, 3)]).unwrap();
        assert_eq!(branching_order(&g), vec![4, 2, 0, 1, 3]);
    }

    #[test]
    fn matches_oracle_value_and_witness() {
        let oracle = Oracle::default();
        for seed in 0..60 {
            let n = 4 + (seed as usize % 7);
            let g = random_gnp(n, 0.35 + 0.05 * (seed % 5) as f64, seed).unwrap();
            let Ok((lo, hi)) = crate::alliances::k_range(&g) else { continue };
            for k in lo..=hi {
                for global in [true, false] {
                    let q = AllianceQuery::new(&g, k, global).unwrap();
                    let a = oracle.solve(&q).unwrap();
                    let b = BranchAndBound::new().solve(&q).unwrap();
                    assert_eq!((a.value, &a.witness), (b.value, &b.witness), "seed {seed} k {k} global {global}");
                    let c = BranchAndBound { no_root_bounds: true }.solve(&q).unwrap();
                    assert_eq!(a.witness, c.witness);
                }
            }
        }
    }

    #[test]
    fn isolated_vertices_are_forced_in() {
        let g = Graph::build(4, &[(0, 1), (1, 2)]).unwrap();
        let r = bnb(&g, 0);
        assert!(r.witness.contains(3));
        assert_eq!(r.value, 2);
    }
}
