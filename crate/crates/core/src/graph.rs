//! Simple undirected graphs on dense vertex ids `0..n` and bitset vertex sets.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A subset of `0..n`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        Self { n, words: vec![0; words_for(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let remaining = n - i * WORD;
            *w = if remaining >= WORD { u64::MAX } else { (1u64 << remaining) - 1 };
        }
        s
    }

    /// Builds a set from member ids. Panics on an id `>= n`.
    pub fn from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Self {
        let mut s = Self::empty(n);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Fallible variant of [`VertexSet::from_members`] for untrusted input.
    pub fn try_from_members<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in members {
            if v >= n {
                return Err(Error::InvalidParameter(format!("vertex {v} out of range for order {n}")));
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Set from the low `n` bits of `mask` (n ≤ 64).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD, "mask sets hold at most 64 vertices");
        let mut s = Self::empty(n);
        if n > 0 {
            s.words[0] = mask & Self::full(n).words[0];
        }
        s
    }

    /// The low word as a mask; only meaningful for n ≤ 64.
    pub fn to_mask(&self) -> u64 {
        assert!(self.n <= WORD, "mask sets hold at most 64 vertices");
        self.words.first().copied().unwrap_or(0)
    }

    /// Order of the ambient vertex range.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        self.words[v / WORD] &= !(1 << (v % WORD));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.n
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// S̄ within `0..n`.
    pub fn complement(&self) -> Self {
        let full = Self::full(self.n);
        let words = self.words.iter().zip(&full.words).map(|(a, f)| !a & f).collect();
        Self { n: self.n, words }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.n, other.n, "vertex sets over different orders");
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect();
        Self { n: self.n, words }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// |self ∩ other| without allocating.
    pub fn intersection_len(&self, other: &Self) -> usize {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Lexicographic order of the ascending member lists.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Immutable simple undirected graph.
///
/// Each vertex keeps both a sorted neighbor list (for incremental search) and
/// a bitset row, so δ_S(v) is one popcount pass over `n / 64` words.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    neighbors: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, reason: "endpoint out of range" });
            }
            if u == v {
                return Err(Error::InvalidEdge { u, v, reason: "self-loop" });
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(rows))
    }

    fn from_rows(rows: Vec<VertexSet>) -> Self {
        let neighbors: Vec<Vec<usize>> = rows.iter().map(VertexSet::to_vec).collect();
        let m = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Self { n: rows.len(), m, neighbors, rows }
    }

    /// Order.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.neighbors.iter().map(Vec::len)
    }

    /// δ; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    /// Δ; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges with u < v in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// δ_S(v) = |N(v) ∩ S|.
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> usize {
        self.rows[v].intersection_len(s)
    }

    /// δ_S̄(v) = δ(v) − δ_S(v).
    pub fn degree_outside(&self, v: usize, s: &VertexSet) -> usize {
        self.degree(v) - self.degree_in(v, s)
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.order() != self.n {
            return Err(Error::OrderMismatch { set: s.order(), graph: self.n });
        }
        Ok(())
    }

    /// ∂(S) = { v ∉ S : δ_S(v) > 0 }.
    pub fn boundary(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut out = VertexSet::empty(self.n);
        for v in s.complement().iter() {
            if self.degree_in(v, s) > 0 {
                out.insert(v);
            }
        }
        Ok(out)
    }

    pub fn complement(&self) -> Graph {
        let rows = (0..self.n)
            .map(|v| {
                let mut r = self.rows[v].complement();
                r.remove(v);
                r
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Γ₁ × Γ₂ with vertex (i, j) at index `i * n₂ + j`.
    pub fn cartesian_product(&self, other: &Graph) -> Graph {
        let (n1, n2) = (self.n, other.n);
        let n = n1 * n2;
        let mut rows = vec![VertexSet::empty(n); n];
        for i in 0..n1 {
            for j in 0..n2 {
                let row = &mut rows[i * n2 + j];
                for &j2 in other.neighbors(j) {
                    row.insert(i * n2 + j2);
                }
                for &i2 in self.neighbors(i) {
                    row.insert(i2 * n2 + j);
                }
            }
        }
        Self::from_rows(rows)
    }

    /// L(Γ): one vertex per edge (in [`Graph::edges`] order), adjacent iff the
    /// edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        if self.m == 0 {
            return Err(Error::Edgeless);
        }
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(e);
            incident[v].push(e);
        }
        let mut rows = vec![VertexSet::empty(edges.len()); edges.len()];
        for inc in &incident {
            for (a, &e) in inc.iter().enumerate() {
                for &f in &inc[a + 1..] {
                    rows[e].insert(f);
                    rows[f].insert(e);
                }
            }
        }
        Ok(Self::from_rows(rows))
    }

    /// Subgraph induced by `s`, relabelled to `0..|s|` in ascending order.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let members = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let rows = members
            .iter()
            .map(|&v| {
                VertexSet::from_members(
                    members.len(),
                    self.neighbors(v).iter().filter(|&&u| s.contains(u)).map(|&u| index[u]),
                )
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::empty(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for &u in self.neighbors(v) {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen.is_full()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

/// S₁ × S₂ under the product indexing of [`Graph::cartesian_product`].
pub fn product_set(s1: &VertexSet, s2: &VertexSet) -> VertexSet {
    let n2 = s2.order();
    let mut out = VertexSet::empty(s1.order() * n2);
    for i in s1.iter() {
        for j in s2.iter() {
            out.insert(i * n2 + j);
        }
    }
    out
}

/// Recovers S from a product set of the form S × V₂.
pub fn project_full_factor(x: &VertexSet, n1: usize, n2: usize) -> Result<VertexSet> {
    if x.order() != n1 * n2 {
        return Err(Error::OrderMismatch { set: x.order(), graph: n1 * n2 });
    }
    let mut s = VertexSet::empty(n1);
    for i in 0..n1 {
        let hits = (0..n2).filter(|&j| x.contains(i * n2 + j)).count();
        if hits == n2 && n2 > 0 {
            s.insert(i);
        } else if hits != 0 {
            return Err(Error::ShapeViolation(format!("row {i} has {hits} of {n2} vertices")));
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, hypercube, path};

    #[test]
    fn build_cycle_and_singleton() {
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!((c4.min_degree(), c4.max_degree(), c4.m()), (2, 2, 4));
        let k1 = Graph::build(1, &[]).unwrap();
        assert_eq!((k1.min_degree(), k1.max_degree(), k1.m()), (0, 0, 0));
    }

    #[test]
    fn build_dedups_and_rejects_bad_edges() {
        let g = Graph::build(4, &[(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(Graph::build(3, &[(0, 3)]), Err(Error::InvalidEdge { u: 0, v: 3, reason: "endpoint out of range" }));
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(Error::InvalidEdge { u: 1, v: 1, reason: "self-loop" }));
    }

    #[test]
    fn boundary_examples() {
        let c4 = cycle(4).unwrap();
        let s = VertexSet::from_members(4, [0]);
        assert_eq!(c4.boundary(&s).unwrap().to_vec(), vec![1, 3]);
        assert!(c4.boundary(&VertexSet::full(4)).unwrap().is_empty());
        assert_eq!(c4.boundary(&VertexSet::empty(4)), Err(Error::EmptySet));

        let q3 = hypercube(3).unwrap();
        let s = VertexSet::from_members(8, [0b000, 0b111]);
        assert_eq!(q3.boundary(&s).unwrap().to_vec(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn complement_examples() {
        let e4 = complete(4).unwrap().complement();
        assert_eq!((e4.n(), e4.m()), (4, 0));

        // C5 is self-complementary: 0-2-4-1-3-0 is its complement cycle.
        let c5c = cycle(5).unwrap().complement();
        assert_eq!(c5c.m(), 5);
        assert!(c5c.degrees().all(|d| d == 2));
        assert!(c5c.is_connected());

        let c4c = cycle(4).unwrap().complement();
        assert_eq!(c4c.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn product_examples() {
        let k2 = complete(2).unwrap();
        let p = k2.cartesian_product(&k2);
        assert_eq!((p.n(), p.m()), (4, 4));
        assert!(p.degrees().all(|d| d == 2) && p.is_connected());

        let c4k4 = cycle(4).unwrap().cartesian_product(&complete(4).unwrap());
        assert_eq!((c4k4.n(), c4k4.m()), (16, 40));
        assert!(c4k4.degrees().all(|d| d == 5));

        let g = path(5).unwrap();
        let k1 = complete(1).unwrap();
        assert_eq!(k1.cartesian_product(&g), g);
        assert_eq!(g.cartesian_product(&k1), g);
    }

    #[test]
    fn line_graph_examples() {
        let l = path(3).unwrap().line_graph().unwrap();
        assert_eq!((l.n(), l.m()), (2, 1));

        let oct = complete(4).unwrap().line_graph().unwrap();
        assert_eq!((oct.n(), oct.m()), (6, 12));
        assert!(oct.degrees().all(|d| d == 4));

        let l5 = cycle(5).unwrap().line_graph().unwrap();
        assert_eq!((l5.n(), l5.m()), (5, 5));
        assert!(l5.degrees().all(|d| d == 2) && l5.is_connected());

        assert_eq!(Graph::build(3, &[]).unwrap().line_graph(), Err(Error::Edgeless));
    }

    #[test]
    fn product_set_projection_round_trip() {
        let s = VertexSet::from_members(4, [1, 3]);
        let x = product_set(&s, &VertexSet::full(3));
        assert_eq!(x.to_vec(), vec![3, 4, 5, 9, 10, 11]);
        assert_eq!(project_full_factor(&x, 4, 3).unwrap(), s);
        let bad = VertexSet::from_members(12, [3, 4]);
        assert!(matches!(project_full_factor(&bad, 4, 3), Err(Error::ShapeViolation(_))));
    }

    #[test]
    fn vertex_set_algebra() {
        let a = VertexSet::from_members(70, [0, 5, 64, 69]);
        let b = VertexSet::from_members(70, [5, 6, 69]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 5, 6, 64, 69]);
        assert_eq!(a.intersection(&b).to_vec(), vec![5, 69]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 64]);
        assert_eq!(a.complement().len(), 66);
        assert_eq!(a.intersection_len(&b), 2);
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(
            VertexSet::from_members(5, [0, 1, 4]).lex_cmp(&VertexSet::from_members(5, [0, 2, 3])),
            Ordering::Less
        );
    }
}
