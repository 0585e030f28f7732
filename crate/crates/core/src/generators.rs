//! Standard graph families and a small composable spec language:
//!
//! ```text
//! complete:n  cycle:n  path:n  bipartite:r,t  hypercube:d  gnp:n,p,seed
//! product:A,B  linegraph:A  complement:A
//! ```

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn param(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(param("complete graph needs n ≥ 1"));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::build(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(param("cycle needs n ≥ 3"));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::build(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(param("path needs n ≥ 1"));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::build(n, &edges)
}

/// K_{r,t} with parts `0..r` and `r..r+t`.
pub fn complete_bipartite(r: usize, t: usize) -> Result<Graph> {
    if r < 1 || t < 1 {
        return Err(param("complete bipartite graph needs r, t ≥ 1"));
    }
    let edges: Vec<_> = (0..r).flat_map(|u| (r..r + t).map(move |v| (u, v))).collect();
    Graph::build(r + t, &edges)
}

/// Q_d: vertices are d-bit words, adjacent iff they differ in one bit.
pub fn hypercube(d: usize) -> Result<Graph> {
    if !(1..=20).contains(&d) {
        return Err(param("hypercube needs 1 ≤ d ≤ 20"));
    }
    let n = 1usize << d;
    let edges: Vec<_> = (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v)).collect();
    Graph::build(n, &edges)
}

/// G(n, p), deterministic in `seed`: pairs (u, v), u < v, are visited in
/// lexicographic order and kept with probability p.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(param("gnp needs n ≥ 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(param(format!("gnp probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

/// A parsed generator expression.
#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Bipartite(usize, usize),
    Hypercube(usize),
    Gnp { n: usize, p: f64, seed: u64 },
    Product(Box<GenSpec>, Box<GenSpec>),
    LineGraph(Box<GenSpec>),
    Complement(Box<GenSpec>),
}

impl GenSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GenSpec::Complete(n) => complete(*n),
            GenSpec::Cycle(n) => cycle(*n),
            GenSpec::Path(n) => path(*n),
            GenSpec::Bipartite(r, t) => complete_bipartite(*r, *t),
            GenSpec::Hypercube(d) => hypercube(*d),
            GenSpec::Gnp { n, p, seed } => random_gnp(*n, *p, *seed),
            GenSpec::Product(a, b) => Ok(a.build()?.cartesian_product(&b.build()?)),
            GenSpec::LineGraph(a) => a.build()?.line_graph(),
            GenSpec::Complement(a) => Ok(a.build()?.complement()),
        }
    }
}

impl fmt::Display for GenSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSpec::Complete(n) => write!(f, "complete:{n}"),
            GenSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GenSpec::Path(n) => write!(f, "path:{n}"),
            GenSpec::Bipartite(r, t) => write!(f, "bipartite:{r},{t}"),
            GenSpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            GenSpec::Gnp { n, p, seed } => write!(f, "gnp:{n},{p},{seed}"),
            GenSpec::Product(a, b) => write!(f, "product:{a},{b}"),
            GenSpec::LineGraph(a) => write!(f, "linegraph:{a}"),
            GenSpec::Complement(a) => write!(f, "complement:{a}"),
        }
    }
}

impl FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = SpecParser { src: s, pos: 0 };
        let spec = p.spec()?;
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(spec)
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn error(&self, msg: &str) -> Error {
        param(format!("bad graph spec `{}` at byte {}: {msg}", self.src, self.pos))
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn token(&mut self) -> &str {
        let len = self.rest().find([':', ',']).unwrap_or(self.rest().len());
        let start = self.pos;
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn number<T: FromStr>(&mut self) -> Result<T> {
        let tok = self.token().trim().to_owned();
        tok.parse().map_err(|_| self.error(&format!("`{tok}` is not a valid number")))
    }

    fn spec(&mut self) -> Result<GenSpec> {
        let name = self.token().trim().to_ascii_lowercase();
        self.expect(':')?;
        Ok(match name.as_str() {
            "complete" => GenSpec::Complete(self.number()?),
            "cycle" => GenSpec::Cycle(self.number()?),
            "path" => GenSpec::Path(self.number()?),
            "hypercube" => GenSpec::Hypercube(self.number()?),
            "bipartite" => {
                let r = self.number()?;
                self.expect(',')?;
                GenSpec::Bipartite(r, self.number()?)
            }
            "gnp" => {
                let n = self.number()?;
                self.expect(',')?;
                let p = self.number()?;
                self.expect(',')?;
                GenSpec::Gnp { n, p, seed: self.number()? }
            }
            "product" => {
                let a = self.spec()?;
                self.expect(',')?;
                GenSpec::Product(Box::new(a), Box::new(self.spec()?))
            }
            "linegraph" => GenSpec::LineGraph(Box::new(self.spec()?)),
            "complement" => GenSpec::Complement(Box::new(self.spec()?)),
            other => return Err(self.error(&format!("unknown generator `{other}`"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_shapes() {
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.m()), (8, 12));
        assert!(q3.degrees().all(|d| d == 3));

        let k33 = complete_bipartite(3, 3).unwrap();
        assert!(k33.degrees().all(|d| d == 3));
        assert_eq!(k33.m(), 9);

        assert_eq!(path(1).unwrap().m(), 0);
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 2).is_err());
        assert!(hypercube(0).is_err());
        assert!(random_gnp(5, 1.5, 0).is_err());
    }

    #[test]
    fn gnp_is_deterministic() {
        assert_eq!(random_gnp(8, 0.5, 1).unwrap(), random_gnp(8, 0.5, 1).unwrap());
        assert_eq!(random_gnp(6, 1.0, 3).unwrap(), complete(6).unwrap());
        assert_eq!(random_gnp(6, 0.0, 3).unwrap().m(), 0);
    }

    #[test]
    fn spec_parsing_composes() {
        let s: GenSpec = "product:cycle:4,complete:4".parse().unwrap();
        assert_eq!(s, GenSpec::Product(Box::new(GenSpec::Cycle(4)), Box::new(GenSpec::Complete(4))));
        let g = s.build().unwrap();
        assert_eq!(g.n(), 16);
        assert!(g.degrees().all(|d| d == 5));

        let s: GenSpec = "product:bipartite:2,3,linegraph:complement:path:4".parse().unwrap();
        assert_eq!(s.to_string(), "product:bipartite:2,3,linegraph:complement:path:4");

        let e = "complement:complete:4".parse::<GenSpec>().unwrap().build().unwrap();
        assert_eq!((e.n(), e.m()), (4, 0));

        let g: GenSpec = "gnp:8,0.5,7".parse().unwrap();
        assert_eq!(g, GenSpec::Gnp { n: 8, p: 0.5, seed: 7 });

        for bad in ["", "cycle", "cycle:x", "wheel:5", "product:cycle:4", "cycle:4,"] {
            assert!(bad.parse::<GenSpec>().is_err(), "{bad}");
        }
    }
}
