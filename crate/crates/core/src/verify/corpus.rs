//! Seeded corpora of small graphs.
//!
//! Spec syntax:
//!
//! * `random:n_max=9,count=200,seed=42`, also positional `random:9,200,seed=42`
//!   or `random:9,200,42`; optional `n_min=` (default 4). Connected G(n, p)
//!   graphs with n uniform in `n_min..=n_max` and p uniform in [0.25, 0.75].
//! * `regular`: fixed regular graphs of order at most 9.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::Profile;
use crate::error::{Error, Result};
use crate::generators::{random_gnp, GenSpec};
use crate::graph::Graph;
use crate::solvers::Oracle;

/// One corpus graph with its precomputed oracle data.
pub struct Instance {
    pub id: String,
    /// Generator expression that rebuilds the graph.
    pub spec: String,
    pub graph: Graph,
    pub profile: Profile,
}

impl Instance {
    pub fn new(id: String, spec: &GenSpec, oracle: &Oracle) -> Result<Self> {
        let graph = spec.build()?;
        let profile = Profile::new(&graph, oracle)?;
        Ok(Self { id, spec: spec.to_string(), graph, profile })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CorpusSpec {
    Random { n_min: usize, n_max: usize, count: usize, seed: u64 },
    Regular,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

impl FromStr for CorpusSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "regular" {
            return Ok(CorpusSpec::Regular);
        }
        let Some(args) = s.strip_prefix("random:") else {
            return Err(bad(format!("unknown corpus `{s}`; expected random:... or regular")));
        };
        let (mut n_min, mut n_max, mut count, mut seed) = (4, None, None, None);
        for (i, item) in args.split(',').enumerate() {
            let (key, value) = match item.split_once('=') {
                Some((k, v)) => (k.trim(), v.trim()),
                None => (["n_max", "count", "seed"].get(i).copied().unwrap_or("?"), item.trim()),
            };
            let num = |v: &str| v.parse::<u64>().map_err(|_| bad(format!("`{v}` is not a number in `{s}`")));
            match key {
                "n_min" => n_min = num(value)? as usize,
                "n_max" => n_max = Some(num(value)? as usize),
                "count" => count = Some(num(value)? as usize),
                "seed" => seed = Some(num(value)?),
                _ => return Err(bad(format!("unexpected `{item}` in `{s}`"))),
            }
        }
        let n_max = n_max.ok_or_else(|| bad("random corpus needs n_max"))?;
        let count = count.ok_or_else(|| bad("random corpus needs count"))?;
        let seed = seed.ok_or_else(|| bad("random corpus needs seed"))?;
        if n_min < 2 || n_min > n_max || n_max > super::PROFILE_LIMIT {
            return Err(bad(format!("needs 2 ≤ n_min ≤ n_max ≤ {}", super::PROFILE_LIMIT)));
        }
        Ok(CorpusSpec::Random { n_min, n_max, count, seed })
    }
}

impl fmt::Display for CorpusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusSpec::Random { n_min, n_max, count, seed } => {
                write!(f, "random:n_min={n_min},n_max={n_max},count={count},seed={seed}")
            }
            CorpusSpec::Regular => f.write_str("regular"),
        }
    }
}

/// Regular graphs used where a result needs regularity.
pub fn regular_specs() -> Vec<GenSpec> {
    let mut out: Vec<GenSpec> = (4..=9).map(GenSpec::Cycle).collect();
    out.extend((4..=6).map(GenSpec::Complete));
    out.push(GenSpec::Bipartite(3, 3));
    out.push(GenSpec::Bipartite(4, 4));
    out.push(GenSpec::Hypercube(3));
    out.push(GenSpec::Complement(Box::new(GenSpec::Cycle(7))));
    out.push(GenSpec::Complement(Box::new(GenSpec::Cycle(8))));
    out.push(GenSpec::Product(Box::new(GenSpec::Cycle(3)), Box::new(GenSpec::Complete(2))));
    out.push(GenSpec::Product(Box::new(GenSpec::Cycle(4)), Box::new(GenSpec::Complete(2))));
    out
}

/// Deterministic generator expressions for a random corpus: each draw of
/// (n, p, seed) is redrawn until the graph is connected.
pub fn random_specs(n_min: usize, n_max: usize, count: usize, seed: u64) -> Result<Vec<GenSpec>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(n_min..=n_max);
        // two decimals keep the spec string exact
        let p = rng.gen_range(25..=75) as f64 / 100.0;
        let graph_seed = rng.gen::<u32>() as u64;
        if random_gnp(n, p, graph_seed)?.is_connected() {
            out.push(GenSpec::Gnp { n, p, seed: graph_seed });
        }
    }
    Ok(out)
}

impl CorpusSpec {
    pub fn specs(&self) -> Result<Vec<(String, GenSpec)>> {
        Ok(match *self {
            CorpusSpec::Random { n_min, n_max, count, seed } => random_specs(n_min, n_max, count, seed)?
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("random-{seed}-{i:04}"), g))
                .collect(),
            CorpusSpec::Regular => {
                regular_specs().into_iter().enumerate().map(|(i, g)| (format!("regular-{i:02}"), g)).collect()
            }
        })
    }

    /// Builds every instance (in parallel) and its profile.
    pub fn instances(&self, oracle: &Oracle) -> Result<Vec<Instance>> {
        self.specs()?.into_par_iter().map(|(id, spec)| Instance::new(id, &spec, oracle)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_forms() {
        let a: CorpusSpec = "random:n_max=9,count=200,seed=42".parse().unwrap();
        let b: CorpusSpec = "random:9,200,seed=42".parse().unwrap();
        let c: CorpusSpec = "random:9,200,42".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_eq!(a.to_string().parse::<CorpusSpec>().unwrap(), a);
        assert_eq!("regular".parse::<CorpusSpec>().unwrap(), CorpusSpec::Regular);
        assert!("random:9,200".parse::<CorpusSpec>().is_err());
        assert!("random:n_max=40,count=1,seed=1".parse::<CorpusSpec>().is_err());
        assert!("bogus".parse::<CorpusSpec>().is_err());
    }

    #[test]
    fn random_corpus_is_deterministic_and_connected() {
        let a = random_specs(4, 9, 30, 7).unwrap();
        assert_eq!(a, random_specs(4, 9, 30, 7).unwrap());
        for spec in &a {
            let g = spec.build().unwrap();
            assert!(g.is_connected());
            assert!((4..=9).contains(&g.n()));
            assert_eq!(spec.to_string().parse::<GenSpec>().unwrap().build().unwrap(), g);
        }
    }

    #[test]
    fn regular_corpus_is_regular() {
        for spec in regular_specs() {
            let g = spec.build().unwrap();
            assert!(g.is_regular() && g.min_degree() > 0, "{spec}");
            assert!(g.n() <= 9);
        }
    }
}
