//! Plain-text edge lists.
//!
//! ```text
//! # optional comments, anywhere after a `#`
//! n m
//! u v      (m lines, 0-indexed, whitespace separated)
//! ```
//!
//! [`write`] emits the canonical form (edges with u < v, sorted, no comments),
//! so `write(parse(write(g)))` is byte-identical to `write(g)`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or(Error::Parse { line: 0, msg: "empty input".into() })?;
    let [n, m] = two_numbers(hline, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = two_numbers(line, l)?;
        if u >= n || v >= n || u == v {
            return Err(Error::Parse { line, msg: format!("invalid edge {u} {v} for n = {n}") });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse { line: hline, msg: format!("header declares {m} edges, found {}", edges.len()) });
    }
    Graph::build(n, &edges)
}

fn two_numbers(line: usize, l: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { line, msg: format!("expected two integers, got `{l}`") });
    }
    let num = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse { line, msg: format!("`{s}` is not a nonnegative integer") })
    };
    Ok([num(fields[0])?, num(fields[1])?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, hypercube, random_gnp};

    #[test]
    fn canonical_round_trip() {
        for g in [cycle(5).unwrap(), hypercube(3).unwrap(), random_gnp(9, 0.4, 11).unwrap()] {
            let text = write(&g);
            let back = parse(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(write(&back), text);
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse("# a triangle\n3 3\n0 1 # first\n\n1 2\n2 0\n").unwrap();
        assert_eq!(write(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse(""), Err(Error::Parse { .. })));
        assert!(matches!(parse("3 1\n0 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("3 1\n1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse("3 2\n0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("3 x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse("3 1\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
    }
}
