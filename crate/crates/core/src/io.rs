//! Plain-text input and output formats.
//!
//! * relation: a line `n`, then `n` rows of `n` class ids; entry `(i, j)` is
//!   the class of `j` in `H_i` and the diagonal is 0;
//! * digraph: a line `n m`, then `m` lines `u v` (0-based). For undirected
//!   graphs each edge is written once;
//! * 2-structure: a line `n`, then `n` rows of `n` colour ids (any `u32`)
//!   with a zero diagonal.
//!
//! Blank lines and text after `#` are ignored.

use crate::error::{Error, Result};
use crate::relation::{Digraph, HomogeneousRelation, TwoStructure};

/// Non-blank lines with their 1-based numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let words: Vec<&str> = line.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn parse_num<T: std::str::FromStr>(word: &str, line: usize) -> Result<T> {
    word.parse().map_err(|_| Error::Parse { line, msg: format!("expected a number, got `{word}`") })
}

fn parse_error<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

/// Reads a header line holding exactly `count` numbers.
fn header<'a>(lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>, count: usize) -> Result<(usize, Vec<usize>)> {
    let Some((ln, words)) = lines.next() else {
        return parse_error(0, "empty input");
    };
    if words.len() != count {
        return parse_error(ln, format!("expected {count} number(s) in the header"));
    }
    let nums = words.iter().map(|w| parse_num(w, ln)).collect::<Result<Vec<usize>>>()?;
    Ok((ln, nums))
}

/// Reads an `n x n` matrix with a zero diagonal, optionally requiring
/// positive entries elsewhere.
fn square_matrix(text: &str, positive: bool) -> Result<(usize, Vec<u32>)> {
    let mut lines = content_lines(text);
    let (_, nums) = header(&mut lines, 1)?;
    let n = nums[0];
    let mut raw = Vec::with_capacity(n * n);
    for row in 0..n {
        let Some((ln, words)) = lines.next() else {
            return parse_error(0, format!("expected {n} rows, found {row}"));
        };
        if words.len() != n {
            return parse_error(ln, format!("expected {n} entries, found {}", words.len()));
        }
        for (col, w) in words.iter().enumerate() {
            let v: u32 = parse_num(w, ln)?;
            if row == col && v != 0 {
                return parse_error(ln, "diagonal entry must be 0");
            }
            if row != col && positive && v == 0 {
                return parse_error(ln, "off-diagonal entry must be positive");
            }
            raw.push(v);
        }
    }
    if let Some((ln, _)) = lines.next() {
        return parse_error(ln, "trailing data");
    }
    Ok((n, raw))
}

pub fn parse_relation(text: &str) -> Result<HomogeneousRelation> {
    let (n, raw) = square_matrix(text, true)?;
    HomogeneousRelation::from_matrix(n, &raw)
}

pub fn parse_two_structure(text: &str) -> Result<TwoStructure> {
    let (n, raw) = square_matrix(text, false)?;
    TwoStructure::from_matrix(n, raw)
}

/// Reads a digraph; with `undirected` every pair is added in both
/// directions.
pub fn parse_digraph(text: &str, undirected: bool) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let (_, nums) = header(&mut lines, 2)?;
    let (n, m) = (nums[0], nums[1]);
    let mut g = Digraph::new(n);
    for k in 0..m {
        let Some((ln, words)) = lines.next() else {
            return parse_error(0, format!("expected {m} arcs, found {k}"));
        };
        if words.len() != 2 {
            return parse_error(ln, "expected `u v`");
        }
        let (u, v): (usize, usize) = (parse_num(words[0], ln)?, parse_num(words[1], ln)?);
        let added = if undirected { g.add_edge(u, v) } else { g.add_arc(u, v) };
        added.map_err(|e| Error::Parse { line: ln, msg: e.to_string() })?;
    }
    if let Some((ln, _)) = lines.next() {
        return parse_error(ln, "trailing data");
    }
    Ok(g)
}

fn write_matrix(n: usize, entry: impl Fn(usize, usize) -> u32) -> String {
    let mut out = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| if i == j { "0".into() } else { entry(i, j).to_string() }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_relation(h: &HomogeneousRelation) -> String {
    write_matrix(h.len(), |i, j| h.class(i, j))
}

pub fn write_two_structure(t: &TwoStructure) -> String {
    write_matrix(t.len(), |i, j| t.color(i, j))
}

/// Writes arcs, or for `undirected` each symmetric pair once as `u v` with
/// `u < v`.
pub fn write_digraph(g: &Digraph, undirected: bool) -> String {
    let arcs: Vec<(usize, usize)> = g.arcs().filter(|&(u, v)| !undirected || u < v).collect();
    let mut out = format!("{} {}\n", g.len(), arcs.len());
    for (u, v) in arcs {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, gen};

    #[test]
    fn relation_round_trip() {
        let k = fixtures::relation_k();
        let text = write_relation(&k);
        assert_eq!(text, "4\n0 1 2 3\n1 0 2 2\n1 1 0 2\n1 1 2 0\n");
        assert_eq!(parse_relation(&text).unwrap(), k);
    }

    #[test]
    fn digraph_round_trip() {
        let g = gen::random_graph(7, 0.5, 2);
        assert_eq!(parse_digraph(&write_digraph(&g, true), true).unwrap(), g);
        let d = gen::random_digraph(7, 0.5, 2);
        assert_eq!(parse_digraph(&write_digraph(&d, false), false).unwrap(), d);
    }

    #[test]
    fn two_structure_round_trip() {
        let t = gen::random_two_structure(5, 3, 9);
        assert_eq!(parse_two_structure(&write_two_structure(&t)).unwrap(), t);
    }

    #[test]
    fn comments_and_errors() {
        let g = parse_digraph("# a path\n3 2\n0 1 # first\n\n1 2\n", true).unwrap();
        assert_eq!(g.arc_count(), 4);
        assert!(matches!(parse_digraph("3 1\n0 0\n", false), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_digraph("3 1\n0 x\n", false), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_digraph("3 2\n0 1\n", false), Err(Error::Parse { .. })));
        assert!(matches!(parse_relation("2\n0 1\n1 1\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_relation("2\n0 1\n1 0\n5\n"), Err(Error::Parse { line: 4, .. })));
        assert!(parse_relation("").is_err());
    }
}
