//! Plain-text edge-list format.
//!
//! ```text
//! n m
//! u v
//! ...
//! ```
//!
//! The header is two base-10 integers separated by one space, followed by
//! exactly `m` edge lines, each newline-terminated. Reading is strict:
//! self-loops, out-of-range endpoints and repeated pairs are errors. Writing
//! always produces the canonical form, with each edge as `min max` and
//! edges sorted lexicographically.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected \"n m\" header, got {text:?}")]
    Header { line: usize, text: String },
    #[error("line {line}: expected \"u v\", got {text:?}")]
    Edge { line: usize, text: String },
    #[error("line {line}: endpoint out of range in ({u}, {v}) for n = {n}")]
    OutOfRange {
        line: usize,
        u: usize,
        v: usize,
        n: usize,
    },
    #[error("line {line}: self-loop ({u}, {u})")]
    SelfLoop { line: usize, u: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges but {found} edge lines follow")]
    CountMismatch { declared: usize, found: usize },
    #[error("input is not newline-terminated")]
    MissingNewline,
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let (a, b) = text.split_once(' ')?;
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|c| c.is_ascii_digit());
    if !digits(a) || !digits(b) {
        return None;
    }
    Some((a.parse().ok()?, b.parse().ok()?))
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    if !text.is_empty() && !text.ends_with('\n') {
        return Err(ParseError::MissingNewline);
    }
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    let (n, m) = parse_pair(header).ok_or_else(|| ParseError::Header {
        line: 1,
        text: header.to_string(),
    })?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (i, raw) in lines.enumerate() {
        let line = i + 2;
        if edges.len() == m {
            return Err(ParseError::CountMismatch {
                declared: m,
                found: m + 1 + text.lines().skip(line).count(),
            });
        }
        let (u, v) = parse_pair(raw).ok_or_else(|| ParseError::Edge {
            line,
            text: raw.to_string(),
        })?;
        if u >= n || v >= n {
            return Err(ParseError::OutOfRange { line, u, v, n });
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::Duplicate { line, u, v });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::CountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::build(n, edges).expect("edges validated above"))
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.m() + 1));
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_edgelist("4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert_eq!(g, Graph::build(4, [(0, 1), (1, 2), (2, 3)]).unwrap());
    }

    #[test]
    fn writes_canonical_form() {
        let g = parse_edgelist("4 4\n3 0\n2 1\n0 1\n3 2\n").unwrap();
        assert_eq!(write_edgelist(&g), "4 4\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(
            parse_edgelist("2 1\n0 0\n").unwrap_err(),
            ParseError::SelfLoop { line: 2, u: 0 }
        );
    }

    #[test]
    fn rejects_duplicates_in_either_orientation() {
        assert!(matches!(
            parse_edgelist("3 2\n0 1\n1 0\n"),
            Err(ParseError::Duplicate { line: 3, .. })
        ));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_edgelist(""), Err(ParseError::Header { .. })));
        assert!(matches!(
            parse_edgelist("3\n"),
            Err(ParseError::Header { .. })
        ));
        assert!(matches!(
            parse_edgelist("3  1\n0 1\n"),
            Err(ParseError::Header { .. })
        ));
        assert!(matches!(
            parse_edgelist("3 1\n0 x\n"),
            Err(ParseError::Edge { .. })
        ));
        assert!(matches!(
            parse_edgelist("3 1\n0 -1\n"),
            Err(ParseError::Edge { .. })
        ));
        assert!(matches!(
            parse_edgelist("3 1\n0 3\n"),
            Err(ParseError::OutOfRange { .. })
        ));
        assert_eq!(parse_edgelist("3 1\n0 1"), Err(ParseError::MissingNewline));
    }

    #[test]
    fn rejects_count_mismatch() {
        assert_eq!(
            parse_edgelist("3 2\n0 1\n").unwrap_err(),
            ParseError::CountMismatch {
                declared: 2,
                found: 1
            }
        );
        assert_eq!(
            parse_edgelist("3 1\n0 1\n1 2\n").unwrap_err(),
            ParseError::CountMismatch {
                declared: 1,
                found: 2
            }
        );
    }

    #[test]
    fn edgeless_graph() {
        let g = parse_edgelist("5 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 0));
        assert_eq!(write_edgelist(&g), "5 0\n");
    }
}
