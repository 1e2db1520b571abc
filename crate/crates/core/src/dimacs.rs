//! DIMACS-flavored edge-list format: a `p edge n m` header, `e u v` lines
//! with 1-indexed endpoints, and `c` comment lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("missing 'p edge' header")]
    MissingHeader,

    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },

    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        source: crate::error::Error,
    },
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match tokens.next() {
            Some("p") => {
                let rest: Vec<&str> = tokens.collect();
                if rest.len() != 3 || rest[0] != "edge" {
                    return Err(ParseError::Malformed {
                        line,
                        message: format!("expected 'p edge <n> <m>', got '{trimmed}'"),
                    });
                }
                let n = parse_number(rest[1], line)?;
                let m = parse_number(rest[2], line)?;
                if header.replace((n, m)).is_some() {
                    return Err(ParseError::Malformed {
                        line,
                        message: "duplicate 'p edge' header".into(),
                    });
                }
            }
            Some("e") => {
                if header.is_none() {
                    return Err(ParseError::Malformed {
                        line,
                        message: "edge line before 'p edge' header".into(),
                    });
                }
                let rest: Vec<&str> = tokens.collect();
                if rest.len() != 2 {
                    return Err(ParseError::Malformed {
                        line,
                        message: format!("expected 'e <u> <v>', got '{trimmed}'"),
                    });
                }
                let u = parse_number(rest[0], line)?;
                let v = parse_number(rest[1], line)?;
                if u == 0 || v == 0 {
                    return Err(ParseError::Malformed {
                        line,
                        message: "vertices are 1-indexed; 0 is not a valid endpoint".into(),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            _ => {
                return Err(ParseError::Malformed {
                    line,
                    message: format!("unrecognized line '{trimmed}'"),
                });
            }
        }
    }
    let (n, m) = header.ok_or(ParseError::MissingHeader)?;
    if m != edges.len() {
        return Err(ParseError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Graph::new(n, &edges).map_err(|source| ParseError::Graph {
        line: last_line,
        source,
    })
}

fn parse_number(token: &str, line: usize) -> Result<usize, ParseError> {
    token.parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("'{token}' is not a nonnegative integer"),
    })
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::cycle;

    #[test]
    fn parses_small_graphs() {
        let c3 = parse_graph("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(c3, cycle(3));

        let p2 = parse_graph("c comment\np edge 2 1\ne 1 2").unwrap();
        assert_eq!((p2.n(), p2.m()), (2, 1));

        let c4 = parse_graph("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1").unwrap();
        assert_eq!(c4, cycle(4));
    }

    #[test]
    fn reports_errors_with_line_numbers() {
        let err = parse_graph("p edge 2 1\nx 1 2").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 2, .. }));

        let err = parse_graph("p edge 3 2\ne 1 2").unwrap_err();
        assert_eq!(
            err,
            ParseError::EdgeCountMismatch {
                declared: 2,
                found: 1
            }
        );

        let err = parse_graph("e 1 2").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 1, .. }));

        let err = parse_graph("p edge 2 1\ne 0 1").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 2, .. }));
    }

    #[test]
    fn round_trip() {
        let g = crate::families::petersen();
        let again = parse_graph(&serialize_graph(&g)).unwrap();
        assert_eq!(g, again);
    }
}
