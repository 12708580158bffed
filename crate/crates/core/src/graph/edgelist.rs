//! Plain edge-list text: a header line `n m`, then `m` lines `u v` with
//! 0-based vertex ids. `#` starts a comment that runs to end of line;
//! blank lines are ignored.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn parse_pair(line: &str, lineno: usize, what: &str) -> Result<(usize, usize)> {
    let err = |msg: String| Error::EdgeList { line: lineno, msg };
    let mut it = line.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| err(format!("missing {name} in {what}")))?;
        tok.parse()
            .map_err(|_| err(format!("{name} {tok:?} is not a non-negative integer")))
    };
    let pair = (next("first field")?, next("second field")?);
    if let Some(extra) = it.next() {
        return Err(err(format!(
            "unexpected trailing token {extra:?} in {what}"
        )));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        match header {
            None => {
                let (n, m) = parse_pair(line, lineno, "header")?;
                header = Some((n, m, lineno));
            }
            Some((n, m, _)) => {
                if edges.len() == m {
                    return Err(Error::EdgeList {
                        line: lineno,
                        msg: format!("more than the declared {m} edges"),
                    });
                }
                let (u, v) = parse_pair(line, lineno, "edge")?;
                let bad = |msg: String| Error::EdgeList { line: lineno, msg };
                if u >= n || v >= n {
                    return Err(bad(format!(
                        "edge ({u}, {v}) has an endpoint outside 0..{n}"
                    )));
                }
                if u == v {
                    return Err(bad(format!("self-loop at vertex {u}")));
                }
                if edges
                    .iter()
                    .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
                {
                    return Err(bad(format!("duplicate edge ({u}, {v})")));
                }
                edges.push((u, v));
            }
        }
    }
    let Some((n, m, _)) = header else {
        return Err(Error::EdgeList {
            line: last_line.max(1),
            msg: "missing \"n m\" header".into(),
        });
    };
    if edges.len() != m {
        return Err(Error::EdgeList {
            line: last_line.max(1),
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges).map_err(|e| Error::EdgeList {
        line: last_line,
        msg: e.to_string(),
    })
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# K2\n2 1\n\n0 1 # the edge\n").unwrap();
        assert_eq!(g, Graph::path(2));
    }

    #[test]
    fn round_trip() {
        let g = Graph::cycle(5).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line = |s: &str| match parse_edge_list(s) {
            Err(Error::EdgeList { line, .. }) => line,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(line("3 2\n0 1\n1 x\n"), 3);
        assert_eq!(line("3 1\n0 3\n"), 2);
        assert_eq!(line("3 1\n1 1\n"), 2);
        assert_eq!(line("3 2\n0 1\n1 0\n"), 3);
        assert_eq!(line("3 1\n0 1\n1 2\n"), 3);
        assert_eq!(line("3 2\n0 1\n"), 2);
        assert_eq!(line("three 2\n"), 1);
        assert_eq!(line(""), 1);
    }
}
