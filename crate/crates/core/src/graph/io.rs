//! Edge-list text format: an `n <count>` line, then `e <u> <v>` lines.
//! `#` starts a comment.

use std::fmt::Write as _;

use super::{Graph, GraphError};

fn parse_error(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<Graph, GraphError> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|e| parse_error(line_no, format!("bad integer `{t}`: {e}")))
        };
        match tokens.as_slice() {
            ["n", count] => {
                if n.is_some() {
                    return Err(parse_error(line_no, "duplicate `n` line"));
                }
                n = Some(num(count)?);
            }
            ["e", u, v] => {
                let count = n.ok_or_else(|| parse_error(line_no, "edge before `n` line"))?;
                let (u, v) = (num(u)?, num(v)?);
                for x in [u, v] {
                    if x >= count {
                        return Err(parse_error(
                            line_no,
                            format!("vertex {x} out of range for {count} vertices"),
                        ));
                    }
                }
                if u == v {
                    return Err(parse_error(line_no, format!("loop at vertex {u}")));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_error(line_no, format!("duplicate edge {{{u}, {v}}}")));
                }
                edges.push((u, v));
            }
            _ => return Err(parse_error(line_no, format!("unrecognised line `{line}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_error(0, "missing `n <count>` line"))?;
    Graph::from_edges(n, &edges)
}

/// Canonical text: edges sorted by smaller then larger endpoint.
pub fn serialize(graph: &Graph) -> String {
    let mut out = format!("n {}\n", graph.n());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}
