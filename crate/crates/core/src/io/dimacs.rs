//! The DIMACS colouring format: `c` comment lines, one `p edge <n> <m>`
//! problem line, then `e <u> <v>` lines with 1-based endpoints.

use super::GraphDocument;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn fail(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        format: "dimacs",
        line,
        message: message.into(),
    }
}

/// Parse DIMACS text into a document. The first comment line, when
/// present, becomes the document name.
pub fn parse_dimacs(text: &str) -> Result<GraphDocument> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut name: Option<String> = None;
    let mut last_line = 0;

    for (index, raw) in text.lines().enumerate() {
        let number = index + 1;
        last_line = number;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("c") => {
                if name.is_none() {
                    let comment = line[1..].trim();
                    if !comment.is_empty() {
                        name = Some(comment.to_string());
                    }
                }
            }
            Some("p") => {
                if header.is_some() {
                    return Err(fail(number, "second p line; only one is allowed"));
                }
                if tokens.next() != Some("edge") {
                    return Err(fail(number, "p line must read `p edge <n> <m>`"));
                }
                let n = parse_count(tokens.next(), number, "node count")?;
                let m = parse_count(tokens.next(), number, "edge count")?;
                if tokens.next().is_some() {
                    return Err(fail(number, "trailing tokens after `p edge <n> <m>`"));
                }
                if n == 0 {
                    return Err(fail(number, "graph must have at least one node"));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(fail(number, "e line before the p line"));
                };
                let u = parse_count(tokens.next(), number, "edge endpoint")?;
                let v = parse_count(tokens.next(), number, "edge endpoint")?;
                if tokens.next().is_some() {
                    return Err(fail(number, "trailing tokens after `e <u> <v>`"));
                }
                if u < 1 || u > n || v < 1 || v > n {
                    return Err(fail(number, format!("endpoint ({u}, {v}) outside 1..={n}")));
                }
                if u == v {
                    return Err(fail(number, format!("self-loop at node {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => {
                return Err(fail(
                    number,
                    format!("unknown line type {other:?}; expected c, p, or e"),
                ));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }

    let Some((n, m)) = header else {
        return Err(fail(last_line, "missing `p edge <n> <m>` line"));
    };
    if edges.len() != m {
        return Err(fail(
            last_line,
            format!("p line declares {m} edges but {} were listed", edges.len()),
        ));
    }
    let graph = Graph::build(n, &edges)?;
    let mut doc = GraphDocument::new(graph);
    doc.metadata.name = name;
    Ok(doc)
}

fn parse_count(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| fail(line, format!("missing {what}")))?;
    token.parse().map_err(|_| {
        fail(
            line,
            format!("{what} {token:?} is not a non-negative integer"),
        )
    })
}

/// Render a document as DIMACS text: name as a comment, then the problem
/// line, then edges ascending, 1-based, one per line.
pub fn write_dimacs(doc: &GraphDocument) -> String {
    let g = &doc.graph;
    let mut out = String::new();
    if let Some(name) = &doc.metadata.name {
        out.push_str(&format!("c {name}\n"));
    }
    out.push_str(&format!("p edge {} {}\n", g.node_count(), g.edge_count()));
    for &(u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}
