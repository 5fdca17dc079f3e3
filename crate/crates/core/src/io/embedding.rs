//! The `.emb` embedding format, version 1: a line-oriented text schema
//! carrying a graph plus optional coordinates and rotation lists.
//!
//! ```text
//! emb 1
//! name Sierpinski level 2      (optional)
//! nodes 4
//! edge 0 1                     (0-based, one per edge)
//! coord 0 0.0 1.5              (all nodes or none)
//! rot 0 1 3 2                  (neighbours in drawing order; all or none)
//! ```

use super::GraphDocument;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transforms::RotationSystem;

fn fail(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        format: "embedding",
        line,
        message: message.into(),
    }
}

/// Parse `.emb` text. Rotation lists, when present, are checked to be
/// permutations of each node's adjacency.
pub fn parse_embedding(text: &str) -> Result<GraphDocument> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (version_line, version) = lines
        .next()
        .ok_or_else(|| fail(0, "empty input; expected `emb 1`"))?;
    if version != "emb 1" {
        return Err(fail(
            version_line,
            format!("unsupported header {version:?}; expected `emb 1`"),
        ));
    }

    let mut name: Option<String> = None;
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut coords: Vec<Option<(f64, f64)>> = Vec::new();
    let mut rots: Vec<Option<Vec<usize>>> = Vec::new();
    let mut last_line = version_line;

    for (number, line) in lines {
        last_line = number;
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().expect("blank lines are filtered");
        match keyword {
            "name" => {
                if name.is_some() {
                    return Err(fail(number, "second name line"));
                }
                name = Some(line["name".len()..].trim().to_string());
            }
            "nodes" => {
                if n.is_some() {
                    return Err(fail(number, "second nodes line"));
                }
                let count = parse_usize(tokens.next(), number, "node count")?;
                if count == 0 {
                    return Err(fail(number, "graph must have at least one node"));
                }
                expect_end(tokens.next(), number)?;
                coords = vec![None; count];
                rots = vec![None; count];
                n = Some(count);
            }
            "edge" => {
                let n = n.ok_or_else(|| fail(number, "edge line before nodes line"))?;
                let u = parse_node(tokens.next(), number, n)?;
                let v = parse_node(tokens.next(), number, n)?;
                expect_end(tokens.next(), number)?;
                edges.push((u, v));
            }
            "coord" => {
                let n = n.ok_or_else(|| fail(number, "coord line before nodes line"))?;
                let v = parse_node(tokens.next(), number, n)?;
                let x = parse_float(tokens.next(), number, "x coordinate")?;
                let y = parse_float(tokens.next(), number, "y coordinate")?;
                expect_end(tokens.next(), number)?;
                if coords[v].is_some() {
                    return Err(fail(number, format!("second coord line for node {v}")));
                }
                coords[v] = Some((x, y));
            }
            "rot" => {
                let n = n.ok_or_else(|| fail(number, "rot line before nodes line"))?;
                let v = parse_node(tokens.next(), number, n)?;
                let mut order = Vec::new();
                for token in tokens {
                    order.push(parse_node(Some(token), number, n)?);
                }
                if rots[v].is_some() {
                    return Err(fail(number, format!("second rot line for node {v}")));
                }
                rots[v] = Some(order);
            }
            other => {
                return Err(fail(number, format!("unknown keyword {other:?}")));
            }
        }
    }

    let Some(n) = n else {
        return Err(fail(last_line, "missing nodes line"));
    };
    let graph = Graph::build(n, &edges)?;

    let coordinates = collect_all_or_none(coords, last_line, "coord")?;
    let rotation = match collect_all_or_none(rots, last_line, "rot")? {
        Some(rotation) => {
            let rotation = RotationSystem { rotation };
            rotation.validate(&graph)?;
            Some(rotation)
        }
        None => None,
    };

    let mut doc = GraphDocument::new(graph);
    doc.coordinates = coordinates;
    doc.rotation = rotation;
    doc.metadata.name = name;
    Ok(doc)
}

fn collect_all_or_none<T>(
    items: Vec<Option<T>>,
    line: usize,
    what: &str,
) -> Result<Option<Vec<T>>> {
    let present = items.iter().filter(|x| x.is_some()).count();
    if present == 0 {
        return Ok(None);
    }
    if present < items.len() {
        let missing = items.iter().position(|x| x.is_none()).unwrap();
        return Err(fail(
            line,
            format!(
                "{what} lines cover {present} of {} nodes (node {missing} missing)",
                items.len()
            ),
        ));
    }
    Ok(Some(items.into_iter().map(|x| x.unwrap()).collect()))
}

fn parse_usize(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| fail(line, format!("missing {what}")))?;
    token.parse().map_err(|_| {
        fail(
            line,
            format!("{what} {token:?} is not a non-negative integer"),
        )
    })
}

fn parse_node(token: Option<&str>, line: usize, n: usize) -> Result<usize> {
    let v = parse_usize(token, line, "node index")?;
    if v >= n {
        return Err(fail(line, format!("node index {v} outside 0..{n}")));
    }
    Ok(v)
}

fn parse_float(token: Option<&str>, line: usize, what: &str) -> Result<f64> {
    let token = token.ok_or_else(|| fail(line, format!("missing {what}")))?;
    let value: f64 = token
        .parse()
        .map_err(|_| fail(line, format!("{what} {token:?} is not a number")))?;
    if !value.is_finite() {
        return Err(fail(line, format!("{what} must be finite")));
    }
    Ok(value)
}

fn expect_end(token: Option<&str>, line: usize) -> Result<()> {
    match token {
        None => Ok(()),
        Some(extra) => Err(fail(line, format!("unexpected trailing token {extra:?}"))),
    }
}

/// Render a document as `.emb` text in canonical line order.
pub fn write_embedding(doc: &GraphDocument) -> String {
    let mut out = String::from("emb 1\n");
    if let Some(name) = &doc.metadata.name {
        out.push_str(&format!("name {name}\n"));
    }
    out.push_str(&format!("nodes {}\n", doc.graph.node_count()));
    for &(u, v) in doc.graph.edges() {
        out.push_str(&format!("edge {u} {v}\n"));
    }
    if let Some(coords) = &doc.coordinates {
        for (v, (x, y)) in coords.iter().enumerate() {
            out.push_str(&format!("coord {v} {x} {y}\n"));
        }
    }
    if let Some(rotation) = &doc.rotation {
        for (v, order) in rotation.rotation.iter().enumerate() {
            out.push_str(&format!("rot {v}"));
            for w in order {
                out.push_str(&format!(" {w}"));
            }
            out.push('\n');
        }
    }
    out
}
