//! Checks and closed forms over finished colourings: clash reports, the
//! chromatic-index dichotomy, Euler's relation for plane graphs, the
//! Heawood bound, and walks encoded as colour sequences.

use crate::colouring::{Colouring, ColouringKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transforms::{self, RotationSystem};

/// Outcome of scanning a colouring for clashes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    /// every adjacent pair of elements sharing a label, as stored edge pairs
    pub clash_list: Vec<(usize, usize)>,
    pub k: usize,
}

/// Scan `colouring` against the adjacency of `context`, whose nodes are the
/// coloured elements: the graph itself for node colourings, its line graph
/// for edge colourings, its dual for face colourings.
pub fn verify(context: &Graph, colouring: &Colouring) -> Result<VerificationReport> {
    if colouring.len() != context.node_count() {
        return Err(Error::SizeMismatch {
            expected: context.node_count(),
            found: colouring.len(),
        });
    }
    let clash_list: Vec<(usize, usize)> = context
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| colouring.assignment[u] == colouring.assignment[v])
        .collect();
    Ok(VerificationReport {
        valid: clash_list.is_empty(),
        clash_list,
        k: colouring.k,
    })
}

fn expect_kind(colouring: &Colouring, expected: ColouringKind) -> Result<()> {
    if colouring.kind != expected {
        return Err(Error::WrongColouringKind {
            expected: expected.name(),
            found: colouring.kind.name(),
        });
    }
    Ok(())
}

/// [`verify`] a node colouring of `g`.
pub fn verify_node_colouring(g: &Graph, colouring: &Colouring) -> Result<VerificationReport> {
    expect_kind(colouring, ColouringKind::Node)?;
    verify(g, colouring)
}

/// [`verify`] an edge colouring of `g`; clash pairs are edge indices.
pub fn verify_edge_colouring(g: &Graph, colouring: &Colouring) -> Result<VerificationReport> {
    expect_kind(colouring, ColouringKind::Edge)?;
    let line = transforms::line_graph(g)?;
    verify(&line.line_graph, colouring)
}

/// [`verify`] a face colouring of the plane graph given by `g` and
/// `rotation`; clash pairs are face indices.
pub fn verify_face_colouring(
    g: &Graph,
    rotation: &RotationSystem,
    colouring: &Colouring,
) -> Result<VerificationReport> {
    expect_kind(colouring, ColouringKind::Face)?;
    let dual = transforms::dual_graph(g, rotation, None)?;
    verify(&dual.dual, colouring)
}

/// Where a graph falls in the chromatic-index dichotomy: the edges need
/// either exactly the maximum degree of colours or one more.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeClass {
    /// chromatic index equals the maximum degree
    Class1,
    /// chromatic index exceeds the maximum degree by one
    Class2,
    /// no exact chromatic index is available
    Unknown,
}

/// Classify `g` from a chromatic index established by an exact method;
/// `None` (only heuristic bounds known) yields [`EdgeClass::Unknown`].
pub fn edge_class(g: &Graph, certified_chromatic_index: Option<usize>) -> Result<EdgeClass> {
    let max_degree = g.max_degree();
    match certified_chromatic_index {
        None => Ok(EdgeClass::Unknown),
        Some(value) if value == max_degree => Ok(EdgeClass::Class1),
        Some(value) if value == max_degree + 1 => Ok(EdgeClass::Class2),
        Some(value) => Err(Error::VizingViolation { value, max_degree }),
    }
}

/// Largest chromatic number over all graphs drawable on a torus with
/// `holes` holes, evaluated in exact integer arithmetic.
pub fn heawood_bound(holes: usize) -> Result<usize> {
    if holes == 0 {
        return Err(Error::InvalidParameter(
            "the bound applies to surfaces with at least one hole".into(),
        ));
    }
    let radicand = holes
        .checked_mul(48)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(|| Error::InvalidParameter("hole count overflows the bound formula".into()))?;
    Ok((7 + radicand.isqrt()) / 2)
}

/// Does a connected plane graph with these node, edge, and face counts
/// satisfy Euler's relation?
pub fn euler_check(nodes: usize, edges: usize, faces: usize) -> bool {
    nodes + faces == edges + 2
}

/// A walk compressed to its start node plus the colour of each edge
/// traversed, relative to a proper edge colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkCode {
    pub start: usize,
    pub colour_sequence: Vec<usize>,
}

fn check_edge_colouring(g: &Graph, edge_colouring: &Colouring) -> Result<()> {
    expect_kind(edge_colouring, ColouringKind::Edge)?;
    if edge_colouring.len() != g.edge_count() {
        return Err(Error::SizeMismatch {
            expected: g.edge_count(),
            found: edge_colouring.len(),
        });
    }
    Ok(())
}

fn check_walk_node(g: &Graph, v: usize) -> Result<()> {
    if v >= g.node_count() {
        return Err(Error::InvalidParameter(format!(
            "walk node {v} is out of range for a graph on {} nodes",
            g.node_count()
        )));
    }
    Ok(())
}

/// Record the edge colours along `walk`. A single node is a walk of length
/// zero and encodes to an empty colour sequence.
pub fn encode_walk(g: &Graph, edge_colouring: &Colouring, walk: &[usize]) -> Result<WalkCode> {
    check_edge_colouring(g, edge_colouring)?;
    let Some((&start, rest)) = walk.split_first() else {
        return Err(Error::InvalidParameter(
            "a walk needs at least its start node".into(),
        ));
    };
    check_walk_node(g, start)?;
    let mut colour_sequence = Vec::with_capacity(rest.len());
    let mut current = start;
    for (step, &next) in rest.iter().enumerate() {
        check_walk_node(g, next)?;
        let Some(index) = g.edge_index(current, next) else {
            return Err(Error::NotAWalk {
                step,
                u: current,
                v: next,
            });
        };
        colour_sequence.push(edge_colouring.assignment[index]);
        current = next;
    }
    Ok(WalkCode {
        start,
        colour_sequence,
    })
}

/// Replay a [`WalkCode`]: from each node, follow the unique incident edge
/// bearing the next colour. Properness of the edge colouring is what makes
/// the step unambiguous, and a colour absent at the current node means the
/// code does not describe a walk in `g`.
pub fn decode_walk(g: &Graph, edge_colouring: &Colouring, code: &WalkCode) -> Result<Vec<usize>> {
    check_edge_colouring(g, edge_colouring)?;
    check_walk_node(g, code.start)?;
    let mut walk = Vec::with_capacity(code.colour_sequence.len() + 1);
    walk.push(code.start);
    let mut current = code.start;
    for (step, &colour) in code.colour_sequence.iter().enumerate() {
        let mut matched = None;
        for &w in g.neighbours(current) {
            let index = g.edge_index(current, w).expect("adjacency lists an edge");
            if edge_colouring.assignment[index] == colour {
                if matched.is_some() {
                    return Err(Error::InvalidParameter(format!(
                        "two edges of colour {colour} meet at node {current}; \
                         the edge colouring is improper"
                    )));
                }
                matched = Some(w);
            }
        }
        let Some(next) = matched else {
            return Err(Error::WalkLeavesGraph {
                step,
                node: current,
                colour,
            });
        };
        walk.push(next);
        current = next;
    }
    Ok(walk)
}
