//! Colouring algorithms and the shared [`Colouring`] result type.
//!
//! Node colourings come from four engines of increasing effort: greedy
//! sweeps over a caller-supplied order, the saturation-degree heuristic,
//! exhaustive backtracking with clique pruning, and a hybrid evolutionary
//! search. Edge and face colourings reuse the node engines through the line
//! graph and the dual graph respectively.

mod backtracking;
mod dsatur;
mod greedy;
mod hea;
mod tabu;

pub use backtracking::backtracking_colour;
pub use dsatur::dsatur_colour;
pub use greedy::greedy_colour;
pub use hea::{gpx_crossover, hea_colour, HeaParams};
pub use tabu::{tabu_search, tabu_search_with, TabuParams};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::transforms::{self, DualGraphResult, FaceSet, RotationSystem};

/// What the colours are attached to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColouringKind {
    Node,
    Edge,
    Face,
}

impl ColouringKind {
    pub fn name(self) -> &'static str {
        match self {
            ColouringKind::Node => "node",
            ColouringKind::Edge => "edge",
            ColouringKind::Face => "face",
        }
    }
}

/// A proper colouring in canonical form: labels are `0..k` and appear in
/// increasing order of first use along the element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub kind: ColouringKind,
    /// one label per element, indexed like the nodes, the edge list, or the
    /// face list it refers to
    pub assignment: Vec<usize>,
    /// number of distinct labels
    pub k: usize,
    /// short name of the algorithm that produced it
    pub provenance: String,
}

impl Colouring {
    pub fn node(provenance: impl Into<String>, labels: Vec<usize>) -> Self {
        Colouring::with_kind(ColouringKind::Node, provenance, labels)
    }

    pub fn edge(provenance: impl Into<String>, labels: Vec<usize>) -> Self {
        Colouring::with_kind(ColouringKind::Edge, provenance, labels)
    }

    pub fn face(provenance: impl Into<String>, labels: Vec<usize>) -> Self {
        Colouring::with_kind(ColouringKind::Face, provenance, labels)
    }

    /// Build a colouring from raw labels, renaming them so that the first
    /// element gets 0 and each later element introduces at most one new
    /// label. Two assignments that induce the same partition normalise to
    /// identical vectors.
    pub fn with_kind(
        kind: ColouringKind,
        provenance: impl Into<String>,
        labels: Vec<usize>,
    ) -> Self {
        let (assignment, k) = normalise(&labels);
        Colouring {
            kind,
            assignment,
            k,
            provenance: provenance.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

fn normalise(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut rename: Vec<Option<usize>> = vec![
        None;
        labels.len().max(
            labels.iter().map(|&c| c + 1).max().unwrap_or(0)
        )
    ];
    let mut next = 0;
    let assignment = labels
        .iter()
        .map(|&c| {
            *rename[c].get_or_insert_with(|| {
                let fresh = next;
                next += 1;
                fresh
            })
        })
        .collect();
    (assignment, next)
}

/// Bounds attached to a colouring by the search that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OptimalityCertificate {
    /// a clique of this size was found, so no colouring can use fewer
    pub lower_bound: usize,
    /// colours actually used by the returned assignment
    pub upper_bound: usize,
    /// the returned assignment is provably minimum
    pub optimal: bool,
    /// the whole search tree was examined (as opposed to meeting the lower
    /// bound early or running out of budget)
    pub search_exhausted: bool,
}

/// Which engine [`colour_nodes`] and friends should run.
#[derive(Debug, Clone)]
pub enum AlgorithmChoice {
    /// greedy sweep in natural node order
    Greedy,
    /// saturation-degree heuristic
    Dsatur,
    /// exact search, optionally budgeted by tentative assignments
    Backtracking { node_limit: Option<u64> },
    /// hybrid evolutionary search
    Hea(HeaParams),
}

/// A colouring plus whatever optimality evidence the engine could offer.
/// The heuristics leave `certificate` empty: they prove nothing.
#[derive(Debug, Clone)]
pub struct ColourOutcome {
    pub colouring: Colouring,
    pub certificate: Option<OptimalityCertificate>,
}

/// Colour the nodes of `g` with the chosen engine.
pub fn colour_nodes(g: &Graph, choice: &AlgorithmChoice) -> Result<ColourOutcome> {
    let outcome = match choice {
        AlgorithmChoice::Greedy => {
            let order: Vec<usize> = (0..g.node_count()).collect();
            ColourOutcome {
                colouring: greedy_colour(g, &order)?,
                certificate: None,
            }
        }
        AlgorithmChoice::Dsatur => ColourOutcome {
            colouring: dsatur_colour(g),
            certificate: None,
        },
        AlgorithmChoice::Backtracking { node_limit } => {
            let (colouring, certificate) = backtracking_colour(g, *node_limit);
            ColourOutcome {
                colouring,
                certificate: Some(certificate),
            }
        }
        AlgorithmChoice::Hea(params) => {
            let (colouring, certificate) = hea_colour(g, params)?;
            ColourOutcome {
                colouring,
                certificate: Some(certificate),
            }
        }
    };
    Ok(outcome)
}

/// Colour the edges of `g` by node-colouring its line graph. The i-th label
/// applies to the i-th edge of `g.edges()`.
pub fn colour_edges(g: &Graph, choice: &AlgorithmChoice) -> Result<ColourOutcome> {
    let line = transforms::line_graph(g)?;
    let mut outcome = colour_nodes(&line.line_graph, choice)?;
    outcome.colouring.kind = ColouringKind::Edge;
    Ok(outcome)
}

/// A face colouring together with the combinatorial scaffolding it lives on.
#[derive(Debug, Clone)]
pub struct FaceColouring {
    pub colouring: Colouring,
    pub certificate: Option<OptimalityCertificate>,
    pub faces: FaceSet,
    pub dual: DualGraphResult,
}

/// Colour the faces of the plane graph described by `g` and `rotation` so
/// that faces sharing an edge differ. Works on the dual graph; fails on
/// bridges, where a face would border itself. Coordinates, when given,
/// identify the unbounded face by area rather than by walk length.
pub fn colour_faces(
    g: &Graph,
    rotation: &RotationSystem,
    coordinates: Option<&[(f64, f64)]>,
    choice: &AlgorithmChoice,
) -> Result<FaceColouring> {
    let faces = transforms::trace_faces(g, rotation)?;
    let dual = transforms::dual_graph(g, rotation, coordinates)?;
    let mut outcome = colour_nodes(&dual.dual, choice)?;
    outcome.colouring.kind = ColouringKind::Face;
    Ok(FaceColouring {
        colouring: outcome.colouring,
        certificate: outcome.certificate,
        faces,
        dual,
    })
}

/// [`colour_faces`] for an embedded graph, deriving the rotation system
/// from its coordinates.
pub fn colour_faces_embedded(
    eg: &crate::generators::EmbeddedGraph,
    choice: &AlgorithmChoice,
) -> Result<FaceColouring> {
    if !eg.is_plane_drawing() {
        return Err(Error::InvalidParameter(
            "drawing has crossing edges; faces are not well defined".into(),
        ));
    }
    let rotation = transforms::rotation_from_coordinates(eg);
    colour_faces(&eg.graph, &rotation, Some(&eg.coordinates), choice)
}
