//! File formats and the graph-database fetch client.
//!
//! Four interchange formats are spoken here: DIMACS `.col` for colouring
//! benchmarks, graph6 `.g6` for compact interchange, a structured `.emb`
//! text format carrying coordinates and rotations, and the benchmark CSV
//! schema. All parsers report positioned errors and never panic on
//! malformed input.

mod csv;
mod dimacs;
mod embedding;
mod graph6;
mod hog;

pub use csv::{read_benchmark_csv, write_benchmark_csv, BenchmarkRecord};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use embedding::{parse_embedding, write_embedding};
pub use graph6::{parse_graph6, write_graph6};
pub use hog::{hog_cache_path, hog_fetch, FetchFailure, HttpTransport, Transport};

use crate::error::Result;
use crate::generators::EmbeddedGraph;
use crate::graph::Graph;
use crate::transforms::RotationSystem;

/// Free-text facts about where a graph came from.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Metadata {
    pub name: Option<String>,
    pub source: Option<String>,
    pub hog_id: Option<u64>,
}

/// A graph as read from or written to a file, with whatever geometry the
/// format carried.
#[derive(Debug, Clone)]
pub struct GraphDocument {
    pub graph: Graph,
    pub coordinates: Option<Vec<(f64, f64)>>,
    pub rotation: Option<RotationSystem>,
    pub metadata: Metadata,
}

impl GraphDocument {
    pub fn new(graph: Graph) -> Self {
        GraphDocument {
            graph,
            coordinates: None,
            rotation: None,
            metadata: Metadata::default(),
        }
    }

    pub fn from_embedded(eg: &EmbeddedGraph) -> Self {
        GraphDocument {
            graph: eg.graph.clone(),
            coordinates: Some(eg.coordinates.clone()),
            rotation: None,
            metadata: Metadata::default(),
        }
    }

    /// The document's drawing, when coordinates are present and usable.
    pub fn embedded(&self) -> Result<EmbeddedGraph> {
        let coordinates = self
            .coordinates
            .clone()
            .ok_or(crate::error::Error::MissingEmbedding)?;
        EmbeddedGraph::new(self.graph.clone(), coordinates)
    }

    /// The rotation system to trace faces with: the stored one if the file
    /// carried it, otherwise the one induced by stored coordinates.
    pub fn rotation_or_derived(&self) -> Result<RotationSystem> {
        if let Some(rotation) = &self.rotation {
            return Ok(rotation.clone());
        }
        Ok(crate::transforms::rotation_from_coordinates(
            &self.embedded()?,
        ))
    }
}
