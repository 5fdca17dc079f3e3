//! Node, edge, and face colouring for simple undirected graphs.
//!
//! The crate covers the full pipeline: graph construction and generators,
//! colouring algorithms from greedy to exact backtracking and a hybrid
//! evolutionary search, reductions of edge and face colouring to node
//! colouring, verification, bounds, file formats, and SVG rendering.

pub mod analysis;
pub mod colouring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod render;
pub mod rng;
pub mod transforms;

pub use analysis::{
    decode_walk, edge_class, encode_walk, euler_check, heawood_bound, verify,
    verify_edge_colouring, verify_face_colouring, verify_node_colouring, EdgeClass,
    VerificationReport, WalkCode,
};
pub use colouring::{
    backtracking_colour, colour_edges, colour_faces, colour_faces_embedded, colour_nodes,
    dsatur_colour, gpx_crossover, greedy_colour, hea_colour, tabu_search, tabu_search_with,
    AlgorithmChoice, ColourOutcome, Colouring, ColouringKind, FaceColouring, HeaParams,
    OptimalityCertificate, TabuParams,
};
pub use error::{Error, Result};
pub use generators::{EmbeddedGraph, TreeLayout};
pub use graph::{Bipartition, CliqueResult, Graph};
pub use io::{BenchmarkRecord, GraphDocument, Metadata};
pub use render::{
    circular_grouped_layout, multipartite_layout, render_document, render_edges_svg,
    render_faces_svg, render_nodes_svg, spring_layout, write_dot, Layout, LayoutStyle, Palette,
    RenderOptions,
};
pub use rng::Seed;
pub use transforms::{DualGraphResult, FaceSet, LineGraphResult, RotationSystem};
