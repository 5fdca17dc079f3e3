use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at node {0} is not allowed")]
    SelfLoop(usize),
    #[error("graph has no edges to colour")]
    NoEdges,
    #[error("graph is not connected")]
    Disconnected,
    #[error("face colouring undefined across a bridge (edge {u}-{v} borders a single face)")]
    Bridge { u: usize, v: usize },
    #[error("nodes {a} and {b} share identical coordinates")]
    CoincidentCoordinates { a: usize, b: usize },
    #[error("order is not a permutation of the node indices")]
    InvalidPermutation,
    #[error("rotation at node {node} is not a permutation of its adjacency list")]
    InvalidRotation { node: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("colouring kind {found} where {expected} was required")]
    WrongColouringKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error("colouring covers {found} elements but {expected} were expected")]
    SizeMismatch { expected: usize, found: usize },
    #[error("parent assignment uses label {label} but only {k} colours are allowed")]
    LabelOutOfRange { label: usize, k: usize },
    #[error("certified chromatic index {value} is outside the Vizing window {{{max_degree}, {}}}", max_degree + 1)]
    VizingViolation { value: usize, max_degree: usize },
    #[error("walk step {step}: nodes {u} and {v} are not adjacent")]
    NotAWalk { step: usize, u: usize, v: usize },
    #[error("walk leaves the graph: no edge of colour {colour} at node {node} (step {step})")]
    WalkLeavesGraph {
        step: usize,
        node: usize,
        colour: usize,
    },
    #[error("{format} parse error at line {line}: {message}")]
    Parse {
        format: &'static str,
        line: usize,
        message: String,
    },
    #[error("no embedding present: the operation needs coordinates or a rotation system")]
    MissingEmbedding,
    #[error("HTTP request for HoG graph {id} failed: {message}")]
    HttpFailure { id: u64, message: String },
    #[error("House of Graphs has no graph with id {0}")]
    UnknownHogId(u64),
    #[error("HoG graph {0} is not cached and network access is disabled")]
    NotCached(u64),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
