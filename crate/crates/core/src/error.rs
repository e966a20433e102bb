use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("invalid edge ({0}, {1}): self-loops are not allowed")]
    InvalidEdge(usize, usize),
    #[error("edge ({0}, {1}) is not present in the graph")]
    NoSuchEdge(usize, usize),
    #[error("source set must be nonempty")]
    EmptySource,
    #[error("source set does not induce a connected subgraph")]
    SourceNotConnected,
    #[error("graph is not in the family G_{ell}: {reason}")]
    NotInFamily { ell: usize, reason: String },
    #[error("layer {layer} does not induce a bipartite subgraph")]
    LayerNotBipartite { layer: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("coloring is not proper on edge ({0}, {1})")]
    ImproperColoring(usize, usize),
    #[error("coloring covers {got} vertices, graph has {expected}")]
    ColoringSize { expected: usize, got: usize },
    #[error("not a 5-hole: {0}")]
    NotAFiveHole(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
    #[error("malformed graph6 at byte {position}: {reason}")]
    MalformedGraph6 { position: usize, reason: String },
    #[error("malformed edge list at line {line}: {reason}")]
    MalformedEdgeList { line: usize, reason: String },
    #[error("malformed witness bundle: {0}")]
    MalformedBundle(String),
    #[error("input graph {index}: {reason}")]
    Input { index: usize, reason: Box<Error> },
    #[error("I/O error at graph {index}: {message}")]
    Io { index: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
