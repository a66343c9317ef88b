use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("graph has {0} vertices; supported range is 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("matrix is not square")]
    NonSquare,
    #[error("matrix is not symmetric")]
    NonSymmetric,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("inexact division, remainder {remainder}")]
    InexactDivision { remainder: String },
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(String),
    #[error("empty interval: lower endpoint must be below upper endpoint")]
    EmptyInterval,
    #[error("no sign change on the bracket")]
    NoSignChange,
    #[error("partition is not distance equitable: vertex {vertex} disagrees within class {class}")]
    NotEquitable { vertex: usize, class: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("graph needs at least 2 vertices")]
    TooFewVertices,
    #[error("enumeration supports 2..=7 vertices, got {0}")]
    EnumerationRange(usize),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("factorization mismatch at factor {factor}")]
    FactorizationMismatch { factor: String },
    #[error("root location check failed: {0}")]
    RootLocationFailure(String),
    #[error("sturm proof check failed: {0}")]
    SturmProof(String),
}

pub type Result<T> = std::result::Result<T, Error>;
