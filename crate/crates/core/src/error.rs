use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("rotation system is not planar: traced {faces} faces, Euler formula needs {expected}")]
    NotPlanar { faces: usize, expected: usize },
    #[error("face {0} does not exist")]
    InvalidFace(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph has no edges")]
    Edgeless,
    #[error("coloring does not cover edge ({0}, {1})")]
    Uncolored(usize, usize),
    #[error("unsatisfiable parameters: {0}")]
    Unsatisfiable(String),
    #[error("input already contains a K5 minor")]
    HasK5Minor,
}
