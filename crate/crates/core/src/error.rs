use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown Dynkin type {0:?}")]
    UnknownType(String),
    #[error("vertex {vertex} out of range for rank {rank}")]
    VertexOutOfRange { vertex: usize, rank: usize },
    #[error("v is not below w in the Bruhat order")]
    NotBruhatBelow,
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),
    #[error("operation supported in type A only")]
    TypeAOnly,
    #[error("matrix is not in B^-B: leading principal minor {0} vanishes")]
    NotInG0(usize),
    #[error("vertex {0} is frozen")]
    FrozenVertex(usize),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("Laurent division is not exact: {0}")]
    InexactDivision(String),
    #[error("division by zero while evaluating variable {0}")]
    ZeroDivision(usize),
    #[error("lambda matrix is not skew-symmetric")]
    NotSkew,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("subspace is not a submodule")]
    NotSubmodule,
    #[error("module relation fails at vertex {0}")]
    RelationFails(usize),
    #[error("decomposition did not converge")]
    DecompositionStalled,
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
