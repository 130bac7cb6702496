use crate::simplicial::Violation;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vertices are affinely dependent")]
    AffinelyDependent,
    #[error("point not in polyhedron")]
    PointOutside,
    #[error("invalid vertex index {0}")]
    InvalidVertex(usize),
    #[error("expected {expected} values, found {found}")]
    ValueCount { expected: usize, found: usize },
    #[error("subcomplex contains simplex {0:?} which is not in the complex")]
    NotSubcomplex(Vec<usize>),
    #[error("functions live on different polyhedra")]
    PolyhedraDiffer,
    #[error("function takes a negative value at vertex {vertex}")]
    NegativeFunction { vertex: usize },
    #[error("linear combination of no terms has no polyhedron")]
    EmptyCombination,
    #[error("not a hat family: {0}")]
    NotHats(String),
    #[error("lemma assertion failed: {message}\n{trace}")]
    Assertion { message: String, trace: String },
    #[error("invalid complex: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidComplex(Vec<Violation>),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by malformed input data rather than by a
    /// violated mathematical precondition.
    pub fn is_malformed_input(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::Json(_) | Error::Io(_) | Error::InvalidComplex(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
