use thiserror::Error;

/// Errors produced by the library.
///
/// Validation failures (bad input) and invariant violations (a computed
/// identity did not hold) are kept apart so that front ends can map them to
/// different exit statuses.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate interpolation nodes")]
    DegenerateNodes,
    #[error("interpolation needs {expected} nodes for degree {degree}, got {got}")]
    NodeCount {
        expected: usize,
        degree: usize,
        got: usize,
    },
    #[error("root of unity denominator must be positive")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polytope not full-dimensional")]
    NotFullDimensional,
    #[error("vertices must be lattice points")]
    NotLattice,
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),
    #[error("dilation must be positive")]
    DilationNotPositive,
    #[error("degree assumption violated for face {face:?}: interpolant of degree {degree} misses the validation node q = {node}")]
    DegreeAssumption {
        face: Vec<usize>,
        degree: usize,
        node: i64,
    },
    #[error("weight polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("weight polynomial has {got} variables but the polytope lives in dimension {expected}")]
    WeightDimension { expected: usize, got: usize },
    #[error("weight polynomial must be nonzero")]
    ZeroWeight,
    #[error("normal fan machinery requires a simple polytope")]
    NotSimple,
    #[error("not simple at vertex {0}")]
    NotSimpleAtVertex(usize),
    #[error("poset is not ranked: {0}")]
    NotRanked(String),
    #[error("no face with vertex set {0:?}")]
    UnknownFace(Vec<usize>),
    #[error("invalid corpus request: {0}")]
    InvalidCorpus(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors that signal a broken mathematical identity rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
