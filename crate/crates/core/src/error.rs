use thiserror::Error;

/// Errors raised by the library. Every variant is a domain error; the CLI
/// prints [`Error::name`] and exits with status 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed Gauss code: {0}")]
    MalformedCode(String),
    #[error("malformed state string: {0}")]
    MalformedState(String),
    #[error("malformed graph: {0}")]
    MalformedGraph(String),
    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),
    #[error(
        "pretzel parameters ({0}, {1}, {2}) have more than one even entry and describe a link"
    )]
    InvalidPretzel(i64, i64, i64),
    #[error("pretzel parameters must be nonzero")]
    ZeroParameter,
    #[error("chord {0} is not unoriented in the given state")]
    NotUnoriented(usize),
    #[error("index {index} out of range 1..={bound}")]
    OutOfRange { index: usize, bound: usize },
    #[error("vertices {0} and {1} are already adjacent")]
    EdgeExists(usize, usize),
    #[error("vertices {0} and {1} are not adjacent")]
    EdgeMissing(usize, usize),
    #[error("the zero polynomial has no multiplicity of zero")]
    ZeroPolynomial,
    #[error("formula hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("state covers {state} chords but the diagram has {diagram}")]
    PartitionMismatch { state: usize, diagram: usize },
    #[error("double cover produced an odd loop count {0}")]
    OddCoverCount(usize),
    #[error("state erases chords; every crossing must be smoothed")]
    HasErasedChords,
    #[error("state has unoriented smoothings")]
    HasUnoriented,
    #[error("matrix is not a skew-adjacency matrix: {0}")]
    NotSkew(String),
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("counting methods disagree: {0}")]
    MethodDisagreement(String),
    #[error("closed form is not an integer: {0}")]
    NonIntegral(String),
}

impl Error {
    /// Stable variant name, used as the machine-readable error code.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MalformedCode(_) => "MalformedCode",
            Error::MalformedState(_) => "MalformedState",
            Error::MalformedGraph(_) => "MalformedGraph",
            Error::MalformedPolynomial(_) => "MalformedPolynomial",
            Error::InvalidPretzel(..) => "InvalidPretzel",
            Error::ZeroParameter => "ZeroParameter",
            Error::NotUnoriented(_) => "NotUnoriented",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::EdgeExists(..) => "EdgeExists",
            Error::EdgeMissing(..) => "EdgeMissing",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::HypothesisViolated(_) => "HypothesisViolated",
            Error::PartitionMismatch { .. } => "PartitionMismatch",
            Error::OddCoverCount(_) => "OddCoverCount",
            Error::HasErasedChords => "HasErasedChords",
            Error::HasUnoriented => "HasUnoriented",
            Error::NotSkew(_) => "NotSkew",
            Error::NotSquare { .. } => "NotSquare",
            Error::MethodDisagreement(_) => "MethodDisagreement",
            Error::NonIntegral(_) => "NonIntegral",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
