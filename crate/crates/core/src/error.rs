use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("{msg} at piece {piece}")]
    InvalidPhi { piece: usize, msg: String },

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("tail bound precondition violated: S_hi/N = {ratio} lies beyond the first piece (ends at {first_end})")]
    TailPrecondition { ratio: f64, first_end: f64 },

    #[error("no finite scaling: the modular is infinite at every tested scale")]
    NoFiniteScaling,

    #[error("undecidable comparison near {at}: enclosure still straddles the target at the tightest tolerance")]
    Undecidable { at: f64 },

    #[error("the space is trivial: it contains only the zero sequence")]
    TrivialSpace,

    #[error("the rotundity criterion requires the Delta2 condition at zero")]
    Delta2Required,

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("structurally affine interval [{lo}, {hi}] leaves no room for the construction margins")]
    SaiTooSmall { lo: f64, hi: f64 },

    #[error("no admissible k1: the base modular is not certified below 1")]
    NoK1,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Stable upper-case name of the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "SYNTAX",
            Error::InvalidPhi { .. } => "INVALID_PHI",
            Error::InvalidSequence(_) => "INVALID_SEQUENCE",
            Error::TailPrecondition { .. } => "TAIL_PRECONDITION",
            Error::NoFiniteScaling => "NO_FINITE_SCALING",
            Error::Undecidable { .. } => "UNDECIDABLE",
            Error::TrivialSpace => "TRIVIAL_SPACE",
            Error::Delta2Required => "DELTA2_REQUIRED",
            Error::NotApplicable(_) => "NOT_APPLICABLE",
            Error::SaiTooSmall { .. } => "SAI_TOO_SMALL",
            Error::NoK1 => "NO_K1",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
        }
    }

    /// Whether the error is caused by malformed input rather than by the
    /// computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::InvalidPhi { .. } | Error::InvalidSequence(_) | Error::InvalidArgument(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
