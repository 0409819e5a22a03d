use thiserror::Error;

/// Errors raised by construction, evaluation and ingestion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{component} knots must be nondecreasing and within [0,1], got ({knots})")]
    KnotOrder { component: &'static str, knots: String },

    #[error("leg condition fails for mu=({mu}) nu=({nu}): neither (e >= b2 and f1 >= c) nor (f2 <= a and g <= b1)")]
    LegCondition { mu: String, nu: String },

    #[error("membership + nonmembership exceeds 1 near x={x} (sum {sum})")]
    Pointwise { x: String, sum: String },

    #[error("{what} must lie in {range}, got {value}")]
    Domain { what: &'static str, range: &'static str, value: String },

    #[error("sequence index {index} is past the end of a {len}-term list")]
    Index { index: u64, len: usize },

    #[error("{method} needs {expected} input")]
    KindMismatch { method: String, expected: &'static str },

    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),

    #[error("equality certificate inapplicable: {0}")]
    CertificateInapplicable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("cell ({alternative}, {attribute}): {reason}")]
    Cell { alternative: String, attribute: String, reason: String },

    #[error("attribute weights sum to {sum}, expected exactly 1")]
    WeightSum { sum: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

impl Error {
    /// True for errors that say the input is not a well-formed number or
    /// system (as opposed to malformed syntax).
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Parse(_))
    }

    /// Stable name for machine-readable diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::KnotOrder { .. } => "KnotOrderError",
            Error::LegCondition { .. } => "LegConditionError",
            Error::Pointwise { .. } => "PointwiseError",
            Error::Domain { .. } => "DomainError",
            Error::Index { .. } => "IndexError",
            Error::KindMismatch { .. } => "KindMismatchError",
            Error::DivisionByZero(_) => "DivisionByZeroError",
            Error::CertificateInapplicable(_) => "CertificateInapplicableError",
            Error::Parse(_) => "ParseError",
            Error::Cell { .. } => "CellValidationError",
            Error::WeightSum { .. } => "WeightSumError",
            Error::Dimension(_) => "DimensionError",
        }
    }
}
