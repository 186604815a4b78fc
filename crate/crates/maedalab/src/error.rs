use thiserror::Error;

/// Errors shared by all subsystems.
///
/// Every variant carries a stable machine-readable code (see [`Error::code`])
/// so that front ends can map failures without parsing messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exhaustive enumeration is capped; the requested degree exceeds it.
    #[error("degree n={n} out of range for exhaustive enumeration (1..={max})")]
    DegreeOutOfRange { n: u32, max: u32 },

    /// The cycle length does not fit the group degree.
    #[error("cycle length d={d} invalid for degree n={n}")]
    InvalidCycleLength { n: u32, d: u32 },

    /// A stated precondition of the operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The rational lower bound of a denominator is not positive; the caller
    /// must raise `enclosure_terms` or `n`.
    #[error("denominator lower bound not positive; raise enclosure_terms or n")]
    NonpositiveDenominator,

    /// No even weight up to the bound yields a large enough dimension.
    #[error("empty tower: no even weight k <= {weight_bound} has dimension >= {min_degree}")]
    EmptyTower { weight_bound: u32, min_degree: u32 },

    /// Reduction mod p killed the leading coefficient.
    #[error("leading coefficient vanishes mod {p}")]
    LeadingCoefficientVanishes { p: u64 },

    /// Distinct-degree factorization requires a squarefree input.
    #[error("polynomial not squarefree mod {p}")]
    NotSquarefree { p: u64 },

    /// The zero polynomial has no factorization data.
    #[error("zero polynomial")]
    ZeroPolynomial,

    /// The operation requires a monic polynomial.
    #[error("polynomial must be monic")]
    NotMonic,

    /// A q-expansion was requested beyond its truncation order.
    #[error("precision {prec} too small; need at least {needed}")]
    PrecisionTooSmall { prec: usize, needed: usize },

    /// Input text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A parameter fails validation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DegreeOutOfRange { .. } => "degree-out-of-range",
            Error::InvalidCycleLength { .. } => "invalid-d",
            Error::Precondition(_) => "precondition-violation",
            Error::NonpositiveDenominator => "nonpositive-denominator",
            Error::EmptyTower { .. } => "empty-tower",
            Error::LeadingCoefficientVanishes { .. } => "leading-coefficient-vanishes",
            Error::NotSquarefree { .. } => "not-squarefree",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::NotMonic => "not-monic",
            Error::PrecisionTooSmall { .. } => "precision-too-small",
            Error::Parse(_) => "parse-error",
            Error::InvalidParameter(_) => "invalid-parameter",
        }
    }
}
