use thiserror::Error;

/// Failures raised by the library. Variant names are stable: the CLI reports
/// them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("bracket of degree {degree} exceeds truncation {truncation}")]
    TruncationOverflow { degree: usize, truncation: usize },
    #[error("Lyndon counting needs generators of one common unsigned degree: {0}")]
    UnsupportedSignedCase(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("algebra is not quadratic: {0}")]
    QuadraticRequired(String),
    #[error("differential does not square to zero on generator {0}")]
    DifferentialNotSquareZero(String),
    #[error("extracted rank at degree {degree} is not an integer ({value})")]
    NonIntegralRank { degree: usize, value: String },
    #[error("extracted rank at degree {degree} is negative ({value})")]
    NegativeRank { degree: usize, value: String },
    #[error("odd degree {0} carries a nonzero dimension; the PBW series needs even degrees")]
    OddDegreeUnsupported(usize),
    #[error("result is not a Lie element in degree {0}")]
    NotPrimitive(usize),
    #[error("Lie datum has no nilpotency class")]
    NotNilpotent,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// The variant name, used as the machine-readable error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroConstantTerm => "ZeroConstantTerm",
            Error::TruncationOverflow { .. } => "TruncationOverflow",
            Error::UnsupportedSignedCase(_) => "UnsupportedSignedCase",
            Error::DegreeMismatch(_) => "DegreeMismatch",
            Error::QuadraticRequired(_) => "QuadraticRequired",
            Error::DifferentialNotSquareZero(_) => "DifferentialNotSquareZero",
            Error::NonIntegralRank { .. } => "NonIntegralRank",
            Error::NegativeRank { .. } => "NegativeRank",
            Error::OddDegreeUnsupported(_) => "OddDegreeUnsupported",
            Error::NotPrimitive(_) => "NotPrimitive",
            Error::NotNilpotent => "NotNilpotent",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
