use thiserror::Error;

/// Errors raised by the library. Each variant has a stable name, see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight vector must not be empty")]
    EmptyWeights,
    #[error("weight m_{index} = {value} is not a positive integer")]
    NonPositiveWeight { index: usize, value: i64 },
    #[error("weights must be nondecreasing, but m_{index} > m_{next}", next = .index + 1)]
    Unsorted { index: usize },
    #[error("weights must have gcd 1, found gcd {gcd}")]
    NotCoprime { gcd: u64 },
    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("map does not fix the origin: component {component} has a constant term")]
    DoesNotFixOrigin { component: usize },
    #[error("exponent {alpha} is not in the resonance set E_{index}")]
    NotResonant { index: usize, alpha: String },
    #[error("exponent {alpha} in component {index} has total degree below 2")]
    NotNonlinear { index: usize, alpha: String },
    #[error("coefficient pool is empty")]
    EmptyPool,
    #[error("weight vectors differ: {left} vs {right}")]
    WeightMismatch { left: String, right: String },
    #[error("linear map is singular")]
    SingularLinearMap,
    #[error("linear part of the map is singular")]
    SingularLinearPart,
    #[error("linear map is block diagonal, so no conjugate can exceed the resonance order")]
    BlockDiagonalInput,
    #[error("map is not a resonant conjugate of its linear part")]
    NoResonantConjugacy,
    #[error("trial count must be at least 1")]
    ZeroTrials,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable identifier used in machine-readable output.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyWeights => "EmptyWeights",
            Error::NonPositiveWeight { .. } => "NonPositiveWeight",
            Error::Unsorted { .. } => "Unsorted",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::DoesNotFixOrigin { .. } => "DoesNotFixOrigin",
            Error::NotResonant { .. } => "NotResonant",
            Error::NotNonlinear { .. } => "NotNonlinear",
            Error::EmptyPool => "EmptyPool",
            Error::WeightMismatch { .. } => "WeightMismatch",
            Error::SingularLinearMap => "SingularLinearMap",
            Error::SingularLinearPart => "SingularLinearPart",
            Error::BlockDiagonalInput => "BlockDiagonalInput",
            Error::NoResonantConjugacy => "NoResonantConjugacy",
            Error::ZeroTrials => "ZeroTrials",
            Error::Parse(_) => "Parse",
        }
    }

    /// Every name [`Error::name`] can return.
    pub const NAMES: &'static [&'static str] = &[
        "EmptyWeights",
        "NonPositiveWeight",
        "Unsorted",
        "NotCoprime",
        "IndexOutOfRange",
        "DimensionMismatch",
        "DoesNotFixOrigin",
        "NotResonant",
        "NotNonlinear",
        "EmptyPool",
        "WeightMismatch",
        "SingularLinearMap",
        "SingularLinearPart",
        "BlockDiagonalInput",
        "NoResonantConjugacy",
        "ZeroTrials",
        "Parse",
    ];
}

pub type Result<T> = std::result::Result<T, Error>;
