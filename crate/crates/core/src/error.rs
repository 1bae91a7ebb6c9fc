use thiserror::Error;

/// Everything that can go wrong while building or integrating polynomials.
///
/// The variants fall into three groups that the CLI maps onto exit codes:
/// usage problems (bad input), genericity failures (the sampled parameter
/// point hit a vanishing denominator or a pole collision), and internal
/// consistency failures such as an inexact division that the theory says
/// must be exact.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("non-generic parameters: {0} vanishes")]
    NonGeneric(String),

    #[error("pole collision while eliminating z{var}: {detail}")]
    PoleCollision { var: usize, detail: String },

    #[error("pole on the unit torus while eliminating z{var}: factor {factor}")]
    PoleOnTorus { var: usize, factor: String },

    #[error("unsupported integrand while eliminating z{var}: {detail}")]
    Unsupported { var: usize, detail: String },

    #[error("parameter {name} = {value} violates |{name}| < 1")]
    Modulus { name: String, value: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0} out of range")]
    OutOfRange(String),

    #[error("not a partition: {0:?}")]
    NotPartition(Vec<i32>),

    #[error("polynomial is not B_n-invariant")]
    NotInvariant,

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

impl Error {
    /// True when the failure is caused by an unlucky parameter point rather
    /// than by bad input or a bug; callers may resample and retry.
    pub fn is_genericity(&self) -> bool {
        matches!(
            self,
            Error::NonGeneric(_) | Error::PoleCollision { .. } | Error::PoleOnTorus { .. }
        )
    }

    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::OutOfRange(_)
                | Error::NotPartition(_)
                | Error::Modulus { .. }
                | Error::Unknown { .. }
                | Error::VariableMismatch { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
