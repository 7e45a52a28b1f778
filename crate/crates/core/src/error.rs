//! Error type shared across the crate.

use thiserror::Error;

use crate::rational::Rational;
use crate::series::Variable;

/// Errors reported by the exact-arithmetic kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("cannot parse partition from {0:?}")]
    ParsePartition(String),
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("special partition needs weight n >= m*l, got l={l}, m={m}, n={n}")]
    SpecialPartitionTooSmall { l: u32, m: u32, n: u32 },
    #[error("series variables differ: {0} vs {1}")]
    VariableMismatch(Variable, Variable),
    #[error("series has no nonzero coefficient in its window and cannot be inverted")]
    InvertZeroSeries,
    #[error("negative exponents are only supported for the epsilon variable, got {0}")]
    NegativeExponent(Variable),
    #[error("series exponential requires nonnegative exponents and zero constant term")]
    ExpPrecondition,
    #[error("series logarithm requires constant term 1")]
    LogPrecondition,
    #[error("exponent must be a positive integer, got {0}")]
    NonPositiveExponent(i64),
    #[error("profile of weight {got} does not match degree {expected}")]
    WeightMismatch { expected: u32, got: u32 },
    #[error("branch profiles must have colength at least 1")]
    IdentityProfile,
    #[error("q must satisfy 0 < q < 1, got {0}")]
    QOutOfRange(Rational),
    #[error("model requires an exact rational q in (0, 1)")]
    MissingQ,
    #[error("operation is defined for the quantum models (eprime, e, h) only")]
    NotQuantumModel,
    #[error("class-algebra oracle supports degree n <= {max}, got {n}")]
    OracleDegreeTooLarge { n: u32, max: u32 },
    #[error("partition function vanishes; normalized measure is undefined")]
    ZeroPartitionFunction,
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
