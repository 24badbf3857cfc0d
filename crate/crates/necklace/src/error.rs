use num_bigint::BigUint;

/// Errors produced by the counting and enumeration routines.
///
/// The resource variants ([`Error::TermLimit`], [`Error::WordLimit`]) mean
/// the request was well-formed but too large for the configured bounds;
/// [`Error::NonIntegral`] means an internal exactness check failed and
/// always indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what} must be positive")]
    Zero { what: &'static str },

    #[error("tuple has no positive entries")]
    AllZero,

    #[error("total bead count overflows u64")]
    Overflow,

    #[error("{divisor} does not divide entry {entry}")]
    NotADivisor { divisor: u64, entry: u64 },

    #[error("operands have {left} and {right} variables")]
    VariableMismatch { left: usize, right: usize },

    #[error("expansion would hold up to {required} terms (limit {limit})")]
    TermLimit { required: BigUint, limit: u64 },

    #[error("enumeration would visit {required} words (limit {limit})")]
    WordLimit { required: BigUint, limit: u64 },

    #[error("integrality violated in {context}: {numerator} is not divisible by {denominator}")]
    NonIntegral {
        context: &'static str,
        numerator: BigUint,
        denominator: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
