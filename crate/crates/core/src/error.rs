use thiserror::Error;

/// Errors reported by constructors, validators, and the expression parser.
///
/// Arithmetic on already-validated values panics on programmer errors
/// (e.g. mixing elements of different fields) instead of returning these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroExtensionDegree,
    #[error("field order {p}^{n} exceeds the supported scale 2^16")]
    FieldTooLarge { p: u64, n: u32 },
    #[error("defining polynomial must be monic of degree {expected}")]
    BadModulus { expected: u32 },
    #[error("defining polynomial is reducible over F_{p}")]
    ReducibleModulus { p: u64 },
    #[error("malformed field spec `{0}` (expected `p`, `p^n`, or `p^n:c0,c1,...,cn`)")]
    BadFieldSpec(String),
    #[error("element code {code} out of range for a field of order {order}")]
    ElementOutOfRange { code: u64, order: u64 },
    #[error("twist index {index} is neither 0 nor a positive multiple of p = {p}")]
    BadTwistIndex { index: u32, p: u64 },
    #[error("malformed twist `{0}` (expected comma-separated `index:coeff` pairs)")]
    BadTwistSpec(String),
    #[error("twist has the wrong shape for this operation: {0}")]
    WrongTwistShape(&'static str),
    #[error("generator images do not satisfy the Weyl relation [f(x), f(y)] = 1")]
    InvalidEndomorphism,
    #[error("generator images do not satisfy the derived relation of [x, y] = 1")]
    InvalidDerivation,
    #[error("polynomial is not supported on exponents divisible by p")]
    NotPMultipleSupport,
    #[error("exhaustive scan of {size} candidates exceeds the ceiling {ceiling}")]
    ScanTooLarge { size: u64, ceiling: u64 },
    #[error("parse error at byte {position}: {message}")]
    Parse { message: String, position: usize },
}
