use thiserror::Error;

/// Errors produced by classification, field construction, and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("order {q} exceeds the supported limit {limit}")]
    FieldTooLarge { q: u64, limit: u64 },

    /// The trace violates |a| <= 2*sqrt(q); no curve can exist.
    #[error("trace {a} violates the Hasse bound a^2 <= 4q for q = {q}")]
    HasseViolation { q: u64, a: i64 },

    /// The trace sits inside the Hasse interval but matches no Waterhouse
    /// condition, so the isogeny class is empty.
    #[error("inadmissible: {reason} (q = {q}, a = {a})")]
    Inadmissible { q: u64, a: i64, reason: String },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("elements belong to different fields")]
    MixedFields,

    #[error("curve is singular (discriminant is zero)")]
    SingularCurve,

    /// The zeta function has a double zero (a = ±2*sqrt(q)); the simple-zero
    /// closed form and the residue table do not apply.
    #[error("zeta function has a double zero at a = {a} over q = {q}")]
    DoubleZero { q: u64, a: i64 },

    /// The Frobenius angle is an irrational multiple of pi; the normalized
    /// ratio sequence is not periodic.
    #[error("Frobenius angle is irrational; ratios are not periodic")]
    NotPeriodic,
}

pub type Result<T> = std::result::Result<T, Error>;
