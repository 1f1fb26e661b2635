use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("congruence filter violated: monomial exponent {numerator}/{denominator} is not integral")]
    CongruenceFilterViolated { numerator: i64, denominator: i64 },

    #[error("identity parameters inconsistent: (n^2 - a)/b is not a nonnegative integer at n = {n}")]
    IdentityInconsistent { n: i64 },

    #[error("no nonzero Fourier coefficient G(k) for 1 <= k <= {period}")]
    NoNonzeroFourierCoefficient { period: u64 },

    #[error("strange-identity data inconsistent with integrality: xi({index}) = {value}")]
    NonIntegral { index: usize, value: String },

    #[error("odd zeta argument {0}: use interval evaluation")]
    OddZetaArgument(u32),

    #[error("comparison undecided at precision cap of {cap} bits")]
    Undecided { cap: u32 },

    #[error("interval domain error: {0}")]
    Domain(String),

    #[error("zero coefficient at n = {0}")]
    ZeroCoefficient(usize),

    #[error("not certified by the infinite-family criterion: {0}")]
    NotCertified(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
