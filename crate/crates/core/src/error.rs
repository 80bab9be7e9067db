use thiserror::Error;

use crate::scalar::ScalarError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),

    #[error("site {site} out of range for a {n_sites}-site chain")]
    SiteOutOfRange { site: usize, n_sites: usize },

    #[error("{what}: {value} is outside the supported range {min}..={max}")]
    OutOfRange { what: &'static str, value: i64, min: i64, max: i64 },

    #[error("site counts differ: {0} vs {1}")]
    SiteMismatch(usize, usize),

    #[error("zero vector where a nonzero state is required")]
    ZeroVector,

    #[error("state norm {0:e} is numerically zero")]
    DegenerateNorm(f64),

    #[error("state is not normalized (norm {0})")]
    NotNormalized(f64),

    #[error("invalid spin labels: {0}")]
    InvalidSpin(String),

    #[error("coefficient C_{missing}(N) is not known; patterns with {excitations} excitations need it")]
    UnsupportedOrder { missing: usize, excitations: usize },

    #[error("canonical form did not converge (residual {0:e})")]
    Convergence(f64),

    #[error("invalid state selector {input:?}: {reason}")]
    Selector { input: String, reason: String },

    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn range(what: &'static str, value: impl TryInto<i64>, min: i64, max: i64) -> Self {
        Error::OutOfRange { what, value: value.try_into().unwrap_or(i64::MAX), min, max }
    }
}
