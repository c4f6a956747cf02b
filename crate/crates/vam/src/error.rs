//! Crate-wide error type.

use crate::metrics::MetricResult;

/// Errors surfaced by the library.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Argument outside the mathematical domain of a function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structurally invalid call (wrong dimension, missing parameter, bad grammar).
    #[error("usage error: {0}")]
    Usage(String),

    /// Möbius evaluation at the pole of an inversion.
    #[error("pole: evaluation at the inversion center {0:?}")]
    Pole(Vec<f64>),

    /// A point lies on or outside the boundary of the domain.
    #[error("point outside the open domain: {0}")]
    OutsideDomain(String),

    /// The requested metric is not defined on the given domain variant.
    #[error("unsupported domain for this metric: {0}")]
    UnsupportedDomain(String),

    /// Requested radius cannot be attained by the metric along some ray.
    #[error("radius out of attainable range: {0}")]
    Range(String),

    /// Iterative solver stopped at the iteration cap; carries the best value found.
    #[error("solver did not converge within the iteration budget (best value {})", best.value)]
    Convergence { best: MetricResult },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
