//! Error type shared across the crate.

use thiserror::Error;

/// Errors surfaced by the numerical kernels.
///
/// Non-convergence inside an iteration budget is usually reported in-band
/// (`converged = false` on [`crate::SpecialValue`] / [`crate::QuadratureResult`]);
/// `Error` is reserved for inputs outside a routine's domain and for hard
/// failures such as a non-finite integrand sample.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested value sits on a pole of the underlying function.
    #[error("pole: {0}")]
    Pole(String),

    /// An iterative scheme failed and no usable estimate exists.
    #[error("did not converge: {0}")]
    NonConvergence(String),

    /// The integrand produced NaN or infinity at an interior node.
    #[error("non-finite integrand value at x = {abscissa}")]
    NonFiniteIntegrand { abscissa: f64 },

    /// The connection-formula rewrite of the absolute moment is refused
    /// near its poles; callers should fall back to the direct form.
    #[error("connection form refused: {0}")]
    EvaluationRefused(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pole(msg: impl Into<String>) -> Self {
        Error::Pole(msg.into())
    }
}
