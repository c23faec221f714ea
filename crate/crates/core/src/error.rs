use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An iterative method hit its iteration cap before reaching tolerance.
    #[error("{method} did not converge after {iterations} iterations")]
    NoConvergence {
        method: &'static str,
        iterations: usize,
    },

    /// An improper integral failed to stabilise under tail truncation.
    #[error("integral diverges: {0}")]
    Divergent(String),

    /// The density vanishes where a virtual valuation was requested.
    #[error("density is zero at x = {0}")]
    ZeroDensity(f64),

    /// The virtual valuation is negative above the monopoly reserve.
    #[error("distribution is not regular: virtual valuation {value} at x = {x}")]
    NotRegular { x: f64, value: f64 },

    /// A function evaluation produced NaN.
    #[error("numerical fault: {0}")]
    Numerical(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
