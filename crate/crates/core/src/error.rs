use thiserror::Error;

/// Errors shared by every engine in the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Argument outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested at the pole s = 1 of the Hurwitz zeta function.
    #[error("pole error: zeta(s, a) has a simple pole at s = 1 (got s = {s})")]
    Pole { s: f64 },

    /// A quadrature rule exhausted its evaluation budget before reaching
    /// the requested tolerance.
    #[error(
        "quadrature did not converge: error estimate {err_estimate:e} > tol {tol:e} \
         after {evaluations} evaluations"
    )]
    QuadNonConvergence {
        err_estimate: f64,
        tol: f64,
        evaluations: u64,
    },

    /// A summation exceeded its term budget before the tail bound fell
    /// below the requested tolerance.
    #[error(
        "series budget exhausted: tail bound {tail_bound:e} > tol {tol:e} \
         at {terms} terms"
    )]
    SeriesBudget {
        tail_bound: f64,
        tol: f64,
        terms: u64,
    },

    /// Index outside the range held by a coefficient table.
    #[error("index error: {0}")]
    Index(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
