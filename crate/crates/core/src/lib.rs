//! Numerical special functions and a verification harness for closed-form
//! identities of the Fourier expansion of ln Gamma on (0, 1).
//!
//! The crate has three layers:
//!
//! * engines — [`quadrature`] (adaptive Gauss-Kronrod and tanh-sinh),
//!   [`series`] (tail-bounded direct summation and alternating-series
//!   acceleration), and the deterministic reduction primitives in
//!   [`reduce`];
//! * functions — [`specfun`] (ln Gamma, digamma, Clausen, Hurwitz zeta and
//!   its s-derivatives, Stieltjes gamma_1, negapolygamma, cosine integral)
//!   and [`fourier`] (coefficients, partial sums, the eta(x) family,
//!   Parseval);
//! * verification — [`identities`] holds a registry of executable checks,
//!   each pairing an independent analytic evaluation with a closed form,
//!   and [`report`] serializes the outcome.
//!
//! With the default `parallel` feature, grid evaluations and long
//! summations fan out over a thread pool; results are bit-identical to the
//! sequential build because every reduction runs in a fixed block order.

pub mod constants;
pub mod error;
pub mod fourier;
pub mod identities;
pub mod quadrature;
pub mod reduce;
pub mod report;
pub mod series;
pub mod specfun;

pub use error::{Error, Result};
