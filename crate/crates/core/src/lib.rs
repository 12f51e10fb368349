//! Arithmetic transforms: spectra from signal averages and Möbius inversion.
//!
//! The combination stage of every algorithm in this crate uses only
//! additions, subtractions and multiplications by {-1, 0, 1}; the only real
//! multiplications are the `1/n` scale factors applied to the averages.
//!
//! * [`aft`] — the three arithmetic Fourier transform algorithms
//!   (Tufts-Sadasiv, Reed-Tufts, Reed-Shih).
//! * [`aht`] — the arithmetic Hartley transform and its inverse.
//! * [`interp`] — fractional-index resolvers (ideal kernel weights,
//!   asymptotic weights, zero-order rounding, top-m truncation).
//! * [`oracle`] — definitional reference transforms and error metrics,
//!   implemented independently of the arithmetic pipelines.

pub mod aft;
pub mod aht;
pub mod error;
pub mod interp;
pub mod moebius;
pub mod ops;
pub mod oracle;
pub mod signal;

pub use error::{Error, Result};
pub use ops::OpCounter;

/// Exact rational used for sample-time and index bookkeeping.
pub type Rational = num_rational::Ratio<i64>;
