//! Exact rational series: arithmetic, coefficient extraction, dominant-pole
//! analysis and tail bounds.

pub mod coeffs;
pub mod json;
pub mod pole;
pub mod poly;
pub mod rational;
pub mod roots;

use thiserror::Error;

pub use coeffs::{
    expand_fraction, integer_coefficients, ratio_to_f64, rational_to_f64, scaled_coefficients,
    taylor_coefficients, CoefficientMode, CoefficientTable,
};
pub use pole::{pole_analysis, pole_analysis_with_precision, scaled_deviation, tail_error_bound, Deviation, PoleInfo};
pub use poly::{Polynomial, Scalar};
pub use rational::{rf_combine, ExactField, RationalSeries, SeriesOp};
pub use roots::{complex_roots, smallest_positive_root, RootEnclosure};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("result has no Taylor expansion at the origin (den(0) = 0)")]
    NotExpandable,
    #[error("scaling factor must be positive")]
    InvalidScale,
    #[error("root precision must be positive")]
    InvalidPrecision,
    #[error("polynomial must be positive at t = 0")]
    NonPositiveAtOrigin,
    #[error("denominator has no root in (0, 1)")]
    NoRootInUnitInterval,
    #[error("no pole in (0, 1): growth is not exponential")]
    NoExponentialPole,
    #[error("smallest positive root is not simple (|q'(r)| = {derivative:e})")]
    NonSimpleRoot { derivative: f64 },
    #[error("numerator vanishes at the dominant pole")]
    NumeratorVanishes,
    #[error("another pole of modulus {other} ties with r = {r}")]
    ModulusTie { r: f64, other: f64 },
    #[error("radius {radius} must satisfy r = {r} < R < 1")]
    InvalidRadius { radius: f64, r: f64 },
    #[error("a pole of modulus {modulus} lies inside radius {radius}")]
    RootInsideRadius { modulus: f64, radius: f64 },
    #[error("malformed series: {0}")]
    Parse(String),
}
