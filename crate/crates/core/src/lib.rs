//! Divergence measures between finite discrete distributions and the
//! sandwich bounds that relate them to the relative information of type `s`.
//!
//! The crate is `no_std` (it needs `alloc`) and does no IO. It covers:
//!
//! - [`simplex`]: validated distributions and the ratio range `[r, R]`.
//! - [`generators`]: the convex generators `f` behind each measure and the
//!   generic Csiszár sum `C_f(P||Q) = Σ q_i f(p_i/q_i)`.
//! - [`measures`]: closed-form J, I, T, D, F, G, KL, χ², Hellinger and
//!   Bhattacharyya values, plus the `Φ_s` family.
//! - [`type_s`]: the `E`, `A`, `B` upper functionals of `Φ_s`.
//! - [`bounds`]: extrema of `g(x) = x^{2-s} f''(x)` on `[r, R]` and the
//!   resulting `m Φ_s <= C_f <= M Φ_s` sandwich.
//! - [`estimators`]: divergence ratios that always land inside `[r, R]`.
//! - [`harness`]: seeded randomized verification suites.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod bounds;
pub mod estimators;
pub mod generators;
pub mod harness;
pub mod measures;
pub mod optimize;
pub mod simplex;
pub mod type_s;

mod math;

pub use bounds::{BoundReport, MmBounds, MmMethod, MmSource};
pub use generators::{Generator, MeasureId, NamedGenerator};
pub use measures::Measure;
pub use simplex::{Distribution, RatioRange};

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("distribution needs at least 2 entries, got {0}")]
    EmptyOrTooShort(usize),
    #[error("negative entry {value} at index {index}")]
    NegativeEntry { index: usize, value: f64 },
    #[error("zero entry at index {0}; distributions must be strictly positive")]
    ZeroEntry(usize),
    #[error("non-finite value {value} at index {index}")]
    NonFinite { index: usize, value: f64 },
    #[error("non-finite parameter {0}")]
    NonFiniteParameter(f64),
    #[error("smoothing constant must be positive, got {0}")]
    NonPositiveAlpha(f64),
    #[error("entries sum to {0}, expected 1 within 1e-9")]
    NotNormalized(f64),
    #[error("distributions have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("unknown measure `{0}`")]
    UnknownMeasure(alloc::string::String),
    #[error("invalid ratio range r = {r}, R = {big_r}")]
    InvalidRange { r: f64, big_r: f64 },
    #[error("g is only defined for x > 0, got {0}")]
    NonPositiveX(f64),
    #[error("no tabulated global extremum for this measure at s = {0}")]
    NotTabulated(f64),
    #[error("estimator is undefined when P = Q")]
    DegeneratePair,
    #[error("estimator denominator vanished ({0})")]
    VanishingDenominator(f64),
    #[error("unknown suite `{0}`")]
    UnknownSuite(alloc::string::String),
    #[error("invalid trial configuration: {0}")]
    InvalidConfig(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

/// Distance from a pole of the `Φ_s` family (`s = 0` or `s = 1`) below which
/// the logarithmic limit form is used.
pub const POLE_THRESHOLD: f64 = 1e-10;

/// A margin below this is reported as a violated inequality.
pub const VIOLATION_TOLERANCE: f64 = 1e-9;

/// Outcome of checking one inequality `lhs <= rhs`.
///
/// `slack` is `rhs - lhs`; negative slack beyond [`VIOLATION_TOLERANCE`] is a
/// violation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verdict {
    pub relation: &'static str,
    pub slack: f64,
}

impl Verdict {
    pub fn new(relation: &'static str, lhs: f64, rhs: f64) -> Self {
        Self {
            relation,
            slack: rhs - lhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.slack >= -VIOLATION_TOLERANCE
    }
}
