//! Convex generators `f` on `(0, ∞)` and the Csiszár f-divergence
//! `C_f(P||Q) = Σ q_i f(p_i / q_i)`.
//!
//! Each named generator carries its analytic first and second derivatives.
//! The bound engine relies on the exact `f''`; finite differences only show
//! up in [`check_generator`] and in tests.

use core::fmt;

use crate::math::{abs, ln, pow, sqrt};
use crate::simplex::Distribution;
use crate::{Error, Result, POLE_THRESHOLD};

/// A twice differentiable convex function normalized so that `f(1) = 0`.
///
/// Implement this to feed a custom generator to [`eval_csiszar`] or to the
/// numeric extremum search in [`crate::bounds`].
pub trait Generator {
    fn f(&self, x: f64) -> f64;
    fn f_prime(&self, x: f64) -> f64;
    fn f_second(&self, x: f64) -> f64;
}

impl<G: Generator + ?Sized> Generator for &G {
    fn f(&self, x: f64) -> f64 {
        (**self).f(x)
    }
    fn f_prime(&self, x: f64) -> f64 {
        (**self).f_prime(x)
    }
    fn f_second(&self, x: f64) -> f64 {
        (**self).f_second(x)
    }
}

/// The named divergences that come with a generator.
///
/// `D1`/`D2`, `F1`/`F2` and `G1`/`G2` are the relative J-, JS- and
/// AG-divergences and their adjoints; `J`, `I`, `T` are the symmetric
/// J-divergence, JS-divergence (information radius) and AG-divergence.
/// `Phi(s)` is the relative information of type `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeasureId {
    D1,
    D2,
    F1,
    F2,
    G1,
    G2,
    J,
    I,
    T,
    Phi(f64),
}

impl MeasureId {
    /// The nine fixed measures, in catalog order.
    pub const FIXED: [MeasureId; 9] = [
        MeasureId::D1,
        MeasureId::D2,
        MeasureId::F1,
        MeasureId::F2,
        MeasureId::G1,
        MeasureId::G2,
        MeasureId::J,
        MeasureId::I,
        MeasureId::T,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MeasureId::D1 => "D1",
            MeasureId::D2 => "D2",
            MeasureId::F1 => "F1",
            MeasureId::F2 => "F2",
            MeasureId::G1 => "G1",
            MeasureId::G2 => "G2",
            MeasureId::J => "J",
            MeasureId::I => "I",
            MeasureId::T => "T",
            MeasureId::Phi(_) => "PHI",
        }
    }

    /// Looks up one of the nine fixed measures by name (case-insensitive).
    pub fn fixed_from_name(name: &str) -> Option<MeasureId> {
        Self::FIXED
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(name))
    }

    pub fn generator(self) -> NamedGenerator {
        NamedGenerator { id: self }
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureId::Phi(s) => write!(f, "PHI({s})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Which closed form of the `Φ_s` generator applies at a given `s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum PhiBranch {
    /// `s ≈ 0`: `f(x) = -ln x`, giving `K(Q||P)`.
    ReverseKl,
    /// `s ≈ 1`: `f(x) = x ln x`, giving `K(P||Q)`.
    Kl,
    Power,
}

pub(crate) fn phi_branch(s: f64) -> PhiBranch {
    if abs(s) <= POLE_THRESHOLD {
        PhiBranch::ReverseKl
    } else if abs(s - 1.0) <= POLE_THRESHOLD {
        PhiBranch::Kl
    } else {
        PhiBranch::Power
    }
}

/// One of the catalog generators, or the `Φ_s` generator for some `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NamedGenerator {
    pub id: MeasureId,
}

impl Generator for NamedGenerator {
    fn f(&self, x: f64) -> f64 {
        match self.id {
            MeasureId::D1 => (x - 1.0) * ln((x + 1.0) / 2.0),
            MeasureId::D2 => (1.0 - x) * ln((x + 1.0) / (2.0 * x)),
            MeasureId::F1 => (1.0 - x) / 2.0 - x * ln((x + 1.0) / (2.0 * x)),
            MeasureId::F2 => (x - 1.0) / 2.0 - ln((x + 1.0) / 2.0),
            MeasureId::G1 => (x - 1.0) / 2.0 + (x + 1.0) / 2.0 * ln((x + 1.0) / (2.0 * x)),
            MeasureId::G2 => (1.0 - x) / 2.0 + (x + 1.0) / 2.0 * ln((x + 1.0) / 2.0),
            MeasureId::J => (x - 1.0) * ln(x),
            MeasureId::I => x / 2.0 * ln(x) - (x + 1.0) / 2.0 * ln((x + 1.0) / 2.0),
            MeasureId::T => (x + 1.0) / 2.0 * ln((x + 1.0) / (2.0 * sqrt(x))),
            MeasureId::Phi(s) => match phi_branch(s) {
                PhiBranch::ReverseKl => -ln(x),
                PhiBranch::Kl => x * ln(x),
                PhiBranch::Power => (pow(x, s) - 1.0) / (s * (s - 1.0)),
            },
        }
    }

    fn f_prime(&self, x: f64) -> f64 {
        match self.id {
            MeasureId::D1 => (x - 1.0) / (x + 1.0) + ln((x + 1.0) / 2.0),
            MeasureId::D2 => (x - 1.0) / (x * (x + 1.0)) - ln((x + 1.0) / (2.0 * x)),
            MeasureId::F1 => (1.0 - x) / (2.0 * (x + 1.0)) - ln((x + 1.0) / (2.0 * x)),
            MeasureId::F2 => (x - 1.0) / (2.0 * (x + 1.0)),
            MeasureId::G1 => 0.5 * ((x - 1.0) / x + ln((x + 1.0) / (2.0 * x))),
            MeasureId::G2 => 0.5 * ln((x + 1.0) / 2.0),
            MeasureId::J => 1.0 - 1.0 / x + ln(x),
            MeasureId::I => -0.5 * ln((x + 1.0) / (2.0 * x)),
            MeasureId::T => 0.25 * (1.0 - 1.0 / x + 2.0 * ln((x + 1.0) / (2.0 * sqrt(x)))),
            MeasureId::Phi(s) => match phi_branch(s) {
                PhiBranch::ReverseKl => -1.0 / x,
                PhiBranch::Kl => ln(x) + 1.0,
                PhiBranch::Power => pow(x, s - 1.0) / (s - 1.0),
            },
        }
    }

    fn f_second(&self, x: f64) -> f64 {
        let xp1 = x + 1.0;
        match self.id {
            MeasureId::D1 => (x + 3.0) / (xp1 * xp1),
            MeasureId::D2 => (3.0 * x + 1.0) / (x * x * xp1 * xp1),
            MeasureId::F1 => 1.0 / (x * xp1 * xp1),
            MeasureId::F2 => 1.0 / (xp1 * xp1),
            MeasureId::G1 => 1.0 / (2.0 * x * x * xp1),
            MeasureId::G2 => 1.0 / (2.0 * xp1),
            MeasureId::J => xp1 / (x * x),
            MeasureId::I => 1.0 / (2.0 * x * xp1),
            MeasureId::T => 0.25 * (x * x + 1.0) / (x * x * x + x * x),
            MeasureId::Phi(s) => match phi_branch(s) {
                PhiBranch::ReverseKl => 1.0 / (x * x),
                PhiBranch::Kl => 1.0 / x,
                PhiBranch::Power => pow(x, s - 2.0),
            },
        }
    }
}

/// The nine fixed generators.
pub fn catalog() -> [NamedGenerator; 9] {
    MeasureId::FIXED.map(MeasureId::generator)
}

/// Generator of the relative information of type `s`:
/// `f(x) = (x^s - 1) / (s(s-1))` with `f''(x) = x^{s-2}`, switching to
/// `-ln x` and `x ln x` within [`POLE_THRESHOLD`] of `s = 0` and `s = 1`.
pub fn phi_generator(s: f64) -> Result<NamedGenerator> {
    if !s.is_finite() {
        return Err(Error::NonFiniteParameter(s));
    }
    Ok(MeasureId::Phi(s).generator())
}

/// `C_f(P||Q) = Σ q_i f(p_i / q_i)`.
pub fn eval_csiszar<G: Generator + ?Sized>(
    gen: &G,
    p: &Distribution,
    q: &Distribution,
) -> Result<f64> {
    Ok(p.zip(q)?.map(|(pi, qi)| qi * gen.f(pi / qi)).sum())
}

/// Numerical certificate for a generator over a grid of points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorCheck {
    pub abs_f_at_one: f64,
    pub min_f_second: f64,
    /// Largest deviation of `f'` from the centered difference of `f`.
    pub f_prime_deviation: f64,
    /// Largest deviation of `f''` from the centered difference of `f'`.
    pub f_second_deviation: f64,
}

impl GeneratorCheck {
    pub fn is_convex(&self) -> bool {
        self.min_f_second > 0.0
    }
}

/// Step of the centered differences, relative to `x`.
pub const DIFFERENCE_STEP: f64 = 1e-6;

/// Checks normalization, convexity and the analytic derivatives of `gen`.
///
/// Deviations are relative where the analytic derivative exceeds one in
/// magnitude and absolute below that, so that stationary points (where
/// `f'(1) = 0`) do not blow the ratio up. Grid points that are not positive
/// and finite are skipped.
pub fn check_generator<G: Generator + ?Sized>(gen: &G, grid: &[f64]) -> GeneratorCheck {
    let mut check = GeneratorCheck {
        abs_f_at_one: abs(gen.f(1.0)),
        min_f_second: f64::INFINITY,
        f_prime_deviation: 0.0,
        f_second_deviation: 0.0,
    };
    for &x in grid.iter().filter(|x| x.is_finite() && **x > 0.0) {
        let h = DIFFERENCE_STEP * x;
        let fd1 = (gen.f(x + h) - gen.f(x - h)) / (2.0 * h);
        let fd2 = (gen.f_prime(x + h) - gen.f_prime(x - h)) / (2.0 * h);
        let d1 = gen.f_prime(x);
        let d2 = gen.f_second(x);
        check.min_f_second = check.min_f_second.min(d2);
        check.f_prime_deviation = check.f_prime_deviation.max(scaled_deviation(d1, fd1));
        check.f_second_deviation = check.f_second_deviation.max(scaled_deviation(d2, fd2));
    }
    check
}

fn scaled_deviation(exact: f64, approx: f64) -> f64 {
    abs(exact - approx) / abs(exact).max(1.0)
}
