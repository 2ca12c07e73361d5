//! Upper functionals for the relative information of type `s`.
//!
//! For `P, Q` with ratio range `[r, R]`:
//!
//! ```text
//! 0 <= Φ_s <= E_Φs(P||Q) <= A_Φs(r, R)
//! Φ_s <= B_Φs(r, R) <= A_Φs(r, R)          when r <= 1 <= R, r != R
//! B_Φs - Φ_s <= A_Φs
//! ```
//!
//! `E` is the gradient-weighted sum `Σ (p-q) f'(p/q)`, `A` is the Grüss-type
//! bound `¼ (R-r) [f'(R) - f'(r)]`, and `B` is the chord of `f` over `[r, R]`
//! evaluated at 1, all specialized to the `Φ_s` generator.

use alloc::vec::Vec;

use crate::generators::{phi_branch, PhiBranch};
use crate::math::{abs, ln, pow};
use crate::measures::phi_s;
use crate::simplex::{ratio_range, Distribution, RatioRange};
use crate::{Error, Result, Verdict, POLE_THRESHOLD};

fn finite(s: f64) -> Result<()> {
    if s.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteParameter(s))
    }
}

/// `E_Φs(P||Q) = (s-1)^{-1} Σ (p_i - q_i)(p_i/q_i)^{s-1}`, or
/// `Σ (p_i - q_i) ln(p_i/q_i)` at `s = 1`.
pub fn e_phi_s(s: f64, p: &Distribution, q: &Distribution) -> Result<f64> {
    finite(s)?;
    let pairs = p.zip(q)?;
    if abs(s - 1.0) <= POLE_THRESHOLD {
        Ok(pairs.map(|(a, b)| (a - b) * ln(a / b)).sum())
    } else {
        let sum: f64 = pairs.map(|(a, b)| (a - b) * pow(a / b, s - 1.0)).sum();
        Ok(sum / (s - 1.0))
    }
}

/// `A_Φs(r, R) = ¼ (R-r)² · (R^{s-1} - r^{s-1}) / ((R-r)(s-1))`, with the
/// logarithmic form at `s = 1`; zero on a degenerate range.
pub fn a_phi_s(s: f64, range: RatioRange) -> Result<f64> {
    finite(s)?;
    let RatioRange { lo, hi } = RatioRange::new(range.lo, range.hi)?;
    if lo == hi {
        return Ok(0.0);
    }
    let spread = if abs(s - 1.0) <= POLE_THRESHOLD {
        ln(hi) - ln(lo)
    } else {
        (pow(hi, s - 1.0) - pow(lo, s - 1.0)) / (s - 1.0)
    };
    Ok(0.25 * (hi - lo) * spread)
}

/// The chord bound `B_Φs(r, R)`. Requires `r <= 1 <= R` and `r != R`.
pub fn b_phi_s(s: f64, range: RatioRange) -> Result<f64> {
    finite(s)?;
    let RatioRange { lo, hi } = RatioRange::new(range.lo, range.hi)?;
    if !(lo <= 1.0 && 1.0 <= hi) || lo == hi {
        return Err(Error::InvalidRange { r: lo, big_r: hi });
    }
    let width = hi - lo;
    let value = match phi_branch(s) {
        PhiBranch::ReverseKl => ((hi - 1.0) * ln(1.0 / lo) + (1.0 - lo) * ln(1.0 / hi)) / width,
        PhiBranch::Kl => ((hi - 1.0) * lo * ln(lo) + (1.0 - lo) * hi * ln(hi)) / width,
        PhiBranch::Power => {
            ((hi - 1.0) * (pow(lo, s) - 1.0) + (1.0 - lo) * (pow(hi, s) - 1.0))
                / (width * s * (s - 1.0))
        }
    };
    Ok(value)
}

/// `Φ_s` together with its three upper functionals and the verdicts of the
/// inequality chain relating them.
#[derive(Debug, Clone, PartialEq)]
pub struct TypeSBoundSet {
    pub s: f64,
    pub range: RatioRange,
    pub phi: f64,
    pub e_bound: f64,
    pub a_bound: f64,
    /// Absent when the range does not straddle 1 or is a single point.
    pub b_bound: Option<f64>,
    pub verdicts: Vec<Verdict>,
}

impl TypeSBoundSet {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(Verdict::holds)
    }
}

pub fn bound_set(s: f64, p: &Distribution, q: &Distribution) -> Result<TypeSBoundSet> {
    let range = ratio_range(p, q)?;
    let phi = phi_s(s, p, q)?;
    let e_bound = e_phi_s(s, p, q)?;
    let a_bound = a_phi_s(s, range)?;
    let b_bound = if range.brackets_one() && !range.is_degenerate() {
        Some(b_phi_s(s, range)?)
    } else {
        None
    };

    let mut verdicts = alloc::vec![
        Verdict::new("0 <= phi", 0.0, phi),
        Verdict::new("phi <= E", phi, e_bound),
        Verdict::new("phi <= A", phi, a_bound),
        Verdict::new("E <= A", e_bound, a_bound),
    ];
    if let Some(b) = b_bound {
        verdicts.push(Verdict::new("phi <= B", phi, b));
        verdicts.push(Verdict::new("B <= A", b, a_bound));
        verdicts.push(Verdict::new("B - phi <= A", b - phi, a_bound));
    }
    Ok(TypeSBoundSet {
        s,
        range,
        phi,
        e_bound,
        a_bound,
        b_bound,
        verdicts,
    })
}
