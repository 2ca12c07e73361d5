//! Ratio-range estimators: divergence ratios guaranteed to fall in `[r, R]`.
//!
//! Each `ξ_t` rearranges a two-sided bound on a relative JS- or AG-divergence
//! (or its adjoint) and each `ζ_t` one on the J- or JS-divergence, so that the
//! unknown ratio endpoint appears alone. Writing `K = K(P||Q)`,
//! `K* = K(Q||P)`, `χ² = χ²(P||Q)`, `χ²* = χ²(Q||P)` and likewise for `F`, `G`:
//!
//! ```text
//! ξ1 = √(2F) / (√χ²* - √(2F))        ξ5 = 4G / (χ²* - 4G)
//! ξ2 = (√K - √F) / √F                ξ6 = (K* - 2G) / (2G)
//! ξ3 = √F* / (√K* - √F*)             ξ7 = 2G* / (K - 2G*)
//! ξ4 = (√χ² - √(2F*)) / √(2F*)       ξ8 = (χ² - 4G*) / (4G*)
//!
//! ζ1 = (J - K*) / K*                 ζ3 = 2I / (K* - 2I)
//! ζ2 = K / (J - K)                   ζ4 = (K - 2I) / (2I)
//! ```

use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;

use crate::generators::MeasureId;
use crate::math::{abs, sqrt};
use crate::measures::{divergence, Measure};
use crate::simplex::Distribution;
use crate::{Error, Result};

/// Coordinates closer than this count as equal when detecting `P = Q`.
pub const DEGENERATE_TOLERANCE: f64 = 1e-14;

/// Denominators at or below this magnitude are reported instead of divided by.
pub const DENOMINATOR_FLOOR: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EstimatorId {
    /// `ξ_t`, `t` in `1..=8`.
    Xi(u8),
    /// `ζ_t`, `t` in `1..=4`.
    Zeta(u8),
}

impl EstimatorId {
    pub const ALL: [EstimatorId; 12] = [
        EstimatorId::Xi(1),
        EstimatorId::Xi(2),
        EstimatorId::Xi(3),
        EstimatorId::Xi(4),
        EstimatorId::Xi(5),
        EstimatorId::Xi(6),
        EstimatorId::Xi(7),
        EstimatorId::Xi(8),
        EstimatorId::Zeta(1),
        EstimatorId::Zeta(2),
        EstimatorId::Zeta(3),
        EstimatorId::Zeta(4),
    ];

    pub fn new_xi(t: u8) -> Option<Self> {
        (1..=8).contains(&t).then_some(EstimatorId::Xi(t))
    }

    pub fn new_zeta(t: u8) -> Option<Self> {
        (1..=4).contains(&t).then_some(EstimatorId::Zeta(t))
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            EstimatorId::Xi(t) => (1..=8).contains(&t),
            EstimatorId::Zeta(t) => (1..=4).contains(&t),
        }
    }

    /// Evaluates the estimator from precomputed divergence values.
    pub fn evaluate(&self, d: &EstimatorInputs) -> Result<f64> {
        let (num, den) = match *self {
            EstimatorId::Xi(1) => {
                let a = sqrt(2.0 * d.f);
                (a, sqrt(d.chi2_adj) - a)
            }
            EstimatorId::Xi(2) => {
                let a = sqrt(d.f);
                (sqrt(d.k) - a, a)
            }
            EstimatorId::Xi(3) => {
                let a = sqrt(d.f_adj);
                (a, sqrt(d.k_adj) - a)
            }
            EstimatorId::Xi(4) => {
                let a = sqrt(2.0 * d.f_adj);
                (sqrt(d.chi2) - a, a)
            }
            EstimatorId::Xi(5) => (4.0 * d.g, d.chi2_adj - 4.0 * d.g),
            EstimatorId::Xi(6) => (d.k_adj - 2.0 * d.g, 2.0 * d.g),
            EstimatorId::Xi(7) => (2.0 * d.g_adj, d.k - 2.0 * d.g_adj),
            EstimatorId::Xi(8) => (d.chi2 - 4.0 * d.g_adj, 4.0 * d.g_adj),
            EstimatorId::Zeta(1) => (d.j - d.k_adj, d.k_adj),
            EstimatorId::Zeta(2) => (d.k, d.j - d.k),
            EstimatorId::Zeta(3) => (2.0 * d.i, d.k_adj - 2.0 * d.i),
            EstimatorId::Zeta(4) => (d.k - 2.0 * d.i, 2.0 * d.i),
            other => return Err(Error::UnknownMeasure(other.to_string())),
        };
        if abs(den) <= DENOMINATOR_FLOOR {
            return Err(Error::VanishingDenominator(den));
        }
        Ok(num / den)
    }
}

impl fmt::Display for EstimatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EstimatorId::Xi(t) => write!(f, "xi{t}"),
            EstimatorId::Zeta(t) => write!(f, "zeta{t}"),
        }
    }
}

impl FromStr for EstimatorId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let parsed = if let Some(t) = lower.strip_prefix("xi") {
            t.parse().ok().and_then(EstimatorId::new_xi)
        } else if let Some(t) = lower.strip_prefix("zeta") {
            t.parse().ok().and_then(EstimatorId::new_zeta)
        } else {
            None
        };
        parsed.ok_or_else(|| Error::UnknownMeasure(s.to_string()))
    }
}

/// The divergence values the estimators are built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimatorInputs {
    pub k: f64,
    pub k_adj: f64,
    pub chi2: f64,
    pub chi2_adj: f64,
    pub f: f64,
    pub f_adj: f64,
    pub g: f64,
    pub g_adj: f64,
    pub j: f64,
    pub i: f64,
}

impl EstimatorInputs {
    pub fn compute(p: &Distribution, q: &Distribution) -> Result<Self> {
        let d = |m: Measure| divergence(m, p, q);
        let c = |id: MeasureId| divergence(Measure::Catalog(id), p, q);
        Ok(Self {
            k: d(Measure::Kl)?,
            k_adj: d(Measure::KlAdj)?,
            chi2: d(Measure::Chi2)?,
            chi2_adj: d(Measure::Chi2Adj)?,
            f: c(MeasureId::F1)?,
            f_adj: c(MeasureId::F2)?,
            g: c(MeasureId::G1)?,
            g_adj: c(MeasureId::G2)?,
            j: c(MeasureId::J)?,
            i: c(MeasureId::I)?,
        })
    }
}

/// Whether every coordinate of `p` is within [`DEGENERATE_TOLERANCE`] of `q`.
pub fn is_degenerate(p: &Distribution, q: &Distribution) -> Result<bool> {
    Ok(p.zip(q)?.all(|(a, b)| abs(a - b) <= DEGENERATE_TOLERANCE))
}

pub fn estimate(id: EstimatorId, p: &Distribution, q: &Distribution) -> Result<f64> {
    if is_degenerate(p, q)? {
        return Err(Error::DegeneratePair);
    }
    id.evaluate(&EstimatorInputs::compute(p, q)?)
}

/// All twelve estimators, in [`EstimatorId::ALL`] order.
pub fn estimate_all(p: &Distribution, q: &Distribution) -> Result<[(EstimatorId, f64); 12]> {
    if is_degenerate(p, q)? {
        return Err(Error::DegeneratePair);
    }
    let inputs = EstimatorInputs::compute(p, q)?;
    let mut out = [(EstimatorId::Xi(1), 0.0); 12];
    for (slot, id) in out.iter_mut().zip(EstimatorId::ALL) {
        *slot = (id, id.evaluate(&inputs)?);
    }
    Ok(out)
}
