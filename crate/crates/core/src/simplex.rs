//! Points of the open probability simplex and the ratio range between two of
//! them.

use alloc::vec::Vec;

use crate::math::abs;
use crate::{Error, Result};

/// Accepted deviation of `Σ p_i` from 1 when wrapping already-normalized data.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// A complete finite discrete distribution with strictly positive entries.
///
/// Immutable after construction; every constructor validates.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    probs: Vec<f64>,
}

impl Distribution {
    /// Wraps probabilities that are already normalized.
    ///
    /// The entries are used exactly as given; no renormalization happens.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        check_entries(&probs)?;
        if let Some(i) = probs.iter().position(|&p| p == 0.0) {
            return Err(Error::ZeroEntry(i));
        }
        let sum: f64 = probs.iter().sum();
        if abs(sum - 1.0) > SUM_TOLERANCE {
            return Err(Error::NotNormalized(sum));
        }
        Ok(Self { probs })
    }

    /// The uniform distribution on `n` points.
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::EmptyOrTooShort(n));
        }
        Ok(Self {
            probs: alloc::vec![1.0 / n as f64; n],
        })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Coordinate pairs `(p_i, q_i)`, checking that the supports match.
    pub fn zip<'a>(
        &'a self,
        other: &'a Distribution,
    ) -> Result<impl Iterator<Item = (f64, f64)> + 'a> {
        same_len(self, other)?;
        Ok(self.probs.iter().copied().zip(other.probs.iter().copied()))
    }
}

impl AsRef<[f64]> for Distribution {
    fn as_ref(&self) -> &[f64] {
        &self.probs
    }
}

pub(crate) fn same_len(p: &Distribution, q: &Distribution) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch(p.len(), q.len()));
    }
    Ok(())
}

fn check_entries(raw: &[f64]) -> Result<()> {
    if raw.len() < 2 {
        return Err(Error::EmptyOrTooShort(raw.len()));
    }
    for (index, &value) in raw.iter().enumerate() {
        if !value.is_finite() {
            return Err(Error::NonFinite { index, value });
        }
        if value < 0.0 {
            return Err(Error::NegativeEntry { index, value });
        }
    }
    Ok(())
}

/// Scales nonnegative weights to sum to one.
///
/// Zeros are rejected: every generator is evaluated at `p_i / q_i`, and
/// several second derivatives blow up at the origin. Use [`smooth`] to admit
/// count vectors that contain zeros.
pub fn normalize(raw: &[f64]) -> Result<Distribution> {
    check_entries(raw)?;
    let sum: f64 = raw.iter().sum();
    if !sum.is_finite() {
        return Err(Error::NonFinite {
            index: 0,
            value: sum,
        });
    }
    if sum <= 0.0 {
        return Err(Error::ZeroEntry(0));
    }
    let probs: Vec<f64> = raw.iter().map(|&w| w / sum).collect();
    if let Some(i) = probs.iter().position(|&p| p == 0.0) {
        return Err(Error::ZeroEntry(i));
    }
    Ok(Distribution { probs })
}

/// Additive smoothing: `normalize(raw_i + alpha)`.
pub fn smooth(raw: &[f64], alpha: f64) -> Result<Distribution> {
    if !alpha.is_finite() {
        return Err(Error::NonFiniteParameter(alpha));
    }
    if alpha <= 0.0 {
        return Err(Error::NonPositiveAlpha(alpha));
    }
    check_entries(raw)?;
    let shifted: Vec<f64> = raw.iter().map(|&w| w + alpha).collect();
    normalize(&shifted)
}

/// Bounds on every coordinate ratio `p_i / q_i`.
///
/// For a pair of distributions the range always brackets 1, since both sum to
/// one. Ranges built by hand through [`RatioRange::new`] only need
/// `0 < lo <= hi < ∞`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioRange {
    /// Smallest ratio, `r`.
    pub lo: f64,
    /// Largest ratio, `R`.
    pub hi: f64,
}

impl RatioRange {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
            return Err(Error::InvalidRange { r: lo, big_r: hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn brackets_one(&self) -> bool {
        self.contains(1.0)
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// The tight range `r = min p_i/q_i`, `R = max p_i/q_i`.
pub fn ratio_range(p: &Distribution, q: &Distribution) -> Result<RatioRange> {
    let mut lo = f64::INFINITY;
    let mut hi = 0.0_f64;
    for (pi, qi) in p.zip(q)? {
        let x = pi / qi;
        lo = lo.min(x);
        hi = hi.max(x);
    }
    RatioRange::new(lo, hi)
}
