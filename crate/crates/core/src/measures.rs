//! Closed-form divergence sums. All logarithms are natural, so values are in
//! nats.
//!
//! These are written directly from their definitions and do not go through
//! the generator engine; the two routes are checked against each other in the
//! tests and in the verification harness.

use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;

use crate::generators::{phi_branch, MeasureId, PhiBranch};
use crate::math::{ln, pow, sqrt};
use crate::simplex::Distribution;
use crate::{Error, Result};

/// Any divergence this crate evaluates in closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    /// One of the generator-backed measures, including `Φ_s`.
    Catalog(MeasureId),
    /// `K(P||Q) = Σ p ln(p/q)`.
    Kl,
    /// `K(Q||P)`.
    KlAdj,
    /// `χ²(P||Q) = Σ (p-q)²/q`.
    Chi2,
    /// `χ²(Q||P)`.
    Chi2Adj,
    /// `h(P||Q) = ½ Σ (√p - √q)²`.
    Hellinger,
    /// `B(P||Q) = Σ √(pq)`.
    Bhattacharyya,
}

impl Measure {
    pub const EXTRAS: [Measure; 6] = [
        Measure::Kl,
        Measure::KlAdj,
        Measure::Chi2,
        Measure::Chi2Adj,
        Measure::Hellinger,
        Measure::Bhattacharyya,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Measure::Catalog(id) => id.name(),
            Measure::Kl => "KL",
            Measure::KlAdj => "KL_ADJ",
            Measure::Chi2 => "CHI2",
            Measure::Chi2Adj => "CHI2_ADJ",
            Measure::Hellinger => "HELLINGER",
            Measure::Bhattacharyya => "BHATTACHARYYA",
        }
    }

    /// Parses a measure name; `PHI` needs the type parameter `s`.
    ///
    /// Accepts the catalog names (`D1`, ..., `T`), the extras above, and the
    /// aliases `D`, `D_ADJ`, `F`, `F_ADJ`, `G`, `G_ADJ`, `K`, `K_ADJ`, `H`, `B`.
    pub fn from_name(name: &str, s: Option<f64>) -> Result<Measure> {
        let upper = name.to_ascii_uppercase();
        let m = match upper.as_str() {
            "PHI" | "PHI_S" => match s {
                Some(s) if s.is_finite() => Measure::Catalog(MeasureId::Phi(s)),
                Some(s) => return Err(Error::NonFiniteParameter(s)),
                None => return Err(Error::UnknownMeasure(name.to_string())),
            },
            "D" => Measure::Catalog(MeasureId::D1),
            "D_ADJ" => Measure::Catalog(MeasureId::D2),
            "F" => Measure::Catalog(MeasureId::F1),
            "F_ADJ" => Measure::Catalog(MeasureId::F2),
            "G" => Measure::Catalog(MeasureId::G1),
            "G_ADJ" => Measure::Catalog(MeasureId::G2),
            "KL" | "K" => Measure::Kl,
            "KL_ADJ" | "K_ADJ" => Measure::KlAdj,
            "CHI2" => Measure::Chi2,
            "CHI2_ADJ" => Measure::Chi2Adj,
            "HELLINGER" | "H" => Measure::Hellinger,
            "BHATTACHARYYA" | "B" => Measure::Bhattacharyya,
            other => match MeasureId::fixed_from_name(other) {
                Some(id) => Measure::Catalog(id),
                None => return Err(Error::UnknownMeasure(name.to_string())),
            },
        };
        Ok(m)
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Measure::from_name(s, None)
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measure::Catalog(id) => id.fmt(f),
            other => f.write_str(other.name()),
        }
    }
}

impl From<MeasureId> for Measure {
    fn from(id: MeasureId) -> Self {
        Measure::Catalog(id)
    }
}

fn sum_terms(p: &Distribution, q: &Distribution, term: impl Fn(f64, f64) -> f64) -> Result<f64> {
    Ok(p.zip(q)?.map(|(pi, qi)| term(pi, qi)).sum())
}

/// Evaluates `measure` at `(P, Q)`.
pub fn divergence(measure: Measure, p: &Distribution, q: &Distribution) -> Result<f64> {
    match measure {
        Measure::Catalog(id) => catalog_divergence(id, p, q),
        Measure::Kl => kl(p, q),
        Measure::KlAdj => kl(q, p),
        Measure::Chi2 => chi2(p, q),
        Measure::Chi2Adj => chi2(q, p),
        Measure::Hellinger => sum_terms(p, q, |a, b| {
            let d = sqrt(a) - sqrt(b);
            0.5 * d * d
        }),
        Measure::Bhattacharyya => sum_terms(p, q, |a, b| sqrt(a * b)),
    }
}

fn catalog_divergence(id: MeasureId, p: &Distribution, q: &Distribution) -> Result<f64> {
    match id {
        MeasureId::D1 => sum_terms(p, q, |a, b| (a - b) * ln((a + b) / (2.0 * b))),
        MeasureId::D2 => sum_terms(p, q, |a, b| (b - a) * ln((a + b) / (2.0 * a))),
        MeasureId::F1 => sum_terms(p, q, |a, b| a * ln(2.0 * a / (a + b))),
        MeasureId::F2 => sum_terms(p, q, |a, b| b * ln(2.0 * b / (a + b))),
        MeasureId::G1 => sum_terms(p, q, |a, b| (a + b) / 2.0 * ln((a + b) / (2.0 * a))),
        MeasureId::G2 => sum_terms(p, q, |a, b| (a + b) / 2.0 * ln((a + b) / (2.0 * b))),
        MeasureId::J => sum_terms(p, q, |a, b| (a - b) * ln(a / b)),
        MeasureId::I => sum_terms(p, q, |a, b| {
            let m = a + b;
            0.5 * (a * ln(2.0 * a / m) + b * ln(2.0 * b / m))
        }),
        MeasureId::T => sum_terms(p, q, |a, b| {
            (a + b) / 2.0 * ln((a + b) / (2.0 * sqrt(a * b)))
        }),
        MeasureId::Phi(s) => phi_s(s, p, q),
    }
}

fn kl(p: &Distribution, q: &Distribution) -> Result<f64> {
    sum_terms(p, q, |a, b| a * ln(a / b))
}

fn chi2(p: &Distribution, q: &Distribution) -> Result<f64> {
    sum_terms(p, q, |a, b| (a - b) * (a - b) / b)
}

/// Relative information of type `s`:
/// `Φ_s = [Σ p^s q^{1-s} - 1] / (s(s-1))`, with `K(Q||P)` at `s = 0` and
/// `K(P||Q)` at `s = 1`.
pub fn phi_s(s: f64, p: &Distribution, q: &Distribution) -> Result<f64> {
    if !s.is_finite() {
        return Err(Error::NonFiniteParameter(s));
    }
    match phi_branch(s) {
        PhiBranch::ReverseKl => kl(q, p),
        PhiBranch::Kl => kl(p, q),
        // Σ q((p/q)^s - 1) equals Σ p^s q^{1-s} - 1 but vanishes term by
        // term at P = Q instead of leaving a rounding residue.
        PhiBranch::Power => {
            let sum = sum_terms(p, q, |a, b| b * (pow(a / b, s) - 1.0))?;
            Ok(sum / (s * (s - 1.0)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::abs;
    use crate::simplex::normalize;

    fn golden() -> (Distribution, Distribution) {
        (
            normalize(&[3.0, 1.0]).unwrap(),
            normalize(&[1.0, 3.0]).unwrap(),
        )
    }

    fn val(m: Measure, p: &Distribution, q: &Distribution) -> f64 {
        divergence(m, p, q).unwrap()
    }

    #[test]
    fn golden_pair_values() {
        let (p, q) = golden();
        assert_eq!(val(MeasureId::J.into(), &p, &p), 0.0);
        assert!(abs(val(Measure::Chi2, &p, &q) - 4.0 / 3.0) < 1e-15);
        assert!(abs(val(Measure::Hellinger, &p, &q) - (1.0 - sqrt(3.0) / 2.0)) < 1e-15);
        assert!(abs(val(MeasureId::T.into(), &p, &q) - 0.5 * ln(4.0 / 3.0)) < 1e-15);
        assert!(abs(val(Measure::Bhattacharyya, &p, &q) - sqrt(3.0) / 2.0) < 1e-15);
    }

    #[test]
    fn phi_s_values() {
        let (p, q) = golden();
        assert!(abs(phi_s(2.0, &p, &q).unwrap() - 2.0 / 3.0) < 1e-15);
        assert!(abs(phi_s(0.5, &p, &q).unwrap() - 4.0 * (1.0 - sqrt(3.0) / 2.0)) < 1e-14);
        assert_eq!(phi_s(1.0, &p, &p).unwrap(), 0.0);
        assert!(matches!(
            phi_s(f64::NAN, &p, &q),
            Err(Error::NonFiniteParameter(_))
        ));
    }

    #[test]
    fn asymmetric_measures_are_asymmetric() {
        let p = normalize(&[0.6, 0.3, 0.1]).unwrap();
        let q = normalize(&[0.2, 0.3, 0.5]).unwrap();
        for m in [
            Measure::Kl,
            Measure::Chi2,
            Measure::Catalog(MeasureId::D1),
            Measure::Catalog(MeasureId::F1),
            Measure::Catalog(MeasureId::G1),
        ] {
            assert!(abs(val(m, &p, &q) - val(m, &q, &p)) > 1e-3, "{m}");
        }
        for m in [
            Measure::Catalog(MeasureId::J),
            Measure::Catalog(MeasureId::I),
            Measure::Catalog(MeasureId::T),
            Measure::Hellinger,
            Measure::Bhattacharyya,
        ] {
            assert!(abs(val(m, &p, &q) - val(m, &q, &p)) < 1e-15, "{m}");
        }
    }

    #[test]
    fn adjoints_swap_arguments() {
        let p = normalize(&[0.6, 0.3, 0.1]).unwrap();
        let q = normalize(&[0.2, 0.3, 0.5]).unwrap();
        let pairs = [
            (Measure::Kl, Measure::KlAdj),
            (Measure::Chi2, Measure::Chi2Adj),
            (MeasureId::D1.into(), MeasureId::D2.into()),
            (MeasureId::F1.into(), MeasureId::F2.into()),
            (MeasureId::G1.into(), MeasureId::G2.into()),
        ];
        for (m, adj) in pairs {
            assert!(abs(val(m, &q, &p) - val(adj, &p, &q)) < 1e-15, "{m}");
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(
            "j".parse::<Measure>().unwrap(),
            Measure::Catalog(MeasureId::J)
        );
        assert_eq!(
            "D_ADJ".parse::<Measure>().unwrap(),
            Measure::Catalog(MeasureId::D2)
        );
        assert_eq!("chi2_adj".parse::<Measure>().unwrap(), Measure::Chi2Adj);
        assert_eq!(
            Measure::from_name("PHI", Some(0.5)).unwrap(),
            Measure::Catalog(MeasureId::Phi(0.5))
        );
        assert!(matches!(
            "PHI".parse::<Measure>(),
            Err(Error::UnknownMeasure(_))
        ));
        assert!(matches!(
            "nosuch".parse::<Measure>(),
            Err(Error::UnknownMeasure(_))
        ));
        for m in Measure::EXTRAS {
            assert_eq!(m.name().parse::<Measure>().unwrap(), m);
        }
    }

    #[test]
    fn length_mismatch() {
        let (p, _) = golden();
        let u = Distribution::uniform(3).unwrap();
        assert_eq!(
            divergence(Measure::Kl, &p, &u),
            Err(Error::LengthMismatch(2, 3))
        );
        assert_eq!(phi_s(2.0, &p, &u), Err(Error::LengthMismatch(2, 3)));
    }
}
