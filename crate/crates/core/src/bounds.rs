//! Sandwich bounds `m Φ_s(P||Q) <= C_f(P||Q) <= M Φ_s(P||Q)`.
//!
//! `m` and `M` are the infimum and supremum of `g(x) = x^{2-s} f''(x)` over
//! the ratio range `[r, R]`. They come from one of two independent routes:
//!
//! - **closed form**: for each catalog measure, `g` is monotone in `x` when
//!   `s` lies outside a gap interval `(a, b)`, so the extrema sit at the
//!   endpoints. [`mm_closed`] evaluates hand-simplified endpoint
//!   coefficients and returns `None` inside the gap.
//! - **numeric**: [`mm_numeric`] scans `g` built from the generator's `f''`
//!   and refines interior extrema with golden-section search.
//!
//! The same `m`, `M` also bound the gaps between `Φ_s` and its `E`, `A`, `B`
//! functionals against the corresponding gaps for `C_f`; see
//! [`difference_bounds`].

use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::generators::{
    eval_csiszar, phi_branch, Generator, MeasureId, NamedGenerator, PhiBranch,
};
use crate::math::pow;
use crate::measures::phi_s;
use crate::optimize::{interval_extrema, ScanOptions};
use crate::simplex::{ratio_range, Distribution, RatioRange};
use crate::type_s::{a_phi_s, b_phi_s, e_phi_s};
use crate::{Error, Result, Verdict, POLE_THRESHOLD};

/// Where a pair of extrema came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MmSource {
    ClosedForm,
    Numeric,
    /// One side taken from a tabulated extremum over all of `(0, ∞)`.
    Global,
}

impl MmSource {
    pub fn name(&self) -> &'static str {
        match self {
            MmSource::ClosedForm => "closed_form",
            MmSource::Numeric => "numeric",
            MmSource::Global => "global",
        }
    }
}

/// Which route [`bound_interval`] should use for `m` and `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MmMethod {
    /// Closed form when `s` is outside the gap, numeric otherwise.
    #[default]
    Auto,
    /// Closed form, falling back to numeric inside the gap.
    Closed,
    Numeric,
}

impl FromStr for MmMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(MmMethod::Auto),
            "closed" => Ok(MmMethod::Closed),
            "numeric" => Ok(MmMethod::Numeric),
            other => Err(Error::UnknownMeasure(other.to_string())),
        }
    }
}

/// Extrema of `g(x) = x^{2-s} f''(x)` on a ratio range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MmBounds {
    /// `m`, the infimum.
    pub inf: f64,
    pub inf_at: f64,
    /// `M`, the supremum.
    pub sup: f64,
    pub sup_at: f64,
    pub source: MmSource,
    pub s: f64,
    pub range: RatioRange,
}

/// `g(x) = x^{2-s} f''(x)`.
pub fn g_eval<G: Generator + ?Sized>(gen: &G, s: f64, x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::NonPositiveX(x));
    }
    Ok(pow(x, 2.0 - s) * gen.f_second(x))
}

fn finite(s: f64) -> Result<()> {
    if s.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteParameter(s))
    }
}

fn checked(range: RatioRange) -> Result<RatioRange> {
    RatioRange::new(range.lo, range.hi)
}

/// Extrema of `g` by a 4096-point geometric scan plus golden-section
/// refinement to relative tolerance `1e-12`.
pub fn mm_numeric<G: Generator + ?Sized>(gen: &G, s: f64, range: RatioRange) -> Result<MmBounds> {
    mm_numeric_with(gen, s, range, ScanOptions::default())
}

pub fn mm_numeric_with<G: Generator + ?Sized>(
    gen: &G,
    s: f64,
    range: RatioRange,
    opts: ScanOptions,
) -> Result<MmBounds> {
    finite(s)?;
    let range = checked(range)?;
    let ex = interval_extrema(
        |x| pow(x, 2.0 - s) * gen.f_second(x),
        range.lo,
        range.hi,
        opts,
    );
    Ok(MmBounds {
        inf: ex.min.value,
        inf_at: ex.min.x,
        sup: ex.max.value,
        sup_at: ex.max.x,
        source: MmSource::Numeric,
        s,
        range,
    })
}

/// The `s` values for which `g` is monotone on all of `(0, ∞)`.
///
/// `g` is nondecreasing for `s <= increasing_up_to` and nonincreasing for
/// `s >= decreasing_from`. Between the two the closed form does not apply.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotoneRegions {
    pub increasing_up_to: f64,
    pub decreasing_from: f64,
}

impl MonotoneRegions {
    pub fn contains(&self, s: f64) -> bool {
        s <= self.increasing_up_to || s >= self.decreasing_from
    }

    pub fn in_gap(&self, s: f64) -> bool {
        !self.contains(s)
    }
}

/// Monotonicity regions for the nine fixed measures; `None` for `Φ_t`, whose
/// `g(x) = x^{t-s}` is monotone for every `s`.
pub fn monotone_regions(id: MeasureId) -> Option<MonotoneRegions> {
    let (a, b) = match id {
        MeasureId::D1 => (0.75, 2.0),
        MeasureId::D2 => (-1.0, 0.25),
        MeasureId::F1 => (-1.0, 1.0),
        MeasureId::F2 => (0.0, 2.0),
        MeasureId::G1 => (-1.0, 0.0),
        MeasureId::G2 => (1.0, 2.0),
        MeasureId::J => (0.0, 1.0),
        MeasureId::I => (0.0, 1.0),
        MeasureId::T => (-1.0, 2.0),
        MeasureId::Phi(_) => return None,
    };
    Some(MonotoneRegions {
        increasing_up_to: a,
        decreasing_from: b,
    })
}

fn snap_to_pole(s: f64) -> f64 {
    match phi_branch(s) {
        PhiBranch::ReverseKl => 0.0,
        PhiBranch::Kl => 1.0,
        PhiBranch::Power => s,
    }
}

/// `g(x)` in simplified closed form, written out per measure.
///
/// Independent of the generator code path: [`mm_closed`] is built on this,
/// [`mm_numeric`] on `x^{2-s} f''(x)`.
pub fn endpoint_coefficient(id: MeasureId, s: f64, x: f64) -> f64 {
    let xp1 = x + 1.0;
    match id {
        MeasureId::D1 => pow(x, 2.0 - s) * (x + 3.0) / (xp1 * xp1),
        MeasureId::D2 => pow(x, -s) * (3.0 * x + 1.0) / (xp1 * xp1),
        MeasureId::F1 => pow(x, 1.0 - s) / (xp1 * xp1),
        MeasureId::F2 => pow(x, 2.0 - s) / (xp1 * xp1),
        MeasureId::G1 => 1.0 / (2.0 * pow(x, s) * xp1),
        MeasureId::G2 => x * x / (2.0 * pow(x, s) * xp1),
        MeasureId::J => xp1 / pow(x, s),
        MeasureId::I => pow(x, 1.0 - s) / (2.0 * xp1),
        MeasureId::T => pow(x, -s) * (1.0 + x * x) / (4.0 * xp1),
        MeasureId::Phi(t) => pow(x, snap_to_pole(t) - s),
    }
}

/// `g'(x)` as an explicit rational-times-power expression, used to certify
/// the sign pattern behind [`monotone_regions`].
pub fn g_slope(id: MeasureId, s: f64, x: f64) -> f64 {
    let xp1 = x + 1.0;
    let cube = xp1 * xp1 * xp1;
    match id {
        MeasureId::D1 => {
            -pow(x, 1.0 - s) * ((s - 1.0) * x * x + (4.0 * s - 3.0) * x + 3.0 * (s - 2.0)) / cube
        }
        MeasureId::D2 => {
            -pow(x, -s - 1.0) * (3.0 * (s + 1.0) * x * x + (4.0 * s - 1.0) * x + s) / cube
        }
        MeasureId::F1 => -pow(x, -s) * ((s + 1.0) * x + (s - 1.0)) / cube,
        MeasureId::F2 => -pow(x, 1.0 - s) * (s * x + (s - 2.0)) / cube,
        MeasureId::G1 => -pow(x, -1.0 - s) * ((s + 1.0) * x + s) / (2.0 * xp1 * xp1),
        MeasureId::G2 => -pow(x, 1.0 - s) * ((s - 1.0) * x + (s - 2.0)) / (2.0 * xp1 * xp1),
        MeasureId::J => pow(x, -s - 1.0) * ((1.0 - s) * x - s),
        MeasureId::I => pow(x, -s) * (-s * x + (1.0 - s)) / (2.0 * xp1 * xp1),
        MeasureId::T => {
            let poly = (s - 1.0) * x * x * x + (s - 2.0) * x * x + (s + 1.0) * x + s;
            -pow(x, -s - 1.0) * poly / (4.0 * xp1 * xp1)
        }
        MeasureId::Phi(t) => {
            let e = snap_to_pole(t) - s;
            e * pow(x, e - 1.0)
        }
    }
}

/// Closed-form `m`, `M`, or `None` when `s` falls in the measure's gap.
pub fn mm_closed(id: MeasureId, s: f64, range: RatioRange) -> Result<Option<MmBounds>> {
    finite(s)?;
    let range = checked(range)?;
    let (lo, hi) = (range.lo, range.hi);
    let closed = |inf: f64, inf_at: f64, sup: f64, sup_at: f64| MmBounds {
        inf,
        inf_at,
        sup,
        sup_at,
        source: MmSource::ClosedForm,
        s,
        range,
    };

    let increasing = match (id, monotone_regions(id)) {
        (MeasureId::Phi(t), _) => {
            let e = snap_to_pole(t) - snap_to_pole(s);
            if e == 0.0 {
                return Ok(Some(closed(1.0, lo, 1.0, hi)));
            }
            e > 0.0
        }
        (_, Some(regions)) if s <= regions.increasing_up_to => true,
        (_, Some(regions)) if s >= regions.decreasing_from => false,
        _ => return Ok(None),
    };

    let at_lo = endpoint_coefficient(id, s, lo);
    let at_hi = endpoint_coefficient(id, s, hi);
    Ok(Some(if increasing {
        closed(at_lo, lo, at_hi, hi)
    } else {
        closed(at_hi, hi, at_lo, lo)
    }))
}

/// Closed form where available, numeric otherwise.
pub fn mm_auto(id: MeasureId, s: f64, range: RatioRange) -> Result<MmBounds> {
    match mm_closed(id, s, range)? {
        Some(mm) => Ok(mm),
        None => mm_numeric(&id.generator(), s, range),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremumKind {
    Sup,
    Inf,
}

impl ExtremumKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExtremumKind::Sup => "sup",
            ExtremumKind::Inf => "inf",
        }
    }
}

/// A global extremum of `g` over `(0, ∞)` at a specific `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlobalExtremum {
    pub measure: MeasureId,
    pub s: f64,
    pub kind: ExtremumKind,
    pub value: f64,
    pub at: f64,
}

const SQRT_2: f64 = core::f64::consts::SQRT_2;
const SQRT_3: f64 = 1.732_050_807_568_877_2;
const NINE_EIGHTHS: f64 = 9.0 / 8.0;
const THREE_ROOT3_OVER_16: f64 = 3.0 * SQRT_3 / 16.0;
const HALF_SILVER: f64 = (SQRT_2 - 1.0) / 2.0;

const fn global(
    measure: MeasureId,
    s: f64,
    kind: ExtremumKind,
    value: f64,
    at: f64,
) -> GlobalExtremum {
    GlobalExtremum {
        measure,
        s,
        kind,
        value,
        at,
    }
}

/// Every tabulated global extremum, in catalog order.
pub const GLOBAL_EXTREMA: [GlobalExtremum; 11] = [
    global(MeasureId::D1, 1.0, ExtremumKind::Sup, NINE_EIGHTHS, 3.0),
    global(
        MeasureId::D2,
        0.0,
        ExtremumKind::Sup,
        NINE_EIGHTHS,
        1.0 / 3.0,
    ),
    global(MeasureId::F1, 0.0, ExtremumKind::Sup, 0.25, 1.0),
    global(
        MeasureId::F1,
        0.5,
        ExtremumKind::Sup,
        THREE_ROOT3_OVER_16,
        1.0 / 3.0,
    ),
    global(
        MeasureId::F2,
        0.5,
        ExtremumKind::Sup,
        THREE_ROOT3_OVER_16,
        3.0,
    ),
    global(MeasureId::F2, 1.0, ExtremumKind::Sup, 0.25, 1.0),
    global(MeasureId::J, 0.5, ExtremumKind::Inf, 2.0, 1.0),
    global(MeasureId::I, 0.5, ExtremumKind::Sup, 0.25, 1.0),
    global(
        MeasureId::T,
        0.0,
        ExtremumKind::Inf,
        HALF_SILVER,
        SQRT_2 - 1.0,
    ),
    global(
        MeasureId::T,
        1.0,
        ExtremumKind::Inf,
        HALF_SILVER,
        SQRT_2 + 1.0,
    ),
    global(MeasureId::T, 0.5, ExtremumKind::Inf, 0.25, 1.0),
];

/// Looks up the tabulated global extremum of `g` for `(measure, s)`.
pub fn global_extrema(measure: MeasureId, s: f64) -> Result<GlobalExtremum> {
    GLOBAL_EXTREMA
        .iter()
        .find(|e| e.measure == measure && (e.s - s).abs() <= POLE_THRESHOLD)
        .copied()
        .ok_or(Error::NotTabulated(s))
}

/// One-sided bounds on `g` from a tabulated global extremum, with the other
/// side filled in numerically over `range`.
pub fn mm_global(measure: MeasureId, s: f64, range: RatioRange) -> Result<MmBounds> {
    let g = global_extrema(measure, s)?;
    let mut mm = mm_numeric(&measure.generator(), s, range)?;
    match g.kind {
        ExtremumKind::Sup => {
            mm.sup = g.value;
            mm.sup_at = g.at;
        }
        ExtremumKind::Inf => {
            mm.inf = g.value;
            mm.inf_at = g.at;
        }
    }
    mm.source = MmSource::Global;
    Ok(mm)
}

/// A certified sandwich `m Φ_s <= C_f <= M Φ_s` for one pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub measure: MeasureId,
    pub s: f64,
    pub range: RatioRange,
    pub phi: f64,
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
    pub mm: MmBounds,
    /// The closed form was requested but `s` is in the gap.
    pub fell_back: bool,
    pub lower_slack: f64,
    pub upper_slack: f64,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.verdicts().iter().all(Verdict::holds)
    }

    pub fn verdicts(&self) -> [Verdict; 2] {
        [
            Verdict::new("m*phi <= Cf", self.lower, self.value),
            Verdict::new("Cf <= M*phi", self.value, self.upper),
        ]
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} <= {}(P||Q) = {} <= {} (s = {}, m = {}, M = {}, {})",
            self.lower,
            self.measure,
            self.value,
            self.upper,
            self.s,
            self.mm.inf,
            self.mm.sup,
            self.mm.source.name()
        )
    }
}

/// Sandwich bound on a catalog measure in terms of `Φ_s`.
pub fn bound_interval(
    measure: MeasureId,
    s: f64,
    p: &Distribution,
    q: &Distribution,
    method: MmMethod,
) -> Result<BoundReport> {
    finite(s)?;
    let range = ratio_range(p, q)?;
    let gen = measure.generator();
    let (mm, fell_back) = match method {
        MmMethod::Numeric => (mm_numeric(&gen, s, range)?, false),
        MmMethod::Auto | MmMethod::Closed => match mm_closed(measure, s, range)? {
            Some(mm) => (mm, false),
            None => (mm_numeric(&gen, s, range)?, method == MmMethod::Closed),
        },
    };
    let phi = phi_s(s, p, q)?;
    let value = eval_csiszar(&gen, p, q)?;
    let lower = mm.inf * phi;
    let upper = mm.sup * phi;
    Ok(BoundReport {
        measure,
        s,
        range,
        phi,
        lower,
        value,
        upper,
        mm,
        fell_back,
        lower_slack: value - lower,
        upper_slack: upper - value,
    })
}

/// `E_Cf(P||Q) = Σ (p_i - q_i) f'(p_i / q_i)`.
pub fn e_cf<G: Generator + ?Sized>(gen: &G, p: &Distribution, q: &Distribution) -> Result<f64> {
    Ok(p.zip(q)?.map(|(a, b)| (a - b) * gen.f_prime(a / b)).sum())
}

/// `A_Cf(r, R) = ¼ (R - r) [f'(R) - f'(r)]`.
pub fn a_cf<G: Generator + ?Sized>(gen: &G, range: RatioRange) -> Result<f64> {
    let RatioRange { lo, hi } = checked(range)?;
    if lo == hi {
        return Ok(0.0);
    }
    Ok(0.25 * (hi - lo) * (gen.f_prime(hi) - gen.f_prime(lo)))
}

/// `B_Cf(r, R) = [(R - 1) f(r) + (1 - r) f(R)] / (R - r)`, the chord of `f`
/// at 1. Requires `r <= 1 <= R`, `r != R`.
pub fn b_cf<G: Generator + ?Sized>(gen: &G, range: RatioRange) -> Result<f64> {
    let RatioRange { lo, hi } = checked(range)?;
    if !(lo <= 1.0 && 1.0 <= hi) || lo == hi {
        return Err(Error::InvalidRange { r: lo, big_r: hi });
    }
    Ok(((hi - 1.0) * gen.f(lo) + (1.0 - lo) * gen.f(hi)) / (hi - lo))
}

/// Verdicts for the sandwich and for the three gap inequalities
/// `m [X_Φs - Φ_s] <= X_Cf - C_f <= M [X_Φs - Φ_s]`, `X ∈ {E, A, B}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DifferenceReport {
    pub mm: MmBounds,
    pub verdicts: Vec<Verdict>,
}

impl DifferenceReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(Verdict::holds)
    }
}

/// [`difference_bounds_with`] using [`mm_auto`] for a named generator.
pub fn difference_bounds(
    gen: &NamedGenerator,
    s: f64,
    p: &Distribution,
    q: &Distribution,
) -> Result<DifferenceReport> {
    let range = ratio_range(p, q)?;
    let mm = mm_auto(gen.id, s, range)?;
    difference_bounds_with(gen, &mm, p, q)
}

/// Checks the gap inequalities for any generator given extrema `mm` of its
/// `g`. `mm.range` must cover the ratio range of the pair.
pub fn difference_bounds_with<G: Generator + ?Sized>(
    gen: &G,
    mm: &MmBounds,
    p: &Distribution,
    q: &Distribution,
) -> Result<DifferenceReport> {
    let range = ratio_range(p, q)?;
    if range.lo < mm.range.lo || range.hi > mm.range.hi {
        return Err(Error::InvalidRange {
            r: range.lo,
            big_r: range.hi,
        });
    }
    let s = mm.s;
    let (m, big_m) = (mm.inf, mm.sup);
    let phi = phi_s(s, p, q)?;
    let cf = eval_csiszar(gen, p, q)?;

    let mut verdicts = alloc::vec![
        Verdict::new("m*phi <= Cf", m * phi, cf),
        Verdict::new("Cf <= M*phi", cf, big_m * phi),
    ];
    let mut gap = |lower: &'static str, upper: &'static str, phi_gap: f64, cf_gap: f64| {
        verdicts.push(Verdict::new(lower, m * phi_gap, cf_gap));
        verdicts.push(Verdict::new(upper, cf_gap, big_m * phi_gap));
    };

    gap(
        "m(Ephi-phi) <= Ecf-Cf",
        "Ecf-Cf <= M(Ephi-phi)",
        e_phi_s(s, p, q)? - phi,
        e_cf(gen, p, q)? - cf,
    );
    gap(
        "m(Aphi-phi) <= Acf-Cf",
        "Acf-Cf <= M(Aphi-phi)",
        a_phi_s(s, range)? - phi,
        a_cf(gen, range)? - cf,
    );
    if range.brackets_one() && !range.is_degenerate() {
        gap(
            "m(Bphi-phi) <= Bcf-Cf",
            "Bcf-Cf <= M(Bphi-phi)",
            b_phi_s(s, range)? - phi,
            b_cf(gen, range)? - cf,
        );
    }
    Ok(DifferenceReport { mm: *mm, verdicts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{catalog, phi_generator};
    use crate::math::{abs, ln};
    use crate::optimize::log_space;
    use crate::simplex::normalize;

    fn golden() -> (Distribution, Distribution) {
        (
            normalize(&[3.0, 1.0]).unwrap(),
            normalize(&[1.0, 3.0]).unwrap(),
        )
    }

    fn wide() -> RatioRange {
        RatioRange::new(1.0 / 3.0, 3.0).unwrap()
    }

    #[test]
    fn g_spot_values() {
        let i = MeasureId::I.generator();
        assert!(abs(g_eval(&i, 1.0, 1.0).unwrap() - 0.25) < 1e-15);
        let j = MeasureId::J.generator();
        assert!(abs(g_eval(&j, 0.5, 1.0).unwrap() - 2.0) < 1e-15);
        let d1 = MeasureId::D1.generator();
        assert!(abs(g_eval(&d1, 1.0, 3.0).unwrap() - 9.0 / 8.0) < 1e-15);
        assert_eq!(g_eval(&d1, 1.0, 0.0), Err(Error::NonPositiveX(0.0)));
        assert_eq!(g_eval(&d1, 1.0, -2.0), Err(Error::NonPositiveX(-2.0)));
    }

    #[test]
    fn numeric_extrema_examples() {
        let d1 = MeasureId::D1.generator();
        let mm = mm_numeric(&d1, 1.0, RatioRange::new(1.0, 8.0).unwrap()).unwrap();
        assert!(abs(mm.sup - 9.0 / 8.0) < 1e-12);
        assert!(abs(mm.sup_at - 3.0) < 1e-6);
        assert_eq!(mm.source, MmSource::Numeric);

        let point = RatioRange::new(2.5, 2.5).unwrap();
        let mm = mm_numeric(&d1, 0.3, point).unwrap();
        let g = g_eval(&d1, 0.3, 2.5).unwrap();
        assert_eq!((mm.inf, mm.sup), (g, g));

        let f1 = MeasureId::F1.generator();
        let mm = mm_numeric(&f1, 0.0, wide()).unwrap();
        assert!(abs(mm.sup - 0.25) < 1e-12);
        assert!(abs(mm.sup_at - 1.0) < 1e-6);
    }

    #[test]
    fn closed_form_examples() {
        let mm = mm_closed(MeasureId::I, 1.0, wide()).unwrap().unwrap();
        assert!(abs(mm.inf - 1.0 / 8.0) < 1e-15);
        assert!(abs(mm.sup - 3.0 / 8.0) < 1e-15);

        let mm = mm_closed(MeasureId::D1, 2.0, wide()).unwrap().unwrap();
        assert!(abs(mm.sup - 15.0 / 8.0) < 1e-15);
        assert!(abs(mm.inf - 3.0 / 8.0) < 1e-15);

        assert_eq!(mm_closed(MeasureId::D1, 1.0, wide()).unwrap(), None);

        let mm = mm_closed(MeasureId::Phi(0.7), 0.7, wide())
            .unwrap()
            .unwrap();
        assert_eq!((mm.inf, mm.sup), (1.0, 1.0));

        let bad = RatioRange { lo: 0.0, hi: 1.0 };
        assert!(matches!(
            mm_closed(MeasureId::J, 1.0, bad),
            Err(Error::InvalidRange { .. })
        ));
    }

    #[test]
    fn corrected_coefficients_match_numeric() {
        // J-divergence sup, AG lower-bound sup and the adjoint J-divergence at
        // s = 1 are the places where a literal reading would go wrong.
        let range = RatioRange::new(0.2, 6.0).unwrap();
        for (id, s) in [
            (MeasureId::J, -0.5),
            (MeasureId::J, 2.0),
            (MeasureId::G1, 0.5),
            (MeasureId::D2, 1.0),
        ] {
            let closed = mm_closed(id, s, range).unwrap().unwrap();
            let numeric = mm_numeric(&id.generator(), s, range).unwrap();
            assert!(
                abs(closed.inf - numeric.inf) <= 1e-9 * (1.0 + numeric.inf),
                "{id} s={s}"
            );
            assert!(
                abs(closed.sup - numeric.sup) <= 1e-9 * (1.0 + numeric.sup),
                "{id} s={s}"
            );
        }
        let j = mm_closed(MeasureId::J, 0.0, range).unwrap().unwrap();
        assert!(abs(j.sup - (1.0 + 6.0)) < 1e-15);
        let g1 = mm_closed(MeasureId::G1, 1.0, range).unwrap().unwrap();
        assert!(abs(g1.sup - 1.0 / (2.0 * 0.2 * 1.2)) < 1e-15);
        let d2 = mm_closed(MeasureId::D2, 1.0, range).unwrap().unwrap();
        assert!(abs(d2.inf - 19.0 / (6.0 * 49.0)) < 1e-15);
        assert!(abs(d2.sup - 1.6 / (0.2 * 1.44)) < 1e-14);
    }

    #[test]
    fn slope_signs_follow_regions() {
        let xs = log_space(1e-3, 1e3, 200);
        for id in MeasureId::FIXED {
            let regions = monotone_regions(id).unwrap();
            for s in [regions.increasing_up_to - 1.5, regions.increasing_up_to] {
                assert!(xs.iter().all(|&x| g_slope(id, s, x) >= 0.0), "{id} s={s}");
            }
            for s in [regions.decreasing_from, regions.decreasing_from + 1.5] {
                assert!(xs.iter().all(|&x| g_slope(id, s, x) <= 0.0), "{id} s={s}");
            }
        }
    }

    #[test]
    fn slope_matches_difference_of_g() {
        for id in MeasureId::FIXED {
            let gen = id.generator();
            for s in [-1.5, 0.3, 1.0, 2.5] {
                for x in [0.05, 0.7, 1.0, 4.0, 30.0] {
                    let h = 1e-6 * x;
                    let fd = (g_eval(&gen, s, x + h).unwrap() - g_eval(&gen, s, x - h).unwrap())
                        / (2.0 * h);
                    let exact = g_slope(id, s, x);
                    assert!(
                        abs(fd - exact) <= 1e-6 * abs(exact).max(1.0),
                        "{id} s={s} x={x}"
                    );
                }
            }
        }
    }

    #[test]
    fn endpoint_coefficient_matches_g() {
        for gen in catalog() {
            for s in [-2.0, 0.0, 0.5, 1.0, 3.0] {
                for x in [0.01, 0.5, 1.0, 2.0, 50.0] {
                    let g = g_eval(&gen, s, x).unwrap();
                    let c = endpoint_coefficient(gen.id, s, x);
                    assert!(
                        abs(g - c) <= 1e-13 * abs(g).max(1.0),
                        "{} s={s} x={x}",
                        gen.id
                    );
                }
            }
        }
    }

    #[test]
    fn global_table_lookup() {
        let g = global_extrema(MeasureId::D1, 1.0).unwrap();
        assert_eq!((g.kind, g.value, g.at), (ExtremumKind::Sup, 9.0 / 8.0, 3.0));
        let g = global_extrema(MeasureId::T, 0.0).unwrap();
        assert_eq!(g.kind, ExtremumKind::Inf);
        assert!(abs(g.value - (SQRT_2 - 1.0) / 2.0) < 1e-16);
        assert!(abs(g.at - (SQRT_2 - 1.0)) < 1e-16);
        let g = global_extrema(MeasureId::I, 0.5).unwrap();
        assert_eq!((g.kind, g.value, g.at), (ExtremumKind::Sup, 0.25, 1.0));
        assert_eq!(
            global_extrema(MeasureId::J, 2.0),
            Err(Error::NotTabulated(2.0))
        );
        // Each tabulated value is g at its attaining point.
        for e in GLOBAL_EXTREMA {
            let g = g_eval(&e.measure.generator(), e.s, e.at).unwrap();
            assert!(abs(g - e.value) < 1e-15, "{} s={}", e.measure, e.s);
        }
    }

    #[test]
    fn golden_sandwiches() {
        let (p, q) = golden();
        let k_rev = 0.5 * ln(3.0);
        let rep = bound_interval(MeasureId::I, 1.0, &p, &q, MmMethod::Auto).unwrap();
        assert!(abs(rep.lower - k_rev / 8.0) < 1e-15);
        assert!(abs(rep.value - 0.130_812_3) < 1e-6);
        assert!(abs(rep.upper - 3.0 * k_rev / 8.0) < 1e-15);
        assert!(rep.holds());

        let rep = bound_interval(MeasureId::J, 0.0, &p, &q, MmMethod::Auto).unwrap();
        assert!(abs(rep.lower - 4.0 / 3.0 * k_rev) < 1e-14);
        assert!(abs(rep.upper - 4.0 * k_rev) < 1e-14);
        assert!(abs(rep.value - ln(3.0)) < 1e-15);
        assert!(rep.holds());

        let rep = bound_interval(MeasureId::D1, 1.0, &p, &q, MmMethod::Closed).unwrap();
        assert!(rep.fell_back);
        assert_eq!(rep.mm.source, MmSource::Numeric);
        assert!(rep.holds());

        for id in MeasureId::FIXED {
            let rep = bound_interval(id, 0.5, &p, &p, MmMethod::Auto).unwrap();
            assert_eq!((rep.lower, rep.value, rep.upper), (0.0, 0.0, 0.0));
        }
    }

    #[test]
    fn general_functionals_specialize() {
        let (p, q) = golden();
        let phi1 = phi_generator(1.0).unwrap();
        assert!(abs(e_cf(&phi1, &p, &q).unwrap() - e_phi_s(1.0, &p, &q).unwrap()) < 1e-12);
        let phi2 = phi_generator(2.0).unwrap();
        assert!(abs(a_cf(&phi2, wide()).unwrap() - 16.0 / 9.0) < 1e-15);
        for gen in catalog() {
            assert_eq!(e_cf(&gen, &p, &p).unwrap(), 0.0);
        }
        assert!(matches!(
            b_cf(&phi2, RatioRange::new(1.5, 2.0).unwrap()),
            Err(Error::InvalidRange { .. })
        ));
    }

    #[test]
    fn difference_bounds_examples() {
        let (p, q) = golden();
        for s in [-1.0, 0.0, 0.5, 1.0, 2.0] {
            let gen = phi_generator(s).unwrap();
            let rep = difference_bounds(&gen, s, &p, &q).unwrap();
            assert_eq!((rep.mm.inf, rep.mm.sup), (1.0, 1.0));
            assert!(rep.verdicts.iter().all(|v| abs(v.slack) < 1e-12), "s={s}");
        }
        let rep = difference_bounds(&MeasureId::J.generator(), 1.0, &p, &q).unwrap();
        assert_eq!(rep.verdicts.len(), 8);
        assert!(rep.all_hold());

        let rep = difference_bounds(&MeasureId::I.generator(), 0.0, &p, &p).unwrap();
        assert_eq!(rep.verdicts.len(), 6);
        assert!(rep.verdicts.iter().all(|v| v.slack == 0.0));
    }

    #[test]
    fn difference_bounds_rejects_narrow_mm() {
        let (p, q) = golden();
        let gen = MeasureId::J.generator();
        let mm = mm_numeric(&gen, 1.0, RatioRange::new(0.5, 2.0).unwrap()).unwrap();
        assert!(matches!(
            difference_bounds_with(&gen, &mm, &p, &q),
            Err(Error::InvalidRange { .. })
        ));
    }
}
