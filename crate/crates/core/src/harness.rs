//! Seeded randomized verification suites.
//!
//! Every suite draws `trials` random pairs from a counter-based generator
//! keyed by `(seed, trial index)`, checks a family of inequalities or
//! identities on each, and folds the outcomes into a [`SuiteReport`]. Trials
//! run in index order, so identical configurations give identical reports.
//!
//! ```
//! use fdiv_core::harness::{run_suite, TrialConfig};
//!
//! let config = TrialConfig { trials: 50, ..TrialConfig::default() };
//! let report = run_suite("eq12", &config).unwrap();
//! assert_eq!(report.violations, 0);
//! ```

use core::fmt;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::bounds::{
    bound_interval, difference_bounds, mm_closed, mm_numeric, monotone_regions, MmMethod,
};
use crate::estimators::{estimate_all, is_degenerate, EstimatorId};
use crate::generators::{eval_csiszar, phi_generator, MeasureId};
use crate::math::{abs, exp, ln};
use crate::measures::{divergence, phi_s, Measure};
use crate::simplex::{normalize, ratio_range, Distribution, RatioRange};
use crate::type_s::bound_set;
use crate::{Error, Result, Verdict, VIOLATION_TOLERANCE};

/// Parameters shared by every suite.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialConfig {
    pub seed: u64,
    pub trials: usize,
    /// Inclusive bounds on the number of outcomes per pair.
    pub n_min: usize,
    pub n_max: usize,
    /// Coordinates are `exp(c u)` with `u` uniform on `[-1, 1)` before
    /// normalization; larger `c` gives more skewed pairs.
    pub concentration: f64,
    /// Values of `s` tried by the suites that take one.
    pub s_samples: Vec<f64>,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            trials: 1000,
            n_min: 2,
            n_max: 64,
            concentration: 2.0,
            s_samples: alloc::vec![-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0, 3.0],
        }
    }
}

impl TrialConfig {
    pub const MAX_N: usize = 1_000_000;

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1"));
        }
        if self.n_min < 2 || self.n_min > self.n_max || self.n_max > Self::MAX_N {
            return Err(Error::InvalidConfig(
                "n range must satisfy 2 <= n_min <= n_max <= 1e6",
            ));
        }
        if !(self.concentration > 0.0 && self.concentration.is_finite()) {
            return Err(Error::InvalidConfig(
                "concentration must be positive and finite",
            ));
        }
        if self.s_samples.iter().any(|s| !s.is_finite()) {
            return Err(Error::InvalidConfig("s samples must be finite"));
        }
        Ok(())
    }
}

const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// SplitMix64 stream started from a hash of `(seed, index)`.
#[derive(Debug, Clone)]
pub struct TrialRng {
    state: u64,
}

impl TrialRng {
    pub fn new(seed: u64, index: u64) -> Self {
        Self {
            state: mix64(seed ^ mix64(index.wrapping_mul(GAMMA).wrapping_add(GAMMA))),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix64(self.state)
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Log-uniform on `[lo, hi]`, `lo > 0`.
    pub fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        exp(self.uniform(ln(lo), ln(hi)))
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: usize, hi: usize) -> usize {
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as usize
    }
}

/// Smallest coordinate [`random_pair`] will produce.
pub const MIN_COORDINATE: f64 = 1e-12;

fn random_distribution(rng: &mut TrialRng, n: usize, concentration: f64) -> Distribution {
    let raw: Vec<f64> = (0..n)
        .map(|_| exp(concentration * (2.0 * rng.next_f64() - 1.0)))
        .collect();
    let d = normalize(&raw).expect("positive finite weights normalize");
    if d.probs().iter().all(|&x| x >= MIN_COORDINATE) {
        return d;
    }
    // Mix in a sliver of the uniform distribution to lift tiny coordinates.
    let lambda = n as f64 * MIN_COORDINATE;
    let lifted: Vec<f64> = d
        .probs()
        .iter()
        .map(|&x| (1.0 - lambda) * x + MIN_COORDINATE)
        .collect();
    Distribution::new(lifted).expect("lifted distribution stays valid")
}

fn pair_from(rng: &mut TrialRng, config: &TrialConfig) -> (Distribution, Distribution) {
    let n = rng.int_in(config.n_min, config.n_max);
    let p = random_distribution(rng, n, config.concentration);
    let q = random_distribution(rng, n, config.concentration);
    (p, q)
}

/// The pair used by trial `index`. A pure function of `(config, index)`.
pub fn random_pair(config: &TrialConfig, index: u64) -> Result<(Distribution, Distribution)> {
    config.validate()?;
    Ok(pair_from(&mut TrialRng::new(config.seed, index), config))
}

/// One failed check.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub trial: usize,
    pub relation: String,
    pub s: Option<f64>,
    pub slack: f64,
}

/// Aggregated outcome of one suite.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub checks: u64,
    pub violations: u64,
    /// Smallest slack seen; negative means some check failed or came close.
    pub worst_slack: f64,
    /// Slack of smallest magnitude seen.
    pub tightest_slack: f64,
    /// The first few violations, in trial order.
    pub examples: Vec<Violation>,
}

impl SuiteReport {
    pub const MAX_EXAMPLES: usize = 5;

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<10} {} trials={} checks={} violations={} worst_slack={:e} tightest_slack={:e}",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.trials,
            self.checks,
            self.violations,
            self.worst_slack,
            self.tightest_slack
        )?;
        for v in &self.examples {
            write!(f, "\n    trial {} {}", v.trial, v.relation)?;
            if let Some(s) = v.s {
                write!(f, " s={s}")?;
            }
            write!(f, " slack={:e}", v.slack)?;
        }
        Ok(())
    }
}

struct Collector {
    trial: usize,
    s: Option<f64>,
    checks: u64,
    violations: u64,
    worst: f64,
    tightest: f64,
    examples: Vec<Violation>,
}

impl Collector {
    fn new() -> Self {
        Self {
            trial: 0,
            s: None,
            checks: 0,
            violations: 0,
            worst: f64::INFINITY,
            tightest: f64::INFINITY,
            examples: Vec::new(),
        }
    }

    fn record(&mut self, relation: &str, slack: f64, violated: bool) {
        self.checks += 1;
        if slack.is_nan() || slack < self.worst {
            self.worst = slack;
        }
        if abs(slack) < abs(self.tightest) {
            self.tightest = slack;
        }
        if violated {
            self.violations += 1;
            if self.examples.len() < SuiteReport::MAX_EXAMPLES {
                self.examples.push(Violation {
                    trial: self.trial,
                    relation: relation.to_string(),
                    s: self.s,
                    slack,
                });
            }
        }
    }

    fn verdict(&mut self, v: &Verdict) {
        self.record(v.relation, v.slack, !v.holds());
    }

    /// `lhs <= rhs` up to [`VIOLATION_TOLERANCE`].
    fn le(&mut self, relation: &str, lhs: f64, rhs: f64) {
        let slack = rhs - lhs;
        self.record(
            relation,
            slack,
            slack.is_nan() || slack < -VIOLATION_TOLERANCE,
        );
    }

    /// `|a - b| <= tol`, reported with slack `tol - |a - b|`.
    fn close(&mut self, relation: &str, a: f64, b: f64, tol: f64) {
        let slack = tol - abs(a - b);
        self.record(relation, slack, slack.is_nan() || slack < 0.0);
    }

    /// `|a - b| <= rel * max(|a|, |b|)`, reported as a relative slack.
    fn close_rel(&mut self, relation: &str, a: f64, b: f64, rel: f64) {
        let scale = abs(a).max(abs(b));
        let diff = if scale == 0.0 {
            0.0
        } else {
            abs(a - b) / scale
        };
        let slack = rel - diff;
        self.record(relation, slack, slack.is_nan() || slack < 0.0);
    }

    fn error(&mut self, e: &Error) {
        self.record(&format!("error: {e}"), f64::NEG_INFINITY, true);
    }
}

type SuiteFn =
    fn(&mut Collector, &TrialConfig, &mut TrialRng, &Distribution, &Distribution) -> Result<()>;

/// A registered suite.
#[derive(Clone, Copy)]
pub struct Suite {
    pub id: &'static str,
    pub summary: &'static str,
    run: SuiteFn,
}

impl fmt::Debug for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Suite").field("id", &self.id).finish()
    }
}

const fn suite(id: &'static str, summary: &'static str, run: SuiteFn) -> Suite {
    Suite { id, summary, run }
}

/// Every suite, in the order `--all` runs them.
pub const SUITES: &[Suite] = &[
    suite("eq3", "J = D(P||Q) + D(Q||P)", eq3),
    suite("eq10", "I = (F(P||Q) + F(Q||P)) / 2", eq10),
    suite("eq11", "T = (G(P||Q) + G(Q||P)) / 2", eq11),
    suite("eq12", "J = 4 (I + T)", eq12),
    suite("eq13", "D(P||Q) = 2 (F(Q||P) + G(Q||P))", eq13),
    suite(
        "phi-cases",
        "PHI_s at s = -1, 0, 1/2, 1, 2 and continuity at the poles",
        phi_cases,
    ),
    suite(
        "engine",
        "closed-form sums agree with the Csiszar engine",
        engine,
    ),
    suite(
        "thm31",
        "0 <= PHI_s <= E <= A, PHI_s <= B <= A, B - PHI_s <= A",
        thm31,
    ),
    suite(
        "thm32",
        "gap inequalities for E, A, B against any generator",
        thm32,
    ),
    suite(
        "thm41",
        "m PHI_s <= D(P||Q) <= M PHI_s, closed-form m, M",
        thm41,
    ),
    suite(
        "thm42",
        "m PHI_s <= D(Q||P) <= M PHI_s, closed-form m, M",
        thm42,
    ),
    suite(
        "thm43",
        "m PHI_s <= F(P||Q) <= M PHI_s, closed-form m, M",
        thm43,
    ),
    suite(
        "thm44",
        "m PHI_s <= F(Q||P) <= M PHI_s, closed-form m, M",
        thm44,
    ),
    suite(
        "thm45",
        "m PHI_s <= G(P||Q) <= M PHI_s, closed-form m, M",
        thm45,
    ),
    suite(
        "thm46",
        "m PHI_s <= G(Q||P) <= M PHI_s, closed-form m, M",
        thm46,
    ),
    suite("thm51", "m PHI_s <= J <= M PHI_s, closed-form m, M", thm51),
    suite("thm52", "m PHI_s <= I <= M PHI_s, closed-form m, M", thm52),
    suite("thm53", "m PHI_s <= T <= M PHI_s, closed-form m, M", thm53),
    suite(
        "mm-oracle",
        "closed-form m, M agree with the numeric optimizer",
        mm_oracle,
    ),
    suite("cor41", "D(P||Q) against chi2, K and h", cor41),
    suite("cor42", "D(Q||P) against chi2, K and h", cor42),
    suite("cor43", "F(P||Q) against chi2, K and h", cor43),
    suite("cor44", "F(Q||P) against chi2, K and h", cor44),
    suite("cor45", "G(P||Q) against chi2, K and h", cor45),
    suite("cor46", "G(Q||P) against chi2, K and h", cor46),
    suite("cor51", "J against chi2, K and h", cor51),
    suite("cor52", "I against chi2, K and h", cor52),
    suite("cor53", "T against chi2, K and h", cor53),
    suite("prop41", "D(P||Q) <= 9/8 K(P||Q)", prop41),
    suite("prop42", "D(Q||P) <= 9/8 K(Q||P)", prop42),
    suite(
        "prop43",
        "F(P||Q) <= K(Q||P)/4 and F(P||Q) <= (3 sqrt3/4) h",
        prop43,
    ),
    suite(
        "prop44",
        "F(Q||P) <= K(P||Q)/4 and F(Q||P) <= (3 sqrt3/4) h",
        prop44,
    ),
    suite("prop51", "h <= J/8", prop51),
    suite("prop52", "I <= h", prop52),
    suite(
        "prop53",
        "T >= (sqrt2-1)/2 K in both directions, and T >= h",
        prop53,
    ),
    suite("rem41", "xi_1 .. xi_8 lie in [r, R]", rem41),
    suite("rem51", "zeta_1 .. zeta_4 lie in [r, R]", rem51),
    suite("eq194", "I <= h <= min(T, J/8)", eq194),
];

pub fn suite_ids() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|s| s.id)
}

pub fn find_suite(id: &str) -> Result<&'static Suite> {
    SUITES
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownSuite(id.to_string()))
}

pub fn run_suite(id: &str, config: &TrialConfig) -> Result<SuiteReport> {
    let suite = find_suite(id)?;
    config.validate()?;
    let mut c = Collector::new();
    for trial in 0..config.trials {
        let mut rng = TrialRng::new(config.seed, trial as u64);
        let (p, q) = pair_from(&mut rng, config);
        c.trial = trial;
        c.s = None;
        if let Err(e) = (suite.run)(&mut c, config, &mut rng, &p, &q) {
            c.error(&e);
        }
    }
    Ok(SuiteReport {
        suite: suite.id.to_string(),
        trials: config.trials,
        checks: c.checks,
        violations: c.violations,
        worst_slack: c.worst,
        tightest_slack: c.tightest,
        examples: c.examples,
    })
}

pub fn run_all(config: &TrialConfig) -> Result<Vec<SuiteReport>> {
    suite_ids().map(|id| run_suite(id, config)).collect()
}

const IDENTITY_TOL: f64 = 1e-10;

fn val(m: impl Into<Measure>, p: &Distribution, q: &Distribution) -> Result<f64> {
    divergence(m.into(), p, q)
}

fn eq3(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let sum = val(MeasureId::D1, p, q)? + val(MeasureId::D2, p, q)?;
    c.close("J = D + D_adj", val(MeasureId::J, p, q)?, sum, IDENTITY_TOL);
    Ok(())
}

fn eq10(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let avg = 0.5 * (val(MeasureId::F1, p, q)? + val(MeasureId::F2, p, q)?);
    c.close(
        "I = (F + F_adj)/2",
        val(MeasureId::I, p, q)?,
        avg,
        IDENTITY_TOL,
    );
    Ok(())
}

fn eq11(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let avg = 0.5 * (val(MeasureId::G1, p, q)? + val(MeasureId::G2, p, q)?);
    c.close(
        "T = (G + G_adj)/2",
        val(MeasureId::T, p, q)?,
        avg,
        IDENTITY_TOL,
    );
    Ok(())
}

fn eq12(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let sum = 4.0 * (val(MeasureId::I, p, q)? + val(MeasureId::T, p, q)?);
    c.close("J = 4(I + T)", val(MeasureId::J, p, q)?, sum, IDENTITY_TOL);
    Ok(())
}

fn eq13(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let sum = 2.0 * (val(MeasureId::F2, p, q)? + val(MeasureId::G2, p, q)?);
    c.close(
        "D = 2(F_adj + G_adj)",
        val(MeasureId::D1, p, q)?,
        sum,
        IDENTITY_TOL,
    );
    Ok(())
}

/// `Φ_s` at its five named cases, written via other measures.
fn phi_special(s: f64, p: &Distribution, q: &Distribution) -> Result<Option<f64>> {
    let v = if s == -1.0 {
        0.5 * val(Measure::Chi2Adj, p, q)?
    } else if s == 0.0 {
        val(Measure::KlAdj, p, q)?
    } else if s == 0.5 {
        4.0 * val(Measure::Hellinger, p, q)?
    } else if s == 1.0 {
        val(Measure::Kl, p, q)?
    } else if s == 2.0 {
        0.5 * val(Measure::Chi2, p, q)?
    } else {
        return Ok(None);
    };
    Ok(Some(v))
}

/// The pole continuity checks only apply when every ratio lies in this range.
pub const CONTINUITY_RANGE: (f64, f64) = (1e-2, 1e2);

fn phi_cases(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    for s in [-1.0, 0.0, 0.5, 1.0, 2.0] {
        c.s = Some(s);
        let expected = phi_special(s, p, q)?.expect("named case");
        c.close(
            "PHI_s = named case",
            phi_s(s, p, q)?,
            expected,
            IDENTITY_TOL,
        );
    }
    c.s = Some(0.5);
    let bhatt = 4.0 * (1.0 - val(Measure::Bhattacharyya, p, q)?);
    c.close("PHI_1/2 = 4(1 - B)", phi_s(0.5, p, q)?, bhatt, IDENTITY_TOL);

    let rr = ratio_range(p, q)?;
    if rr.lo >= CONTINUITY_RANGE.0 && rr.hi <= CONTINUITY_RANGE.1 {
        for pole in [0.0, 1.0] {
            c.s = Some(pole);
            let at = phi_s(pole, p, q)?;
            for eps in [1e-6, -1e-6] {
                c.close("PHI continuous at pole", phi_s(pole + eps, p, q)?, at, 1e-4);
            }
        }
    }
    c.s = None;
    Ok(())
}

const ENGINE_REL_TOL: f64 = 1e-12;

fn engine(
    c: &mut Collector,
    config: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    for id in MeasureId::FIXED {
        let closed = val(id, p, q)?;
        let summed = eval_csiszar(&id.generator(), p, q)?;
        c.close_rel(id.name(), closed, summed, ENGINE_REL_TOL);
    }
    for &s in &config.s_samples {
        c.s = Some(s);
        let closed = phi_s(s, p, q)?;
        let summed = eval_csiszar(&phi_generator(s)?, p, q)?;
        c.close_rel("PHI", closed, summed, ENGINE_REL_TOL);
    }
    c.s = None;
    Ok(())
}

fn thm31(
    c: &mut Collector,
    config: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    for &s in &config.s_samples {
        c.s = Some(s);
        for v in &bound_set(s, p, q)?.verdicts {
            c.verdict(v);
        }
    }
    Ok(())
}

fn thm32(
    c: &mut Collector,
    config: &TrialConfig,
    rng: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let gen = MeasureId::FIXED[c.trial % 9].generator();
    let s = if config.s_samples.is_empty() {
        rng.uniform(-2.0, 3.0)
    } else {
        config.s_samples[(c.trial / 9) % config.s_samples.len()]
    };
    c.s = Some(s);
    for v in &difference_bounds(&gen, s, p, q)?.verdicts {
        c.verdict(v);
    }
    Ok(())
}

/// A uniformly random `s` at most 3 beyond either edge of the measure's gap.
fn random_in_region(rng: &mut TrialRng, id: MeasureId) -> f64 {
    let regions = monotone_regions(id).expect("fixed measure");
    let depth = 3.0 * rng.next_f64();
    if rng.next_u64() & 1 == 0 {
        regions.increasing_up_to - depth
    } else {
        regions.decreasing_from + depth
    }
}

fn theorem(
    id: MeasureId,
    c: &mut Collector,
    config: &TrialConfig,
    rng: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let regions = monotone_regions(id).expect("fixed measure");
    let extra = random_in_region(rng, id);
    let samples = config
        .s_samples
        .iter()
        .copied()
        .filter(|&s| regions.contains(s));
    for s in samples.chain(core::iter::once(extra)) {
        c.s = Some(s);
        let rep = bound_interval(id, s, p, q, MmMethod::Closed)?;
        if rep.fell_back {
            c.record("closed form unavailable", f64::NEG_INFINITY, true);
        }
        for v in &rep.verdicts() {
            c.verdict(v);
        }
    }
    Ok(())
}

macro_rules! per_measure {
    ($driver:ident: $($name:ident => $id:expr),* $(,)?) => {
        $(
            fn $name(
                c: &mut Collector,
                config: &TrialConfig,
                rng: &mut TrialRng,
                p: &Distribution,
                q: &Distribution,
            ) -> Result<()> {
                $driver($id, c, config, rng, p, q)
            }
        )*
    };
}

per_measure!(theorem:
    thm41 => MeasureId::D1,
    thm42 => MeasureId::D2,
    thm43 => MeasureId::F1,
    thm44 => MeasureId::F2,
    thm45 => MeasureId::G1,
    thm46 => MeasureId::G2,
    thm51 => MeasureId::J,
    thm52 => MeasureId::I,
    thm53 => MeasureId::T,
);

/// Relative agreement demanded between closed-form and numeric `m`, `M`.
pub const MM_REL_TOL: f64 = 1e-6;

fn mm_oracle(
    c: &mut Collector,
    _: &TrialConfig,
    rng: &mut TrialRng,
    _: &Distribution,
    _: &Distribution,
) -> Result<()> {
    let id = MeasureId::FIXED[c.trial % 9];
    let s = random_in_region(rng, id);
    let range = RatioRange::new(rng.log_uniform(0.01, 1.0), rng.log_uniform(1.0, 100.0))?;
    c.s = Some(s);
    let closed =
        mm_closed(id, s, range)?.ok_or(Error::InvalidConfig("s left the validity region"))?;
    let numeric = mm_numeric(&id.generator(), s, range)?;
    c.close_rel(id.name(), closed.inf, numeric.inf, MM_REL_TOL);
    c.close_rel(id.name(), closed.sup, numeric.sup, MM_REL_TOL);
    Ok(())
}

fn corollary(
    id: MeasureId,
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let regions = monotone_regions(id).expect("fixed measure");
    let range = ratio_range(p, q)?;
    let value = val(id, p, q)?;
    for s in [-1.0, 0.0, 0.5, 1.0, 2.0] {
        if !regions.contains(s) {
            continue;
        }
        c.s = Some(s);
        let phi = phi_special(s, p, q)?.expect("named case");
        let mm =
            mm_closed(id, s, range)?.ok_or(Error::InvalidConfig("s left the validity region"))?;
        c.le("m*phi <= value", mm.inf * phi, value);
        c.le("value <= M*phi", value, mm.sup * phi);
    }
    Ok(())
}

per_measure!(corollary:
    cor41 => MeasureId::D1,
    cor42 => MeasureId::D2,
    cor43 => MeasureId::F1,
    cor44 => MeasureId::F2,
    cor45 => MeasureId::G1,
    cor46 => MeasureId::G2,
    cor51 => MeasureId::J,
    cor52 => MeasureId::I,
    cor53 => MeasureId::T,
);

const THREE_ROOT3_OVER_4: f64 = 3.0 * 1.732_050_807_568_877_2 / 4.0;
const HALF_SILVER: f64 = (core::f64::consts::SQRT_2 - 1.0) / 2.0;

fn prop41(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    c.le(
        "D <= 9/8 K",
        val(MeasureId::D1, p, q)?,
        9.0 / 8.0 * val(Measure::Kl, p, q)?,
    );
    Ok(())
}

fn prop42(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    c.le(
        "D_adj <= 9/8 K_adj",
        val(MeasureId::D2, p, q)?,
        9.0 / 8.0 * val(Measure::KlAdj, p, q)?,
    );
    Ok(())
}

fn prop43(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let f = val(MeasureId::F1, p, q)?;
    c.le("F <= K_adj/4", f, 0.25 * val(Measure::KlAdj, p, q)?);
    c.le(
        "F <= (3 sqrt3/4) h",
        f,
        THREE_ROOT3_OVER_4 * val(Measure::Hellinger, p, q)?,
    );
    Ok(())
}

fn prop44(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let f = val(MeasureId::F2, p, q)?;
    c.le("F_adj <= K/4", f, 0.25 * val(Measure::Kl, p, q)?);
    c.le(
        "F_adj <= (3 sqrt3/4) h",
        f,
        THREE_ROOT3_OVER_4 * val(Measure::Hellinger, p, q)?,
    );
    Ok(())
}

fn prop51(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    c.le(
        "h <= J/8",
        val(Measure::Hellinger, p, q)?,
        val(MeasureId::J, p, q)? / 8.0,
    );
    Ok(())
}

fn prop52(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    c.le(
        "I <= h",
        val(MeasureId::I, p, q)?,
        val(Measure::Hellinger, p, q)?,
    );
    Ok(())
}

fn prop53(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let t = val(MeasureId::T, p, q)?;
    c.le(
        "(sqrt2-1)/2 K_adj <= T",
        HALF_SILVER * val(Measure::KlAdj, p, q)?,
        t,
    );
    c.le(
        "(sqrt2-1)/2 K <= T",
        HALF_SILVER * val(Measure::Kl, p, q)?,
        t,
    );
    c.le("h <= T", val(Measure::Hellinger, p, q)?, t);
    Ok(())
}

fn containment(
    c: &mut Collector,
    p: &Distribution,
    q: &Distribution,
    keep: fn(&EstimatorId) -> bool,
) -> Result<()> {
    if is_degenerate(p, q)? {
        return Ok(());
    }
    let range = ratio_range(p, q)?;
    for (id, v) in estimate_all(p, q)?.iter().filter(|(id, _)| keep(id)) {
        let name = match id {
            EstimatorId::Xi(_) => "r <= xi <= R",
            EstimatorId::Zeta(_) => "r <= zeta <= R",
        };
        c.le(name, range.lo, *v);
        c.le(name, *v, range.hi);
    }
    Ok(())
}

fn rem41(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    containment(c, p, q, |id| matches!(id, EstimatorId::Xi(_)))
}

fn rem51(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    containment(c, p, q, |id| matches!(id, EstimatorId::Zeta(_)))
}

fn eq194(
    c: &mut Collector,
    _: &TrialConfig,
    _: &mut TrialRng,
    p: &Distribution,
    q: &Distribution,
) -> Result<()> {
    let h = val(Measure::Hellinger, p, q)?;
    c.le("I <= h", val(MeasureId::I, p, q)?, h);
    c.le("h <= T", h, val(MeasureId::T, p, q)?);
    c.le("h <= J/8", h, val(MeasureId::J, p, q)? / 8.0);
    Ok(())
}
