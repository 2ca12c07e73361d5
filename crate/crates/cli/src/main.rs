//! `fdiv`: divergences, sandwich bounds and verification suites from the
//! command line.
//!
//! Exit codes: 0 on success, 1 when a bound or suite reports a violation,
//! 2 on usage or input errors.

mod catalog;
mod input;

use std::fmt::Write as _;
use std::io::{self, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fdiv_core::bounds::{bound_interval, MmMethod};
use fdiv_core::harness::{run_suite, suite_ids, SuiteReport, TrialConfig};
use fdiv_core::measures::{divergence, Measure};
use fdiv_core::simplex::ratio_range;
use fdiv_core::type_s::bound_set;
use fdiv_core::{Distribution, MeasureId};
use serde::{Deserialize, Serialize};

use crate::input::{parse_inline, to_distribution, DistributionFile, InputFormat};

#[derive(Debug, Parser)]
#[command(
    name = "fdiv",
    version,
    about = "Divergence measures and type-s sandwich bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one or more divergences between two distributions.
    Compute(ComputeArgs),
    /// Sandwich a catalog measure between multiples of PHI_s.
    Bounds(BoundsArgs),
    /// Run randomized verification suites.
    Verify(VerifyArgs),
    /// List the measures, generators and tabulated extrema.
    Catalog(CatalogArgs),
}

#[derive(Debug, Args)]
struct PairArgs {
    /// Distribution file (.json or .csv). Without it, --p and --q are
    /// comma-separated weights.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Override the format detected from the file extension.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Name of P in the input file, or inline weights.
    #[arg(long)]
    p: String,
    /// Name of Q in the input file, or inline weights.
    #[arg(long)]
    q: String,
    /// Add this pseudo-count to every weight before normalizing.
    #[arg(long)]
    smooth: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// Measure to evaluate; repeatable. PHI uses every --s.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    measure: Vec<String>,
    /// Every catalog measure, the extras, and PHI at every --s.
    #[arg(long)]
    all: bool,
    /// Type parameter for PHI; repeatable.
    #[arg(long, allow_negative_numbers = true)]
    s: Vec<f64>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Report logarithmic measures in bits instead of nats.
    #[arg(long)]
    bits: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closed,
    Numeric,
    Auto,
}

impl From<MethodArg> for MmMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => MmMethod::Closed,
            MethodArg::Numeric => MmMethod::Numeric,
            MethodArg::Auto => MmMethod::Auto,
        }
    }
}

#[derive(Debug, Args)]
struct BoundsArgs {
    #[command(flatten)]
    pair: PairArgs,
    /// One of the nine catalog measures.
    #[arg(long)]
    measure: String,
    #[arg(long, allow_negative_numbers = true)]
    s: f64,
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    method: MethodArg,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Suite id; repeatable.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    suite: Vec<String>,
    /// Run every suite.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Bounds(args) => bounds(args),
        Command::Verify(args) => verify(args),
        Command::Catalog(args) => catalog(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("fdiv: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

struct Pair {
    p: Distribution,
    q: Distribution,
}

fn load_pair(args: &PairArgs) -> Result<Pair> {
    let (raw_p, raw_q) = match &args.input {
        Some(path) => {
            let file = DistributionFile::load(path, args.input_format)?;
            (file.raw(&args.p)?.to_vec(), file.raw(&args.q)?.to_vec())
        }
        None => (
            parse_inline(&args.p).with_context(|| format!("--p `{}`", args.p))?,
            parse_inline(&args.q).with_context(|| format!("--q `{}`", args.q))?,
        ),
    };
    let p = to_distribution(&args.p, &raw_p, args.smooth)?;
    let q = to_distribution(&args.q, &raw_q, args.smooth)?;
    if p.len() != q.len() {
        bail!(
            "distributions `{}` and `{}` have different lengths ({} vs {})",
            args.p,
            args.q,
            p.len(),
            q.len()
        );
    }
    Ok(Pair { p, q })
}

/// One evaluated measure in a `compute` report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValueRow {
    pub measure: String,
    pub s: Option<f64>,
    pub value: f64,
    pub units: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub p: String,
    pub q: String,
    pub n: usize,
    pub r: f64,
    #[serde(rename = "R")]
    pub big_r: f64,
    pub values: Vec<ValueRow>,
}

/// Whether a measure is a sum of logarithms, and so has a unit.
fn is_logarithmic(m: Measure) -> bool {
    match m {
        Measure::Catalog(MeasureId::Phi(s)) => s.abs() <= 1e-10 || (s - 1.0).abs() <= 1e-10,
        Measure::Catalog(_) | Measure::Kl | Measure::KlAdj => true,
        Measure::Chi2 | Measure::Chi2Adj | Measure::Hellinger | Measure::Bhattacharyya => false,
    }
}

fn requested_measures(args: &ComputeArgs) -> Result<Vec<Measure>> {
    let mut out = Vec::new();
    let push_phi = |out: &mut Vec<Measure>| -> Result<()> {
        if args.s.is_empty() {
            bail!("PHI needs at least one --s");
        }
        for &s in &args.s {
            out.push(Measure::from_name("PHI", Some(s))?);
        }
        Ok(())
    };
    if args.all {
        out.extend(MeasureId::FIXED.map(Measure::Catalog));
        out.extend(Measure::EXTRAS);
        if !args.s.is_empty() {
            push_phi(&mut out)?;
        }
        return Ok(out);
    }
    for name in &args.measure {
        let upper = name.to_ascii_uppercase();
        if upper == "PHI" || upper == "PHI_S" {
            push_phi(&mut out)?;
        } else {
            out.push(Measure::from_name(name, None)?);
        }
    }
    Ok(out)
}

fn compute(args: ComputeArgs) -> Result<ExitCode> {
    let pair = load_pair(&args.pair)?;
    let measures = requested_measures(&args)?;
    let range = ratio_range(&pair.p, &pair.q)?;
    let mut values = Vec::with_capacity(measures.len());
    for m in measures {
        let mut value = divergence(m, &pair.p, &pair.q)?;
        let units = if is_logarithmic(m) {
            if args.bits {
                value /= std::f64::consts::LN_2;
                "bits"
            } else {
                "nats"
            }
        } else {
            "none"
        };
        let s = match m {
            Measure::Catalog(MeasureId::Phi(s)) => Some(s),
            _ => None,
        };
        let measure = match m {
            Measure::Catalog(id) => id.name().to_string(),
            other => other.name().to_string(),
        };
        values.push(ValueRow {
            measure,
            s,
            value,
            units: units.to_string(),
        });
    }
    let report = ComputeReport {
        p: args.pair.p.clone(),
        q: args.pair.q.clone(),
        n: pair.p.len(),
        r: range.lo,
        big_r: range.hi,
        values,
    };

    let text = match args.format {
        OutputFormat::Json => serde_json::to_string_pretty(&report)? + "\n",
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["measure", "s", "value", "units"])?;
            for row in &report.values {
                let s = row.s.map(|s| s.to_string()).unwrap_or_default();
                w.write_record([row.measure.as_str(), &s, &row.value.to_string(), &row.units])?;
            }
            String::from_utf8(w.into_inner().map_err(|e| anyhow!("{e}"))?)?
        }
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "P = {}, Q = {}, n = {}", report.p, report.q, report.n)?;
            writeln!(out, "ratio range r = {}, R = {}", report.r, report.big_r)?;
            for row in &report.values {
                let label = match row.s {
                    Some(s) => format!("{}({s})", row.measure),
                    None => row.measure.clone(),
                };
                if row.units == "none" {
                    writeln!(out, "{label:<14} {}", row.value)?;
                } else {
                    writeln!(out, "{label:<14} {} {}", row.value, row.units)?;
                }
            }
            out
        }
    };
    emit(&text)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Debug, Serialize)]
struct BoundsReport {
    measure: &'static str,
    s: f64,
    r: f64,
    #[serde(rename = "R")]
    big_r: f64,
    m: f64,
    m_at: f64,
    #[serde(rename = "M")]
    big_m: f64,
    #[serde(rename = "M_at")]
    big_m_at: f64,
    method: &'static str,
    source: &'static str,
    fell_back: bool,
    phi: f64,
    lower: f64,
    value: f64,
    upper: f64,
    lower_slack: f64,
    upper_slack: f64,
    holds: bool,
    #[serde(rename = "E")]
    e: f64,
    #[serde(rename = "A")]
    a: f64,
    #[serde(rename = "B")]
    b: Option<f64>,
}

fn bounds(args: BoundsArgs) -> Result<ExitCode> {
    let measure = match Measure::from_name(&args.measure, None) {
        Ok(Measure::Catalog(id)) => id,
        _ => bail!(
            "`{}` has no generator; choose one of D1 D2 F1 F2 G1 G2 J I T",
            args.measure
        ),
    };
    let pair = load_pair(&args.pair)?;
    let rep = bound_interval(measure, args.s, &pair.p, &pair.q, args.method.into())?;
    let functionals = bound_set(args.s, &pair.p, &pair.q)?;
    let method = match args.method {
        MethodArg::Closed => "closed",
        MethodArg::Numeric => "numeric",
        MethodArg::Auto => "auto",
    };
    let report = BoundsReport {
        measure: measure.name(),
        s: rep.s,
        r: rep.range.lo,
        big_r: rep.range.hi,
        m: rep.mm.inf,
        m_at: rep.mm.inf_at,
        big_m: rep.mm.sup,
        big_m_at: rep.mm.sup_at,
        method,
        source: rep.mm.source.name(),
        fell_back: rep.fell_back,
        phi: rep.phi,
        lower: rep.lower,
        value: rep.value,
        upper: rep.upper,
        lower_slack: rep.lower_slack,
        upper_slack: rep.upper_slack,
        holds: rep.holds(),
        e: functionals.e_bound,
        a: functionals.a_bound,
        b: functionals.b_bound,
    };

    let text = if args.json {
        serde_json::to_string_pretty(&report)? + "\n"
    } else {
        let mut out = String::new();
        writeln!(out, "measure      {}", report.measure)?;
        writeln!(out, "s            {}", report.s)?;
        writeln!(out, "r            {}", report.r)?;
        writeln!(out, "R            {}", report.big_r)?;
        writeln!(out, "m            {} (x = {})", report.m, report.m_at)?;
        writeln!(
            out,
            "M            {} (x = {})",
            report.big_m, report.big_m_at
        )?;
        write!(out, "method       {} -> {}", report.method, report.source)?;
        if report.fell_back {
            write!(
                out,
                " (closed form unavailable at this s; fell back to numeric)"
            )?;
        }
        writeln!(out)?;
        writeln!(out, "phi          {}", report.phi)?;
        writeln!(out, "lower        {}", report.lower)?;
        writeln!(out, "value        {}", report.value)?;
        writeln!(out, "upper        {}", report.upper)?;
        writeln!(out, "lower_slack  {}", report.lower_slack)?;
        writeln!(out, "upper_slack  {}", report.upper_slack)?;
        writeln!(out, "E            {}", report.e)?;
        writeln!(out, "A            {}", report.a)?;
        match report.b {
            Some(b) => writeln!(out, "B            {b}")?,
            None => writeln!(
                out,
                "B            undefined (ratio range does not straddle 1)"
            )?,
        }
        writeln!(out, "{}", if report.holds { "holds" } else { "VIOLATED" })?;
        out
    };
    emit(&text)?;
    Ok(if report.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[derive(Debug, Serialize)]
struct ViolationJson {
    trial: usize,
    relation: String,
    s: Option<f64>,
    slack: f64,
}

#[derive(Debug, Serialize)]
struct SuiteJson {
    suite: String,
    trials: usize,
    checks: u64,
    violations: u64,
    worst_slack: f64,
    tightest_slack: f64,
    examples: Vec<ViolationJson>,
}

impl From<&SuiteReport> for SuiteJson {
    fn from(r: &SuiteReport) -> Self {
        Self {
            suite: r.suite.clone(),
            trials: r.trials,
            checks: r.checks,
            violations: r.violations,
            worst_slack: r.worst_slack,
            tightest_slack: r.tightest_slack,
            examples: r
                .examples
                .iter()
                .map(|v| ViolationJson {
                    trial: v.trial,
                    relation: v.relation.clone(),
                    s: v.s,
                    slack: v.slack,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
struct VerifyJson {
    seed: u64,
    trials: usize,
    violations: u64,
    suites: Vec<SuiteJson>,
}

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let ids: Vec<String> = if args.all {
        suite_ids().map(str::to_string).collect()
    } else {
        args.suite.clone()
    };
    let config = TrialConfig {
        seed: args.seed,
        trials: args.trials,
        ..TrialConfig::default()
    };
    let reports = ids
        .iter()
        .map(|id| run_suite(id, &config))
        .collect::<fdiv_core::Result<Vec<_>>>()?;
    let violations: u64 = reports.iter().map(|r| r.violations).sum();

    let text = if args.json {
        let doc = VerifyJson {
            seed: args.seed,
            trials: args.trials,
            violations,
            suites: reports.iter().map(SuiteJson::from).collect(),
        };
        serde_json::to_string_pretty(&doc)? + "\n"
    } else {
        let mut out = String::new();
        writeln!(out, "seed {} trials {}", args.seed, args.trials)?;
        for r in &reports {
            writeln!(out, "{r}")?;
        }
        let failed = reports.iter().filter(|r| !r.passed()).count();
        writeln!(
            out,
            "{} suites, {} failed, {} violations",
            reports.len(),
            failed,
            violations
        )?;
        out
    };
    emit(&text)?;
    Ok(if violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn catalog(args: CatalogArgs) -> Result<ExitCode> {
    let entries = catalog::entries();
    let text = if args.json {
        serde_json::to_string_pretty(&entries)? + "\n"
    } else {
        catalog::render_text(&entries)
    };
    emit(&text)?;
    Ok(ExitCode::SUCCESS)
}
