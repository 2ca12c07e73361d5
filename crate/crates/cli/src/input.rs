//! Distribution files.
//!
//! JSON: `{"distributions": {"name": [w1, w2, ...], ...}}`.
//! CSV: one row per distribution, `name,w1,w2,...`, no header.
//!
//! Weights are raw nonnegative numbers; they are normalized on load.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use fdiv_core::simplex::{normalize, smooth};
use fdiv_core::Distribution;
use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Json,
    Csv,
}

impl InputFormat {
    pub fn from_path(path: &Path) -> Option<Self> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        match ext.as_str() {
            "json" => Some(InputFormat::Json),
            "csv" => Some(InputFormat::Csv),
            _ => None,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonFile {
    distributions: BTreeMap<String, Vec<f64>>,
}

/// Raw weight vectors keyed by name.
#[derive(Debug, Default)]
pub struct DistributionFile {
    pub entries: BTreeMap<String, Vec<f64>>,
}

impl DistributionFile {
    pub fn load(path: &Path, format: Option<InputFormat>) -> Result<Self> {
        let format = format
            .or_else(|| InputFormat::from_path(path))
            .ok_or_else(|| {
                anyhow!(
                    "cannot tell the format of {}; pass --input-format",
                    path.display()
                )
            })?;
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let file = match format {
            InputFormat::Json => Self::parse_json(&text),
            InputFormat::Csv => Self::parse_csv(&text),
        };
        file.with_context(|| format!("parsing {}", path.display()))
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let parsed: JsonFile = serde_json::from_str(text)?;
        for (name, weights) in &parsed.distributions {
            check_length(name, weights)?;
        }
        Ok(Self {
            entries: parsed.distributions,
        })
    }

    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut entries = BTreeMap::new();
        for (line, record) in reader.records().enumerate() {
            let record = record?;
            let mut fields = record.iter();
            let name = match fields.next() {
                Some(n) if !n.is_empty() => n.to_string(),
                _ => bail!("row {}: missing distribution name", line + 1),
            };
            let weights = fields
                .map(|f| {
                    f.parse::<f64>()
                        .map_err(|e| anyhow!("distribution `{name}`: bad weight `{f}`: {e}"))
                })
                .collect::<Result<Vec<_>>>()?;
            check_length(&name, &weights)?;
            if entries.insert(name.clone(), weights).is_some() {
                bail!("distribution `{name}` is defined twice");
            }
        }
        Ok(Self { entries })
    }

    pub fn raw(&self, name: &str) -> Result<&[f64]> {
        self.entries
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| anyhow!("no distribution named `{name}`"))
    }
}

fn check_length(name: &str, weights: &[f64]) -> Result<()> {
    if weights.len() < 2 {
        bail!(
            "distribution `{name}` has {} entries, need at least 2",
            weights.len()
        );
    }
    Ok(())
}

/// Parses inline weights such as `0.75,0.25`.
pub fn parse_inline(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|f| {
            let f = f.trim();
            f.parse::<f64>()
                .map_err(|e| anyhow!("bad weight `{f}`: {e}"))
        })
        .collect()
}

/// Normalizes raw weights, smoothing first when `alpha` is given.
pub fn to_distribution(name: &str, raw: &[f64], alpha: Option<f64>) -> Result<Distribution> {
    let d = match alpha {
        Some(a) => smooth(raw, a),
        None => normalize(raw),
    };
    d.map_err(|e| anyhow!("distribution `{name}`: {e}"))
}
