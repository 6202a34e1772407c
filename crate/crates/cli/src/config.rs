use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use jwverma::qfield::{Assignment, WeightExpr, MAX_SYMBOLS};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// A verification suite selectable with `--checks`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Idempotent,
    Intertwiner,
    EfIdentity,
    Oracle,
    Pascal,
    Relations,
    Coassoc,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Idempotent,
        Check::Intertwiner,
        Check::EfIdentity,
        Check::Oracle,
        Check::Pascal,
        Check::Relations,
        Check::Coassoc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Idempotent => "idempotent",
            Check::Intertwiner => "intertwiner",
            Check::EfIdentity => "ef_identity",
            Check::Oracle => "oracle",
            Check::Pascal => "pascal",
            Check::Relations => "relations",
            Check::Coassoc => "coassoc",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let known: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                CliError::Config(format!(
                    "unknown check {s:?} (expected one of {})",
                    known.join(", ")
                ))
            })
    }
}

/// Everything a `compute` or `verify` run depends on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JobConfig {
    /// Weight symbol names, in tensor order. Symbol `j` is `t_j = q^{weights[j]}`.
    pub weights: Vec<String>,
    pub max_degree: i64,
    #[serde(default)]
    pub checks: BTreeSet<Check>,
    #[serde(default)]
    pub specialization: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
}

impl JobConfig {
    pub fn new(weights: Vec<String>, max_degree: i64) -> Self {
        Self {
            weights,
            max_degree,
            checks: BTreeSet::new(),
            specialization: BTreeMap::new(),
            output_path: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.weights.len() > MAX_SYMBOLS {
            return Err(CliError::Config(format!(
                "at most {MAX_SYMBOLS} weights are supported, got {}",
                self.weights.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for w in &self.weights {
            validate_name(w)?;
            if !seen.insert(w) {
                return Err(CliError::Config(format!("weight name {w:?} is repeated")));
            }
        }
        if self.max_degree < 0 {
            return Err(CliError::Config(format!(
                "max degree must be non-negative, got {}",
                self.max_degree
            )));
        }
        for name in self.specialization.keys() {
            if !seen.contains(name) {
                return Err(CliError::Config(format!(
                    "cannot specialize unknown weight {name:?}"
                )));
            }
        }
        Ok(())
    }

    /// Requires at least two weights, as every projector and fusion map does.
    pub fn require_pair(&self) -> Result<()> {
        if self.weights.len() < 2 {
            return Err(CliError::Config(format!(
                "need at least two weights, got {}",
                self.weights.len()
            )));
        }
        Ok(())
    }

    /// One symbolic weight per name.
    pub fn weight_exprs(&self) -> Vec<WeightExpr> {
        (0..self.weights.len()).map(WeightExpr::symbol).collect()
    }

    /// The specialization keyed by symbol index.
    pub fn assignment(&self) -> Assignment {
        assignment_for(&self.weights, &self.specialization)
    }
}

pub(crate) fn assignment_for(names: &[String], at: &BTreeMap<String, i64>) -> Assignment {
    names
        .iter()
        .enumerate()
        .filter_map(|(j, n)| at.get(n).map(|&v| (j, v)))
        .collect()
}

fn validate_name(name: &str) -> Result<()> {
    let mut chars = name.chars();
    let ok_start = chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
    let ok_rest = chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !ok_start || !ok_rest {
        return Err(CliError::Config(format!(
            "weight name {name:?} is not an identifier"
        )));
    }
    if name == "q" {
        return Err(CliError::Config(
            "\"q\" is reserved for the quantum parameter".into(),
        ));
    }
    Ok(())
}

/// Parses `name=int,name=int`.
pub fn parse_assignment(s: &str) -> Result<BTreeMap<String, i64>> {
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Config(format!("expected name=int, got {item:?}")))?;
        let value: i64 = value
            .trim()
            .parse()
            .map_err(|_| CliError::Config(format!("{value:?} is not an integer")))?;
        if out.insert(name.trim().to_string(), value).is_some() {
            return Err(CliError::Config(format!("{name:?} assigned twice")));
        }
    }
    Ok(out)
}

/// Parses a comma-separated check list; `all` selects every check.
pub fn parse_checks(s: &str) -> Result<BTreeSet<Check>> {
    let mut out = BTreeSet::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        if item == "all" {
            out.extend(Check::ALL);
        } else {
            out.insert(item.parse()?);
        }
    }
    Ok(out)
}

/// Parses a comma-separated weight-name list.
pub fn parse_weights(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|i| !i.is_empty())
        .map(String::from)
        .collect()
}
