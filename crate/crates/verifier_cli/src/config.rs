//! Suite configuration as read from JSON.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use catalog::{default_catalog, AlgebraSpec};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// An algebra to verify: a builder spec, or a path to a structure-table file resolved
/// relative to the config file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSource {
    File { file: PathBuf },
    Spec(AlgebraSpec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum SubalgebraMode {
    /// Every coideal subalgebra found by the grid enumeration for `dim H ≤ 4`; larger
    /// algebras fall back to [`ExhaustiveSmall::FALLBACK_COUNT`] random ones.
    ExhaustiveSmall,
    Randomized { count: usize, seed: u64 },
}

pub struct ExhaustiveSmall;

impl ExhaustiveSmall {
    pub const FALLBACK_COUNT: usize = 4;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Axioms,
    Correspondence,
    Isomorphisms,
    Homology,
    #[serde(rename = "conditions0x")]
    Conditions0x,
    #[serde(rename = "openquestion")]
    OpenQuestion,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Axioms,
        CheckKind::Correspondence,
        CheckKind::Isomorphisms,
        CheckKind::Homology,
        CheckKind::Conditions0x,
        CheckKind::OpenQuestion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Axioms => "axioms",
            CheckKind::Correspondence => "correspondence",
            CheckKind::Isomorphisms => "isomorphisms",
            CheckKind::Homology => "homology",
            CheckKind::Conditions0x => "conditions0x",
            CheckKind::OpenQuestion => "openquestion",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Markdown,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(format!("unknown format {other:?}; expected json or md")),
        }
    }
}

fn default_algebras() -> Vec<AlgebraSource> {
    default_catalog().into_iter().map(AlgebraSource::Spec).collect()
}

fn default_checks() -> BTreeSet<CheckKind> {
    CheckKind::ALL.into_iter().collect()
}

fn default_samples() -> usize {
    2
}

fn default_condition_samples() -> usize {
    20
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default = "default_algebras")]
    pub algebras: Vec<AlgebraSource>,
    #[serde(default = "exhaustive")]
    pub subalgebras: SubalgebraMode,
    #[serde(default = "default_checks")]
    pub checks: BTreeSet<CheckKind>,
    /// Highest degree of Tor, Ext and Cotor; `max(8, 2·dim)` of the resolved algebra when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(default)]
    pub format: Format,
    /// Random objects drawn per sampled check and instance.
    #[serde(default = "default_samples")]
    pub samples: usize,
    /// Random Hopf modules drawn per condition and instance.
    #[serde(default = "default_condition_samples")]
    pub condition_samples: usize,
    /// Seed for sampled modules and comodules, and for the fallback subalgebras.
    #[serde(default)]
    pub seed: u64,
}

fn exhaustive() -> SubalgebraMode {
    SubalgebraMode::ExhaustiveSmall
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            algebras: default_algebras(),
            subalgebras: SubalgebraMode::ExhaustiveSmall,
            checks: default_checks(),
            truncation: None,
            format: Format::Json,
            samples: default_samples(),
            condition_samples: default_condition_samples(),
            seed: 0,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if let SubalgebraMode::Randomized { count: 0, .. } = self.subalgebras {
            return Err(CliError::Config("randomized mode needs count ≥ 1".into()));
        }
        if self.algebras.is_empty() {
            return Err(CliError::Config("no algebras given".into()));
        }
        Ok(())
    }

    /// Parse and validate a config file; relative algebra paths become relative to its directory.
    pub fn load(path: &Path) -> Result<SuiteConfig, CliError> {
        let bytes = std::fs::read(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
        let mut config: SuiteConfig =
            serde_json::from_slice(&bytes).map_err(|source| CliError::Parse { path: path.to_owned(), source })?;
        let base = path.parent().unwrap_or_else(|| Path::new(""));
        for source in &mut config.algebras {
            if let AlgebraSource::File { file } = source {
                if file.is_relative() {
                    *file = base.join(&*file);
                }
            }
        }
        config.validate()?;
        Ok(config)
    }

    /// Replace every seed, as the command line's `--seed` does.
    pub fn reseed(&mut self, seed: u64) {
        self.seed = seed;
        if let SubalgebraMode::Randomized { seed: s, .. } = &mut self.subalgebras {
            *s = seed;
        }
    }

    pub fn enabled(&self, kind: CheckKind) -> bool {
        self.checks.contains(&kind)
    }
}
