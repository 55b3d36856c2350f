use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use serde::{Deserialize, Serialize};
use sphnn_core::logic::{generate_classic256, generate_extended16, ReasoningTask};
use sphnn_core::SolverConfig;

/// Dimensions used when none are given.
pub const DESK_DIMS: [usize; 5] = [2, 3, 15, 30, 100];
/// The full grid, including the expensive high dimensions.
pub const FULL_DIMS: [usize; 10] = [2, 3, 15, 30, 100, 200, 1000, 2000, 3000, 10000];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusSource {
    Extended16,
    Classic256,
    File(PathBuf),
}

impl CorpusSource {
    pub fn parse(s: &str) -> Self {
        match s {
            "extended16" => CorpusSource::Extended16,
            "classic256" => CorpusSource::Classic256,
            path => CorpusSource::File(PathBuf::from(path)),
        }
    }

    pub fn load(&self) -> Result<Vec<ReasoningTask>> {
        Ok(match self {
            CorpusSource::Extended16 => generate_extended16(),
            CorpusSource::Classic256 => generate_classic256(),
            CorpusSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading corpus {}", path.display()))?;
                text.lines()
                    .enumerate()
                    .filter(|(_, l)| !l.trim().is_empty())
                    .map(|(i, l)| {
                        ReasoningTask::from_json_line(l)
                            .with_context(|| format!("{}:{}", path.display(), i + 1))
                    })
                    .collect::<Result<_>>()?
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

/// Everything a benchmark run depends on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub corpus: CorpusSource,
    pub dims: Vec<usize>,
    pub solver: SolverConfig,
    pub out: PathBuf,
    pub formats: Vec<OutputFormat>,
    /// Worker threads; all cores when unset.
    pub jobs: Option<usize>,
}

impl RunManifest {
    pub fn validate(&self) -> Result<()> {
        ensure!(!self.dims.is_empty(), "at least one dimension is required");
        if let Some(&n) = self.dims.iter().find(|&&n| n < 2) {
            bail!("dimension {n} is below 2");
        }
        ensure!(self.jobs != Some(0), "--jobs must be at least 1");
        self.solver.validate(1.0)?;
        Ok(())
    }
}

/// Optional settings read from `--config`. Command-line flags override them.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConfigFile {
    pub solver: Option<serde_json::Value>,
    pub seed: Option<u64>,
    pub dim: Option<usize>,
    pub dims: Option<Vec<usize>>,
    pub atomic: Option<Vec<String>>,
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub formats: Option<Vec<OutputFormat>>,
    pub corpus: Option<String>,
}

impl ConfigFile {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }

    /// Solver settings from the file, with `seed` applied last.
    pub fn solver(&self, seed: Option<u64>) -> Result<SolverConfig> {
        let mut cfg: SolverConfig = match &self.solver {
            Some(v) => {
                serde_json::from_value(v.clone()).context("invalid solver settings in config")?
            }
            None => SolverConfig::default(),
        };
        if let Some(s) = seed.or(self.seed) {
            cfg.seed = s;
        }
        Ok(cfg)
    }
}
