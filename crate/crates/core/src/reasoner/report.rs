use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::decide_validity;
use crate::constructor::{Configuration, SolverConfig};
use crate::error::{Error, Result};
use crate::logic::{Family, ReasoningTask};

pub const CSV_HEADER: [&str; 8] = [
    "task_id",
    "family",
    "dim",
    "verdict",
    "gold",
    "agree",
    "wall_time_s",
    "disjuncts_tried",
];

/// One (task, dimension) run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub task_id: String,
    pub family: Family,
    pub dim: usize,
    pub valid: bool,
    pub gold_valid: bool,
    pub wall_time_s: f64,
    pub disjuncts_tried: usize,
    pub counter_model: Option<Configuration>,
}

impl RunRecord {
    pub fn agree(&self) -> bool {
        self.valid == self.gold_valid
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub runs: usize,
    pub accuracy: f64,
    /// Runs judged valid by the solver.
    pub valid_verdicts: usize,
    pub mean_time_valid_s: f64,
    pub mean_time_invalid_s: f64,
    /// Gold-invalid runs decided in under five seconds.
    pub under_5s_invalid: usize,
    /// Gold-valid runs decided in under 120 seconds.
    pub under_120s_valid: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusReport {
    pub records: Vec<RunRecord>,
    pub summary: ReportSummary,
}

fn verdict_word(valid: bool) -> &'static str {
    if valid {
        "valid"
    } else {
        "invalid"
    }
}

fn mean(xs: impl Iterator<Item = f64>) -> f64 {
    let (sum, n) = xs.fold((0.0, 0usize), |(s, n), x| (s + x, n + 1));
    if n == 0 {
        0.0
    } else {
        sum / n as f64
    }
}

impl ReportSummary {
    pub fn from_records(records: &[RunRecord]) -> Self {
        let runs = records.len();
        let agree = records.iter().filter(|r| r.agree()).count();
        let valid = || records.iter().filter(|r| r.gold_valid);
        let invalid = || records.iter().filter(|r| !r.gold_valid);
        Self {
            runs,
            accuracy: if runs == 0 {
                0.0
            } else {
                agree as f64 / runs as f64
            },
            valid_verdicts: records.iter().filter(|r| r.valid).count(),
            mean_time_valid_s: mean(valid().map(|r| r.wall_time_s)),
            mean_time_invalid_s: mean(invalid().map(|r| r.wall_time_s)),
            under_5s_invalid: invalid().filter(|r| r.wall_time_s < 5.0).count(),
            under_120s_valid: valid().filter(|r| r.wall_time_s < 120.0).count(),
        }
    }
}

impl CorpusReport {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Format(e.to_string());
        w.write_record(CSV_HEADER).map_err(io)?;
        for r in &self.records {
            w.write_record([
                r.task_id.clone(),
                r.family.to_string(),
                r.dim.to_string(),
                verdict_word(r.valid).to_string(),
                verdict_word(r.gold_valid).to_string(),
                r.agree().to_string(),
                format!("{:.6}", r.wall_time_s),
                r.disjuncts_tried.to_string(),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Format(e.to_string()))
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    pub fn summary_json(&self) -> String {
        serde_json::to_string_pretty(&self.summary).expect("summary serializes")
    }
}

/// Decides every task at every dimension. Runs are spread over at most
/// `jobs` worker threads (all available cores when `None`); records come
/// back sorted by task id, then dimension.
pub fn evaluate_corpus(
    tasks: &[ReasoningTask],
    cfg: &SolverConfig,
    dims: &[usize],
    jobs: Option<usize>,
) -> Result<CorpusReport> {
    let pairs: Vec<(&ReasoningTask, usize)> = tasks
        .iter()
        .flat_map(|t| dims.iter().map(move |&n| (t, n)))
        .collect();
    let run = || -> Result<Vec<RunRecord>> {
        pairs
            .par_iter()
            .map(|&(t, n)| {
                let v = decide_validity(t, cfg, n)?;
                Ok(RunRecord {
                    task_id: t.id.clone(),
                    family: t.family,
                    dim: n,
                    valid: v.valid,
                    gold_valid: t.gold_valid,
                    wall_time_s: v.wall_time_s,
                    disjuncts_tried: v.disjuncts_tried,
                    counter_model: v.counter_model,
                })
            })
            .collect()
    };
    let mut records = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::InvalidConfig(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    records.sort_by(|a, b| a.task_id.cmp(&b.task_id).then(a.dim.cmp(&b.dim)));
    let summary = ReportSummary::from_records(&records);
    Ok(CorpusReport { records, summary })
}
