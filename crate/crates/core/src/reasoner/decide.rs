use std::time::Instant;

use crate::constructor::{decide_satisfiable_on, Configuration, Satisfiability, SolverConfig};
use crate::error::Result;
use crate::geometry::Sphere;
use crate::logic::{refutation_formula, ReasoningTask, Statement};

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub valid: bool,
    /// A diagram of the premises in which the conclusion fails.
    pub counter_model: Option<Configuration>,
    /// Index of the refutation disjunct the counter-model satisfies.
    pub disjunct: Option<usize>,
    pub wall_time_s: f64,
    pub disjuncts_tried: usize,
}

/// Decides `premises ⊢ conclusion` by trying to draw the premises together
/// with the negated conclusion. Drawing fails ⇒ valid.
pub fn decide_statements(
    premises: &[Statement],
    conclusion: &Statement,
    cfg: &SolverConfig,
    sphere: &Sphere,
) -> Result<Verdict> {
    let start = Instant::now();
    let formula = refutation_formula(premises, conclusion)?;
    let outcome = decide_satisfiable_on(&formula, cfg, sphere)?;
    let disjuncts_tried = outcome.disjuncts_tried();
    let (valid, counter_model, disjunct) = match outcome {
        Satisfiability::Sat {
            configuration,
            disjunct,
            ..
        } => (false, Some(configuration), Some(disjunct)),
        Satisfiability::Unsat { .. } => (true, None, None),
    };
    Ok(Verdict {
        valid,
        counter_model,
        disjunct,
        wall_time_s: start.elapsed().as_secs_f64(),
        disjuncts_tried,
    })
}

/// [`decide_statements`] for a corpus task on the unit sphere in `n` dimensions.
pub fn decide_validity(t: &ReasoningTask, cfg: &SolverConfig, n: usize) -> Result<Verdict> {
    decide_statements(&t.premises, &t.conclusion, cfg, &Sphere::unit(n)?)
}
