use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::configuration::{init_configuration, initial_center};
use super::loss::{constraint_hinge, relation_hinges, total_loss};
use super::model::{Group, Model, Param, Slot};
use super::{Configuration, SolverConfig, TransitionMap};
use crate::error::Result;
use crate::geometry::{QualRelation, Sphere};
use crate::logic::circle_loop::inclusion_closure;
use crate::logic::translate::SignedDisj;
use crate::logic::{
    find_circle_loop, CircleLoop, ConstraintFormula, SpatialConstraint, SpatialRelation, Term,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstructStatus {
    Satisfied,
    Failed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstructOutcome {
    pub status: ConstructStatus,
    pub final_loss: f64,
    pub configuration: Configuration,
    pub steps_used: usize,
}

/// Result of running the constructor over the disjuncts of a formula.
#[derive(Debug, Clone, PartialEq)]
pub enum Satisfiability {
    Sat {
        configuration: Configuration,
        /// Index of the disjunct that was constructed.
        disjunct: usize,
        disjuncts_tried: usize,
    },
    Unsat {
        disjuncts_tried: usize,
    },
}

impl Satisfiability {
    pub fn is_sat(&self) -> bool {
        matches!(self, Satisfiability::Sat { .. })
    }

    pub fn disjuncts_tried(&self) -> usize {
        match self {
            Satisfiability::Sat {
                disjuncts_tried, ..
            }
            | Satisfiability::Unsat { disjuncts_tried } => *disjuncts_tried,
        }
    }
}

fn perturbation_rng(seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    rng
}

/// One descent step on `loss(k) + Σ loss(preserved)`. Returns `conf`
/// unchanged when that joint loss is already zero.
pub fn gradient_step(
    k: &SpatialConstraint,
    preserved: &[SpatialConstraint],
    conf: &Configuration,
    cfg: &SolverConfig,
) -> Result<Configuration> {
    let all: Vec<SpatialConstraint> = std::iter::once(k).chain(preserved).cloned().collect();
    if total_loss(&all, conf, cfg)? == 0.0 {
        return Ok(conf.clone());
    }
    let frozen: Vec<String> = all
        .iter()
        .flat_map(|c| [&c.lhs, &c.rhs])
        .filter(|t| t.atomic)
        .map(|t| t.name.clone())
        .collect();
    let mut model = Model::from_configuration(conf, &frozen, cfg.atomic_radius);
    let groups: Vec<Group> = all
        .iter()
        .map(|c| Group {
            lhs: model.slot(&c.lhs),
            rhs: model.slot(&c.rhs),
            hinges: vec![constraint_hinge(
                c.relation,
                cfg.strict_margin,
                cfg.descent_slack,
            )],
        })
        .collect();
    let mut rng = perturbation_rng(cfg.seed);
    model.step(&groups, cfg.learning_rate, &mut rng);
    Ok(model.to_configuration())
}

/// Relations that satisfy each constraint kind.
fn accepted(rel: SpatialRelation) -> &'static [QualRelation] {
    use QualRelation::*;
    match rel {
        SpatialRelation::P => &[P, EQ],
        SpatialRelation::D => &[D],
        SpatialRelation::NotD => &[PO, P, Pbar, EQ],
        SpatialRelation::NotP => &[D, PO, Pbar],
    }
}

/// Shares one parameter circle between literals the constraints force to be
/// equal. Returns `None` when two atomic terms would have to be complements
/// of each other, or a term its own complement.
fn tied_model(
    terms: &[Term],
    constraints: &[SpatialConstraint],
    cfg: &SolverConfig,
    sphere: &Sphere,
) -> Option<Model> {
    let disjs: Vec<SignedDisj> = constraints
        .iter()
        .map(SignedDisj::from_constraint)
        .collect();
    let reach = inclusion_closure(terms, &disjs);
    let eq = |a: usize, b: usize| reach[a][b] && reach[b][a];
    let center = initial_center(sphere, cfg.seed);
    let mut slots: BTreeMap<String, Slot> = BTreeMap::new();
    let mut params: Vec<Param> = Vec::new();
    for i in 0..terms.len() {
        if slots.contains_key(&terms[i].name) {
            continue;
        }
        if eq(2 * i, 2 * i + 1) {
            return None;
        }
        let param = params.len();
        let mut atomic_flips: Vec<bool> = Vec::new();
        for (j, t) in terms.iter().enumerate().skip(i) {
            let flipped = if eq(2 * i, 2 * j) {
                false
            } else if eq(2 * i, 2 * j + 1) {
                true
            } else {
                continue;
            };
            slots.insert(t.name.clone(), Slot { param, flipped });
            if t.atomic {
                atomic_flips.push(flipped);
            }
        }
        let radius = match atomic_flips.first() {
            None => cfg.init_radius,
            Some(_) if atomic_flips.iter().any(|f| *f != atomic_flips[0]) => return None,
            Some(false) => cfg.atomic_radius,
            Some(true) => sphere.half_perimeter() - cfg.atomic_radius,
        };
        params.push(Param {
            center: center.clone(),
            radius,
            frozen: !atomic_flips.is_empty(),
        });
    }
    Some(Model::new(*sphere, params, slots, cfg.atomic_radius))
}

/// Builds a configuration for the loop by descending from coincident circles,
/// one constraint at a time along the loop order.
pub fn construct_on(
    lp: &CircleLoop,
    cfg: &SolverConfig,
    sphere: &Sphere,
) -> Result<ConstructOutcome> {
    cfg.validate(sphere.radius())?;
    let conj = lp.conjunction();
    let terms = conj.base_terms();
    let ks = conj.constraints();
    let Some(mut model) = tied_model(&terms, ks, cfg, sphere) else {
        return Ok(ConstructOutcome {
            status: ConstructStatus::Failed,
            final_loss: f64::INFINITY,
            configuration: init_configuration(&terms, cfg, *sphere),
            steps_used: 0,
        });
    };
    let map = TransitionMap::default();
    let mut rng = perturbation_rng(cfg.seed);
    let slots: Vec<(Slot, Slot)> = ks
        .iter()
        .map(|k| (model.slot(&k.lhs), model.slot(&k.rhs)))
        .collect();
    let own = |i: usize, slack: f64| Group {
        lhs: slots[i].0,
        rhs: slots[i].1,
        hinges: vec![constraint_hinge(ks[i].relation, cfg.strict_margin, slack)],
    };
    let all_true: Vec<Group> = (0..ks.len()).map(|i| own(i, 0.0)).collect();
    let mut steps_used = 0;

    for _ in 0..cfg.max_epochs {
        let mut preserved: Vec<usize> = Vec::new();
        for i in 0..ks.len() {
            let truth: Vec<Group> = std::iter::once(i)
                .chain(preserved.iter().copied())
                .map(|j| own(j, 0.0))
                .collect();
            let kept: Vec<Group> = preserved
                .iter()
                .map(|&j| own(j, cfg.descent_slack))
                .collect();
            let (l, r) = slots[i];
            let mut steps = 0;
            while steps < cfg.steps_per_constraint && model.loss(&truth) > cfg.loss_tol {
                let current = model.relation(l, r, cfg.loss_tol);
                let head = if ks[i].relation.holds(current) {
                    own(i, cfg.descent_slack)
                } else {
                    let target = map.nearest(current, accepted(ks[i].relation));
                    let next = map.next_subgoal(current, target);
                    if next == target {
                        own(i, cfg.descent_slack)
                    } else {
                        Group {
                            lhs: l,
                            rhs: r,
                            hinges: relation_hinges(next, cfg.strict_margin),
                        }
                    }
                };
                let mut groups = Vec::with_capacity(kept.len() + 1);
                groups.push(head);
                groups.extend(kept.iter().cloned());
                model.step(&groups, cfg.learning_rate, &mut rng);
                steps += 1;
            }
            steps_used += steps;
            if model.loss(&all_true[i..=i]) <= cfg.loss_tol {
                preserved.push(i);
            }
        }
        if model.loss(&all_true) <= cfg.loss_tol {
            break;
        }
    }

    let configuration = model.to_configuration();
    let final_loss = total_loss(ks, &configuration, cfg)?;
    let status = if final_loss <= cfg.loss_tol {
        ConstructStatus::Satisfied
    } else {
        ConstructStatus::Failed
    };
    Ok(ConstructOutcome {
        status,
        final_loss,
        configuration,
        steps_used,
    })
}

/// [`construct_on`] over the unit sphere in `n` ambient dimensions.
pub fn construct(lp: &CircleLoop, cfg: &SolverConfig, n: usize) -> Result<ConstructOutcome> {
    construct_on(lp, cfg, &Sphere::unit(n)?)
}

/// Tries the disjuncts in order and stops at the first one that can be
/// built; disjuncts without a circle loop are skipped.
pub fn decide_satisfiable_on(
    f: &ConstraintFormula,
    cfg: &SolverConfig,
    sphere: &Sphere,
) -> Result<Satisfiability> {
    let mut tried = 0;
    for (i, conj) in f.disjuncts.iter().enumerate() {
        let Some(lp) = find_circle_loop(conj) else {
            continue;
        };
        tried += 1;
        let out = construct_on(&lp, cfg, sphere)?;
        if out.status == ConstructStatus::Satisfied {
            return Ok(Satisfiability::Sat {
                configuration: out.configuration,
                disjunct: i,
                disjuncts_tried: tried,
            });
        }
    }
    Ok(Satisfiability::Unsat {
        disjuncts_tried: tried,
    })
}

pub fn decide_satisfiable(
    f: &ConstraintFormula,
    cfg: &SolverConfig,
    n: usize,
) -> Result<Satisfiability> {
    decide_satisfiable_on(f, cfg, &Sphere::unit(n)?)
}
