//! Trainable parameters behind a configuration. Terms that the constraints
//! force to be equal (or complementary) share one parameter circle.

use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;

use super::loss::{pair_distance, Hinge};
use super::{configuration::random_direction, Configuration};
use crate::geometry::{classify, dot, norm, QualRelation, Sphere, SpherePoint, SurfaceCircle};
use crate::logic::Term;

/// Size of the random tangent kick used at singular centre pairs.
const PERTURBATION: f64 = 1e-6;

#[derive(Debug, Clone)]
pub(crate) struct Param {
    pub center: Vec<f64>,
    pub radius: f64,
    pub frozen: bool,
}

/// Where a literal lives: a parameter circle, possibly through its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Slot {
    pub param: usize,
    pub flipped: bool,
}

/// One pair term of an objective.
#[derive(Debug, Clone)]
pub(crate) struct Group {
    pub lhs: Slot,
    pub rhs: Slot,
    pub hinges: Vec<Hinge>,
}

#[derive(Debug, Clone)]
pub(crate) struct PairState {
    pub d: f64,
    pub rl: f64,
    pub rr: f64,
}

#[derive(Debug, Clone)]
pub(crate) struct Model {
    pub sphere: Sphere,
    pub params: Vec<Param>,
    pub slots: BTreeMap<String, Slot>,
    radius_bounds: (f64, f64),
}

impl Model {
    pub fn new(
        sphere: Sphere,
        params: Vec<Param>,
        slots: BTreeMap<String, Slot>,
        atomic_radius: f64,
    ) -> Self {
        let hi = sphere.half_perimeter() - atomic_radius;
        Self {
            sphere,
            params,
            slots,
            radius_bounds: (atomic_radius, hi),
        }
    }

    /// One free parameter per stored circle; `frozen` names keep their radius.
    pub fn from_configuration(conf: &Configuration, frozen: &[String], atomic_radius: f64) -> Self {
        let mut params = Vec::new();
        let mut slots = BTreeMap::new();
        for (name, c) in &conf.circles {
            slots.insert(
                name.clone(),
                Slot {
                    param: params.len(),
                    flipped: false,
                },
            );
            params.push(Param {
                center: c.center.coords().to_vec(),
                radius: c.radius,
                frozen: frozen.contains(name),
            });
        }
        Self::new(conf.sphere, params, slots, atomic_radius)
    }

    pub fn slot(&self, t: &Term) -> Slot {
        let s = self.slots[&t.name];
        Slot {
            param: s.param,
            flipped: s.flipped ^ t.complemented,
        }
    }

    fn radius_of(&self, s: Slot) -> f64 {
        let r = self.params[s.param].radius;
        if s.flipped {
            self.sphere.half_perimeter() - r
        } else {
            r
        }
    }

    fn center_of(&self, s: Slot) -> Vec<f64> {
        let c = &self.params[s.param].center;
        if s.flipped {
            c.iter().map(|x| -x).collect()
        } else {
            c.clone()
        }
    }

    pub fn pair(&self, l: Slot, r: Slot) -> PairState {
        let d = if l.param == r.param {
            if l.flipped == r.flipped {
                0.0
            } else {
                self.sphere.half_perimeter()
            }
        } else {
            pair_distance(&self.center_of(l), &self.center_of(r), self.sphere.radius()).d
        };
        PairState {
            d,
            rl: self.radius_of(l),
            rr: self.radius_of(r),
        }
    }

    pub fn relation(&self, l: Slot, r: Slot, tol: f64) -> QualRelation {
        let p = self.pair(l, r);
        classify(p.d, p.rl, p.rr, tol)
    }

    /// `Σ max(0, hinge)` over the groups.
    pub fn loss(&self, groups: &[Group]) -> f64 {
        groups
            .iter()
            .map(|g| {
                let p = self.pair(g.lhs, g.rhs);
                g.hinges
                    .iter()
                    .map(|h| h.value(p.d, p.rl, p.rr))
                    .sum::<f64>()
            })
            .sum()
    }

    /// Nudges one centre of every pair whose active hinges push the centres
    /// along an undefined direction (apart from coincidence, or together from
    /// antipodes).
    fn unstick(&mut self, groups: &[Group], rng: &mut ChaCha8Rng) {
        for g in groups {
            if g.lhs.param == g.rhs.param {
                continue;
            }
            let (a, b) = (self.center_of(g.lhs), self.center_of(g.rhs));
            let pd = pair_distance(&a, &b, self.sphere.radius());
            if pd.grads.is_some() {
                continue;
            }
            let p = PairState {
                d: pd.d,
                rl: self.radius_of(g.lhs),
                rr: self.radius_of(g.rhs),
            };
            let pull: f64 = g
                .hinges
                .iter()
                .filter(|h| h.raw(p.d, p.rl, p.rr) > 0.0)
                .map(|h| h.cd)
                .sum();
            let stuck = if pd.cos > 0.0 { pull < 0.0 } else { pull > 0.0 };
            if stuck {
                self.perturb(g.lhs.param, rng);
            }
        }
    }

    fn perturb(&mut self, param: usize, rng: &mut ChaCha8Rng) {
        let center = &self.params[param].center;
        let r = self.sphere.radius();
        let mut v = random_direction(&self.sphere, rng);
        let along = dot(&v, center) / (r * r);
        for (x, c) in v.iter_mut().zip(center) {
            *x -= along * c;
        }
        let nv = norm(&v);
        if nv == 0.0 {
            return;
        }
        let scale = PERTURBATION * r / nv;
        let moved: Vec<f64> = center.iter().zip(&v).map(|(c, x)| c + scale * x).collect();
        self.params[param].center = renormalize(moved, r);
    }

    /// One gradient step on the groups' joint hinge loss.
    pub fn step(&mut self, groups: &[Group], learning_rate: f64, rng: &mut ChaCha8Rng) {
        self.unstick(groups, rng);
        let dim = self.sphere.ambient_dim();
        let mut gc = vec![vec![0.0; dim]; self.params.len()];
        let mut gr = vec![0.0; self.params.len()];
        for g in groups {
            let same = g.lhs.param == g.rhs.param;
            let (a, b) = (self.center_of(g.lhs), self.center_of(g.rhs));
            let pd = if same {
                None
            } else {
                Some(pair_distance(&a, &b, self.sphere.radius()))
            };
            let d = pd
                .as_ref()
                .map_or_else(|| self.pair(g.lhs, g.rhs).d, |p| p.d);
            let (rl, rr) = (self.radius_of(g.lhs), self.radius_of(g.rhs));
            let (mut sd, mut sl, mut sr) = (0.0, 0.0, 0.0);
            for h in g.hinges.iter().filter(|h| h.raw(d, rl, rr) > 0.0) {
                sd += h.cd;
                sl += h.cl;
                sr += h.cr;
            }
            let sign = |s: Slot| if s.flipped { -1.0 } else { 1.0 };
            gr[g.lhs.param] += sl * sign(g.lhs);
            gr[g.rhs.param] += sr * sign(g.rhs);
            if sd != 0.0 {
                if let Some((ga, gb)) = pd.and_then(|p| p.grads) {
                    for (s, gv) in [(g.lhs, ga), (g.rhs, gb)] {
                        let k = sd * sign(s);
                        for (acc, x) in gc[s.param].iter_mut().zip(gv) {
                            *acc += k * x;
                        }
                    }
                }
            }
        }
        let (lo, hi) = self.radius_bounds;
        let r = self.sphere.radius();
        for (i, p) in self.params.iter_mut().enumerate() {
            if gc[i].iter().any(|x| *x != 0.0) {
                let moved: Vec<f64> = p
                    .center
                    .iter()
                    .zip(&gc[i])
                    .map(|(c, g)| c - learning_rate * g)
                    .collect();
                p.center = renormalize(moved, r);
            }
            if !p.frozen && gr[i] != 0.0 {
                p.radius = (p.radius - learning_rate * gr[i]).clamp(lo, hi);
            }
        }
    }

    /// Materialized circle of every base term.
    pub fn to_configuration(&self) -> Configuration {
        let mut conf = Configuration::new(self.sphere);
        for (name, &s) in &self.slots {
            conf.circles.insert(
                name.clone(),
                SurfaceCircle {
                    center: SpherePoint::from_raw(self.center_of(s)),
                    radius: self.radius_of(s),
                },
            );
        }
        conf
    }
}

fn renormalize(mut v: Vec<f64>, radius: f64) -> Vec<f64> {
    let n = norm(&v);
    for x in v.iter_mut() {
        *x *= radius / n;
    }
    v
}
