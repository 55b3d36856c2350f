//! Hinge losses over the centre distance and the two radii of a circle pair.

use std::collections::BTreeMap;

use super::{Configuration, SolverConfig};
use crate::error::{Error, Result};
use crate::geometry::{angle_between, dot, norm, QualRelation};
use crate::logic::{SpatialConstraint, SpatialRelation, Term};

/// `max(0, cd·d + cl·r_lhs + cr·r_rhs + offset)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Hinge {
    pub cd: f64,
    pub cl: f64,
    pub cr: f64,
    pub offset: f64,
}

impl Hinge {
    const fn new(cd: f64, cl: f64, cr: f64, offset: f64) -> Self {
        Self { cd, cl, cr, offset }
    }

    pub fn raw(&self, d: f64, rl: f64, rr: f64) -> f64 {
        self.cd * d + self.cl * rl + self.cr * rr + self.offset
    }

    pub fn value(&self, d: f64, rl: f64, rr: f64) -> f64 {
        self.raw(d, rl, rr).max(0.0)
    }

    fn shifted(mut self, by: f64) -> Self {
        self.offset += by;
        self
    }
}

/// The single hinge of a constraint; `slack` is added on top of the margin.
pub(crate) fn constraint_hinge(rel: SpatialRelation, margin: f64, slack: f64) -> Hinge {
    let h = match rel {
        SpatialRelation::P => Hinge::new(1.0, 1.0, -1.0, 0.0),
        SpatialRelation::D => Hinge::new(-1.0, 1.0, 1.0, 0.0),
        SpatialRelation::NotD => Hinge::new(1.0, -1.0, -1.0, margin),
        SpatialRelation::NotP => Hinge::new(-1.0, -1.0, 1.0, margin),
    };
    h.shifted(slack)
}

/// Hinges whose joint zero drives a pair into `rel` with a margin.
pub(crate) fn relation_hinges(rel: QualRelation, margin: f64) -> Vec<Hinge> {
    use QualRelation::*;
    match rel {
        P => vec![Hinge::new(1.0, 1.0, -1.0, margin)],
        Pbar => vec![Hinge::new(1.0, -1.0, 1.0, margin)],
        D => vec![Hinge::new(-1.0, 1.0, 1.0, margin)],
        PO => vec![
            Hinge::new(1.0, -1.0, -1.0, margin),
            Hinge::new(-1.0, -1.0, 1.0, margin),
            Hinge::new(-1.0, 1.0, -1.0, margin),
        ],
        EQ => vec![
            Hinge::new(1.0, 0.0, 0.0, 0.0),
            Hinge::new(0.0, 1.0, -1.0, 0.0),
            Hinge::new(0.0, -1.0, 1.0, 0.0),
        ],
    }
}

/// Distance between two materialized centres given as raw ambient vectors,
/// with its gradient with respect to each vector.
#[derive(Debug, Clone)]
pub(crate) struct PairDistance {
    pub d: f64,
    /// `None` at coincident or antipodal centres, where no direction is defined.
    pub grads: Option<(Vec<f64>, Vec<f64>)>,
    pub cos: f64,
}

const SINGULAR_SIN: f64 = 1e-12;

pub(crate) fn pair_distance(a: &[f64], b: &[f64], sphere_radius: f64) -> PairDistance {
    let (na, nb) = (norm(a), norm(b));
    let cos = dot(a, b) / (na * nb);
    let d = sphere_radius * angle_between(a, b);
    // d/da acos(â·b̂) = -(b̂ - (â·b̂)â) / (|a| sin θ), with sin θ = |b̂ - (â·b̂)â|.
    let wa: Vec<f64> = a
        .iter()
        .zip(b)
        .map(|(x, y)| y / nb - cos * x / na)
        .collect();
    let wb: Vec<f64> = a
        .iter()
        .zip(b)
        .map(|(x, y)| x / na - cos * y / nb)
        .collect();
    let sa = norm(&wa);
    let sb = norm(&wb);
    let grads = (sa > SINGULAR_SIN && sb > SINGULAR_SIN).then(|| {
        let ga = wa.iter().map(|w| -sphere_radius * w / (sa * na)).collect();
        let gb = wb.iter().map(|w| -sphere_radius * w / (sb * nb)).collect();
        (ga, gb)
    });
    PairDistance { d, grads, cos }
}

/// Gradient of a scalar loss with respect to the stored circles.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LossGradient {
    pub centers: BTreeMap<String, Vec<f64>>,
    pub radii: BTreeMap<String, f64>,
}

struct Materialized<'a> {
    center: Vec<f64>,
    radius: f64,
    sign: f64,
    name: &'a str,
}

fn materialize<'a>(conf: &Configuration, t: &'a Term) -> Result<Materialized<'a>> {
    let c = conf
        .circles
        .get(&t.name)
        .ok_or_else(|| Error::MissingTerm(t.name.clone()))?;
    let sign = if t.complemented { -1.0 } else { 1.0 };
    Ok(Materialized {
        center: c.center.coords().iter().map(|x| sign * x).collect(),
        radius: if t.complemented {
            conf.sphere.half_perimeter() - c.radius
        } else {
            c.radius
        },
        sign,
        name: &t.name,
    })
}

/// Hinge loss of `k` on `conf`; zero exactly when the relation holds with
/// the strict margin for ¬P and ¬D.
pub fn constraint_loss(
    k: &SpatialConstraint,
    conf: &Configuration,
    cfg: &SolverConfig,
) -> Result<f64> {
    let l = materialize(conf, &k.lhs)?;
    let r = materialize(conf, &k.rhs)?;
    let d = pair_distance(&l.center, &r.center, conf.sphere.radius()).d;
    Ok(constraint_hinge(k.relation, cfg.strict_margin, 0.0).value(d, l.radius, r.radius))
}

/// Sum of [`constraint_loss`] over `ks`.
pub fn total_loss(
    ks: &[SpatialConstraint],
    conf: &Configuration,
    cfg: &SolverConfig,
) -> Result<f64> {
    ks.iter().map(|k| constraint_loss(k, conf, cfg)).sum()
}

/// Analytic gradient of [`constraint_loss`] with respect to the stored
/// centre coordinates and radii. At coincident or antipodal centres the
/// centre part is left at zero.
pub fn constraint_loss_gradient(
    k: &SpatialConstraint,
    conf: &Configuration,
    cfg: &SolverConfig,
) -> Result<LossGradient> {
    let l = materialize(conf, &k.lhs)?;
    let r = materialize(conf, &k.rhs)?;
    let mut g = LossGradient::default();
    for m in [&l, &r] {
        g.centers.insert(m.name.to_string(), vec![0.0; conf.dim()]);
        g.radii.insert(m.name.to_string(), 0.0);
    }
    let h = constraint_hinge(k.relation, cfg.strict_margin, 0.0);
    if k.lhs.name == k.rhs.name {
        return Ok(g);
    }
    let pd = pair_distance(&l.center, &r.center, conf.sphere.radius());
    if h.raw(pd.d, l.radius, r.radius) <= 0.0 {
        return Ok(g);
    }
    *g.radii.get_mut(l.name).unwrap() += h.cl * l.sign;
    *g.radii.get_mut(r.name).unwrap() += h.cr * r.sign;
    if let Some((ga, gb)) = pd.grads {
        for (m, gm) in [(&l, ga), (&r, gb)] {
            let slot = g.centers.get_mut(m.name).unwrap();
            for (s, x) in slot.iter_mut().zip(gm) {
                *s += h.cd * m.sign * x;
            }
        }
    }
    Ok(g)
}
