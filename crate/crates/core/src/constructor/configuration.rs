use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::SolverConfig;
use crate::error::{Error, Result};
use crate::geometry::{complement, relation_of, QualRelation, Sphere, SurfaceCircle};
use crate::logic::{SpatialConstraint, Term};

/// An Euler diagram: one circle per term on a fixed sphere.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    pub sphere: Sphere,
    pub circles: BTreeMap<String, SurfaceCircle>,
}

impl Configuration {
    pub fn new(sphere: Sphere) -> Self {
        Self {
            sphere,
            circles: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.sphere.ambient_dim()
    }

    /// The circle denoted by `t`, complemented when `t` is.
    pub fn circle(&self, t: &Term) -> Result<SurfaceCircle> {
        let c = self
            .circles
            .get(&t.name)
            .ok_or_else(|| Error::MissingTerm(t.name.clone()))?;
        Ok(if t.complemented {
            complement(&self.sphere, c)
        } else {
            c.clone()
        })
    }

    pub fn relation(&self, lhs: &Term, rhs: &Term, tol: f64) -> Result<QualRelation> {
        relation_of(&self.sphere, &self.circle(lhs)?, &self.circle(rhs)?, tol)
    }

    /// Whether `k` holds qualitatively, judged by [`relation_of`] alone.
    pub fn satisfies(&self, k: &SpatialConstraint, tol: f64) -> Result<bool> {
        Ok(k.relation.holds(self.relation(&k.lhs, &k.rhs, tol)?))
    }
}

/// Seeded unit direction scaled to the sphere.
pub(crate) fn random_direction(sphere: &Sphere, rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..sphere.ambient_dim())
            .map(|_| StandardNormal.sample(rng))
            .collect();
        if let Ok(p) = sphere.project(v) {
            return p.coords().to_vec();
        }
    }
}

/// The seeded common centre of a fresh configuration.
pub(crate) fn initial_center(sphere: &Sphere, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_direction(sphere, &mut rng)
}

/// All circles share one seeded random centre; atomic terms get the atomic
/// radius and every other term the initial radius.
pub fn init_configuration(terms: &[Term], cfg: &SolverConfig, sphere: Sphere) -> Configuration {
    let center = crate::geometry::SpherePoint::from_raw(initial_center(&sphere, cfg.seed));
    let mut conf = Configuration::new(sphere);
    for t in terms {
        let radius = if t.atomic {
            cfg.atomic_radius
        } else {
            cfg.init_radius
        };
        conf.circles.insert(
            t.name.clone(),
            SurfaceCircle {
                center: center.clone(),
                radius,
            },
        );
    }
    conf
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coincident_initialisation() {
        let terms = [Term::plain("F"), Term::plain("G"), Term::plain("H")];
        let cfg = SolverConfig {
            seed: 7,
            ..SolverConfig::default()
        };
        let conf = init_configuration(&terms, &cfg, Sphere::unit(3).unwrap());
        let circles: Vec<&SurfaceCircle> = conf.circles.values().collect();
        assert_eq!(circles.len(), 3);
        for c in &circles {
            assert_eq!(c.center, circles[0].center);
            assert_eq!(c.radius, (-1.0f64).exp());
            assert!((c.center.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn atomic_terms_get_minimal_radius() {
        let terms = [Term::plain("F"), Term::atomic("a")];
        let conf = init_configuration(&terms, &SolverConfig::default(), Sphere::unit(5).unwrap());
        assert_eq!(conf.circles["a"].radius, 0.01);
        assert_eq!(
            conf.relation(&Term::atomic("a"), &Term::plain("F"), 1e-6)
                .unwrap(),
            QualRelation::P
        );
    }

    #[test]
    fn same_seed_same_bits() {
        let terms = [Term::plain("F")];
        let cfg = SolverConfig {
            seed: 42,
            ..SolverConfig::default()
        };
        let a = init_configuration(&terms, &cfg, Sphere::unit(30).unwrap());
        let b = init_configuration(&terms, &cfg, Sphere::unit(30).unwrap());
        let bits = |c: &Configuration| -> Vec<u64> {
            c.circles["F"]
                .center
                .coords()
                .iter()
                .map(|x| x.to_bits())
                .collect()
        };
        assert_eq!(bits(&a), bits(&b));
    }

    #[test]
    fn missing_term() {
        let conf = Configuration::new(Sphere::unit(3).unwrap());
        assert!(matches!(
            conf.circle(&Term::plain("Q")),
            Err(Error::MissingTerm(_))
        ));
    }
}
