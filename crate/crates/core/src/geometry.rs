//! Geodesic discs on the surface of an n-dimensional sphere.
//!
//! The sphere is centred at the ambient origin, so the antipode of a surface
//! point `p` is simply `-p`. A circle `○(p, r)` is the open set of surface
//! points whose geodesic distance to `p` is strictly less than `r`, and its
//! complement is the circle `○(-p, πR - r)`.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Surface points must lie on the sphere within this tolerance.
pub const SURFACE_TOL: f64 = 1e-9;

/// Default tolerance band of [`relation_of`].
pub const DEFAULT_RELATION_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sphere {
    ambient_dim: usize,
    radius: f64,
}

impl Sphere {
    pub fn new(ambient_dim: usize, radius: f64) -> Result<Self> {
        if ambient_dim < 2 {
            return Err(Error::InvalidSphere(format!(
                "ambient dimension must be at least 2, got {ambient_dim}"
            )));
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::InvalidSphere(format!(
                "radius must be positive, got {radius}"
            )));
        }
        Ok(Self {
            ambient_dim,
            radius,
        })
    }

    /// Unit sphere in `R^n`.
    pub fn unit(ambient_dim: usize) -> Result<Self> {
        Self::new(ambient_dim, 1.0)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Half the great-circle perimeter, `πR`: the largest possible geodesic distance.
    pub fn half_perimeter(&self) -> f64 {
        PI * self.radius
    }

    /// Scales `coords` onto the surface. Fails on a zero vector.
    pub fn project(&self, coords: Vec<f64>) -> Result<SpherePoint> {
        self.check_dim(coords.len())?;
        let norm = norm(&coords);
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::OffSurface {
                norm,
                radius: self.radius,
            });
        }
        let scale = self.radius / norm;
        Ok(SpherePoint {
            coords: coords.into_iter().map(|c| c * scale).collect(),
        })
    }

    /// The point `R·e_axis`.
    pub fn axis_point(&self, axis: usize) -> Result<SpherePoint> {
        if axis >= self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: axis + 1,
            });
        }
        let mut coords = vec![0.0; self.ambient_dim];
        coords[axis] = self.radius;
        Ok(SpherePoint { coords })
    }

    /// Wraps coordinates that already lie on the surface.
    pub fn point(&self, coords: Vec<f64>) -> Result<SpherePoint> {
        self.check_dim(coords.len())?;
        let n = norm(&coords);
        if (n - self.radius).abs() > SURFACE_TOL * self.radius.max(1.0) {
            return Err(Error::OffSurface {
                norm: n,
                radius: self.radius,
            });
        }
        Ok(SpherePoint { coords })
    }

    pub fn circle(&self, center: SpherePoint, radius: f64) -> Result<SurfaceCircle> {
        self.check_dim(center.dim())?;
        if !(radius > 0.0 && radius < self.half_perimeter()) {
            return Err(Error::InvalidCircle(format!(
                "geodesic radius {radius} outside (0, {})",
                self.half_perimeter()
            )));
        }
        Ok(SurfaceCircle { center, radius })
    }

    pub(crate) fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpherePoint {
    coords: Vec<f64>,
}

impl SpherePoint {
    /// Builds a point without checking that it lies on a surface.
    pub(crate) fn from_raw(coords: Vec<f64>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn antipode(&self) -> SpherePoint {
        SpherePoint {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn norm(&self) -> f64 {
        norm(&self.coords)
    }
}

impl std::ops::Neg for &SpherePoint {
    type Output = SpherePoint;

    fn neg(self) -> SpherePoint {
        self.antipode()
    }
}

/// A geodesic disc `○(center, radius)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceCircle {
    pub center: SpherePoint,
    /// Geodesic radius, in arc-length units.
    #[serde(rename = "r")]
    pub radius: f64,
}

impl SurfaceCircle {
    pub fn dim(&self) -> usize {
        self.center.dim()
    }
}

/// Qualitative relation between two circles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QualRelation {
    /// Part of.
    P,
    /// Contains (inverse part of).
    Pbar,
    /// Partial overlap.
    PO,
    /// Disconnected.
    D,
    /// Equal.
    EQ,
}

impl QualRelation {
    pub const ALL: [QualRelation; 5] = [
        QualRelation::P,
        QualRelation::Pbar,
        QualRelation::PO,
        QualRelation::D,
        QualRelation::EQ,
    ];

    /// The relation seen from the other circle.
    pub fn converse(self) -> Self {
        match self {
            QualRelation::P => QualRelation::Pbar,
            QualRelation::Pbar => QualRelation::P,
            other => other,
        }
    }
}

impl fmt::Display for QualRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            QualRelation::P => "P",
            QualRelation::Pbar => "Pbar",
            QualRelation::PO => "PO",
            QualRelation::D => "D",
            QualRelation::EQ => "EQ",
        };
        f.write_str(s)
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Angle between two nonzero vectors.
///
/// Evaluated as `2·atan2(|â - b̂|, |â + b̂|)`, which equals `acos(â·b̂)` but
/// keeps full precision next to 0 and π where `acos` needs clamping.
pub(crate) fn angle_between(a: &[f64], b: &[f64]) -> f64 {
    let (na, nb) = (norm(a), norm(b));
    let (mut diff, mut sum) = (0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        let (u, v) = (x / na, y / nb);
        diff += (u - v) * (u - v);
        sum += (u + v) * (u + v);
    }
    2.0 * diff.sqrt().atan2(sum.sqrt())
}

/// Surface distance `R·acos(â·b̂)`.
pub fn geodesic_distance(sphere: &Sphere, a: &SpherePoint, b: &SpherePoint) -> Result<f64> {
    sphere.check_dim(a.dim())?;
    sphere.check_dim(b.dim())?;
    Ok(angle_between(&a.coords, &b.coords) * sphere.radius)
}

/// The complementary disc `○(-p, πR - r)`.
pub fn complement(sphere: &Sphere, c: &SurfaceCircle) -> SurfaceCircle {
    SurfaceCircle {
        center: c.center.antipode(),
        radius: sphere.half_perimeter() - c.radius,
    }
}

/// Open-disc membership: `d(q, center) < r`.
pub fn membership(sphere: &Sphere, q: &SpherePoint, c: &SurfaceCircle) -> Result<bool> {
    Ok(geodesic_distance(sphere, q, &c.center)? < c.radius)
}

/// Classifies the pair `(a, b)`; ties inside the tolerance band resolve in
/// the order EQ, P, Pbar, D, PO.
pub fn relation_of(
    sphere: &Sphere,
    a: &SurfaceCircle,
    b: &SurfaceCircle,
    tol: f64,
) -> Result<QualRelation> {
    let d = geodesic_distance(sphere, &a.center, &b.center)?;
    Ok(classify(d, a.radius, b.radius, tol))
}

/// Relation from the centre distance and the two radii.
pub fn classify(d: f64, ra: f64, rb: f64, tol: f64) -> QualRelation {
    if d.abs() <= tol && (ra - rb).abs() <= tol {
        QualRelation::EQ
    } else if d + ra <= rb + tol {
        QualRelation::P
    } else if d + rb <= ra + tol {
        QualRelation::Pbar
    } else if d >= ra + rb - tol {
        QualRelation::D
    } else {
        QualRelation::PO
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_point(sphere: &Sphere, rng: &mut ChaCha8Rng) -> SpherePoint {
        let v = (0..sphere.ambient_dim())
            .map(|_| rng.random_range(-1.0..1.0))
            .collect();
        sphere.project(v).unwrap()
    }

    #[test]
    fn distance_identity_antipode_orthogonal() {
        let s = Sphere::unit(3).unwrap();
        let p = s.axis_point(0).unwrap();
        let q = s.axis_point(1).unwrap();
        assert_eq!(geodesic_distance(&s, &p, &p).unwrap(), 0.0);
        assert_eq!(geodesic_distance(&s, &p, &-&p).unwrap(), PI);
        assert!((geodesic_distance(&s, &p, &q).unwrap() - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn distance_scales_with_radius() {
        let s = Sphere::new(3, 2.5).unwrap();
        let p = s.axis_point(0).unwrap();
        let q = s.axis_point(2).unwrap();
        assert!((geodesic_distance(&s, &p, &q).unwrap() - 2.5 * PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let s3 = Sphere::unit(3).unwrap();
        let s2 = Sphere::unit(2).unwrap();
        let p = s3.axis_point(0).unwrap();
        let q = s2.axis_point(0).unwrap();
        assert!(matches!(
            geodesic_distance(&s3, &p, &q),
            Err(Error::DimensionMismatch {
                expected: 3,
                got: 2
            })
        ));
        assert!(Sphere::unit(1).is_err());
        assert!(Sphere::new(3, 0.0).is_err());
    }

    #[test]
    fn complement_of_example_circle() {
        let s = Sphere::unit(3).unwrap();
        let e1 = s.axis_point(0).unwrap();
        let r = (-1.0f64).exp();
        let c = s.circle(e1.clone(), r).unwrap();
        let cc = complement(&s, &c);
        assert_eq!(cc.center.coords(), &[-1.0, -0.0, -0.0]);
        assert_eq!(cc.radius, PI - r);
        let back = complement(&s, &cc);
        assert_eq!(back.center, c.center);
        assert!((back.radius - c.radius).abs() <= 1e-12);
    }

    #[test]
    fn membership_cases() {
        let s = Sphere::unit(3).unwrap();
        let e1 = s.axis_point(0).unwrap();
        let c = s.circle(e1.clone(), 0.3).unwrap();
        assert!(membership(&s, &e1, &c).unwrap());
        assert!(!membership(&s, &e1.antipode(), &c).unwrap());
        // A point at distance exactly pi/2 from e1 on a circle of radius pi/2.
        let wide = s.circle(e1, PI / 2.0).unwrap();
        let e2 = s.axis_point(1).unwrap();
        let d = geodesic_distance(&s, &e2, &wide.center).unwrap();
        assert_eq!(d, PI / 2.0);
        assert!(!membership(&s, &e2, &wide).unwrap());
    }

    #[test]
    fn circle_radius_bounds() {
        let s = Sphere::unit(2).unwrap();
        let p = s.axis_point(0).unwrap();
        assert!(s.circle(p.clone(), 0.0).is_err());
        assert!(s.circle(p.clone(), PI).is_err());
        assert!(s.circle(p, 1.0).is_ok());
    }

    /// Relation read off from membership of sampled surface points.
    fn sampled_relation(s: &Sphere, a: &SurfaceCircle, b: &SurfaceCircle) -> (bool, bool) {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let (mut a_minus_b, mut a_and_b) = (false, false);
        for _ in 0..20000 {
            let q = random_point(s, &mut rng);
            let (ia, ib) = (membership(s, &q, a).unwrap(), membership(s, &q, b).unwrap());
            a_minus_b |= ia && !ib;
            a_and_b |= ia && ib;
        }
        (a_minus_b, a_and_b)
    }

    #[test]
    fn relation_examples_agree_with_sampling() {
        let s = Sphere::unit(3).unwrap();
        let e1 = s.axis_point(0).unwrap();
        let a = s.circle(e1.clone(), 0.3).unwrap();
        let b = s.circle(e1.clone(), 0.5).unwrap();
        assert_eq!(relation_of(&s, &a, &b, 1e-6).unwrap(), QualRelation::P);
        let (a_minus_b, a_and_b) = sampled_relation(&s, &a, &b);
        assert!(!a_minus_b && a_and_b);

        let far = s.circle(e1.antipode(), 0.3).unwrap();
        assert_eq!(relation_of(&s, &a, &far, 1e-6).unwrap(), QualRelation::D);
        let (_, a_and_far) = sampled_relation(&s, &a, &far);
        assert!(!a_and_far);

        assert_eq!(relation_of(&s, &a, &a, 1e-6).unwrap(), QualRelation::EQ);
    }

    #[test]
    fn complement_is_set_complement_on_samples() {
        let s = Sphere::unit(3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = s
            .circle(random_point(&s, &mut rng), (-1.0f64).exp())
            .unwrap();
        let cc = complement(&s, &c);
        for _ in 0..1000 {
            let q = random_point(&s, &mut rng);
            let d = geodesic_distance(&s, &q, &c.center).unwrap();
            if (d - c.radius).abs() > 1e-6 {
                assert_ne!(
                    membership(&s, &q, &c).unwrap(),
                    membership(&s, &q, &cc).unwrap()
                );
            }
        }
    }
}
