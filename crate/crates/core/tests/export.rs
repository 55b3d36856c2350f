use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sphnn_core::constructor::{Configuration, SolverConfig};
use sphnn_core::export::{
    export_json, import_json, primitives, render_svg, LabelPlacement, Primitive, RenderSpec,
    ViewPoint,
};
use sphnn_core::logic::{
    find_circle_loop, generate_extended16, Conjunction, SpatialConstraint, Term,
};
use sphnn_core::{classify, construct, decide_validity, relation_of, Error, QualRelation, Sphere};

fn random_conf(n: usize, terms: usize, seed: u64) -> Configuration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sphere = Sphere::unit(n).unwrap();
    let mut conf = Configuration::new(sphere);
    for i in 0..terms {
        let v: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
        let c = sphere
            .circle(sphere.project(v).unwrap(), rng.random_range(0.01..3.0))
            .unwrap();
        conf.circles.insert(format!("T{i}"), c);
    }
    conf
}

#[test]
fn json_round_trip_is_exact() {
    for (n, seed) in [(2, 1), (3, 2), (30, 3), (10_000, 4)] {
        let conf = random_conf(n, 3, seed);
        let text = export_json(&conf);
        let back = import_json(&text).unwrap();
        assert_eq!(back, conf);
        for (a, b) in conf.circles.values().zip(back.circles.values()) {
            for (x, y) in a.center.coords().iter().zip(b.center.coords()) {
                assert!((x - y).abs() <= 1e-15);
            }
        }
    }
}

#[test]
fn svg_only_for_two_and_three_dimensions() {
    let spec = RenderSpec::default();
    for n in [4, 15] {
        assert_eq!(
            render_svg(&random_conf(n, 2, 5), &spec),
            Err(Error::UnsupportedProjection(n))
        );
    }
}

#[test]
fn svg_is_well_formed_and_stable() {
    for n in [2, 3] {
        for labels in [LabelPlacement::Centroid, LabelPlacement::Legend] {
            let conf = random_conf(n, 4, 9);
            let spec = RenderSpec {
                labels,
                complemented: vec!["T1".into()],
                ..RenderSpec::default()
            };
            let a = render_svg(&conf, &spec).unwrap();
            assert_eq!(a, render_svg(&conf, &spec).unwrap());
            let doc = roxmltree::Document::parse(&a).unwrap();
            assert_eq!(doc.root_element().tag_name().name(), "svg");
            assert_eq!(doc.root_element().attribute("version"), Some("1.1"));
            assert!(a.contains("c_T1"));
        }
    }
}

/// Relation read off a drawn arc pair.
fn arc_relation(a: &Primitive, b: &Primitive, tol: f64) -> QualRelation {
    let (
        Primitive::Arc {
            start: s1, end: e1, ..
        },
        Primitive::Arc {
            start: s2, end: e2, ..
        },
    ) = (a, b)
    else {
        panic!("arcs expected");
    };
    let mid = |s: f64, e: f64| (s + e) / 2.0;
    let mut gap = (mid(*s1, *e1) - mid(*s2, *e2)).rem_euclid(2.0 * PI);
    if gap > PI {
        gap = 2.0 * PI - gap;
    }
    classify(gap, (e1 - s1) / 2.0, (e2 - s2) / 2.0, tol)
}

fn angle(a: &ViewPoint, b: &ViewPoint) -> f64 {
    let dot = a.x * b.x + a.y * b.y + a.depth * b.depth;
    let na = (a.x * a.x + a.y * a.y + a.depth * a.depth).sqrt();
    let nb = (b.x * b.x + b.y * b.y + b.depth * b.depth).sqrt();
    (dot / (na * nb)).clamp(-1.0, 1.0).acos()
}

/// Relation read off two drawn boundary curves by sampling the sphere;
/// `None` when sampling cannot tell.
fn boundary_relation(a: &Primitive, b: &Primitive) -> (bool, bool) {
    let (
        Primitive::Boundary {
            center: ca,
            points: pa,
            ..
        },
        Primitive::Boundary {
            center: cb,
            points: pb,
            ..
        },
    ) = (a, b)
    else {
        panic!("boundaries expected");
    };
    let (ra, rb) = (angle(ca, &pa[0]), angle(cb, &pb[0]));
    let samples = 40_000;
    let golden = PI * (3.0 - 5f64.sqrt());
    let (mut a_not_b, mut both) = (false, false);
    for i in 0..samples {
        let z = 1.0 - 2.0 * (i as f64 + 0.5) / samples as f64;
        let rho = (1.0 - z * z).sqrt();
        let t = golden * i as f64;
        let q = ViewPoint {
            x: rho * t.cos(),
            y: rho * t.sin(),
            depth: z,
        };
        let (in_a, in_b) = (angle(&q, ca) < ra, angle(&q, cb) < rb);
        a_not_b |= in_a && !in_b;
        both |= in_a && in_b;
    }
    (!a_not_b, !both)
}

fn check_fidelity(conf: &Configuration) {
    let spec = RenderSpec::default();
    let prims = primitives(conf, &spec).unwrap();
    let names: Vec<&String> = conf.circles.keys().collect();
    for (i, a) in names.iter().enumerate() {
        for (j, b) in names.iter().enumerate() {
            if i == j {
                continue;
            }
            let (ca, cb) = (&conf.circles[*a], &conf.circles[*b]);
            let truth = relation_of(&conf.sphere, ca, cb, 1e-6).unwrap();
            if conf.dim() == 2 {
                assert_eq!(arc_relation(&prims[i], &prims[j], 1e-6), truth, "{a} {b}");
            } else {
                let d =
                    sphnn_core::geodesic_distance(&conf.sphere, &ca.center, &cb.center).unwrap();
                let margins = [d + ca.radius - cb.radius, ca.radius + cb.radius - d];
                if margins.iter().any(|m| m.abs() < 0.02) {
                    continue;
                }
                let (inside, disjoint) = boundary_relation(&prims[i], &prims[j]);
                assert_eq!(
                    inside,
                    matches!(truth, QualRelation::P | QualRelation::EQ),
                    "{a} {b}"
                );
                assert_eq!(disjoint, truth == QualRelation::D, "{a} {b}");
            }
        }
    }
}

#[test]
fn drawings_follow_counter_models() {
    let cfg = SolverConfig::default();
    let mut checked = 0;
    for n in [2, 3] {
        for t in generate_extended16().iter().filter(|t| !t.gold_valid) {
            let v = decide_validity(t, &cfg, n).unwrap();
            check_fidelity(v.counter_model.as_ref().unwrap());
            checked += 1;
        }
    }
    assert_eq!(checked, 64);
    for seed in 0..20 {
        check_fidelity(&random_conf(2, 4, seed));
        check_fidelity(&random_conf(3, 4, seed));
    }
}

#[test]
fn nested_barbara_model() {
    let (f, g, h) = (Term::plain("F"), Term::plain("G"), Term::plain("H"));
    let ks = vec![
        SpatialConstraint::p(f.clone(), g.clone()),
        SpatialConstraint::p(g, h),
    ];
    for n in [2, 3] {
        let lp = find_circle_loop(&Conjunction(ks.clone())).unwrap();
        let out = construct(&lp, &SolverConfig::default(), n).unwrap();
        let conf = out.configuration;
        let prims = primitives(&conf, &RenderSpec::default()).unwrap();
        assert_eq!(
            prims.iter().map(|p| p.name()).collect::<Vec<_>>(),
            ["F", "G", "H"]
        );
        check_fidelity(&conf);
        let svg = render_svg(&conf, &RenderSpec::default()).unwrap();
        roxmltree::Document::parse(&svg).unwrap();
    }
}
