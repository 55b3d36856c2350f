//! Syllogistic reasoning by drawing Euler diagrams with geodesic circles on
//! a sphere.
//!
//! Premises and the negated conclusion are translated into part-of and
//! disconnection constraints between circles. The constructor tries to
//! satisfy them by gradient descent from coinciding circles; if no diagram
//! can be drawn the syllogism is valid.

pub mod constructor;
pub mod error;
pub mod export;
pub mod geometry;
pub mod logic;
pub mod reasoner;

pub use constructor::{
    construct, decide_satisfiable, init_configuration, Configuration, ConstructOutcome,
    ConstructStatus, Satisfiability, SolverConfig, TransitionMap,
};
pub use error::{Error, Result};
pub use export::{export_json, import_json, render_svg, RenderSpec};
pub use geometry::{
    classify, complement, geodesic_distance, membership, relation_of, QualRelation, Sphere,
    SpherePoint, SurfaceCircle,
};
pub use logic::{
    find_circle_loop, generate_classic256, generate_extended16, parse_statement,
    parse_statement_list, Conjunction, ConstraintFormula, Family, Predicate, Quantifier,
    ReasoningTask, SpatialConstraint, SpatialRelation, Statement, Term,
};
pub use reasoner::{brute_force_validity, decide_validity, evaluate_corpus, Verdict};
