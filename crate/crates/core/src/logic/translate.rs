use super::{
    Conjunction, ConstraintFormula, Predicate, Quantifier, SpatialConstraint, SpatialRelation,
    Statement, Term,
};
use crate::error::{Error, Result};

/// Translates a statement into spatial constraints.
///
/// `all → P`, `some → ¬D`, `no → D`, `some-not → ¬P`. An atomic subject is a
/// single individual, so `some a are X` collapses to `P(a, X)` and
/// `some a are not X` to `P(a, c_X)`.
pub fn translate_statement(s: &Statement) -> Result<ConstraintFormula> {
    let subj = s.subject.clone();
    match &s.predicate {
        Predicate::Either(g, h) => {
            if s.quantifier != Quantifier::All {
                return Err(Error::Unsupported(format!(
                    "disjunctive predicate under a non-universal quantifier: {s}"
                )));
            }
            Ok(ConstraintFormula {
                disjuncts: vec![
                    Conjunction(vec![SpatialConstraint::p(subj.clone(), g.clone())]),
                    Conjunction(vec![SpatialConstraint::p(subj, h.clone())]),
                ],
            })
        }
        Predicate::Single(pred) => {
            let pred = pred.clone();
            let k = if subj.atomic {
                match s.quantifier {
                    Quantifier::All | Quantifier::Some => SpatialConstraint::p(subj, pred),
                    Quantifier::No => SpatialConstraint::d(subj, pred),
                    Quantifier::SomeNot => SpatialConstraint::p(subj, pred.complement()),
                }
            } else if pred.atomic {
                // `some X are a` and `no X are a` speak about the individual a.
                match s.quantifier {
                    Quantifier::All => SpatialConstraint::p(subj, pred),
                    Quantifier::Some => SpatialConstraint::p(pred, subj),
                    Quantifier::No => SpatialConstraint::d(pred, subj),
                    Quantifier::SomeNot => SpatialConstraint::not_p(subj, pred),
                }
            } else {
                let rel = match s.quantifier {
                    Quantifier::All => SpatialRelation::P,
                    Quantifier::Some => SpatialRelation::NotD,
                    Quantifier::No => SpatialRelation::D,
                    Quantifier::SomeNot => SpatialRelation::NotP,
                };
                SpatialConstraint::new(rel, subj, pred)
            };
            Ok(ConstraintFormula::single(Conjunction(vec![k])))
        }
    }
}

/// Contradictory of a single-predicate statement.
///
/// Plain subjects swap along the square of opposition (`all ↔ some-not`,
/// `no ↔ some`). Membership of an individual is two-valued, so for an atomic
/// subject the negation is again a universal statement: `a ⊆ X` becomes
/// `a ⊆ c_X` and vice versa.
pub fn negate_conclusion(s: &Statement) -> Result<Statement> {
    let pred = match &s.predicate {
        Predicate::Single(p) => p.clone(),
        Predicate::Either(..) => {
            return Err(Error::Unsupported(format!(
                "cannot negate a disjunctive conclusion: {s}"
            )))
        }
    };
    if s.subject.atomic {
        let pred = match s.quantifier {
            Quantifier::All | Quantifier::Some => pred.complement(),
            Quantifier::No | Quantifier::SomeNot => pred,
        };
        return Ok(Statement::new(Quantifier::All, s.subject.clone(), pred));
    }
    let quantifier = match s.quantifier {
        Quantifier::All => Quantifier::SomeNot,
        Quantifier::SomeNot => Quantifier::All,
        Quantifier::No => Quantifier::Some,
        Quantifier::Some => Quantifier::No,
    };
    Ok(Statement::new(quantifier, s.subject.clone(), pred))
}

/// A constraint viewed as (possibly negated) disjointness of two literals:
/// `P(A, B) = Disj(A, c_B)` and `D(A, B) = Disj(A, B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SignedDisj {
    pub negated: bool,
    pub u: Term,
    pub v: Term,
}

impl SignedDisj {
    pub fn from_constraint(k: &SpatialConstraint) -> Self {
        let (negated, v) = match k.relation {
            SpatialRelation::P => (false, k.rhs.complement()),
            SpatialRelation::NotP => (true, k.rhs.complement()),
            SpatialRelation::D => (false, k.rhs.clone()),
            SpatialRelation::NotD => (true, k.rhs.clone()),
        };
        Self {
            negated,
            u: k.lhs.clone(),
            v,
        }
    }

    /// Re-expresses the constraint over the given literals for its two
    /// terms. Returns `None` when that needs the covering form
    /// `c_X ∪ c_Y = everything`, i.e. both complements of the chosen literals.
    pub fn render(&self, node_u: &Term, node_v: &Term) -> Option<SpatialConstraint> {
        let u_same = self.u.complemented == node_u.complemented;
        let v_same = self.v.complemented == node_v.complemented;
        let (rel, lhs, rhs) = match (u_same, v_same) {
            (true, true) => (SpatialRelation::D, node_u, node_v),
            (true, false) => (SpatialRelation::P, node_u, node_v),
            (false, true) => (SpatialRelation::P, node_v, node_u),
            (false, false) => return None,
        };
        let rel = if self.negated { rel.negate() } else { rel };
        Some(SpatialConstraint::new(rel, lhs.clone(), rhs.clone()))
    }

    /// The covering form `c_X ⊆ Y` (or its negation) with `X` the `u` term.
    pub fn render_covering(&self) -> SpatialConstraint {
        let rel = if self.negated {
            SpatialRelation::NotP
        } else {
            SpatialRelation::P
        };
        SpatialConstraint::new(rel, self.u.with_polarity(true), self.v.with_polarity(false))
    }
}

/// Rewrites one constraint so that complements only remain where the
/// constraint says two circles jointly cover the sphere:
///
/// - `P(X, c_Y) ⇔ D(X, Y)`, `D(X, c_Y) ⇔ P(X, Y)`
/// - `P(c_X, c_Y) ⇔ P(Y, X)`, `D(c_X, Y) ⇔ P(Y, X)`
/// - `D(c_X, c_Y) ⇔ P(c_X, Y)`
///
/// and the same for the negated relations. Each identity follows from
/// `d(-p, q) = πR - d(p, q)`.
pub fn normalize_constraint(k: &SpatialConstraint) -> SpatialConstraint {
    let disj = SignedDisj::from_constraint(k);
    let nu = disj.u.with_polarity(false);
    let nv = disj.v.with_polarity(false);
    disj.render(&nu, &nv)
        .unwrap_or_else(|| disj.render_covering())
}

pub fn normalize(c: &Conjunction) -> Conjunction {
    Conjunction(c.0.iter().map(normalize_constraint).collect())
}

/// `premises ∧ ¬conclusion` in DNF, disjuncts ordered premise by premise.
pub fn refutation_formula(
    premises: &[Statement],
    conclusion: &Statement,
) -> Result<ConstraintFormula> {
    let mut formula = ConstraintFormula::single(Conjunction::default());
    for p in premises {
        formula = formula.and(&translate_statement(p)?);
    }
    let negated = negate_conclusion(conclusion)?;
    Ok(formula.and(&translate_statement(&negated)?))
}
