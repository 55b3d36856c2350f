//! Syllogistic statements and their translation into spatial constraints.

pub(crate) mod circle_loop;
mod corpus;
mod parse;
pub(crate) mod translate;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use circle_loop::{find_circle_loop, CircleLoop};
pub use corpus::{generate_classic256, generate_extended16, Family, ReasoningTask};
pub use parse::{parse_statement, parse_statement_list};
pub use translate::{
    negate_conclusion, normalize, normalize_constraint, refutation_formula, translate_statement,
};

/// A (possibly complemented) term. An atomic term names an individual and is
/// drawn as a circle of minimal radius.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Term {
    pub name: String,
    pub complemented: bool,
    pub atomic: bool,
}

impl Term {
    pub fn plain(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            complemented: false,
            atomic: false,
        }
    }

    pub fn atomic(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            complemented: false,
            atomic: true,
        }
    }

    /// The complemented term `c_X`; complementing twice gives `X` back.
    pub fn complement(&self) -> Self {
        Self {
            complemented: !self.complemented,
            ..self.clone()
        }
    }

    /// Same term with the complement flag set to `complemented`.
    pub fn with_polarity(&self, complemented: bool) -> Self {
        Self {
            complemented,
            ..self.clone()
        }
    }

    pub fn same_base(&self, other: &Term) -> bool {
        self.name == other.name
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complemented {
            write!(f, "c_{}", self.name)
        } else {
            f.write_str(&self.name)
        }
    }
}

/// Spatial relation vocabulary of a constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpatialRelation {
    /// Part of.
    P,
    /// Not part of.
    NotP,
    /// Disconnected from.
    D,
    /// Not disconnected from.
    NotD,
}

impl SpatialRelation {
    pub fn negate(self) -> Self {
        match self {
            SpatialRelation::P => SpatialRelation::NotP,
            SpatialRelation::NotP => SpatialRelation::P,
            SpatialRelation::D => SpatialRelation::NotD,
            SpatialRelation::NotD => SpatialRelation::D,
        }
    }

    pub fn is_strict(self) -> bool {
        matches!(self, SpatialRelation::NotP | SpatialRelation::NotD)
    }

    /// Whether a pair of circles in qualitative relation `rel` satisfies this.
    pub fn holds(self, rel: crate::geometry::QualRelation) -> bool {
        use crate::geometry::QualRelation as Q;
        let part = matches!(rel, Q::P | Q::EQ);
        match self {
            SpatialRelation::P => part,
            SpatialRelation::NotP => !part,
            SpatialRelation::D => rel == Q::D,
            SpatialRelation::NotD => rel != Q::D,
        }
    }
}

impl fmt::Display for SpatialRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpatialRelation::P => "P",
            SpatialRelation::NotP => "NotP",
            SpatialRelation::D => "D",
            SpatialRelation::NotD => "NotD",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpatialConstraint {
    pub relation: SpatialRelation,
    pub lhs: Term,
    pub rhs: Term,
}

impl SpatialConstraint {
    pub fn new(relation: SpatialRelation, lhs: Term, rhs: Term) -> Self {
        debug_assert!(!lhs.same_base(&rhs), "self-constraint on {}", lhs.name);
        Self { relation, lhs, rhs }
    }

    pub fn p(lhs: Term, rhs: Term) -> Self {
        Self::new(SpatialRelation::P, lhs, rhs)
    }

    pub fn not_p(lhs: Term, rhs: Term) -> Self {
        Self::new(SpatialRelation::NotP, lhs, rhs)
    }

    pub fn d(lhs: Term, rhs: Term) -> Self {
        Self::new(SpatialRelation::D, lhs, rhs)
    }

    pub fn not_d(lhs: Term, rhs: Term) -> Self {
        Self::new(SpatialRelation::NotD, lhs, rhs)
    }
}

impl fmt::Display for SpatialConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}, {})", self.relation, self.lhs, self.rhs)
    }
}

/// A conjunction of spatial constraints.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Conjunction(pub Vec<SpatialConstraint>);

impl Conjunction {
    pub fn constraints(&self) -> &[SpatialConstraint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct term names, in order of first appearance.
    pub fn term_names(&self) -> Vec<String> {
        let mut names: Vec<String> = Vec::new();
        for k in &self.0 {
            for t in [&k.lhs, &k.rhs] {
                if !names.contains(&t.name) {
                    names.push(t.name.clone());
                }
            }
        }
        names
    }

    /// Distinct terms (complement flag cleared), in order of first appearance.
    pub fn base_terms(&self) -> Vec<Term> {
        let mut terms: Vec<Term> = Vec::new();
        for k in &self.0 {
            for t in [&k.lhs, &k.rhs] {
                if !terms.iter().any(|u| u.name == t.name) {
                    terms.push(t.with_polarity(false));
                }
            }
        }
        terms
    }
}

impl fmt::Display for Conjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∧ ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

/// Disjunctive normal form `f₁ ∨ … ∨ fₘ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintFormula {
    pub disjuncts: Vec<Conjunction>,
}

impl ConstraintFormula {
    pub fn single(conj: Conjunction) -> Self {
        Self {
            disjuncts: vec![conj],
        }
    }

    /// Distributes `self ∧ other` back into DNF; disjunct order is
    /// lexicographic with `self` outermost.
    pub fn and(&self, other: &ConstraintFormula) -> ConstraintFormula {
        let mut disjuncts = Vec::with_capacity(self.disjuncts.len() * other.disjuncts.len());
        for a in &self.disjuncts {
            for b in &other.disjuncts {
                let mut c = a.0.clone();
                c.extend(b.0.iter().cloned());
                disjuncts.push(Conjunction(c));
            }
        }
        ConstraintFormula { disjuncts }
    }
}

impl fmt::Display for ConstraintFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.disjuncts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∨ ")?;
            }
            write!(f, "[{d}]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quantifier {
    All,
    Some,
    No,
    SomeNot,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Predicate {
    Single(Term),
    /// `G_or_H`; only legal under `All`.
    Either(Term, Term),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Statement {
    pub quantifier: Quantifier,
    pub subject: Term,
    pub predicate: Predicate,
}

impl Statement {
    pub fn new(quantifier: Quantifier, subject: Term, predicate: Term) -> Self {
        Self {
            quantifier,
            subject,
            predicate: Predicate::Single(predicate),
        }
    }

    pub fn all_either(subject: Term, first: Term, second: Term) -> Self {
        Self {
            quantifier: Quantifier::All,
            subject,
            predicate: Predicate::Either(first, second),
        }
    }

    /// Every term mentioned, complement flags cleared.
    pub fn terms(&self) -> Vec<Term> {
        let mut out = vec![self.subject.with_polarity(false)];
        match &self.predicate {
            Predicate::Single(t) => out.push(t.with_polarity(false)),
            Predicate::Either(a, b) => {
                out.push(a.with_polarity(false));
                out.push(b.with_polarity(false));
            }
        }
        out
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pred = match &self.predicate {
            Predicate::Single(t) => t.to_string(),
            Predicate::Either(a, b) => format!("{a}_or_{b}"),
        };
        match self.quantifier {
            Quantifier::All => write!(f, "all {} are {pred}", self.subject),
            Quantifier::Some => write!(f, "some {} are {pred}", self.subject),
            Quantifier::No => write!(f, "no {} are {pred}", self.subject),
            Quantifier::SomeNot => write!(f, "some {} are not {pred}", self.subject),
        }
    }
}
