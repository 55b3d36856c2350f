//! Ground-truth validity by enumerating Venn-region models.
//!
//! A model over `k` terms is the set of nonempty regions among the `2^k`
//! cells of the Venn diagram. Every term and its complement are nonempty
//! (circles have a radius strictly between 0 and πR), and an atomic term
//! occupies exactly one region.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::logic::{Predicate, Quantifier, ReasoningTask, Statement, Term};

/// Largest number of distinct terms the oracle accepts.
pub const MAX_ORACLE_TERMS: usize = 5;

/// Largest term count handled by plain exhaustive enumeration.
const EXHAUSTIVE_TERMS: usize = 4;

/// How `all F are G_or_H` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum DisjunctionSemantics {
    /// `F ⊆ G` or `F ⊆ H`, matching the circle translation.
    #[default]
    Alternative,
    /// `F ⊆ G ∪ H`.
    Classical,
}

/// A countermodel: term order and the nonempty region labels (bit `i` of a
/// label is membership in `terms[i]`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleModel {
    pub terms: Vec<String>,
    pub regions: Vec<u32>,
}

struct Universe {
    terms: Vec<Term>,
}

impl Universe {
    fn new(statements: &[&Statement]) -> Result<Self> {
        let mut terms: Vec<Term> = Vec::new();
        for s in statements {
            for t in s.terms() {
                if let Some(existing) = terms.iter_mut().find(|u| u.name == t.name) {
                    existing.atomic |= t.atomic;
                } else {
                    terms.push(t);
                }
            }
        }
        if terms.len() > MAX_ORACLE_TERMS {
            return Err(Error::TooManyTerms {
                terms: terms.len(),
                limit: MAX_ORACLE_TERMS,
            });
        }
        Ok(Self { terms })
    }

    fn region_count(&self) -> u32 {
        1 << self.terms.len()
    }

    fn index(&self, t: &Term) -> usize {
        self.terms.iter().position(|u| u.name == t.name).unwrap()
    }

    /// Bitmask over regions of the literal `t`.
    fn extent(&self, t: &Term) -> u64 {
        let i = self.index(t);
        let mut mask = 0u64;
        for r in 0..self.region_count() {
            let inside = (r >> i & 1 == 1) != t.complemented;
            if inside {
                mask |= 1 << r;
            }
        }
        mask
    }

    fn full(&self) -> u64 {
        if self.region_count() == 64 {
            u64::MAX
        } else {
            (1u64 << self.region_count()) - 1
        }
    }

    fn holds(&self, s: &Statement, model: u64, sem: DisjunctionSemantics) -> bool {
        let x = self.extent(&s.subject) & model;
        match &s.predicate {
            Predicate::Single(p) => {
                let y = self.extent(p);
                match s.quantifier {
                    Quantifier::All => x & !y == 0,
                    Quantifier::Some => x & y != 0,
                    Quantifier::No => x & y == 0,
                    Quantifier::SomeNot => x & !y != 0,
                }
            }
            Predicate::Either(g, h) => {
                let (g, h) = (self.extent(g), self.extent(h));
                match sem {
                    DisjunctionSemantics::Alternative => x & !g == 0 || x & !h == 0,
                    DisjunctionSemantics::Classical => x & !(g | h) == 0,
                }
            }
        }
    }

    /// Existential import plus singleton atomic terms.
    fn admissible(&self, model: u64) -> bool {
        self.terms.iter().all(|t| {
            let inside = self.extent(t) & model;
            let outside = !self.extent(t) & model & self.full();
            if t.atomic {
                inside.count_ones() == 1 && outside != 0
            } else {
                inside != 0 && outside != 0
            }
        })
    }

    fn is_countermodel(
        &self,
        premises: &[Statement],
        conclusion: &Statement,
        model: u64,
        sem: DisjunctionSemantics,
    ) -> bool {
        self.admissible(model)
            && premises.iter().all(|p| self.holds(p, model, sem))
            && !self.holds(conclusion, model, sem)
    }

    fn model(&self, mask: u64) -> OracleModel {
        OracleModel {
            terms: self.terms.iter().map(|t| t.name.clone()).collect(),
            regions: (0..self.region_count())
                .filter(|r| mask >> r & 1 == 1)
                .collect(),
        }
    }

    fn search_exhaustive(
        &self,
        premises: &[Statement],
        conclusion: &Statement,
        sem: DisjunctionSemantics,
    ) -> Option<u64> {
        (0..=self.full()).find(|&m| self.is_countermodel(premises, conclusion, m, sem))
    }

    /// Universal statements only ever remove regions, and existential ones
    /// are monotone in the region set, so once the disjunctive branches and
    /// the region of each individual are fixed, the largest admissible
    /// region set is a countermodel iff any is.
    fn search_maximal(
        &self,
        premises: &[Statement],
        conclusion: &Statement,
        sem: DisjunctionSemantics,
    ) -> Option<u64> {
        // Universal constraints as (subject extent, allowed extent) pairs,
        // alternatives per statement.
        let mut universal: Vec<Vec<(u64, u64)>> = Vec::new();
        let push_universal = |s: &Statement, out: &mut Vec<Vec<(u64, u64)>>| {
            let x = self.extent(&s.subject);
            match (&s.predicate, s.quantifier) {
                (Predicate::Single(p), Quantifier::All) => out.push(vec![(x, self.extent(p))]),
                (Predicate::Single(p), Quantifier::No) => out.push(vec![(x, !self.extent(p))]),
                (Predicate::Either(g, h), _) => match sem {
                    DisjunctionSemantics::Alternative => {
                        out.push(vec![(x, self.extent(g)), (x, self.extent(h))])
                    }
                    DisjunctionSemantics::Classical => {
                        out.push(vec![(x, self.extent(g) | self.extent(h))])
                    }
                },
                _ => {}
            }
        };
        for p in premises {
            push_universal(p, &mut universal);
        }
        // The negated conclusion is universal exactly when the conclusion is
        // existential.
        let negated_universal = match (&conclusion.predicate, conclusion.quantifier) {
            (Predicate::Single(p), Quantifier::Some) => {
                Some((self.extent(&conclusion.subject), !self.extent(p)))
            }
            (Predicate::Single(p), Quantifier::SomeNot) => {
                Some((self.extent(&conclusion.subject), self.extent(p)))
            }
            _ => None,
        };

        let atomics: Vec<usize> = (0..self.terms.len())
            .filter(|&i| self.terms[i].atomic)
            .collect();
        let branch_total: usize = universal.iter().map(|alts| alts.len()).product();
        let per_atomic = self.region_count() / 2;
        let atomic_total = (per_atomic as usize).pow(atomics.len() as u32);

        for branch in 0..branch_total {
            let mut allowed = self.full();
            let mut b = branch;
            for alts in &universal {
                let (x, y) = alts[b % alts.len()];
                b /= alts.len();
                allowed &= !(x & !y);
            }
            if let Some((x, y)) = negated_universal {
                allowed &= !(x & !y);
            }
            for choice in 0..atomic_total {
                let mut c = choice;
                let mut model = allowed;
                for &i in &atomics {
                    let pick = c % per_atomic as usize;
                    c /= per_atomic as usize;
                    // The pick-th region label with bit i set.
                    let low = pick as u32 & ((1 << i) - 1);
                    let high = (pick as u32 >> i) << (i + 1);
                    let region = high | 1 << i | low;
                    let with_bit = (0..self.region_count())
                        .filter(|r| r >> i & 1 == 1)
                        .fold(0u64, |m, r| m | 1 << r);
                    model &= !with_bit | 1 << region;
                }
                if self.is_countermodel(premises, conclusion, model, sem) {
                    return Some(model);
                }
            }
        }
        None
    }
}

/// Finds a model of the premises in which the conclusion fails.
pub fn find_countermodel(
    premises: &[Statement],
    conclusion: &Statement,
    sem: DisjunctionSemantics,
) -> Result<Option<OracleModel>> {
    let all: Vec<&Statement> = premises.iter().chain(std::iter::once(conclusion)).collect();
    let u = Universe::new(&all)?;
    let found = if u.terms.len() <= EXHAUSTIVE_TERMS {
        u.search_exhaustive(premises, conclusion, sem)
    } else {
        u.search_maximal(premises, conclusion, sem)
    };
    Ok(found.map(|m| u.model(m)))
}

/// Same as [`find_countermodel`] but always uses the maximal-model search.
pub fn find_countermodel_maximal(
    premises: &[Statement],
    conclusion: &Statement,
    sem: DisjunctionSemantics,
) -> Result<Option<OracleModel>> {
    let all: Vec<&Statement> = premises.iter().chain(std::iter::once(conclusion)).collect();
    let u = Universe::new(&all)?;
    Ok(u.search_maximal(premises, conclusion, sem)
        .map(|m| u.model(m)))
}

pub fn validity(
    premises: &[Statement],
    conclusion: &Statement,
    sem: DisjunctionSemantics,
) -> Result<bool> {
    Ok(find_countermodel(premises, conclusion, sem)?.is_none())
}

/// Oracle verdict for a task under the circle reading of disjunctions.
pub fn brute_force_validity(t: &ReasoningTask) -> Result<bool> {
    validity(
        &t.premises,
        &t.conclusion,
        DisjunctionSemantics::Alternative,
    )
}

/// Whether the statements have a common admissible model.
pub fn consistent(statements: &[Statement], sem: DisjunctionSemantics) -> Result<bool> {
    let Some(first) = statements.first() else {
        return Ok(true);
    };
    // `some X are not X` never holds, so a countermodel to it is just a model.
    let subject = first.subject.with_polarity(false);
    let never = Statement::new(Quantifier::SomeNot, subject.clone(), subject);
    Ok(find_countermodel(statements, &never, sem)?.is_some())
}
