//! Extraction of a chain of circles from a conjunction, in which each term
//! shows up either as its circle or as its complement circle but not both.

use super::translate::{normalize, SignedDisj};
use super::{Conjunction, SpatialConstraint, Term};

/// Largest term count for which polarities are searched exhaustively.
const MAX_POLARITY_SEARCH: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleLoop {
    /// Constraints ordered along the chain.
    pub constraints: Vec<SpatialConstraint>,
    /// Whether the constraint graph closes into a cycle.
    pub closed: bool,
    /// Set when no single polarity per term exists; complemented occurrences
    /// are then evaluated through the complement operation.
    pub mixed_polarity: bool,
}

impl CircleLoop {
    pub fn conjunction(&self) -> Conjunction {
        Conjunction(self.constraints.clone())
    }
}

/// Literal index: `2·term + complemented`.
fn lit(terms: &[Term], t: &Term) -> usize {
    let i = terms
        .iter()
        .position(|u| u.name == t.name)
        .expect("term collected from the same conjunction");
    2 * i + usize::from(t.complemented)
}

/// Transitive closure of the inclusion graph over literals. `reach[a][b]`
/// means the constraints force literal `a` to be a subset of literal `b`.
pub(crate) fn inclusion_closure(terms: &[Term], disjs: &[SignedDisj]) -> Vec<Vec<bool>> {
    let m = 2 * terms.len();
    let mut reach = vec![vec![false; m]; m];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for d in disjs.iter().filter(|d| !d.negated) {
        // Disj(u, v): u ⊆ c_v and v ⊆ c_u.
        let (u, v) = (lit(terms, &d.u), lit(terms, &d.v));
        reach[u][v ^ 1] = true;
        reach[v][u ^ 1] = true;
    }
    for k in 0..m {
        let via = reach[k].clone();
        for row in reach.iter_mut().filter(|row| row[k]) {
            for (x, &y) in row.iter_mut().zip(&via) {
                *x |= y;
            }
        }
    }
    reach
}

fn choose_polarity(terms: &[Term], disjs: &[SignedDisj], preferred: u32) -> Option<Vec<Term>> {
    let k = terms.len();
    if k > MAX_POLARITY_SEARCH {
        return None;
    }
    let mut masks: Vec<u32> = (0..1u32 << k).collect();
    masks.sort_by_key(|&m| ((m ^ preferred).count_ones(), m ^ preferred));
    masks.into_iter().find_map(|mask| {
        let nodes: Vec<Term> = terms
            .iter()
            .enumerate()
            .map(|(i, t)| t.with_polarity(mask >> i & 1 == 1))
            .collect();
        let ok = disjs.iter().all(|d| {
            let nu = &nodes[lit(terms, &d.u) / 2];
            let nv = &nodes[lit(terms, &d.v) / 2];
            d.render(nu, nv).is_some()
        });
        ok.then_some(nodes)
    })
}

fn order_chain(mut remaining: Vec<SpatialConstraint>) -> (Vec<SpatialConstraint>, bool) {
    let mut ordered = Vec::with_capacity(remaining.len());
    let mut visited: Vec<String> = Vec::new();
    let mut tail: Option<String> = None;
    let mut components = 0usize;
    while !remaining.is_empty() {
        let touches = |k: &SpatialConstraint, name: &str| k.lhs.name == name || k.rhs.name == name;
        let idx = tail
            .as_deref()
            .and_then(|t| remaining.iter().position(|k| touches(k, t)))
            .or_else(|| {
                remaining
                    .iter()
                    .position(|k| visited.iter().any(|v| touches(k, v)))
            });
        let idx = match idx {
            Some(i) => i,
            None => {
                components += 1;
                0
            }
        };
        let k = remaining.remove(idx);
        let next = match tail.as_deref() {
            Some(t) if k.lhs.name == t => k.rhs.name.clone(),
            Some(t) if k.rhs.name == t => k.lhs.name.clone(),
            _ if !visited.contains(&k.rhs.name) => k.rhs.name.clone(),
            _ => k.lhs.name.clone(),
        };
        for n in [&k.lhs.name, &k.rhs.name] {
            if !visited.contains(n) {
                visited.push(n.clone());
            }
        }
        tail = Some(next);
        ordered.push(k);
    }
    // A graph has a cycle iff it has more edges than a spanning forest.
    let closed = ordered.len() + components > visited.len();
    (ordered, closed)
}

/// Orders the conjunction into a chain of circles.
///
/// Each term gets one polarity (its circle or its complement) so that every
/// constraint can be written over the chosen circles; polarities closest to
/// how the terms appear in the input win. Returns `None` when the
/// constraints force some term to coincide with its own complement.
pub fn find_circle_loop(c: &Conjunction) -> Option<CircleLoop> {
    let terms = c.base_terms();
    let disjs: Vec<SignedDisj> = c.0.iter().map(SignedDisj::from_constraint).collect();

    let reach = inclusion_closure(&terms, &disjs);
    if (0..terms.len()).any(|i| reach[2 * i][2 * i + 1] && reach[2 * i + 1][2 * i]) {
        return None;
    }

    let mut preferred = 0u32;
    for (i, t) in terms.iter().enumerate().take(MAX_POLARITY_SEARCH) {
        let (mut plain, mut comp) = (0, 0);
        for k in &c.0 {
            for occ in [&k.lhs, &k.rhs] {
                if occ.name == t.name {
                    if occ.complemented {
                        comp += 1;
                    } else {
                        plain += 1;
                    }
                }
            }
        }
        if comp > plain {
            preferred |= 1 << i;
        }
    }

    let (rendered, mixed_polarity) = match choose_polarity(&terms, &disjs, preferred) {
        Some(nodes) => {
            let rendered = disjs
                .iter()
                .map(|d| {
                    let nu = &nodes[lit(&terms, &d.u) / 2];
                    let nv = &nodes[lit(&terms, &d.v) / 2];
                    d.render(nu, nv).expect("polarity checked")
                })
                .collect();
            (rendered, false)
        }
        None => (normalize(c).0, true),
    };
    let (constraints, closed) = order_chain(rendered);
    Some(CircleLoop {
        constraints,
        closed,
        mixed_polarity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: &str) -> Term {
        Term::plain(n)
    }

    #[test]
    fn loop_through_complement_circle() {
        let c = Conjunction(vec![
            SpatialConstraint::p(t("A"), t("B").complement()),
            SpatialConstraint::p(t("B").complement(), t("C")),
            SpatialConstraint::not_d(t("A"), t("C")),
        ]);
        let l = find_circle_loop(&c).unwrap();
        assert_eq!(l.constraints, c.0);
        assert!(l.closed);
        assert!(!l.mixed_polarity);
    }

    #[test]
    fn single_edge_chain() {
        let c = Conjunction(vec![SpatialConstraint::p(t("F"), t("G"))]);
        let l = find_circle_loop(&c).unwrap();
        assert_eq!(l.constraints, c.0);
        assert!(!l.closed);
    }

    #[test]
    fn term_equal_to_its_complement_gives_empty() {
        // B ⊆ A ⊆ c_B ⊆ C ⊆ B forces B = c_B.
        let c = Conjunction(vec![
            SpatialConstraint::p(t("B"), t("A")),
            SpatialConstraint::p(t("A"), t("B").complement()),
            SpatialConstraint::p(t("B").complement(), t("C")),
            SpatialConstraint::p(t("C"), t("B")),
        ]);
        assert_eq!(find_circle_loop(&c), None);
    }

    #[test]
    fn chain_follows_shared_terms() {
        let c = Conjunction(vec![
            SpatialConstraint::p(t("F"), t("G")),
            SpatialConstraint::d(t("H"), t("J")),
            SpatialConstraint::p(t("G"), t("H")),
        ]);
        let l = find_circle_loop(&c).unwrap();
        let names: Vec<String> = l.constraints.iter().map(|k| k.to_string()).collect();
        assert_eq!(names, ["P(F, G)", "P(G, H)", "D(H, J)"]);
        assert!(!l.closed);
    }

    #[test]
    fn disconnected_components_are_concatenated() {
        let c = Conjunction(vec![
            SpatialConstraint::p(t("F"), t("G")),
            SpatialConstraint::d(t("H"), t("J")),
        ]);
        let l = find_circle_loop(&c).unwrap();
        assert_eq!(l.constraints.len(), 2);
        assert!(!l.closed);
    }

    #[test]
    fn covering_keeps_complement_polarity() {
        // c_F ⊆ G cannot be written over F and G both uncomplemented.
        let c = Conjunction(vec![
            SpatialConstraint::p(t("F").complement(), t("G")),
            SpatialConstraint::p(Term::atomic("a"), t("F")),
        ]);
        let l = find_circle_loop(&c).unwrap();
        assert!(!l.mixed_polarity);
        assert!(l.constraints.iter().all(|k| {
            let names = [&k.lhs, &k.rhs];
            names.iter().all(|x| x.name != "F" || x.complemented)
        }));
    }

    #[test]
    fn overconstrained_pair_falls_back_to_mixed_polarity() {
        // X and Y properly overlap and do not cover the sphere: no single
        // polarity pair expresses all four facts.
        let c = Conjunction(vec![
            SpatialConstraint::not_p(t("X"), t("Y")),
            SpatialConstraint::not_p(t("Y"), t("X")),
            SpatialConstraint::not_d(t("X"), t("Y")),
            SpatialConstraint::not_p(t("X").complement(), t("Y")),
        ]);
        let l = find_circle_loop(&c).unwrap();
        assert!(l.mixed_polarity);
        assert_eq!(l.constraints.len(), 4);
    }
}
