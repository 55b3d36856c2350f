use crate::geometry::QualRelation;

/// Conceptual-neighbourhood graph over the five circle relations: a relation
/// can only change into an adjacent one under continuous deformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMap {
    edges: Vec<(QualRelation, QualRelation)>,
}

impl Default for TransitionMap {
    fn default() -> Self {
        use QualRelation::*;
        Self {
            edges: vec![(D, PO), (PO, P), (PO, Pbar), (P, EQ), (Pbar, EQ)],
        }
    }
}

fn slot(r: QualRelation) -> usize {
    QualRelation::ALL.iter().position(|x| *x == r).unwrap()
}

impl TransitionMap {
    pub fn edges(&self) -> &[(QualRelation, QualRelation)] {
        &self.edges
    }

    /// Neighbours in the fixed order P, Pbar, PO, D, EQ.
    pub fn neighbours(&self, r: QualRelation) -> Vec<QualRelation> {
        QualRelation::ALL
            .into_iter()
            .filter(|&x| {
                self.edges
                    .iter()
                    .any(|&(a, b)| (a == r && b == x) || (b == r && a == x))
            })
            .collect()
    }

    /// Hop count between two relations.
    pub fn distance(&self, from: QualRelation, to: QualRelation) -> usize {
        let mut dist = [usize::MAX; 5];
        dist[slot(from)] = 0;
        let mut frontier = vec![from];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for r in frontier {
                for n in self.neighbours(r) {
                    if dist[slot(n)] == usize::MAX {
                        dist[slot(n)] = dist[slot(r)] + 1;
                        next.push(n);
                    }
                }
            }
            frontier = next;
        }
        dist[slot(to)]
    }

    /// First hop from `current` along a shortest path to `target`; ties go
    /// to P before Pbar.
    pub fn next_subgoal(&self, current: QualRelation, target: QualRelation) -> QualRelation {
        if current == target {
            return target;
        }
        let remaining = self.distance(current, target);
        self.neighbours(current)
            .into_iter()
            .find(|&n| self.distance(n, target) + 1 == remaining)
            .unwrap_or(target)
    }

    /// Closest relation in `accepted`, ties broken by the P, Pbar, PO, D, EQ order.
    pub fn nearest(&self, current: QualRelation, accepted: &[QualRelation]) -> QualRelation {
        QualRelation::ALL
            .into_iter()
            .filter(|r| accepted.contains(r))
            .min_by_key(|&r| self.distance(current, r))
            .unwrap_or(current)
    }
}

pub fn next_subgoal(
    current: QualRelation,
    target: QualRelation,
    map: &TransitionMap,
) -> QualRelation {
    map.next_subgoal(current, target)
}
