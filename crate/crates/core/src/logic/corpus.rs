//! The two task corpora: sixteen extended reasoning types with four
//! conclusions each, and the 256 classic syllogisms.

use serde::{Deserialize, Serialize};

use super::{parse_statement, parse_statement_list, Quantifier, Statement, Term};
use crate::error::{Error, Result};
use crate::reasoner::oracle::brute_force_validity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Extended16,
    Classic256,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Extended16 => "extended16",
            Family::Classic256 => "classic256",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReasoningTask {
    pub id: String,
    pub premises: Vec<Statement>,
    pub conclusion: Statement,
    pub gold_valid: bool,
    pub family: Family,
}

/// One line of a corpus file.
#[derive(Serialize, Deserialize)]
struct TaskRecord {
    id: String,
    premises: Vec<String>,
    conclusion: String,
    gold_valid: bool,
    family: Family,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    atomic: Vec<String>,
}

impl ReasoningTask {
    /// Names of atomic terms, sorted.
    pub fn atomic_terms(&self) -> Vec<String> {
        let mut names: Vec<String> = self
            .premises
            .iter()
            .chain(std::iter::once(&self.conclusion))
            .flat_map(|s| s.terms())
            .filter(|t| t.atomic)
            .map(|t| t.name)
            .collect();
        names.sort();
        names.dedup();
        names
    }

    /// The task as one line of `{id, premises, conclusion, gold_valid, family}`
    /// JSON, followed by `atomic` when the task names individuals.
    pub fn to_json_line(&self) -> String {
        let record = TaskRecord {
            id: self.id.clone(),
            premises: self.premises.iter().map(|s| s.to_string()).collect(),
            conclusion: self.conclusion.to_string(),
            gold_valid: self.gold_valid,
            family: self.family,
            atomic: self.atomic_terms(),
        };
        serde_json::to_string(&record).expect("task record serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        let record: TaskRecord =
            serde_json::from_str(line).map_err(|e| Error::Format(e.to_string()))?;
        let premises = record
            .premises
            .iter()
            .map(|s| parse_statement(s, &record.atomic))
            .collect::<Result<Vec<_>>>()?;
        if premises.is_empty() {
            return Err(Error::Format(format!("task {} has no premises", record.id)));
        }
        Ok(Self {
            id: record.id,
            premises,
            conclusion: parse_statement(&record.conclusion, &record.atomic)?,
            gold_valid: record.gold_valid,
            family: record.family,
        })
    }
}

/// Premises of each extended type, with the subject and predicate shared by
/// its four candidate conclusions.
const EXTENDED_TYPES: [(&str, &str, &str); 16] = [
    ("all F are G, all a are F", "a", "G"),
    ("all F are c_G, all a are F", "a", "c_G"),
    ("all F are c_G", "G", "c_F"),
    ("all F are G", "c_G", "c_F"),
    ("all F are G, all G are H", "F", "H"),
    ("all F are c_G, all c_G are H", "F", "H"),
    ("all F are G, all c_H are c_G", "F", "H"),
    ("all F are c_G, all c_H are G", "F", "H"),
    ("all F are G, all a are H, all a are c_G", "a", "c_F"),
    ("all c_F are G, all a are H, all a are c_G", "a", "F"),
    ("all F are G, all a are c_G", "a", "c_F"),
    ("all F are c_G, all a are G", "a", "c_F"),
    ("all F are G_or_H, all F are c_G", "F", "H"),
    ("all F are G_or_H, all G are c_F", "F", "H"),
    ("all F are G_or_H, all G are J, all H are J", "F", "J"),
    ("all F are G_or_H, all J are c_G, all J are c_H", "F", "c_J"),
];

/// Conclusion moods in corpus order, with their id suffix.
const CONCLUSION_MOODS: [(Quantifier, char); 4] = [
    (Quantifier::All, 'A'),
    (Quantifier::No, 'E'),
    (Quantifier::Some, 'I'),
    (Quantifier::SomeNot, 'O'),
];

fn mood_letter(q: Quantifier) -> char {
    CONCLUSION_MOODS
        .iter()
        .find(|(m, _)| *m == q)
        .map(|(_, c)| *c)
        .unwrap()
}

fn labelled(
    id: String,
    premises: Vec<Statement>,
    conclusion: Statement,
    family: Family,
) -> ReasoningTask {
    let mut task = ReasoningTask {
        id,
        premises,
        conclusion,
        gold_valid: false,
        family,
    };
    task.gold_valid = brute_force_validity(&task).expect("corpus tasks stay within oracle limits");
    task
}

/// The 16 extended types × 4 conclusions, labelled by the oracle.
pub fn generate_extended16() -> Vec<ReasoningTask> {
    let atomic = vec!["a".to_string()];
    let mut out = Vec::with_capacity(64);
    for (i, (premises, subject, predicate)) in EXTENDED_TYPES.iter().enumerate() {
        let premises = parse_statement_list(premises, &atomic).expect("built-in premises parse");
        for (q, letter) in CONCLUSION_MOODS {
            let word = match q {
                Quantifier::All => "all",
                Quantifier::No => "no",
                Quantifier::Some => "some",
                Quantifier::SomeNot => "some",
            };
            let not = if q == Quantifier::SomeNot { " not" } else { "" };
            let text = format!("{word} {subject} are{not} {predicate}");
            let conclusion = parse_statement(&text, &atomic).expect("built-in conclusion parses");
            out.push(labelled(
                format!("ext16-t{:02}-{letter}", i + 1),
                premises.clone(),
                conclusion,
                Family::Extended16,
            ));
        }
    }
    out
}

/// All 4 × 4 × 4 × 4 classic syllogisms over subject `F`, middle `G` and
/// predicate `H`. Ids read `classic-<mood1><mood2><figure>-<conclusion mood>`.
pub fn generate_classic256() -> Vec<ReasoningTask> {
    let (s, m, p) = (Term::plain("F"), Term::plain("G"), Term::plain("H"));
    let figures = [
        ((&s, &m), (&m, &p)),
        ((&s, &m), (&p, &m)),
        ((&m, &s), (&m, &p)),
        ((&m, &s), (&p, &m)),
    ];
    let moods = CONCLUSION_MOODS.map(|(q, _)| q);
    let mut out = Vec::with_capacity(256);
    for q1 in moods {
        for q2 in moods {
            for (fig, ((a1, b1), (a2, b2))) in figures.iter().enumerate() {
                for qc in moods {
                    let premises = vec![
                        Statement::new(q1, (*a1).clone(), (*b1).clone()),
                        Statement::new(q2, (*a2).clone(), (*b2).clone()),
                    ];
                    let conclusion = Statement::new(qc, s.clone(), p.clone());
                    let id = format!(
                        "classic-{}{}{}-{}",
                        mood_letter(q1),
                        mood_letter(q2),
                        fig + 1,
                        mood_letter(qc)
                    );
                    out.push(labelled(id, premises, conclusion, Family::Classic256));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extended_counts() {
        let tasks = generate_extended16();
        assert_eq!(tasks.len(), 64);
        assert_eq!(tasks.iter().filter(|t| t.gold_valid).count(), 32);
    }

    #[test]
    fn classic_counts() {
        let tasks = generate_classic256();
        assert_eq!(tasks.len(), 256);
        assert_eq!(tasks.iter().filter(|t| t.gold_valid).count(), 24);
        let barbara = tasks.iter().find(|t| t.id == "classic-AA1-A").unwrap();
        assert_eq!(barbara.premises[0].to_string(), "all F are G");
        assert_eq!(barbara.premises[1].to_string(), "all G are H");
        assert_eq!(barbara.conclusion.to_string(), "all F are H");
        assert!(barbara.gold_valid);
    }

    #[test]
    fn type_one_some_not_is_invalid() {
        let tasks = generate_extended16();
        let t = tasks.iter().find(|t| t.id == "ext16-t01-O").unwrap();
        assert_eq!(t.conclusion.to_string(), "some a are not G");
        assert!(!t.gold_valid);
    }

    #[test]
    fn json_line_round_trip() {
        for t in generate_extended16()
            .iter()
            .chain(generate_classic256().iter())
        {
            let line = t.to_json_line();
            assert_eq!(&ReasoningTask::from_json_line(&line).unwrap(), t);
        }
        let line = generate_classic256()[0].to_json_line();
        assert!(line.starts_with(r#"{"id":"classic-AA1-A","premises":["all F are G","all G are H"],"conclusion":"all F are H","gold_valid":true,"family":"classic256"}"#));
    }

    #[test]
    fn malformed_json_line() {
        assert!(matches!(
            ReasoningTask::from_json_line("{"),
            Err(Error::Format(_))
        ));
        let bad = r#"{"id":"x","premises":["alll F are G"],"conclusion":"all F are G","gold_valid":true,"family":"classic256"}"#;
        assert!(matches!(
            ReasoningTask::from_json_line(bad),
            Err(Error::Parse { .. })
        ));
    }
}
