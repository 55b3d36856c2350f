//! Controlled grammar for statements:
//!
//! ```text
//! statement := QUANT SUBJ "are" PRED | "some" SUBJ "are" "not" PRED
//! QUANT     := "all" | "some" | "no"
//! SUBJ      := TERM
//! PRED      := TERM | TERM "_or_" TERM
//! TERM      := NAME | "c_" NAME
//! NAME      := [A-Za-z][A-Za-z0-9]*
//! ```
//!
//! Atomic terms are not marked in the text; callers pass their names.

use super::{Predicate, Quantifier, Statement, Term};
use crate::error::{Error, Result};

struct Token<'a> {
    text: &'a str,
    /// 1-based column of the first character.
    column: usize,
}

fn tokenize(text: &str, base_column: usize) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push(Token {
                    text: &text[s..i],
                    column: base_column + s,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push(Token {
            text: &text[s..],
            column: base_column + s,
        });
    }
    tokens
}

fn err(column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        column,
        message: message.into(),
    }
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

fn parse_term(text: &str, column: usize, atomic: &[String]) -> Result<Term> {
    let (complemented, name, name_col) = match text.strip_prefix("c_") {
        Some(rest) => (true, rest, column + 2),
        None => (false, text, column),
    };
    if !is_name(name) {
        return Err(err(
            name_col,
            format!("expected a term name, found `{name}`"),
        ));
    }
    let is_atomic = atomic.iter().any(|a| a == name);
    if is_atomic && complemented {
        return Err(err(
            column,
            format!("atomic term `{name}` cannot be complemented"),
        ));
    }
    Ok(Term {
        name: name.to_string(),
        complemented,
        atomic: is_atomic,
    })
}

fn parse_predicate(tok: &Token<'_>, atomic: &[String]) -> Result<Predicate> {
    match tok.text.split_once("_or_") {
        None => Ok(Predicate::Single(parse_term(tok.text, tok.column, atomic)?)),
        Some((first, second)) => {
            if second.contains("_or_") {
                return Err(err(
                    tok.column,
                    "at most two alternatives are allowed in a disjunctive predicate",
                ));
            }
            let a = parse_term(first, tok.column, atomic)?;
            let b = parse_term(second, tok.column + first.len() + 4, atomic)?;
            if a.same_base(&b) {
                return Err(err(tok.column, "disjunctive predicate repeats a term"));
            }
            Ok(Predicate::Either(a, b))
        }
    }
}

fn parse_at(text: &str, base_column: usize, atomic: &[String]) -> Result<Statement> {
    let tokens = tokenize(text, base_column);
    let end_column = base_column + text.len();
    let expect = |i: usize, what: &str| -> Result<&Token<'_>> {
        tokens.get(i).ok_or_else(|| {
            err(
                end_column,
                format!("unexpected end of statement, expected {what}"),
            )
        })
    };

    let q = expect(0, "a quantifier")?;
    let mut quantifier = match q.text {
        "all" => Quantifier::All,
        "some" => Quantifier::Some,
        "no" => Quantifier::No,
        other => {
            return Err(err(
                q.column,
                format!("expected `all`, `some` or `no`, found `{other}`"),
            ))
        }
    };
    let subj_tok = expect(1, "a subject term")?;
    let subject = parse_term(subj_tok.text, subj_tok.column, atomic)?;
    let are = expect(2, "`are`")?;
    if are.text != "are" {
        return Err(err(
            are.column,
            format!("expected `are`, found `{}`", are.text),
        ));
    }
    let mut next = 3;
    if quantifier == Quantifier::Some && tokens.get(3).is_some_and(|t| t.text == "not") {
        quantifier = Quantifier::SomeNot;
        next = 4;
    }
    let pred_tok = expect(next, "a predicate term")?;
    let predicate = parse_predicate(pred_tok, atomic)?;
    if let Some(extra) = tokens.get(next + 1) {
        return Err(err(
            extra.column,
            format!("unexpected trailing input `{}`", extra.text),
        ));
    }
    if matches!(predicate, Predicate::Either(..)) && quantifier != Quantifier::All {
        return Err(err(
            pred_tok.column,
            "a disjunctive predicate is only allowed with `all`",
        ));
    }
    let pred_terms: Vec<&Term> = match &predicate {
        Predicate::Single(t) => vec![t],
        Predicate::Either(a, b) => vec![a, b],
    };
    if pred_terms.iter().any(|t| t.same_base(&subject)) {
        return Err(err(
            pred_tok.column,
            "subject and predicate must be different terms",
        ));
    }
    Ok(Statement {
        quantifier,
        subject,
        predicate,
    })
}

/// Parses a single statement such as `all F are c_G`.
pub fn parse_statement(text: &str, atomic: &[String]) -> Result<Statement> {
    parse_at(text, 1, atomic)
}

/// Parses a comma-separated list, e.g. `all F are G, all a are F, all a are G`.
pub fn parse_statement_list(text: &str, atomic: &[String]) -> Result<Vec<Statement>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        out.push(parse_at(part, offset + 1, atomic)?);
        offset += part.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atoms() -> Vec<String> {
        vec!["a".to_string()]
    }

    #[test]
    fn complement_predicate() {
        let s = parse_statement("all F are c_G", &[]).unwrap();
        assert_eq!(
            s,
            Statement::new(
                Quantifier::All,
                Term::plain("F"),
                Term::plain("G").complement()
            )
        );
    }

    #[test]
    fn some_not_with_atomic_subject() {
        let s = parse_statement("some a are not c_F", &atoms()).unwrap();
        assert_eq!(s.quantifier, Quantifier::SomeNot);
        assert!(s.subject.atomic);
        assert_eq!(
            s.predicate,
            Predicate::Single(Term::plain("F").complement())
        );
    }

    #[test]
    fn disjunctive_predicate() {
        let s = parse_statement("all F are G_or_H", &[]).unwrap();
        assert_eq!(
            s,
            Statement::all_either(Term::plain("F"), Term::plain("G"), Term::plain("H"))
        );
        assert_eq!(s.to_string(), "all F are G_or_H");
    }

    #[test]
    fn rejects_misspelled_quantifier_with_column() {
        match parse_statement("alll F is G", &[]) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_statement("all F is G", &[]) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 7),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_inputs() {
        for bad in [
            "",
            "all F are",
            "some F are not",
            "no F are G_or_H",
            "all F are G extra",
            "all 1F are G",
            "all F are F",
            "all F are G_or_H_or_J",
            "all c_a are F",
        ] {
            assert!(
                parse_statement(bad, &atoms()).is_err(),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn list_columns_are_absolute() {
        let list = parse_statement_list("all F are G, all a are F, all a are G", &atoms()).unwrap();
        assert_eq!(list.len(), 3);
        match parse_statement_list("all F are G, al a are F", &atoms()) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 14),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
