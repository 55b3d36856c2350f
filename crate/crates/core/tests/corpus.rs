use sphnn_core::brute_force_validity;
use sphnn_core::logic::{
    generate_classic256, generate_extended16, negate_conclusion, normalize, parse_statement,
    parse_statement_list, translate_statement, Predicate, ReasoningTask, SpatialRelation,
    Statement, Term,
};
use sphnn_core::reasoner::oracle::{validity, DisjunctionSemantics};

const APPENDIX: &str = include_str!("data/extended16_configurations.txt");

fn line_of(t: &ReasoningTask) -> String {
    t.premises
        .iter()
        .chain(std::iter::once(&t.conclusion))
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

#[test]
fn extended_corpus_matches_appendix_lines() {
    let generated: Vec<String> = generate_extended16().iter().map(line_of).collect();
    let expected: Vec<&str> = APPENDIX.lines().collect();
    assert_eq!(generated.len(), expected.len());
    for (g, e) in generated.iter().zip(&expected) {
        assert_eq!(g, e);
    }
}

#[test]
fn appendix_lines_round_trip_through_the_parser() {
    let atomic = vec!["a".to_string()];
    for line in APPENDIX.lines() {
        let parsed = parse_statement_list(line, &atomic).unwrap();
        let printed = parsed
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        assert_eq!(printed, line);
        assert_eq!(parse_statement_list(&printed, &atomic).unwrap(), parsed);
    }
}

#[test]
fn label_counts() {
    let ext = generate_extended16();
    assert_eq!(ext.len(), 64);
    assert_eq!(ext.iter().filter(|t| t.gold_valid).count(), 32);
    let classic = generate_classic256();
    assert_eq!(classic.len(), 256);
    assert_eq!(classic.iter().filter(|t| t.gold_valid).count(), 24);
    let barbara = classic.iter().find(|t| t.id == "classic-AA1-A").unwrap();
    assert!(barbara.gold_valid);
    assert_eq!(line_of(barbara), "all F are G, all G are H, all F are H");
}

#[test]
fn type_one_some_not_is_invalid() {
    let t = generate_extended16()
        .into_iter()
        .find(|t| t.id == "ext16-t01-O")
        .unwrap();
    assert_eq!(line_of(&t), "all F are G, all a are F, some a are not G");
    assert!(!t.gold_valid);
}

#[test]
fn translation_is_total_and_negation_is_semantic_involution() {
    for t in generate_extended16().iter().chain(&generate_classic256()) {
        for s in t.premises.iter().chain(std::iter::once(&t.conclusion)) {
            let f = translate_statement(s).unwrap();
            assert!(!f.disjuncts.is_empty());
            for k in f.disjuncts.iter().flat_map(|c| c.constraints()) {
                assert!(matches!(
                    k.relation,
                    SpatialRelation::P
                        | SpatialRelation::NotP
                        | SpatialRelation::D
                        | SpatialRelation::NotD
                ));
            }
        }
        let twice = negate_conclusion(&negate_conclusion(&t.conclusion).unwrap()).unwrap();
        let normal = |s: &Statement| -> Vec<_> {
            translate_statement(s)
                .unwrap()
                .disjuncts
                .iter()
                .map(normalize)
                .collect()
        };
        assert_eq!(normal(&twice), normal(&t.conclusion), "{}", t.id);
    }
}

fn rename(t: &Term, from: &[&str], to: &[&str]) -> Term {
    let mut out = t.clone();
    if let Some(i) = from.iter().position(|n| *n == t.name) {
        out.name = to[i].to_string();
    }
    out
}

fn rename_statement(s: &Statement, from: &[&str], to: &[&str]) -> Statement {
    let predicate = match &s.predicate {
        Predicate::Single(p) => Predicate::Single(rename(p, from, to)),
        Predicate::Either(a, b) => Predicate::Either(rename(a, from, to), rename(b, from, to)),
    };
    Statement {
        quantifier: s.quantifier,
        subject: rename(&s.subject, from, to),
        predicate,
    }
}

#[test]
fn oracle_labels_ignore_term_names() {
    let from = ["F", "G", "H", "J"];
    let to = ["J", "H", "F", "G"];
    for t in generate_extended16().iter().chain(&generate_classic256()) {
        let premises: Vec<Statement> = t
            .premises
            .iter()
            .map(|s| rename_statement(s, &from, &to))
            .collect();
        let conclusion = rename_statement(&t.conclusion, &from, &to);
        assert_eq!(
            validity(&premises, &conclusion, DisjunctionSemantics::Alternative).unwrap(),
            t.gold_valid,
            "{}",
            t.id
        );
    }
}

#[test]
fn json_lines_round_trip() {
    for t in generate_extended16().iter().chain(&generate_classic256()) {
        let line = t.to_json_line();
        let back = ReasoningTask::from_json_line(&line).unwrap();
        assert_eq!(&back, t);
        assert_eq!(brute_force_validity(&back).unwrap(), t.gold_valid);
    }
    let first = generate_extended16()[0].to_json_line();
    assert!(first.starts_with(r#"{"id":"ext16-t01-A","premises":["all F are G","all a are F"],"conclusion":"all a are G","gold_valid":true,"family":"extended16""#));
}

#[test]
fn appendix_grammar_examples() {
    let atomic = vec!["a".to_string()];
    let s = parse_statement("all F are c_G", &atomic).unwrap();
    assert_eq!(
        s,
        Statement::new(
            sphnn_core::Quantifier::All,
            Term::plain("F"),
            Term::plain("G").complement()
        )
    );
    let s = parse_statement("some a are not c_F", &atomic).unwrap();
    assert_eq!(
        s,
        Statement::new(
            sphnn_core::Quantifier::SomeNot,
            Term::atomic("a"),
            Term::plain("F").complement()
        )
    );
    let s = parse_statement("all F are G_or_H", &atomic).unwrap();
    assert_eq!(
        s,
        Statement::all_either(Term::plain("F"), Term::plain("G"), Term::plain("H"))
    );
}
