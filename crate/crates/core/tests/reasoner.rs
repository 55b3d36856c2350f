use sphnn_core::constructor::SolverConfig;
use sphnn_core::logic::{
    generate_classic256, generate_extended16, refutation_formula, translate_statement,
    ConstraintFormula, ReasoningTask,
};
use sphnn_core::reasoner::oracle::{find_countermodel, DisjunctionSemantics};
use sphnn_core::reasoner::{evaluate_corpus, CSV_HEADER};
use sphnn_core::{decide_satisfiable, decide_validity, parse_statement, Verdict};

fn task(id: &str) -> ReasoningTask {
    generate_extended16()
        .into_iter()
        .chain(generate_classic256())
        .find(|t| t.id == id)
        .unwrap()
}

/// Re-checks a counter-model with qualitative relations only.
fn assert_counter_model(t: &ReasoningTask, v: &Verdict) {
    let conf = v
        .counter_model
        .as_ref()
        .expect("invalid verdicts carry a model");
    let formula = refutation_formula(&t.premises, &t.conclusion).unwrap();
    let disjunct = &formula.disjuncts[v.disjunct.unwrap()];
    for k in disjunct.constraints() {
        assert!(conf.satisfies(k, 1e-6).unwrap(), "{}: {k} fails", t.id);
    }
}

#[test]
fn disjunctive_syllogism_is_valid() {
    let t = task("ext16-t13-A");
    assert_eq!(t.conclusion.to_string(), "all F are H");
    let v = decide_validity(&t, &SolverConfig::default(), 3).unwrap();
    assert!(v.valid);
    assert!(v.counter_model.is_none());
    assert_eq!(v.disjuncts_tried, 2);
}

#[test]
fn type_one_with_no_conclusion_is_refuted() {
    let t = task("ext16-t01-E");
    assert_eq!(t.conclusion.to_string(), "no a are G");
    let v = decide_validity(&t, &SolverConfig::default(), 2).unwrap();
    assert!(!v.valid);
    assert_counter_model(&t, &v);
    let witness = find_countermodel(
        &t.premises,
        &t.conclusion,
        DisjunctionSemantics::Alternative,
    )
    .unwrap();
    assert!(witness.is_some());
}

#[test]
fn barbara_is_valid() {
    let v = decide_validity(&task("classic-AA1-A"), &SolverConfig::default(), 2).unwrap();
    assert!(v.valid);
}

#[test]
fn grape_in_jar_b() {
    let atomic = vec!["g".to_string()];
    let premises = [
        parse_statement("all g are A_or_B", &atomic).unwrap(),
        parse_statement("all g are c_A", &atomic).unwrap(),
    ];
    let conclusion = parse_statement("all g are B", &atomic).unwrap();
    let f = refutation_formula(&premises, &conclusion).unwrap();
    assert_eq!(f.disjuncts.len(), 2);
    let cfg = SolverConfig::default();
    for n in [2, 3] {
        let v = sphnn_core::reasoner::decide_statements(
            &premises,
            &conclusion,
            &cfg,
            &sphnn_core::Sphere::unit(n).unwrap(),
        )
        .unwrap();
        assert!(v.valid);
    }
}

#[test]
fn extended_corpus_agrees_with_oracle_and_models_hold() {
    let cfg = SolverConfig::default();
    for t in generate_extended16() {
        let v = decide_validity(&t, &cfg, 2).unwrap();
        assert_eq!(v.valid, t.gold_valid, "{}", t.id);
        if !v.valid {
            assert_counter_model(&t, &v);
        }
    }
}

#[test]
fn valid_conclusions_are_consistent_with_their_premises() {
    let cfg = SolverConfig::default();
    for t in generate_extended16().into_iter().filter(|t| t.gold_valid) {
        let mut f = ConstraintFormula::single(Default::default());
        for s in t.premises.iter().chain(std::iter::once(&t.conclusion)) {
            f = f.and(&translate_statement(s).unwrap());
        }
        assert!(
            decide_satisfiable(&f, &cfg, 3).unwrap().is_sat(),
            "{}",
            t.id
        );
    }
}

fn without_wall_time(csv: &str) -> Vec<String> {
    let col = CSV_HEADER.iter().position(|c| *c == "wall_time_s").unwrap();
    csv.lines()
        .map(|l| {
            let mut cells: Vec<&str> = l.split(',').collect();
            cells.remove(col);
            cells.join(",")
        })
        .collect()
}

#[test]
fn corpus_report() {
    let tasks: Vec<ReasoningTask> = generate_extended16().into_iter().take(8).collect();
    let cfg = SolverConfig::default();
    let a = evaluate_corpus(&tasks, &cfg, &[3, 2], Some(2)).unwrap();
    assert_eq!(a.records.len(), 16);
    assert_eq!(a.summary.accuracy, 1.0);
    assert_eq!(a.records[0].task_id, "ext16-t01-A");
    assert_eq!((a.records[0].dim, a.records[1].dim), (2, 3));
    let csv = a.to_csv_string();
    assert_eq!(csv.lines().next().unwrap(), CSV_HEADER.join(","));
    assert_eq!(csv.lines().count(), 17);
    let b = evaluate_corpus(&tasks, &cfg, &[2, 3], None).unwrap();
    assert_eq!(
        without_wall_time(&csv),
        without_wall_time(&b.to_csv_string())
    );
    let summary: serde_json::Value = serde_json::from_str(&a.summary_json()).unwrap();
    for key in [
        "accuracy",
        "mean_time_valid_s",
        "mean_time_invalid_s",
        "under_5s_invalid",
        "under_120s_valid",
    ] {
        assert!(summary.get(key).is_some(), "{key}");
    }
}
