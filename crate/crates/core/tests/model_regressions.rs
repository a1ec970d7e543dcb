//! Counter-models found by the search are stored under `fixtures/models`.
//! Set `SEQLOGIC_BLESS=1` to rewrite them after an intentional change to the
//! search order.

use std::path::PathBuf;

use seqlogic::congruences::{axiom_set, check_equation, CongruenceId, Equation, Family};
use seqlogic::modelfinder::{
    find_model, independence_report, parse_counter_example, recheck, render_counter_example,
    SearchConfig, SearchOutcome,
};
use seqlogic::normalforms::Valuedness;

fn model_path(set: &str, axiom: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures/models")
        .join(set)
        .join(format!("{axiom}.model"))
}

fn check_against_fixture(set: &str, axiom: &str, rendered: &str) {
    let path = model_path(set, axiom);
    if std::env::var_os("SEQLOGIC_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, rendered).unwrap();
        return;
    }
    let stored = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(rendered, stored, "{set}/{axiom} changed");
}

#[test]
fn independence_models_are_stable() {
    for set in ["EqCL_U", "EqCL", "CL_i"] {
        let report = independence_report(set, &SearchConfig::default()).unwrap();
        assert!(report.independent(), "{set}");
        let axioms = axiom_set(set).unwrap();
        for (e, outcome) in &report.entries {
            let ce = outcome.counter_example().unwrap();
            recheck(&axioms.without(&e.name).equations, e, ce).unwrap();
            check_against_fixture(set, &e.name, &render_counter_example(ce));
        }
    }
}

#[test]
fn stored_models_recheck_on_their_own() {
    for set in ["EqCL_U", "EqCL", "CL_i"] {
        let axioms = axiom_set(set).unwrap();
        for e in &axioms.equations {
            let text = std::fs::read_to_string(model_path(set, &e.name)).unwrap();
            let ce = parse_counter_example(&text).unwrap();
            recheck(&axioms.without(&e.name).equations, e, &ce).unwrap();
        }
    }
}

#[test]
fn absorption_fails_for_full_connectives() {
    let sb2 = axiom_set("SB2").unwrap();
    let goal = Equation::parse("absorption", "?x &* (?x |* ?y) = ?x").unwrap();
    let out = find_model(&sb2.equations, &goal, &SearchConfig::default()).unwrap();
    let ce = out.counter_example().expect("counter-model");
    recheck(&sb2.equations, &goal, ce).unwrap();
    check_against_fixture("SB2", "absorption", &render_counter_example(ce));
}

#[test]
fn refutations_agree_with_conditional_validity() {
    let cl3 = CongruenceId::new(Family::Cl, Valuedness::Three);
    let mscl = axiom_set("EqMSCL_U").unwrap();
    for e in &mscl.equations {
        assert!(check_equation(e, cl3).unwrap());
    }
    for goal in ["?x && ?y = ?y && ?x", "?x && F = F", "?x && !?x = ?y && !?y"] {
        let goal = Equation::parse("g", goal).unwrap();
        let out = find_model(&mscl.equations, &goal, &SearchConfig::default()).unwrap();
        if let SearchOutcome::CounterModel(ce) = out {
            recheck(&mscl.equations, &goal, &ce).unwrap();
            assert!(!check_equation(&goal, cl3).unwrap(), "{goal}");
        }
    }
}

#[test]
fn search_is_deterministic() {
    let set = axiom_set("EqCL").unwrap();
    let goal = set.get("Com").unwrap();
    let rest = set.without("Com");
    let a = find_model(&rest.equations, goal, &SearchConfig::default()).unwrap();
    let b = find_model(&rest.equations, goal, &SearchConfig::default()).unwrap();
    assert_eq!(a, b);
}
