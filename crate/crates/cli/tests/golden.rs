//! Golden-output tests for the corpus scenarios.

use reinterp_cli::scenario::{run_scenario, Scenario};
use std::path::PathBuf;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

#[test]
fn example1_scenario_output_is_bit_exact() {
    let scenario = Scenario::load(&corpus("example1.scn")).unwrap();
    let report = run_scenario(&scenario).unwrap();
    assert!(report.ok());
    assert_eq!(
        report.rendered,
        "ontology example1 {\n\
         \x20 public: Article, bo1, pr1, pr2;\n\
         \x20 Article [= Article'\n\
         \x20 Article'(pr1)\n\
         \x20 Article'(pr2)\n\
         \x20 !Article(pr1)\n\
         \x20 !Article'(bo1)\n\
         }\n"
    );
}

#[test]
fn example2_scenario_emits_the_msc_bridging_axiom() {
    let scenario = Scenario::load(&corpus("example2.scn")).unwrap();
    let report = run_scenario(&scenario).unwrap();
    assert!(report.ok());
    assert!(report
        .rendered
        .contains("Article' [= (Article | (Article' & exists publishedIn. Proceed))"));
    assert!(report.rendered.contains("Article [= Article'"));
}

#[test]
fn counterexample_scenarios_report_expected_violations() {
    for (name, witness) in [
        ("rdp1.scn", "B(a)"),
        ("rdp2.scn", "A(b)"),
        ("rdp3.scn", "!A(b)"),
        ("rdp4.scn", "clause { A(a) | B(b) }"),
    ] {
        let scenario = Scenario::load(&corpus(name)).unwrap();
        let report = run_scenario(&scenario).unwrap();
        assert!(report.ok(), "{name} missed an expectation");
        let check = report
            .checks
            .iter()
            .find(|c| c.spec.id.starts_with("rdp"))
            .unwrap_or_else(|| panic!("{name} has no iteration check"));
        assert_eq!(
            check.verdict.witness.as_ref().map(|w| w.to_string()),
            Some(witness.to_string()),
            "{name} witness differs"
        );
    }
}

#[test]
fn scenario_json_report_has_the_pinned_shape() {
    let scenario = Scenario::load(&corpus("rdp1.scn")).unwrap();
    let report = run_scenario(&scenario).unwrap();
    let json = report.to_json();
    assert_eq!(json["schema_version"], 1);
    assert!(json["final_ontology"].as_str().unwrap().starts_with("ontology"));
    let checks = json["checks"].as_array().unwrap();
    let rdp1 = checks.iter().find(|c| c["id"] == "rdp1").unwrap();
    assert_eq!(rdp1["status"], "violated");
    assert_eq!(rdp1["witness"], "B(a)");
    assert_eq!(rdp1["expected"], "violated");
    assert_eq!(rdp1["matched"], true);
    let steps = json["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 2);
    assert_eq!(steps[0]["consistent_case"], true);
    assert_eq!(steps[1]["consistent_case"], false);
}
