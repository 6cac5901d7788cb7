use std::collections::BTreeMap;
use std::sync::OnceLock;

use catalog::{build, save, AlgebraSpec};
use correspondence::{generate_coideal_subalgebra, Side, Status};
use exactla::Field;
use verifier_cli::*;

fn h4_spec() -> AlgebraSpec {
    AlgebraSpec::sweedler(Field::Rational)
}

fn qc2_spec() -> AlgebraSpec {
    AlgebraSpec::group(&[2], Field::Rational)
}

fn config(algebras: Vec<AlgebraSource>, subalgebras: SubalgebraMode) -> SuiteConfig {
    SuiteConfig { algebras, subalgebras, ..SuiteConfig::default() }
}

fn h4_report() -> &'static SuiteReport {
    static CELL: OnceLock<SuiteReport> = OnceLock::new();
    CELL.get_or_init(|| run_suite(&config(vec![AlgebraSource::Spec(h4_spec())], SubalgebraMode::ExhaustiveSmall)).unwrap())
}

fn schema() -> jsonschema::JSONSchema {
    let text = include_str!("../schema/suite_report.schema.json");
    let value: serde_json::Value = serde_json::from_str(text).unwrap();
    jsonschema::JSONSchema::compile(&value).unwrap()
}

#[test]
fn sweedler_exhaustive_pipeline_has_no_failures() {
    let r = h4_report();
    assert!(r.passed(), "{:#?}", r.failures);
    assert_eq!(r.instances[0].instance, "H4/Q");
    let names: Vec<&str> = r.instances.iter().map(|i| i.instance.as_str()).collect();
    for a in ["span{1}", "span{1, g}", "span{1, gx}", "span{1, g, x, gx}"] {
        assert!(names.iter().any(|n| n.ends_with(&format!(":: A = {a}"))), "{a} missing from {names:?}");
    }
    assert!(r.summary.instances >= 5);
    // every enabled kind contributes on every subalgebra instance
    for inst in &r.instances[1..] {
        for kind in ["correspondence", "isomorphisms", "homology", "conditions0x", "openquestion"] {
            assert!(inst.verdicts.iter().any(|v| v.check.starts_with(&format!("{kind}/"))), "{kind} on {}", inst.instance);
        }
    }
}

#[test]
fn summary_is_the_sum_of_instance_verdicts() {
    let r = h4_report();
    let mut by_kind: BTreeMap<String, [usize; 3]> = BTreeMap::new();
    let mut total = [0usize; 3];
    for v in r.instances.iter().flat_map(|i| &i.verdicts) {
        let slot = match v.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::NotApplicable => 2,
        };
        total[slot] += 1;
        by_kind.entry(v.check.split('/').next().unwrap().to_owned()).or_default()[slot] += 1;
    }
    let c = r.summary.verdicts;
    assert_eq!([c.pass, c.fail, c.not_applicable], total);
    let summarized: BTreeMap<String, [usize; 3]> =
        r.summary.by_kind.iter().map(|(k, c)| (k.clone(), [c.pass, c.fail, c.not_applicable])).collect();
    assert_eq!(summarized, by_kind);
    assert_eq!(r.summary.instances, r.instances.len());
    assert_eq!(r.failures.len(), c.fail);
}

#[test]
fn randomized_runs_are_byte_identical() {
    let c = config(vec![AlgebraSource::Spec(qc2_spec())], SubalgebraMode::Randomized { count: 5, seed: 1 });
    let a = run_suite(&c).unwrap().without_metadata().to_json();
    let b = run_suite(&c).unwrap().without_metadata().to_json();
    assert_eq!(a, b);
    let r = run_suite(&c).unwrap();
    assert_eq!(r.instances.len(), 6);
    assert!(r.passed());
    assert!(r.metadata.is_some());
}

#[test]
fn reports_validate_against_the_published_schema() {
    let schema = schema();
    let value = serde_json::to_value(h4_report()).unwrap();
    assert!(schema.is_valid(&value));
    let bare = serde_json::to_value(h4_report().clone().without_metadata()).unwrap();
    assert!(schema.is_valid(&bare));
    let mut broken = bare.clone();
    broken["instances"][0]["verdicts"][0]["status"] = "maybe".into();
    assert!(!schema.is_valid(&broken));
    let mut missing = bare;
    missing.as_object_mut().unwrap().remove("summary");
    assert!(!schema.is_valid(&missing));
}

#[test]
fn open_question_on_extreme_subalgebras() {
    let h = build(&h4_spec()).unwrap();
    let whole = generate_coideal_subalgebra(&h, &(0..4).map(|i| h.basis_vector(i)).collect::<Vec<_>>(), Side::Right);
    let (v, c) = open_question_checks(&h, &whole, "A = H");
    assert!(v.iter().all(|v| v.status == Status::NotApplicable), "{v:?}");
    assert!(c.is_empty());
    let trivial = generate_coideal_subalgebra(&h, &[h.one()], Side::Right);
    assert_eq!(trivial.dim(), 1);
    let (v, c) = open_question_checks(&h, &trivial, "A = k");
    assert!(v.iter().all(|v| v.status == Status::Pass), "{v:?}");
    assert!(c.is_empty());
    let flags = homology::comodule_flags(&h, &correspondence::factor_by_subalgebra(&h, &trivial, Side::Left).unwrap());
    assert!(flags.left_faithfully_coflat() && flags.right_faithfully_coflat());
}

#[test]
fn search_flags_nothing_on_small_catalog_algebras() {
    let algebras = [h4_spec(), qc2_spec(), AlgebraSpec::dual_group(&[3], Field::prime(7).unwrap())];
    let c = config(algebras.into_iter().map(AlgebraSource::Spec).collect(), SubalgebraMode::ExhaustiveSmall);
    let r = search_open_question(&c).unwrap();
    assert!(r.candidates.is_empty());
    assert!(r.passed());
    assert!(r.instances.iter().flat_map(|i| &i.verdicts).all(|v| v.check.starts_with("openquestion/") || v.check.starts_with("axioms/")));
}

#[test]
fn unreadable_and_corrupted_inputs_are_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, b"{\"dim\": 2, \"field\": ").unwrap();
    let c = config(vec![AlgebraSource::File { file: bad.clone() }], SubalgebraMode::ExhaustiveSmall);
    let err = run_suite(&c).expect_err("parse error");
    assert!(matches!(&err, CliError::Parse { path, .. } if path == &bad));
    assert!(err.to_string().contains("bad.json"));

    let missing = dir.path().join("missing.json");
    let c = config(vec![AlgebraSource::File { file: missing }], SubalgebraMode::ExhaustiveSmall);
    assert!(matches!(run_suite(&c), Err(CliError::Io { .. })));

    let taft = AlgebraSpec::taft(4, 2, Field::prime(7).unwrap());
    let c = config(vec![AlgebraSource::Spec(taft)], SubalgebraMode::ExhaustiveSmall);
    assert!(matches!(run_suite(&c), Err(CliError::Algebra { .. })));
}

#[test]
fn tables_failing_an_axiom_become_failing_verdicts() {
    let h = build(&h4_spec()).unwrap();
    let mut file: catalog::HopfFile = serde_json::from_slice(&save(&h)).unwrap();
    // S(x) = gx instead of −gx
    file.antipode[3][2] = catalog::Num::Int(1);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_vec(&file).unwrap()).unwrap();
    let r = run_suite(&config(vec![AlgebraSource::File { file: path }], SubalgebraMode::ExhaustiveSmall)).unwrap();
    assert_eq!(r.instances.len(), 1);
    assert_eq!(r.instances[0].instance, "broken.json");
    assert_eq!(r.exit_code(), 1);
    assert!(r.failures.iter().any(|f| f.check == "axioms/antipode" && f.witness.is_some()));
}

#[test]
fn files_and_specs_give_the_same_verdicts() {
    let h = build(&qc2_spec()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("qc2.json");
    std::fs::write(&path, save(&h)).unwrap();
    let from_spec = run_suite(&config(vec![AlgebraSource::Spec(qc2_spec())], SubalgebraMode::ExhaustiveSmall)).unwrap();
    let from_file = run_suite(&config(vec![AlgebraSource::File { file: path }], SubalgebraMode::ExhaustiveSmall)).unwrap();
    let verdicts = |r: &SuiteReport| r.instances.iter().map(|i| i.verdicts.clone()).collect::<Vec<_>>();
    assert_eq!(verdicts(&from_spec), verdicts(&from_file));
}

#[test]
fn config_files_resolve_relative_paths() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("qc2.json"), save(&build(&qc2_spec()).unwrap())).unwrap();
    let cfg = dir.path().join("suite.json");
    std::fs::write(&cfg, r#"{"algebras": [{"file": "qc2.json"}], "checks": ["axioms"]}"#).unwrap();
    let mut c = SuiteConfig::load(&cfg).unwrap();
    assert_eq!(c.algebras, vec![AlgebraSource::File { file: dir.path().join("qc2.json") }]);
    c.reseed(9);
    assert_eq!(c.seed, 9);
    let r = run_suite(&c).unwrap();
    // axioms only: the subalgebra instances carry no verdicts
    assert_eq!(r.instances[0].verdicts.len(), 8);
    assert!(r.instances[1..].iter().all(|i| i.verdicts.is_empty()));
}
