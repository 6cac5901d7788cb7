//! One PASS/FAIL line per acceptance criterion. Lines go straight to stdout so that they show up
//! without `--nocapture`; the test fails if any criterion fails.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::process::Command;
use std::time::Instant;

use catalog::{build, default_catalog, load, save, AlgebraSpec};
use correspondence::{CorrespondenceReport, Status};
use exactla::{Field, Matrix};
use hopfcore::Algebra;
use hopfmod::ModuleStr;
use homology::{tor_dims, truncation_degree};
use verifier_cli::*;

const MIN_RANDOMIZED_INSTANCES: usize = 100;
const RANDOMIZED_PER_ALGEBRA: usize = 13;
const MIN_ISO_SAMPLES: usize = 20;
const MIN_VANISHING_SAMPLES: usize = 50;
const MIN_CONDITION_SAMPLES: usize = 20;
const SUITE_BUDGET_SECONDS: f64 = 60.0;

const ISOMORPHISMS: [&str; 25] = [
    "hopf_module_trivialization",
    "cotensor_trivialization",
    "comodule_untwisting",
    "comodule_untwisting_left",
    "module_untwisting",
    "module_untwisting_right",
    "tensor_identity",
    "cotensor_exchange",
    "cotensor_exchange_untwisted_right",
    "cotensor_exchange_untwisted_middle",
    "tensor_exchange",
    "tensor_exchange_untwisted_right",
    "tensor_exchange_untwisted_middle",
    "cotensor_tensor_interchange",
    "induced_side_switch",
    "coinduced_side_switch",
    "quotient_unit",
    "quotient_counit",
    "induction_unit",
    "induction_counit",
    "left_quotient_unit",
    "left_quotient_counit",
    "right_induction_unit",
    "right_induction_counit",
    "fundamental_theorem",
];

const TRANSFER: [&str; 8] = [
    "projective_to_cogenerator_left",
    "projective_to_cogenerator_right",
    "generator_to_injective_left",
    "generator_to_injective_right",
    "injective_to_generator_left",
    "injective_to_generator_right",
    "cogenerator_to_projective_left",
    "cogenerator_to_projective_right",
];

const TRANSPORT: [&str; 6] = [
    "antipode_transport_ideal",
    "antipode_transport_coinvariants",
    "antipode_transport_coinvariants_right",
    "antipode_preimage",
    "antipode_preimage_right",
    "antipode_augmentation",
];

const CONDITIONS: [&str; 4] = [
    "hopf_modules_projective_right",
    "hopf_modules_projective_left",
    "hopf_modules_injective_right",
    "hopf_modules_injective_left",
];

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn is_subalgebra_instance(r: &CorrespondenceReport) -> bool {
    r.instance.contains(" :: A = ")
}

/// Status of `check` on each instance that carries it.
fn statuses<'a>(instances: &'a [CorrespondenceReport], check: &'a str) -> impl Iterator<Item = (&'a str, Status, Option<&'a str>)> {
    instances.iter().flat_map(move |r| {
        r.verdicts.iter().filter(move |v| v.check == check).map(|v| (r.instance.as_str(), v.status, v.note.as_deref()))
    })
}

/// Every instance in `instances` passes (or, if `allow_na`, skips) `check`; returns the pass count.
fn require(instances: &[CorrespondenceReport], check: &str, expected: usize, allow_na: bool) -> Result<usize, String> {
    let mut seen = 0;
    let mut pass = 0;
    for (inst, status, _) in statuses(instances, check) {
        seen += 1;
        match status {
            Status::Pass => pass += 1,
            Status::NotApplicable if allow_na => {}
            s => return Err(format!("{check} is {s:?} on {inst}")),
        }
    }
    if seen != expected {
        return Err(format!("{check} present on {seen} instances, expected {expected}"));
    }
    Ok(pass)
}

/// Applicable samples from a tally note, `"<applicable> of <samples> samples applicable"`.
fn applicable_samples(note: Option<&str>) -> usize {
    note.and_then(|n| n.split(" of ").next()).and_then(|n| n.parse().ok()).unwrap_or(0)
}

/// Sample count from a condition note, `"<samples> samples, <failures> failures"`.
fn condition_samples(note: Option<&str>) -> usize {
    note.and_then(|n| n.split(' ').next()).and_then(|n| n.parse().ok()).unwrap_or(0)
}

struct Run {
    report: SuiteReport,
    seconds: f64,
    subalgebra_instances: usize,
}

impl Run {
    fn instances(&self) -> &[CorrespondenceReport] {
        &self.report.instances
    }
}

fn axioms(run: &Run) -> Outcome {
    let algebras = run.instances().iter().filter(|r| !is_subalgebra_instance(r)).count();
    if algebras != default_catalog().len() {
        return Err(format!("{algebras} algebras reported"));
    }
    let mut checks = 0;
    for family in hopfcore::AxiomFamily::ALL {
        checks += require(run.instances(), &format!("axioms/{}", family.name()), algebras, false)?;
    }
    Ok(format!("{algebras} algebras × {} axiom families, {checks} exact checks", hopfcore::AxiomFamily::ALL.len()))
}

fn randomized_correspondence() -> Vec<CorrespondenceReport> {
    let mut out = Vec::new();
    for (i, spec) in default_catalog().iter().enumerate() {
        let h = build(spec).unwrap();
        let mode = SubalgebraMode::Randomized { count: RANDOMIZED_PER_ALGEBRA, seed: 1000 + i as u64 };
        for (j, a) in generate_subalgebras(&h, mode, i, 0).iter().enumerate() {
            out.push(correspondence_checks(&h, a, &format!("{} random #{j} :: A = {}", spec.name(), subalgebra_label(&h, a))));
        }
    }
    out
}

fn roundtrip(run: &Run, random: &[CorrespondenceReport]) -> Outcome {
    if random.len() < MIN_RANDOMIZED_INSTANCES {
        return Err(format!("only {} randomized instances", random.len()));
    }
    let mut roundtrips = 0;
    for (instances, expected, prefix) in
        [(run.instances(), run.subalgebra_instances, "correspondence/"), (random, random.len(), "")]
    {
        let failure = instances.iter().flat_map(|r| r.failures().map(move |v| (r, v))).find(|(_, v)| v.check.starts_with(prefix));
        if let Some((r, v)) = failure {
            return Err(format!("{} failed on {}: {:?}", v.check, r.instance, v.witness));
        }
        require(instances, &format!("{prefix}dominion_equals_coinvariants"), expected, false)?;
        roundtrips += require(instances, &format!("{prefix}subalgebra_roundtrip"), expected, true)?;
        roundtrips += require(instances, &format!("{prefix}coalgebra/coalgebra_roundtrip"), expected, true)?;
    }
    if roundtrips == 0 {
        return Err("no instance satisfied the flatness hypotheses".into());
    }
    Ok(format!(
        "{} exhaustive + {} randomized instances; dominion = coinvariants everywhere, {roundtrips} exact round trips",
        run.subalgebra_instances,
        random.len()
    ))
}

fn transport(run: &Run, random: &[CorrespondenceReport]) -> Outcome {
    let mut checks = 0;
    for name in TRANSPORT {
        checks += require(run.instances(), &format!("correspondence/{name}"), run.subalgebra_instances, false)?;
        checks += require(random, name, random.len(), false)?;
    }
    for name in ["antipode_transport_coinvariants", "antipode_preimage"] {
        checks += require(run.instances(), &format!("correspondence/coalgebra/{name}"), run.subalgebra_instances, false)?;
    }
    Ok(format!("{checks} exact subspace identities"))
}

fn isomorphisms(run: &Run) -> Outcome {
    let mut least = usize::MAX;
    for name in ISOMORPHISMS {
        let check = format!("isomorphisms/{name}");
        require(run.instances(), &check, run.subalgebra_instances, true)?;
        let applicable: usize = statuses(run.instances(), &check).map(|(_, _, note)| applicable_samples(note)).sum();
        if applicable < MIN_ISO_SAMPLES {
            return Err(format!("{check}: {applicable} applicable samples < {MIN_ISO_SAMPLES}"));
        }
        least = least.min(applicable);
    }
    Ok(format!("{} maps, each bijective and equivariant on ≥ {least} samples", ISOMORPHISMS.len()))
}

fn transfer(run: &Run) -> Outcome {
    let mut checks = 0;
    for name in TRANSFER {
        checks += require(run.instances(), &format!("correspondence/{name}"), run.subalgebra_instances, false)?;
        // the route from C carries the implications that start from C
        if name.starts_with("injective") || name.starts_with("cogenerator") {
            checks += require(run.instances(), &format!("correspondence/coalgebra/{name}"), run.subalgebra_instances, false)?;
        }
    }
    let doi = require(run.instances(), "homology/doi_splitting", run.subalgebra_instances, true)?;
    if doi == 0 {
        return Err("no total integral found anywhere".into());
    }
    Ok(format!("{checks} implication checks; Doi splitting verified on {doi} instances"))
}

/// `k[y]/(y²)` over ℚ in the basis `1, y`, and its residue character.
fn dual_numbers() -> (Algebra, Matrix) {
    let q = Field::Rational;
    let mult = Matrix::from_i64(q, &[&[1, 0, 0, 0], &[0, 1, 1, 0]]);
    let alg = Algebra::new(mult, Matrix::from_i64(q, &[&[1], &[0]])).unwrap();
    (alg, Matrix::from_i64(q, &[&[1, 0]]))
}

fn homology_checks(run: &Run) -> Outcome {
    for name in ["tor_degree_zero", "ext_degree_zero", "cotor_degree_zero"] {
        require(run.instances(), &format!("homology/{name}"), run.subalgebra_instances, false)?;
    }
    let mut least = usize::MAX;
    for name in ["tor_vanishing", "ext_vanishing", "cotor_vanishing"] {
        let check = format!("homology/{name}");
        require(run.instances(), &check, run.subalgebra_instances, true)?;
        let applicable: usize = statuses(run.instances(), &check)
            .filter(|(_, s, _)| *s == Status::Pass)
            .map(|(_, _, note)| applicable_samples(note))
            .sum();
        if applicable < MIN_VANISHING_SAMPLES {
            return Err(format!("{check}: {applicable} samples < {MIN_VANISHING_SAMPLES}"));
        }
        least = least.min(applicable);
    }
    let (alg, eps) = dual_numbers();
    let n = truncation_degree(alg.dim());
    let kr = ModuleStr::character(&alg, correspondence::Side::Right, &eps).unwrap();
    let kl = ModuleStr::character(&alg, correspondence::Side::Left, &eps).unwrap();
    let dims = tor_dims(&alg, &kr, &kl, n).map_err(|e| e.to_string())?;
    if dims != vec![1; n + 1] {
        return Err(format!("Tor(k, k) over ℚ[y]/(y²) = {dims:?}"));
    }
    Ok(format!("degree 0 agrees everywhere; vanishing on ≥ {least} samples; periodic control Tor_i(k,k) = 1 for i ≤ {n}"))
}

fn cofrobenius(run: &Run) -> Outcome {
    let pass = require(run.instances(), "homology/cofrobenius", run.subalgebra_instances, false)?;
    Ok(format!("{pass} factor coalgebras H/HA⁺"))
}

fn conditions(run: &Run) -> Outcome {
    let mut instances = 0;
    for name in CONDITIONS {
        let check = format!("conditions0x/{name}");
        require(run.instances(), &check, run.subalgebra_instances, true)?;
        for (inst, status, note) in statuses(run.instances(), &check) {
            if status == Status::Pass && condition_samples(note) < MIN_CONDITION_SAMPLES {
                return Err(format!("{check} on {inst}: {note:?}"));
            }
        }
        instances = statuses(run.instances(), &check).filter(|(_, s, _)| *s == Status::Pass).count();
    }
    if instances == 0 {
        return Err("H is free over no sampled subalgebra".into());
    }
    require(run.instances(), "conditions0x/projective_generator_consequence", run.subalgebra_instances, true)?;
    Ok(format!("4 conditions on {instances} free instances, ≥ {MIN_CONDITION_SAMPLES} samples each; projective-generator consequence never violated"))
}

fn open_question(run: &Run) -> Outcome {
    if !run.report.candidates.is_empty() {
        return Err(format!("{} candidates: {:?}", run.report.candidates.len(), run.report.candidates));
    }
    let left = require(run.instances(), "openquestion/injective_not_cogenerator", run.subalgebra_instances, true)?;
    let right = require(run.instances(), "openquestion/injective_not_cogenerator_right_factor", run.subalgebra_instances, true)?;
    Ok(format!("zero candidates ({left} left and {right} right factor coalgebras examined)"))
}

fn hopf_verify(args: &[&str], cwd: &Path) -> Option<i32> {
    Command::new(env!("CARGO_BIN_EXE_hopf-verify")).args(args).current_dir(cwd).output().unwrap().status.code()
}

fn determinism_and_io(run: &Run) -> Outcome {
    if run.report.exit_code() != 0 {
        return Err("the default suite did not exit 0".into());
    }
    let small = SuiteConfig {
        algebras: vec![AlgebraSource::Spec(AlgebraSpec::sweedler(Field::prime(7).unwrap())), AlgebraSource::Spec(AlgebraSpec::group(&[4], Field::Rational))],
        subalgebras: SubalgebraMode::Randomized { count: 3, seed: 11 },
        ..SuiteConfig::default()
    };
    let a = run_suite(&small).map_err(|e| e.to_string())?.without_metadata();
    let b = run_suite(&small).map_err(|e| e.to_string())?.without_metadata();
    if a.to_json() != b.to_json() || a.to_markdown() != b.to_markdown() {
        return Err("identical runs differ".into());
    }

    for spec in default_catalog() {
        let h = build(&spec).unwrap();
        let bytes = save(&h);
        let back = load(&bytes).map_err(|e| format!("{}: {e}", spec.name()))?;
        if back.tables() != h.tables() || save(&back) != bytes {
            return Err(format!("{} does not round-trip", spec.name()));
        }
    }

    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    std::fs::write(d.join("good.json"), r#"{"algebras": [{"family": "group_algebra", "orders": [2]}]}"#).unwrap();
    let h = build(&AlgebraSpec::sweedler(Field::Rational)).unwrap();
    let mut file: serde_json::Value = serde_json::from_slice(&save(&h)).unwrap();
    // ε(g) = −1 breaks multiplicativity of ε
    file["counit"] = serde_json::json!([1, -1, 0, 0]);
    std::fs::write(d.join("broken.json"), file.to_string()).unwrap();
    std::fs::write(d.join("bad.json"), r#"{"algebras": [{"file": "broken.json"}]}"#).unwrap();
    std::fs::write(d.join("corrupt.json"), "{").unwrap();
    let codes: Vec<Option<i32>> = ["good.json", "bad.json", "corrupt.json"]
        .iter()
        .map(|c| hopf_verify(&["verify", "--config", c, "--no-metadata"], d))
        .collect();
    if codes != [Some(0), Some(1), Some(USAGE_ERROR)] {
        return Err(format!("exit codes {codes:?}"));
    }
    Ok(format!("byte-identical reruns; {} algebras round-trip table-exact; exit codes 0/1/2", default_catalog().len()))
}

#[test]
fn acceptance() {
    let start = Instant::now();
    let report = run_suite(&SuiteConfig::default()).expect("default suite runs");
    let seconds = start.elapsed().as_secs_f64();
    let subalgebra_instances = report.instances.iter().filter(|r| is_subalgebra_instance(r)).count();
    let run = Run { report, seconds, subalgebra_instances };
    let random = randomized_correspondence();

    let criteria: Vec<Criterion> = vec![
        ("axiom suite", Box::new(|| axioms(&run))),
        ("correspondence round trip", Box::new(|| roundtrip(&run, &random))),
        ("antipode transport", Box::new(|| transport(&run, &random))),
        ("canonical isomorphisms", Box::new(|| isomorphisms(&run))),
        ("flatness/coflatness transfer and Doi splitting", Box::new(|| transfer(&run))),
        ("Tor/Ext/Cotor", Box::new(|| homology_checks(&run))),
        ("coFrobenius factor coalgebras", Box::new(|| cofrobenius(&run))),
        ("Hopf-module conditions", Box::new(|| conditions(&run))),
        ("open-question search", Box::new(|| open_question(&run))),
        ("determinism and I/O", Box::new(|| determinism_and_io(&run))),
    ];
    let mut out = std::io::stdout().lock();
    let mut failed = BTreeMap::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => writeln!(out, "PASS [{}] {name}: {detail}", i + 1).unwrap(),
            Err(reason) => {
                writeln!(out, "FAIL [{}] {name}: {reason}", i + 1).unwrap();
                failed.insert(i + 1, reason);
            }
        }
    }
    writeln!(
        out,
        "INFO default suite: {} instances, {} verdicts in {:.1} s (budget {SUITE_BUDGET_SECONDS} s)",
        run.report.summary.instances,
        run.report.summary.verdicts.total(),
        run.seconds
    )
    .unwrap();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
