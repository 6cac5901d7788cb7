//! The per-instance check pipelines and the parallel driver.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use catalog::{build, CatalogError, HopfFile};
use correspondence::{
    enumerate_coideal_subalgebras, factor_by_subalgebra, random_coideal_subalgebra, roundtrip_from_coalgebra,
    roundtrip_from_subalgebra, CoidealSubalgebra, ComoduleFlags, CorrespondenceReport, Side, Status,
    Verdict,
};
use hopfcore::{verify_axioms, AxiomReport, FiniteHopfAlgebra, HopfError};
use hopfmod::*;
use homology::{
    comodule_flags, conditions_0x, cofrobenius_check, cotor, cotor_dims, doi_splittings, ext, ext_dims, global_dimension_zero,
    h_over_subalgebra, hom_comodule, hopf_module_generator, is_free, is_generator, is_injective_comodule, module_flags,
    projective_generator_consequence, tor, tor_dims, total_integral, truncation_degree, HomologyOracle,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{AlgebraSource, CheckKind, ExhaustiveSmall, SubalgebraMode, SuiteConfig};
use crate::error::CliError;
use crate::report::{Candidate, SuiteReport};

/// A resolved algebra; `hopf` is `Err` with the failing axiom report when the tables are not
/// a Hopf algebra.
pub struct LoadedAlgebra {
    pub name: String,
    pub hopf: Result<FiniteHopfAlgebra, AxiomReport>,
}

fn catalog_error(name: &str, source: CatalogError) -> CliError {
    CliError::Algebra { name: name.to_owned(), source }
}

fn from_hopf_error(name: &str, e: HopfError) -> Result<Result<FiniteHopfAlgebra, AxiomReport>, CliError> {
    match e {
        HopfError::Axioms(report) => Ok(Err(*report)),
        e => Err(catalog_error(name, e.into())),
    }
}

pub fn load_algebra(source: &AlgebraSource) -> Result<LoadedAlgebra, CliError> {
    match source {
        AlgebraSource::Spec(spec) => {
            let name = spec.name();
            let hopf = match build(spec) {
                Ok(h) => Ok(h),
                Err(CatalogError::Hopf(e)) => from_hopf_error(&name, e)?,
                Err(e) => return Err(catalog_error(&name, e)),
            };
            Ok(LoadedAlgebra { name, hopf })
        }
        AlgebraSource::File { file } => {
            let name = file.file_name().map_or_else(|| file.display().to_string(), |n| n.to_string_lossy().into_owned());
            let hopf = load_file(file)?;
            Ok(LoadedAlgebra { name, hopf })
        }
    }
}

fn load_file(path: &Path) -> Result<Result<FiniteHopfAlgebra, AxiomReport>, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    let file: HopfFile = serde_json::from_slice(&bytes).map_err(|source| CliError::Parse { path: path.to_owned(), source })?;
    let name = path.display().to_string();
    let tables = file.to_tables().map_err(|e| catalog_error(&name, e))?;
    let report = verify_axioms(&tables).map_err(|e| catalog_error(&name, e.into()))?;
    if !report.all_pass() {
        return Ok(Err(report));
    }
    match FiniteHopfAlgebra::new(tables) {
        Ok(h) => Ok(Ok(h)),
        Err(e) => from_hopf_error(&name, e),
    }
}

pub fn axiom_verdicts(report: &AxiomReport) -> Vec<Verdict> {
    report
        .checks
        .iter()
        .map(|c| {
            Verdict::from_bool(c.family.name(), c.passed, || match &c.witness {
                Some(w) => format!("basis tuple {:?}, output coordinate {}", w.basis, w.component),
                None => "failed".into(),
            })
        })
        .collect()
}

/// Random draws of one named check: all applicable draws must pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleTally {
    pub name: String,
    pub samples: usize,
    pub applicable: usize,
    pub failures: usize,
    pub witness: Option<String>,
    pub note: Option<String>,
}

impl SampleTally {
    fn new(name: &str) -> Self {
        SampleTally { name: name.to_owned(), samples: 0, applicable: 0, failures: 0, witness: None, note: None }
    }

    fn record(&mut self, v: Verdict) {
        let index = self.samples;
        self.samples += 1;
        match v.status {
            Status::Pass => self.applicable += 1,
            Status::Fail => {
                self.applicable += 1;
                self.failures += 1;
                let witness = v.witness.unwrap_or_default();
                self.witness.get_or_insert_with(|| format!("sample {index}: {witness}"));
            }
            Status::NotApplicable => {
                if let Some(note) = v.note {
                    self.note.get_or_insert(note);
                }
            }
        }
    }

    pub fn verdict(&self) -> Verdict {
        if self.failures > 0 {
            Verdict::fail(&self.name, self.witness.clone().unwrap_or_default())
                .with_note(format!("{} of {} applicable samples failed", self.failures, self.applicable))
        } else if self.applicable > 0 {
            Verdict::pass(&self.name).with_note(format!("{} of {} samples applicable", self.applicable, self.samples))
        } else {
            Verdict::not_applicable(&self.name, self.note.clone().unwrap_or_else(|| "no applicable sample".into()))
        }
    }
}

/// Insertion-ordered tallies keyed by check name.
#[derive(Default)]
struct Tallies(Vec<SampleTally>);

impl Tallies {
    fn record(&mut self, name: &str, v: Verdict) {
        let pos = match self.0.iter().position(|t| t.name == name) {
            Some(p) => p,
            None => {
                self.0.push(SampleTally::new(name));
                self.0.len() - 1
            }
        };
        self.0[pos].record(v);
    }

    fn iso(&mut self, name: &str, check: Result<IsoCheck, ModError>) {
        let v = match check {
            Ok(c) => c.verdict(),
            Err(e) => Verdict::fail(name, e.to_string()),
        };
        self.record(name, v);
    }

    fn adjunction(&mut self, name: &str, map: Result<AdjunctionMap, ModError>) {
        let v = match map {
            Ok(m) => Verdict::from_bool(name, m.is_morphism && m.is_iso, || {
                format!("{}×{} map: morphism {}, invertible {}", m.map.nrows(), m.map.ncols(), m.is_morphism, m.is_iso)
            }),
            Err(e) => Verdict::fail(name, e.to_string()),
        };
        self.record(name, v);
    }

    fn fallible<E: std::fmt::Display>(&mut self, name: &str, v: Result<Verdict, E>) {
        let v = v.unwrap_or_else(|e| Verdict::fail(name, e.to_string()));
        self.record(name, v);
    }

    fn into_inner(self) -> Vec<SampleTally> {
        self.0
    }
}

/// `H` free over `A` on both sides.
pub fn h_free(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> bool {
    let alg = a.algebra(h);
    [Side::Left, Side::Right].into_iter().all(|side| is_free(&alg, &h_over_subalgebra(h, a, side)))
}

/// The round trips from `A` and from `C = H/HA⁺`, with exact flatness flags.
pub fn correspondence_checks(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra, instance: &str) -> CorrespondenceReport {
    let mut r = roundtrip_from_subalgebra(h, a, Some(&HomologyOracle), instance);
    if let Ok(c) = factor_by_subalgebra(h, a, Side::Left) {
        let back = roundtrip_from_coalgebra(h, &c, Some(&HomologyOracle), instance);
        r.verdicts.extend(back.verdicts.into_iter().map(|mut v| {
            v.check = format!("coalgebra/{}", v.check);
            v
        }));
    }
    r
}

/// Every canonical isomorphism and adjunction (co)unit on `samples` random inputs.
pub fn isomorphism_tallies(s: &Setting, samples: usize, rng: &mut ChaCha8Rng) -> Vec<SampleTally> {
    let mut t = Tallies::default();
    let flags = module_flags(s.hopf(), s.subalgebra());
    for _ in 0..samples {
        t.iso("hopf_module_trivialization", hopf_module_trivialization(s, &random_hopf_module(s, rng)));
        t.iso("cotensor_trivialization", cotensor_trivialization(s, &random_left_hopf_module(s, rng)));
        let u = random_h_comodule(s, rng);
        t.iso("comodule_untwisting", comodule_untwisting(s, &u, &random_left_h_right_c(s, rng)));
        t.iso("comodule_untwisting_left", comodule_untwisting_left(s, &random_left_hopf_module(s, rng), &u));
        t.iso("module_untwisting", module_untwisting(s, &random_left_a_hopf_module(s, rng), &random_h_module(s, rng)));
        t.iso("module_untwisting_right", module_untwisting_right(s, &random_h_module(s, rng), &random_hopf_module(s, rng)));

        let v = random_c_comodule(s, rng, Side::Right);
        t.iso("tensor_identity", tensor_identity(s, &u, &v));
        let wm = random_left_hopf_module(s, rng);
        t.iso("cotensor_exchange", cotensor_exchange(s, &v, wm.comodule(), &u));
        t.iso(
            "cotensor_exchange_untwisted_right",
            cotensor_exchange_untwisted(s, &u, &v, wm.comodule(), Decoration::Right(&wm)),
        );
        let vm = random_left_h_right_c(s, rng);
        let w = random_c_comodule(s, rng, Side::Left);
        t.iso(
            "cotensor_exchange_untwisted_middle",
            cotensor_exchange_untwisted(s, &u, vm.comodule(), &w, Decoration::Middle(&vm)),
        );

        let hu = random_h_module(s, rng);
        let v = random_a_module(s, rng, Side::Left);
        let wm = random_hopf_module(s, rng);
        t.iso("tensor_exchange", tensor_exchange(s, &hu, &v, wm.module()));
        t.iso("tensor_exchange_untwisted_right", tensor_exchange_untwisted(s, &hu, &v, wm.module(), Decoration::Right(&wm)));
        let vm = random_left_a_hopf_module(s, rng);
        let w = random_a_module(s, rng, Side::Right);
        t.iso(
            "tensor_exchange_untwisted_middle",
            tensor_exchange_untwisted(s, &hu, vm.module(), &w, Decoration::Middle(&vm)),
        );

        let v = random_c_comodule(s, rng, Side::Right);
        let w = random_a_module(s, rng, Side::Left);
        t.iso("cotensor_tensor_interchange", cotensor_tensor_interchange(s, &v, &w, flags.right_projective));
        t.iso("induced_side_switch", induced_side_switch(s, &random_a_module(s, rng, Side::Left)));
        t.iso("coinduced_side_switch", coinduced_side_switch(s, &random_c_comodule(s, rng, Side::Right)));

        t.adjunction("quotient_unit", quotient_unit(s, &random_hopf_module(s, rng)));
        t.adjunction("quotient_counit", quotient_counit(s, &random_c_comodule(s, rng, Side::Right)));
        t.adjunction("induction_unit", induction_unit(s, &random_a_module(s, rng, Side::Left)));
        t.adjunction("induction_counit", induction_counit(s, &random_left_hopf_module(s, rng)));
        t.adjunction("left_quotient_unit", left_quotient_unit(s, &random_left_a_hopf_module(s, rng)));
        t.adjunction("left_quotient_counit", left_quotient_counit(s, &random_c_comodule(s.opposite(), rng, Side::Right)));
        t.adjunction("right_induction_unit", right_induction_unit(s, &random_a_module(s.co_opposite(), rng, Side::Left)));
        t.adjunction("right_induction_counit", right_induction_counit(s, &random_left_h_right_c(s, rng)));
    }
    t.iso("fundamental_theorem", fundamental_theorem_instance(s));
    t.into_inner()
}

/// Restriction of a random left `H`-module to `A`.
fn restricted_h_module(s: &Setting, rng: &mut ChaCha8Rng) -> ModuleStr {
    random_h_module(s, rng).restrict_scalars(&s.subalgebra().inclusion())
}

/// A right `C`-comodule whose coaction lifts to `H`.
fn lifted_c_comodule(s: &Setting, rng: &mut ChaCha8Rng) -> Result<ComoduleStr, ModError> {
    let c = s.factor();
    random_h_comodule(s, rng).pushforward(c.coalgebra(), c.projection())
}

fn vanishing(check: &str, dims: Vec<usize>) -> Verdict {
    Verdict::from_bool(check, dims[1..].iter().all(|&d| d == 0), || format!("dimensions by degree {dims:?}"))
}

/// Degree-zero agreement, acyclicity of Hopf modules when `H` is free over `A`, the
/// coFrobenius property, Doi's splitting, generators and the internal Hom.
pub fn homology_tallies(s: &Setting, samples: usize, truncation: Option<usize>, rng: &mut ChaCha8Rng) -> Vec<SampleTally> {
    let mut t = Tallies::default();
    let h = s.hopf();
    let alg = s.a_algebra();
    let coalg = s.factor().coalgebra();
    let free = h_free(h, s.subalgebra());
    let top_a = truncation.unwrap_or_else(|| truncation_degree(s.a_dim()));
    let top_c = truncation.unwrap_or_else(|| truncation_degree(s.c_dim()));

    t.record("cofrobenius", Verdict::from_bool("cofrobenius", cofrobenius_check(coalg), || {
        format!("no nondegenerate form found on C of dim {}", s.c_dim())
    }));
    let doi = total_integral(h, s.factor()).and_then(|phi| match phi {
        None => Ok(Verdict::not_applicable("doi_splitting", "no total integral C → H")),
        Some(phi) => doi_splittings(h, s.factor(), &phi).map(|d| {
            Verdict::from_bool("doi_splitting", d.holds(), || {
                format!(
                    "right: image {} identity {} linear {}; left: image {} identity {} linear {}",
                    d.right_image_in_a, d.right_identity_on_a, d.right_a_linear, d.left_image_in_b, d.left_identity_on_b,
                    d.left_b_linear
                )
            })
        }),
    });
    t.fallible("doi_splitting", doi);
    let h_generates = is_generator(alg, &s.h_as_left_a_module()).0;
    let hl = s.h_as_left_c_comodule();
    let coflat = is_injective_comodule(coalg, &hl);

    for _ in 0..samples {
        let m = random_a_module(s, rng, Side::Right);
        let v = random_a_module(s, rng, Side::Left);
        t.fallible(
            "tor_degree_zero",
            tor(alg, &m, &v, 0).and_then(|d| {
                let direct = tensor_over(&m, &v)?.dim();
                Ok(Verdict::from_bool("tor_degree_zero", d == direct, || format!("Tor_0 {d}, M⊗_A V {direct}")))
            }),
        );
        let m = random_a_module(s, rng, Side::Left);
        t.fallible(
            "ext_degree_zero",
            ext(alg, &m, &v, 0).map(|d| {
                let direct = module_homs(&m, &v).len();
                Verdict::from_bool("ext_degree_zero", d == direct, || format!("Ext^0 {d}, Hom_A {direct}"))
            }),
        );
        let x = random_c_comodule(s, rng, Side::Right);
        let w = random_c_comodule(s, rng, Side::Left);
        t.fallible(
            "cotor_degree_zero",
            cotor(coalg, &x, &w, 0).and_then(|d| {
                let direct = cotensor(&x, &w)?.dim();
                Ok(Verdict::from_bool("cotor_degree_zero", d == direct, || format!("Cotor^0 {d}, X□_C W {direct}")))
            }),
        );

        if free {
            let m = random_hopf_module(s, rng);
            let v = restricted_h_module(s, rng);
            t.fallible("tor_vanishing", tor_dims(alg, m.module(), &v, top_a).map(|d| vanishing("tor_vanishing", d)));
            let m = random_left_a_hopf_module(s, rng);
            t.fallible("ext_vanishing", ext_dims(alg, m.module(), &v, top_a).map(|d| vanishing("ext_vanishing", d)));
            let m = random_left_hopf_module(s, rng);
            let cot = lifted_c_comodule(s, rng)
                .map_err(|e| e.to_string())
                .and_then(|w| cotor_dims(coalg, &w, m.comodule(), top_c).map_err(|e| e.to_string()));
            t.fallible("cotor_vanishing", cot.map(|d| vanishing("cotor_vanishing", d)));
        } else {
            for name in ["tor_vanishing", "ext_vanishing", "cotor_vanishing"] {
                t.record(name, Verdict::not_applicable(name, "H is not known to be free over A"));
            }
        }

        let m = random_hopf_module(s, rng);
        let n = random_hopf_module(s, rng);
        t.fallible(
            "hom_evaluation",
            hom_comodule(s, &m, &n).map(|hom| {
                let homs = module_homs(m.module(), n.module()).len();
                Verdict::from_bool("hom_evaluation", hom.evaluation_colinear && hom.comodule.dim() == homs, || {
                    format!("colinear {}, dim {} vs Hom_A {}", hom.evaluation_colinear, hom.comodule.dim(), homs)
                })
            }),
        );

        t.record(
            "generator_by_homs",
            if h_generates && m.dim() > 0 {
                let homs = module_homs(m.module(), &ModuleStr::regular(alg, Side::Right)).len();
                let (gen, trace) = hopf_module_generator(s, &m);
                Verdict::from_bool("generator_by_homs", gen == (homs > 0) && trace.costable == Some(true), || {
                    format!("generator {gen}, {homs} maps to A, costable trace {:?}", trace.costable)
                })
            } else {
                Verdict::not_applicable("generator_by_homs", "H is not a generator over A, or M = 0")
            },
        );

        let v = random_c_comodule(s, rng, Side::Right);
        let check = lifted_c_comodule(s, rng).and_then(|u| {
            let into = !comodule_homs(&u, &v).is_empty();
            let out_of = coflat && !comodule_homs(&v, &u).is_empty();
            let nonzero = cotensor(&v, &hl)?.dim() > 0;
            Ok(Verdict::implication("cotensor_with_h_nonzero", into || out_of, nonzero))
        });
        t.fallible("cotensor_with_h_nonzero", check);
    }
    t.into_inner()
}

/// The four sampled projectivity and injectivity conditions, and their consequences.
pub fn condition_checks(s: &Setting, samples: usize, rng: &mut ChaCha8Rng) -> Vec<Verdict> {
    let mut out = Vec::new();
    if !h_free(s.hopf(), s.subalgebra()) {
        for c in homology::Condition::ALL {
            out.push(Verdict::not_applicable(c.name(), "H is not known to be free over A"));
        }
        return out;
    }
    let sampled = conditions_0x(s, samples, rng);
    for c in &sampled {
        let v = Verdict::from_bool(c.condition.name(), c.passed(), || c.witness.clone().unwrap_or_default());
        out.push(v.with_note(format!("{} samples, {} failures", c.samples, c.failures)));
    }
    out.push(match projective_generator_consequence(s, samples, rng) {
        None => Verdict::not_applicable("projective_generator_consequence", "some sampled object is not projective"),
        Some(ok) => Verdict::from_bool("projective_generator_consequence", ok, || {
            "all samples projective, but H or a sample is not a projective generator".into()
        }),
    });
    let gd = global_dimension_zero(s);
    out.push(
        Verdict::implication("global_dimension_zero", gd.either(), sampled.iter().all(|c| c.passed())).with_note(format!(
            "A semisimple {}, C cosemisimple {}",
            gd.subalgebra_semisimple, gd.factor_cosemisimple
        )),
    );
    out
}

fn candidate_flags(flags: &ComoduleFlags) -> bool {
    (flags.left_injective && !flags.left_cogenerator) || (flags.right_injective && !flags.right_cogenerator)
}

/// `H` injective but not a cogenerator over `H/HA⁺` or over `H/A⁺H`, on either side.
pub fn open_question_checks(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra, instance: &str) -> (Vec<Verdict>, Vec<Candidate>) {
    let mut verdicts = Vec::new();
    let mut candidates = Vec::new();
    for (check, side, label) in [
        ("injective_not_cogenerator", Side::Left, "H/HA⁺"),
        ("injective_not_cogenerator_right_factor", Side::Right, "H/A⁺H"),
    ] {
        let c = match factor_by_subalgebra(h, a, side) {
            Ok(c) => c,
            Err(e) => {
                verdicts.push(Verdict::fail(check, e.to_string()));
                continue;
            }
        };
        if c.dim() == 1 {
            verdicts.push(Verdict::not_applicable(check, "C = k is faithfully coflat"));
            continue;
        }
        let flags = comodule_flags(h, &c);
        if candidate_flags(&flags) {
            let candidate = Candidate::new(h, instance, label, a, &c, flags);
            verdicts.push(Verdict::fail(check, format!("candidate over {label}: {:?}", flags)));
            candidates.push(candidate);
        } else {
            verdicts.push(Verdict::pass(check).with_note(format!("{label} of dim {}", c.dim())));
        }
    }
    (verdicts, candidates)
}

/// The result of one instance pipeline.
struct InstanceOutcome {
    report: CorrespondenceReport,
    candidates: Vec<Candidate>,
    timings: Vec<(CheckKind, u128)>,
}

fn prefixed(kind: CheckKind, mut v: Verdict) -> Verdict {
    v.check = format!("{kind}/{}", v.check);
    v
}

/// An independent stream per (algebra, instance, check kind).
fn stream_rng(seed: u64, algebra: usize, instance: usize, kind: CheckKind) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = CheckKind::ALL.iter().position(|&k| k == kind).expect("listed") as u64;
    rng.set_stream(((algebra as u64) << 40) | ((instance as u64) << 8) | kind);
    rng
}

pub fn subalgebra_label(h: &FiniteHopfAlgebra, a: &CoidealSubalgebra) -> String {
    let basis: Vec<String> = a.space().basis_vectors().iter().map(|v| h.format_vector(v)).collect();
    format!("span{{{}}}", basis.join(", "))
}

/// The right coideal subalgebras an algebra contributes to the suite.
pub fn generate_subalgebras(h: &FiniteHopfAlgebra, mode: SubalgebraMode, algebra: usize, seed: u64) -> Vec<CoidealSubalgebra> {
    let random = |count: usize, seed: u64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(algebra as u64);
        (0..count).map(|_| random_coideal_subalgebra(h, &mut rng, Side::Right)).collect()
    };
    match mode {
        SubalgebraMode::ExhaustiveSmall => {
            enumerate_coideal_subalgebras(h, Side::Right).unwrap_or_else(|| random(ExhaustiveSmall::FALLBACK_COUNT, seed))
        }
        SubalgebraMode::Randomized { count, seed } => random(count, seed),
    }
}

fn run_instance(
    config: &SuiteConfig,
    h: &FiniteHopfAlgebra,
    a: &CoidealSubalgebra,
    name: &str,
    index: (usize, usize),
) -> Result<InstanceOutcome, CliError> {
    let mut report = CorrespondenceReport::new(name);
    let mut candidates = Vec::new();
    let mut timings = Vec::new();
    let setting = Setting::new(h, a).map_err(|e| CliError::Internal { instance: name.to_owned(), message: e.to_string() })?;
    let rng = |kind| stream_rng(config.seed, index.0, index.1, kind);
    for kind in CheckKind::ALL.into_iter().filter(|&k| k != CheckKind::Axioms && config.enabled(k)) {
        let start = Instant::now();
        let verdicts = match kind {
            CheckKind::Correspondence => {
                let r = correspondence_checks(h, a, name);
                report.module_flags = r.module_flags;
                report.comodule_flags = r.comodule_flags;
                r.verdicts
            }
            CheckKind::Isomorphisms => {
                isomorphism_tallies(&setting, config.samples, &mut rng(kind)).iter().map(SampleTally::verdict).collect()
            }
            CheckKind::Homology => homology_tallies(&setting, config.samples, config.truncation, &mut rng(kind))
                .iter()
                .map(SampleTally::verdict)
                .collect(),
            CheckKind::Conditions0x => condition_checks(&setting, config.condition_samples, &mut rng(kind)),
            CheckKind::OpenQuestion => {
                let (v, c) = open_question_checks(h, a, name);
                candidates.extend(c);
                v
            }
            CheckKind::Axioms => unreachable!("axioms run once per algebra"),
        };
        report.verdicts.extend(verdicts.into_iter().map(|v| prefixed(kind, v)));
        timings.push((kind, start.elapsed().as_micros()));
    }
    Ok(InstanceOutcome { report, candidates, timings })
}

/// Build or load every algebra, generate its instances and run the enabled checks.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, CliError> {
    config.validate()?;
    let start = Instant::now();
    let algebras = config.algebras.iter().map(load_algebra).collect::<Result<Vec<_>, _>>()?;

    let mut outcomes = Vec::new();
    let mut jobs = Vec::new();
    let mut slot = 0usize;
    let mut next_slot = || {
        slot += 1;
        slot - 1
    };
    for (i, alg) in algebras.iter().enumerate() {
        let mut axioms = CorrespondenceReport::new(&alg.name);
        let axiom_start = Instant::now();
        let report = match &alg.hopf {
            Ok(h) => h.verify(),
            Err(r) => r.clone(),
        };
        axioms.verdicts.extend(axiom_verdicts(&report).into_iter().map(|v| prefixed(CheckKind::Axioms, v)));
        let timing = vec![(CheckKind::Axioms, axiom_start.elapsed().as_micros())];
        let h = match &alg.hopf {
            Ok(h) => h,
            Err(_) => {
                outcomes.push((next_slot(), InstanceOutcome { report: axioms, candidates: vec![], timings: timing }));
                continue;
            }
        };
        if config.enabled(CheckKind::Axioms) {
            outcomes.push((next_slot(), InstanceOutcome { report: axioms, candidates: vec![], timings: timing }));
        }
        let subalgebras = generate_subalgebras(h, config.subalgebras, i, config.seed);
        for (j, a) in subalgebras.into_iter().enumerate() {
            let name = format!("{} #{j} :: A = {}", alg.name, subalgebra_label(h, &a));
            jobs.push((next_slot(), h, a, name, (i, j)));
        }
    }
    let ran = jobs
        .into_par_iter()
        .map(|(slot, h, a, name, index)| run_instance(config, h, &a, &name, index).map(|o| (slot, o)))
        .collect::<Result<Vec<_>, _>>()?;
    // slots follow the listing order; the axiom reports ran outside the pool
    let mut all: Vec<(usize, InstanceOutcome)> = outcomes.into_iter().chain(ran).collect();
    all.sort_by_key(|(slot, _)| *slot);

    let mut timings: BTreeMap<String, u128> = BTreeMap::new();
    let mut instances = Vec::new();
    let mut candidates = Vec::new();
    for (_, o) in all {
        for (kind, us) in o.timings {
            *timings.entry(kind.name().to_owned()).or_default() += us;
        }
        instances.push(o.report);
        candidates.extend(o.candidates);
    }
    Ok(SuiteReport::assemble(config.seed, instances, candidates, timings, start.elapsed().as_micros()))
}

/// The suite restricted to the open-question search.
pub fn search_open_question(config: &SuiteConfig) -> Result<SuiteReport, CliError> {
    let mut config = config.clone();
    config.checks = [CheckKind::OpenQuestion].into_iter().collect();
    run_suite(&config)
}
