//! The suite report, its JSON and markdown renderings.

use std::collections::BTreeMap;
use std::fmt::Write;

use correspondence::{CoidealSubalgebra, ComoduleFlags, CorrespondenceReport, FactorCoalgebra, Status};
use hopfcore::FiniteHopfAlgebra;
use serde::Serialize;

/// Bumped whenever `schema/suite_report.schema.json` changes incompatibly.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
}

impl Counts {
    fn add(&mut self, status: Status) {
        match status {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::NotApplicable => self.not_applicable += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.not_applicable
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub verdicts: Counts,
    /// Keyed by the check-kind prefix of each verdict name.
    pub by_kind: BTreeMap<String, Counts>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// An instance where `H` is injective but not a cogenerator over a factor coalgebra, dumped
/// with everything needed to re-check it by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub instance: String,
    pub factor: String,
    pub labels: Vec<String>,
    pub subalgebra_basis: Vec<String>,
    pub ideal_basis: Vec<String>,
    pub factor_dim: usize,
    pub flags: ComoduleFlags,
}

impl Candidate {
    pub fn new(
        h: &FiniteHopfAlgebra,
        instance: &str,
        factor: &str,
        a: &CoidealSubalgebra,
        c: &FactorCoalgebra,
        flags: ComoduleFlags,
    ) -> Self {
        let fmt = |vs: &[exactla::SparseVec]| vs.iter().map(|v| h.format_vector(v)).collect();
        Candidate {
            instance: instance.to_owned(),
            factor: factor.to_owned(),
            labels: h.labels().to_vec(),
            subalgebra_basis: fmt(a.space().basis_vectors()),
            ideal_basis: fmt(c.ideal().basis_vectors()),
            factor_dim: c.dim(),
            flags,
        }
    }
}

/// Wall-clock data; the only part of a report that varies between identical runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metadata {
    pub total_ms: u64,
    /// Time per check kind, summed over instances (worker time, not wall time).
    pub check_ms: BTreeMap<String, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub seed: u64,
    pub summary: Summary,
    pub failures: Vec<Failure>,
    pub candidates: Vec<Candidate>,
    pub instances: Vec<CorrespondenceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

fn kind_of(check: &str) -> &str {
    check.split_once('/').map_or(check, |(k, _)| k)
}

pub fn summarize(instances: &[CorrespondenceReport]) -> Summary {
    let mut verdicts = Counts::default();
    let mut by_kind: BTreeMap<String, Counts> = BTreeMap::new();
    for v in instances.iter().flat_map(|r| &r.verdicts) {
        verdicts.add(v.status);
        by_kind.entry(kind_of(&v.check).to_owned()).or_default().add(v.status);
    }
    Summary { instances: instances.len(), verdicts, by_kind }
}

fn ms(us: u128) -> u64 {
    u64::try_from(us / 1000).unwrap_or(u64::MAX)
}

impl SuiteReport {
    pub fn assemble(
        seed: u64,
        instances: Vec<CorrespondenceReport>,
        candidates: Vec<Candidate>,
        check_us: BTreeMap<String, u128>,
        total_us: u128,
    ) -> Self {
        let failures = instances
            .iter()
            .flat_map(|r| {
                r.failures().map(|v| Failure { instance: r.instance.clone(), check: v.check.clone(), witness: v.witness.clone() })
            })
            .collect();
        SuiteReport {
            schema_version: SCHEMA_VERSION,
            seed,
            summary: summarize(&instances),
            failures,
            candidates,
            instances,
            metadata: Some(Metadata {
                total_ms: ms(total_us),
                check_ms: check_us.into_iter().map(|(k, us)| (k, ms(us))).collect(),
            }),
        }
    }

    pub fn passed(&self) -> bool {
        self.summary.verdicts.fail == 0
    }

    /// Process exit status: 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn without_metadata(mut self) -> Self {
        self.metadata = None;
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let c = &self.summary.verdicts;
        let _ = writeln!(out, "# Verification report\n");
        let _ = writeln!(
            out,
            "{} instances, {} verdicts: {} pass, {} fail, {} not applicable (seed {}).\n",
            self.summary.instances,
            c.total(),
            c.pass,
            c.fail,
            c.not_applicable,
            self.seed
        );
        let _ = writeln!(out, "| kind | pass | fail | n/a |\n|---|---|---|---|");
        for (kind, c) in &self.summary.by_kind {
            let _ = writeln!(out, "| {kind} | {} | {} | {} |", c.pass, c.fail, c.not_applicable);
        }
        if !self.failures.is_empty() {
            let _ = writeln!(out, "\n## Failures\n");
            for f in &self.failures {
                let _ = writeln!(out, "- `{}` on {}: {}", f.check, f.instance, f.witness.as_deref().unwrap_or("-"));
            }
        }
        if !self.candidates.is_empty() {
            let _ = writeln!(out, "\n## Open-question candidates\n");
            for cand in &self.candidates {
                let _ = writeln!(
                    out,
                    "- {} over {} (dim {}): A = span{{{}}}, ideal = span{{{}}}, flags {:?}",
                    cand.instance,
                    cand.factor,
                    cand.factor_dim,
                    cand.subalgebra_basis.join(", "),
                    cand.ideal_basis.join(", "),
                    cand.flags
                );
            }
        }
        let _ = writeln!(out, "\n## Instances\n\n| instance | pass | fail | n/a |\n|---|---|---|---|");
        for r in &self.instances {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} |",
                r.instance,
                r.count(Status::Pass),
                r.count(Status::Fail),
                r.count(Status::NotApplicable)
            );
        }
        if let Some(m) = &self.metadata {
            let _ = writeln!(out, "\nTotal {} ms.", m.total_ms);
        }
        out
    }
}
