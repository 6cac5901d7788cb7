//! Exact verification of the Hopf algebra axioms on structure matrices.

use exactla::tensor::unflatten_index;
use exactla::{permutation_matrix, Matrix};
use serde::Serialize;

use crate::error::HopfError;
use crate::hopf::HopfTables;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomFamily {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultMultiplicative,
    CounitMultiplicative,
    Antipode,
    AntipodeInvertible,
}

impl AxiomFamily {
    pub const ALL: [AxiomFamily; 8] = [
        AxiomFamily::Associativity,
        AxiomFamily::Unit,
        AxiomFamily::Coassociativity,
        AxiomFamily::Counit,
        AxiomFamily::ComultMultiplicative,
        AxiomFamily::CounitMultiplicative,
        AxiomFamily::Antipode,
        AxiomFamily::AntipodeInvertible,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            AxiomFamily::Associativity => "associativity",
            AxiomFamily::Unit => "unit",
            AxiomFamily::Coassociativity => "coassociativity",
            AxiomFamily::Counit => "counit",
            AxiomFamily::ComultMultiplicative => "comult_multiplicative",
            AxiomFamily::CounitMultiplicative => "counit_multiplicative",
            AxiomFamily::Antipode => "antipode",
            AxiomFamily::AntipodeInvertible => "antipode_invertible",
        }
    }
}

/// Where an identity first fails: the input basis tuple and the output coordinate that differs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub basis: Vec<usize>,
    pub component: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub family: AxiomFamily,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, family: AxiomFamily) -> &AxiomCheck {
        self.checks.iter().find(|c| c.family == family).expect("every family is checked")
    }

    pub fn failed_families(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.family.name()).collect()
    }
}

/// Compare two maps `V^{⊗k} → W`; on mismatch report the first input basis tuple that differs.
fn compare(a: &Matrix, b: &Matrix, in_dims: &[usize]) -> Option<Witness> {
    let d = a.sub(b);
    if d.is_zero() {
        return None;
    }
    let cols = d.columns();
    let (j, col) = cols.iter().enumerate().find(|(_, c)| !c.is_zero())?;
    Some(Witness { basis: unflatten_index(j, in_dims), component: col.leading().unwrap().0 })
}

fn check(family: AxiomFamily, witness: Option<Witness>) -> AxiomCheck {
    AxiomCheck { family, passed: witness.is_none(), witness }
}

/// Check all seven axiom families and antipode bijectivity.
pub fn verify_axioms(t: &HopfTables) -> Result<AxiomReport, HopfError> {
    t.check_shapes()?;
    let n = t.dim();
    let f = t.field;
    let id = Matrix::identity(f, n);
    let m = &t.mult;
    let d = &t.comult;
    let u = &t.unit;
    let e = &t.counit;
    let s = &t.antipode;

    let assoc = compare(&m.mul(&m.kron(&id)), &m.mul(&id.kron(m)), &[n, n, n]);

    let unit = compare(&m.mul(&u.kron(&id)), &id, &[n])
        .or_else(|| compare(&m.mul(&id.kron(u)), &id, &[n]));

    let coassoc = compare(&d.kron(&id).mul(d), &id.kron(d).mul(d), &[n]);

    let counit = compare(&e.kron(&id).mul(d), &id, &[n])
        .or_else(|| compare(&id.kron(e).mul(d), &id, &[n]));

    // Δ(ab) = Δ(a)Δ(b) and Δ(1) = 1⊗1.
    let mid = permutation_matrix(f, &[n, n, n, n], &[0, 2, 1, 3]);
    let delta_mult = compare(&d.mul(m), &m.kron(m).mul(&mid).mul(&d.kron(d)), &[n, n])
        .or_else(|| compare(&d.mul(u), &u.kron(u), &[]));

    let eps_mult = compare(&e.mul(m), &e.kron(e), &[n, n])
        .or_else(|| compare(&e.mul(u), &Matrix::identity(f, 1), &[]));

    let ue = u.mul(e);
    let antipode = compare(&m.mul(&s.kron(&id)).mul(d), &ue, &[n])
        .or_else(|| compare(&m.mul(&id.kron(s)).mul(d), &ue, &[n]));

    let invertible = if s.inverse().is_some() {
        None
    } else {
        Some(Witness { basis: Vec::new(), component: 0 })
    };

    Ok(AxiomReport {
        checks: vec![
            check(AxiomFamily::Associativity, assoc),
            check(AxiomFamily::Unit, unit),
            check(AxiomFamily::Coassociativity, coassoc),
            check(AxiomFamily::Counit, counit),
            check(AxiomFamily::ComultMultiplicative, delta_mult),
            check(AxiomFamily::CounitMultiplicative, eps_mult),
            check(AxiomFamily::Antipode, antipode),
            check(AxiomFamily::AntipodeInvertible, invertible),
        ],
    })
}
