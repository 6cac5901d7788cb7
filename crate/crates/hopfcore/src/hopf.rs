//! Structure-constant Hopf algebras: raw tables, the verified type, duals and twists.

use std::sync::OnceLock;

use exactla::{permutation_matrix, ColumnMap, Field, Matrix, Scalar, SparseVec};
use serde::Serialize;

use crate::axioms::{verify_axioms, AxiomReport};
use crate::error::HopfError;
use crate::structures::{Algebra, Coalgebra};

/// Unverified structure maps. `mult` is `n × n²` (column `i·n + j` is `eᵢ·eⱼ`), `comult` is
/// `n² × n` (row `j·n + k` of column `i` is the coefficient of `eⱼ⊗eₖ` in `Δeᵢ`), `unit` is
/// `n × 1`, `counit` is `1 × n`, `antipode` is `n × n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfTables {
    pub field: Field,
    pub labels: Vec<String>,
    pub mult: Matrix,
    pub unit: Matrix,
    pub comult: Matrix,
    pub counit: Matrix,
    pub antipode: Matrix,
}

/// Rank-3 table `t[i][j][k]`.
pub type Table3 = Vec<Vec<Vec<Scalar>>>;

impl HopfTables {
    pub fn dim(&self) -> usize {
        self.mult.nrows()
    }

    pub fn check_shapes(&self) -> Result<(), HopfError> {
        let n = self.dim();
        let ok = self.labels.len() == n
            && self.mult.shape() == (n, n * n)
            && self.unit.shape() == (n, 1)
            && self.comult.shape() == (n * n, n)
            && self.counit.shape() == (1, n)
            && self.antipode.shape() == (n, n);
        let same_field = [&self.mult, &self.unit, &self.comult, &self.counit, &self.antipode]
            .iter()
            .all(|m| m.field() == self.field);
        if !ok || !same_field {
            return Err(HopfError::Shape(format!(
                "dim {n}: labels {}, mult {:?}, unit {:?}, comult {:?}, counit {:?}, antipode {:?}",
                self.labels.len(),
                self.mult.shape(),
                self.unit.shape(),
                self.comult.shape(),
                self.counit.shape(),
                self.antipode.shape()
            )));
        }
        Ok(())
    }

    /// Build from rank-3 tables: `mu[i][j][k]` is the coefficient of `e_k` in `eᵢ·eⱼ`,
    /// `delta[i][j][k]` the coefficient of `eⱼ⊗e_k` in `Δeᵢ`, `antipode[i][j]` the
    /// coefficient of `eᵢ` in `S(eⱼ)` (the matrix of `S`).
    pub fn from_tables(
        field: Field,
        labels: Vec<String>,
        mu: &Table3,
        unit: &[Scalar],
        delta: &Table3,
        counit: &[Scalar],
        antipode: &[Vec<Scalar>],
    ) -> Result<Self, HopfError> {
        let n = labels.len();
        let bad = |what: &str| HopfError::Shape(format!("{what} table has wrong dimensions for dim {n}"));
        let cube_ok = |t: &Table3| t.len() == n && t.iter().all(|a| a.len() == n && a.iter().all(|b| b.len() == n));
        if !cube_ok(mu) {
            return Err(bad("mult"));
        }
        if !cube_ok(delta) {
            return Err(bad("comult"));
        }
        if unit.len() != n {
            return Err(bad("unit"));
        }
        if counit.len() != n {
            return Err(bad("counit"));
        }
        if antipode.len() != n || antipode.iter().any(|r| r.len() != n) {
            return Err(bad("antipode"));
        }
        let mult = Matrix::from_fn(field, n, n * n, |k, ij| mu[ij / n][ij % n][k].clone());
        let comult = Matrix::from_fn(field, n * n, n, |jk, i| delta[i][jk / n][jk % n].clone());
        let unit_m = Matrix::from_fn(field, n, 1, |i, _| unit[i].clone());
        let counit_m = Matrix::from_fn(field, 1, n, |_, i| counit[i].clone());
        let s = Matrix::from_fn(field, n, n, |i, j| antipode[i][j].clone());
        Ok(HopfTables { field, labels, mult, unit: unit_m, comult, counit: counit_m, antipode: s })
    }

    pub fn mult_table(&self) -> Table3 {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.mult.get(k, i * n + j)).collect()).collect())
            .collect()
    }

    pub fn comult_table(&self) -> Table3 {
        let n = self.dim();
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|k| self.comult.get(j * n + k, i)).collect()).collect())
            .collect()
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        (0..self.dim()).map(|i| self.unit.get(i, 0)).collect()
    }

    pub fn counit_vector(&self) -> Vec<Scalar> {
        (0..self.dim()).map(|i| self.counit.get(0, i)).collect()
    }

    pub fn antipode_table(&self) -> Vec<Vec<Scalar>> {
        self.antipode.to_dense()
    }

    /// Structural equality ignoring labels.
    pub fn same_structure(&self, other: &HopfTables) -> bool {
        self.field == other.field
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

/// Which opposite structure to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Twist {
    Op,
    Cop,
    OpCop,
}

/// A Hopf algebra whose tables passed every axiom check, with bijective antipode.
#[derive(Clone, Debug)]
pub struct FiniteHopfAlgebra {
    tables: HopfTables,
    antipode_inv: Matrix,
    algebra: Algebra,
    coalgebra: Coalgebra,
    antipode_map: ColumnMap,
    antipode_inv_map: ColumnMap,
    twists: [OnceLock<Box<FiniteHopfAlgebra>>; 3],
}

impl PartialEq for FiniteHopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.tables == other.tables
    }
}

impl Eq for FiniteHopfAlgebra {}

impl FiniteHopfAlgebra {
    /// Verify every axiom family; the only way to obtain a `FiniteHopfAlgebra`.
    pub fn new(tables: HopfTables) -> Result<Self, HopfError> {
        let report = verify_axioms(&tables)?;
        if !report.all_pass() {
            return Err(HopfError::Axioms(Box::new(report)));
        }
        let antipode_inv = tables.antipode.inverse().expect("checked invertible");
        let algebra = Algebra::new(tables.mult.clone(), tables.unit.clone())?;
        let coalgebra = Coalgebra::new(tables.comult.clone(), tables.counit.clone())?;
        let antipode_map = ColumnMap::new(&tables.antipode);
        let antipode_inv_map = ColumnMap::new(&antipode_inv);
        Ok(FiniteHopfAlgebra {
            tables,
            antipode_inv,
            algebra,
            coalgebra,
            antipode_map,
            antipode_inv_map,
            twists: Default::default(),
        })
    }

    pub fn tables(&self) -> &HopfTables {
        &self.tables
    }

    pub fn into_tables(self) -> HopfTables {
        self.tables
    }

    pub fn field(&self) -> Field {
        self.tables.field
    }

    pub fn dim(&self) -> usize {
        self.tables.dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.tables.labels
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn mult(&self) -> &Matrix {
        &self.tables.mult
    }

    pub fn comult(&self) -> &Matrix {
        &self.tables.comult
    }

    pub fn unit(&self) -> &Matrix {
        &self.tables.unit
    }

    pub fn counit(&self) -> &Matrix {
        &self.tables.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.tables.antipode
    }

    pub fn antipode_inv(&self) -> &Matrix {
        &self.antipode_inv
    }

    pub fn mult_map(&self) -> &ColumnMap {
        self.algebra.mult_map()
    }

    pub fn comult_map(&self) -> &ColumnMap {
        self.coalgebra.comult_map()
    }

    pub fn antipode_map(&self) -> &ColumnMap {
        &self.antipode_map
    }

    pub fn antipode_inv_map(&self) -> &ColumnMap {
        &self.antipode_inv_map
    }

    pub fn one(&self) -> SparseVec {
        self.algebra.unit_vector()
    }

    pub fn basis_vector(&self, i: usize) -> SparseVec {
        SparseVec::unit(i, self.field().one())
    }

    pub fn product(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.algebra.product(a, b)
    }

    pub fn coproduct(&self, a: &SparseVec) -> SparseVec {
        self.coalgebra.coproduct(a)
    }

    pub fn counit_of(&self, a: &SparseVec) -> Scalar {
        self.coalgebra.counit_of(a)
    }

    pub fn antipode_of(&self, a: &SparseVec) -> SparseVec {
        self.tables.antipode.apply(a)
    }

    pub fn verify(&self) -> AxiomReport {
        verify_axioms(&self.tables).expect("shapes already checked")
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// Smallest `k ≤ bound` with `S^k = id`.
    pub fn antipode_order(&self, bound: u32) -> Option<u32> {
        let mut p = self.tables.antipode.clone();
        for k in 1..=bound {
            if p.is_identity() {
                return Some(k);
            }
            p = p.mul(&self.tables.antipode);
        }
        None
    }

    /// `H*` in the dual basis: every structure map is transposed.
    pub fn dual(&self) -> FiniteHopfAlgebra {
        let t = &self.tables;
        let tables = HopfTables {
            field: t.field,
            labels: t.labels.iter().map(|l| format!("{l}*")).collect(),
            mult: t.comult.transpose(),
            unit: t.counit.transpose(),
            comult: t.mult.transpose(),
            counit: t.unit.transpose(),
            antipode: t.antipode.transpose(),
        };
        FiniteHopfAlgebra::new(tables).expect("dual of a Hopf algebra is a Hopf algebra")
    }

    /// Like [`twist`](Self::twist), computed once and cached.
    pub fn twisted(&self, which: Twist) -> &FiniteHopfAlgebra {
        let slot = match which {
            Twist::Op => 0,
            Twist::Cop => 1,
            Twist::OpCop => 2,
        };
        self.twists[slot].get_or_init(|| Box::new(self.twist(which)))
    }

    pub fn twist(&self, which: Twist) -> FiniteHopfAlgebra {
        let t = &self.tables;
        let n = self.dim();
        let swap = permutation_matrix(t.field, &[n, n], &[1, 0]);
        let (mult, comult, antipode) = match which {
            Twist::Op => (t.mult.mul(&swap), t.comult.clone(), self.antipode_inv.clone()),
            Twist::Cop => (t.mult.clone(), swap.mul(&t.comult), self.antipode_inv.clone()),
            Twist::OpCop => (t.mult.mul(&swap), swap.mul(&t.comult), t.antipode.clone()),
        };
        let tables = HopfTables {
            field: t.field,
            labels: t.labels.clone(),
            mult,
            unit: t.unit.clone(),
            comult,
            counit: t.counit.clone(),
            antipode,
        };
        FiniteHopfAlgebra::new(tables).expect("twist of a Hopf algebra is a Hopf algebra")
    }

    /// Human-readable form of a vector in the labelled basis.
    pub fn format_vector(&self, v: &SparseVec) -> String {
        if v.is_zero() {
            return "0".into();
        }
        v.iter()
            .map(|(i, c)| {
                let l = &self.tables.labels[*i];
                if c.is_one() {
                    l.clone()
                } else {
                    format!("({c})·{l}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> HopfTables {
        let q = Field::Rational;
        let (o, z) = (q.one(), q.zero());
        let mu = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
            vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]],
        ];
        let delta = vec![
            vec![vec![o.clone(), z.clone()], vec![z.clone(), z.clone()]],
            vec![vec![z.clone(), z.clone()], vec![z.clone(), o.clone()]],
        ];
        let s = vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]];
        HopfTables::from_tables(q, vec!["1".into(), "g".into()], &mu, &[o.clone(), z.clone()], &delta, &[o.clone(), o], &s)
            .unwrap()
    }

    #[test]
    fn rank3_tables_round_trip() {
        let t = c2();
        let back = HopfTables::from_tables(
            t.field,
            t.labels.clone(),
            &t.mult_table(),
            &t.unit_vector(),
            &t.comult_table(),
            &t.counit_vector(),
            &t.antipode_table(),
        )
        .unwrap();
        assert_eq!(back, t);
        assert!(FiniteHopfAlgebra::new(t).is_ok());
    }

    #[test]
    fn dual_labels() {
        let h = FiniteHopfAlgebra::new(c2()).unwrap();
        assert_eq!(h.dual().labels(), ["1*", "g*"]);
        assert_eq!(h.format_vector(&SparseVec::from_dense(&[Field::Rational.one(), Field::Rational.from_i64(-2)])), "1 + (-2)·g");
    }
}
