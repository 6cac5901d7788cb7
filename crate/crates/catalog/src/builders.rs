//! Builders for group algebras, their duals, Sweedler's four-dimensional algebra and Taft
//! algebras, all presented in a fixed monomial basis.

use exactla::{Field, Matrix, Scalar, SparseVec};
use hopfcore::{FiniteHopfAlgebra, HopfTables};
use serde::{Deserialize, Serialize};

use crate::error::CatalogError;
use crate::format::Num;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    /// `kG` for `G = C_{n₁} × ⋯ × C_{n_r}`.
    GroupAlgebra { orders: Vec<usize> },
    /// `(kG)*`, the algebra of functions on `G`.
    DualGroupAlgebra { orders: Vec<usize> },
    Sweedler4,
    /// Dimension `n²`; `q` must be a primitive `n`-th root of unity.
    Taft { n: usize, q: Num },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    #[serde(flatten)]
    pub family: Family,
    /// `"Q"` or `"p=<prime>"`.
    #[serde(default = "rational")]
    pub field: String,
}

fn rational() -> String {
    "Q".into()
}

impl AlgebraSpec {
    pub fn new(family: Family, field: Field) -> Self {
        AlgebraSpec { family, field: field.descriptor() }
    }

    pub fn group(orders: &[usize], field: Field) -> Self {
        Self::new(Family::GroupAlgebra { orders: orders.to_vec() }, field)
    }

    pub fn dual_group(orders: &[usize], field: Field) -> Self {
        Self::new(Family::DualGroupAlgebra { orders: orders.to_vec() }, field)
    }

    pub fn sweedler(field: Field) -> Self {
        Self::new(Family::Sweedler4, field)
    }

    pub fn taft(n: usize, q: i64, field: Field) -> Self {
        Self::new(Family::Taft { n, q: Num::Int(q) }, field)
    }

    pub fn field(&self) -> Result<Field, CatalogError> {
        Ok(Field::parse(&self.field)?)
    }

    /// Short human-readable name, used as an instance id.
    pub fn name(&self) -> String {
        let group = |orders: &[usize]| {
            if orders.is_empty() {
                "1".to_string()
            } else {
                orders.iter().map(|n| format!("C{n}")).collect::<Vec<_>>().join("x")
            }
        };
        let f = Field::parse(&self.field).map(|f| f.to_string()).unwrap_or_else(|_| self.field.clone());
        match &self.family {
            Family::GroupAlgebra { orders } => format!("{f}[{}]", group(orders)),
            Family::DualGroupAlgebra { orders } => format!("{f}[{}]*", group(orders)),
            Family::Sweedler4 => format!("H4/{f}"),
            Family::Taft { n, q } => format!("Taft({n},{q})/{f}"),
        }
    }
}

/// The algebras every suite run covers by default.
pub fn default_catalog() -> Vec<AlgebraSpec> {
    let q = Field::Rational;
    let f7 = Field::Prime(7);
    vec![
        AlgebraSpec::group(&[2], q),
        AlgebraSpec::group(&[4], q),
        AlgebraSpec::group(&[3], f7),
        AlgebraSpec::dual_group(&[2], q),
        AlgebraSpec::dual_group(&[3], f7),
        AlgebraSpec::sweedler(q),
        AlgebraSpec::sweedler(f7),
        AlgebraSpec::taft(3, 2, f7),
    ]
}

pub fn build(spec: &AlgebraSpec) -> Result<FiniteHopfAlgebra, CatalogError> {
    let field = spec.field()?;
    let tables = match &spec.family {
        Family::GroupAlgebra { orders } => group_algebra(field, orders)?,
        Family::DualGroupAlgebra { orders } => dual_group_algebra(field, orders)?,
        Family::Sweedler4 => sweedler4(field),
        Family::Taft { n, q } => taft(field, *n, &q.to_scalar(field)?)?,
    };
    Ok(FiniteHopfAlgebra::new(tables)?)
}

/// An abelian group `∏ C_{nᵢ}`; element index is mixed-radix with the first factor fastest.
struct Abelian {
    orders: Vec<usize>,
}

impl Abelian {
    fn new(orders: &[usize]) -> Result<Self, CatalogError> {
        if orders.contains(&0) {
            return Err(CatalogError::Spec("cyclic factors must have order ≥ 1".into()));
        }
        Ok(Abelian { orders: orders.to_vec() })
    }

    fn size(&self) -> usize {
        self.orders.iter().product()
    }

    fn digits(&self, mut i: usize) -> Vec<usize> {
        self.orders
            .iter()
            .map(|n| {
                let d = i % n;
                i /= n;
                d
            })
            .collect()
    }

    fn index(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.orders).rev().fold(0, |acc, (d, n)| acc * n + d % n)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let s: Vec<usize> = self.digits(a).iter().zip(self.digits(b)).map(|(x, y)| x + y).collect();
        self.index(&s)
    }

    fn inv(&self, a: usize) -> usize {
        let d: Vec<usize> = self.digits(a).iter().zip(&self.orders).map(|(x, n)| (n - x) % n).collect();
        self.index(&d)
    }

    fn label(&self, a: usize) -> String {
        let single = self.orders.len() == 1;
        let s: String = self
            .digits(a)
            .iter()
            .enumerate()
            .filter(|(_, d)| **d > 0)
            .map(|(k, d)| {
                let g = if single { "g".to_string() } else { format!("g{}", k + 1) };
                if *d == 1 {
                    g
                } else {
                    format!("{g}^{d}")
                }
            })
            .collect();
        if s.is_empty() {
            "1".into()
        } else {
            s
        }
    }
}

fn unit_col(field: Field, n: usize, i: usize) -> Matrix {
    Matrix::from_columns(field, n, vec![SparseVec::unit(i, field.one())])
}

fn group_algebra(field: Field, orders: &[usize]) -> Result<HopfTables, CatalogError> {
    let g = Abelian::new(orders)?;
    let n = g.size();
    let one = field.one();
    let mult = Matrix::from_columns(field, n, (0..n * n).map(|c| SparseVec::unit(g.mul(c / n, c % n), one.clone())).collect());
    let comult = Matrix::from_columns(field, n * n, (0..n).map(|i| SparseVec::unit(i * n + i, one.clone())).collect());
    let counit = Matrix::from_rows(field, n, vec![SparseVec::from_pairs((0..n).map(|i| (i, one.clone())))]);
    let antipode = Matrix::from_columns(field, n, (0..n).map(|i| SparseVec::unit(g.inv(i), one.clone())).collect());
    Ok(HopfTables {
        field,
        labels: (0..n).map(|i| g.label(i)).collect(),
        mult,
        unit: unit_col(field, n, 0),
        comult,
        counit,
        antipode,
    })
}

/// Basis `δ_g` dual to the group basis; labels are the group labels with a trailing `*`.
fn dual_group_algebra(field: Field, orders: &[usize]) -> Result<HopfTables, CatalogError> {
    let g = Abelian::new(orders)?;
    let n = g.size();
    let one = field.one();
    let mult = Matrix::from_columns(
        field,
        n,
        (0..n * n)
            .map(|c| if c / n == c % n { SparseVec::unit(c / n, one.clone()) } else { SparseVec::new() })
            .collect(),
    );
    let unit = Matrix::from_columns(field, n, vec![SparseVec::from_pairs((0..n).map(|i| (i, one.clone())))]);
    let comult = Matrix::from_columns(
        field,
        n * n,
        (0..n)
            .map(|h| {
                SparseVec::from_pairs(
                    (0..n).map(|a| (a * n + g.mul(g.inv(a), h), one.clone())),
                )
            })
            .collect(),
    );
    let counit = Matrix::from_rows(field, n, vec![SparseVec::unit(0, one.clone())]);
    let antipode = Matrix::from_columns(field, n, (0..n).map(|i| SparseVec::unit(g.inv(i), one.clone())).collect());
    Ok(HopfTables {
        field,
        labels: (0..n).map(|i| format!("{}*", g.label(i))).collect(),
        mult,
        unit,
        comult,
        counit,
        antipode,
    })
}

/// Sweedler's algebra in the basis `1, g, x, gx`, written out by hand.
fn sweedler4(field: Field) -> HopfTables {
    let n = 4;
    let s = |v: i64| field.from_i64(v);
    let (one, g, x, gx) = (0, 1, 2, 3);
    // products e_i·e_j = c·e_k
    let products: [(usize, usize, i64, usize); 10] = [
        (one, one, 1, one),
        (one, g, 1, g),
        (one, x, 1, x),
        (one, gx, 1, gx),
        (g, g, 1, one),
        (g, x, 1, gx),
        (g, gx, 1, x),
        (x, g, -1, gx),
        (gx, g, -1, x),
        (g, one, 1, g),
    ];
    let mut mult = vec![SparseVec::new(); n * n];
    for (i, j, c, k) in products {
        mult[i * n + j] = SparseVec::unit(k, s(c));
    }
    mult[x * n + one] = SparseVec::unit(x, s(1));
    mult[gx * n + one] = SparseVec::unit(gx, s(1));
    let t = |a: usize, b: usize| a * n + b;
    let comult = vec![
        SparseVec::unit(t(one, one), s(1)),
        SparseVec::unit(t(g, g), s(1)),
        SparseVec::from_pairs([(t(x, one), s(1)), (t(g, x), s(1))]),
        SparseVec::from_pairs([(t(gx, g), s(1)), (t(one, gx), s(1))]),
    ];
    let antipode = vec![
        SparseVec::unit(one, s(1)),
        SparseVec::unit(g, s(1)),
        SparseVec::unit(gx, s(-1)),
        SparseVec::unit(x, s(1)),
    ];
    HopfTables {
        field,
        labels: ["1", "g", "x", "gx"].map(String::from).to_vec(),
        mult: Matrix::from_columns(field, n, mult),
        unit: unit_col(field, n, one),
        comult: Matrix::from_columns(field, n * n, comult),
        counit: Matrix::from_rows(field, n, vec![SparseVec::from_pairs([(one, s(1)), (g, s(1))])]),
        antipode: Matrix::from_columns(field, n, antipode),
    }
}

/// An algebra in which the product of two basis elements is a multiple of a basis element or 0.
struct Monomial {
    n: usize,
    prod: Vec<Option<(Scalar, usize)>>,
}

impl Monomial {
    fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                if let Some((c, k)) = &self.prod[i * self.n + j] {
                    out.push((*k, x * y * c));
                }
            }
        }
        SparseVec::from_pairs(out)
    }

    /// Componentwise product in `H⊗H`.
    fn mul_tensor(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let n = self.n;
        let mut out = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let (l1, r1, l2, r2) = (i / n, i % n, j / n, j % n);
                if let (Some((c, k)), Some((d, m))) = (&self.prod[l1 * n + l2], &self.prod[r1 * n + r2]) {
                    out.push((k * n + m, x * y * c * d));
                }
            }
        }
        SparseVec::from_pairs(out)
    }

    fn matrix(&self, field: Field) -> Matrix {
        let cols = self
            .prod
            .iter()
            .map(|p| match p {
                Some((c, k)) => SparseVec::unit(*k, c.clone()),
                None => SparseVec::new(),
            })
            .collect();
        Matrix::from_columns(field, self.n, cols)
    }
}

fn power_label(base: &str, e: usize) -> String {
    match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    }
}

/// Taft algebra: `g^n = 1`, `x^n = 0`, `xg = q·gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`.
/// Basis `g^i x^j` at index `j·n + i`.
fn taft(field: Field, n: usize, q: &Scalar) -> Result<HopfTables, CatalogError> {
    if n < 2 {
        return Err(CatalogError::Spec("Taft algebras need n ≥ 2".into()));
    }
    let has_root = match field {
        Field::Rational => n <= 2,
        Field::Prime(p) => (p as usize - 1).is_multiple_of(n),
    };
    if !has_root {
        return Err(CatalogError::FieldTooSmall { n, field: field.to_string() });
    }
    if q.multiplicative_order(n as u64) != Some(n as u64) {
        return Err(CatalogError::NotPrimitiveRoot { q: q.to_text(), n, field: field.to_string() });
    }
    let dim = n * n;
    let idx = |i: usize, j: usize| j * n + i;
    let mut prod = vec![None; dim * dim];
    for (a, b, c, d) in (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).flat_map(move |c| (0..n).map(move |d| (a, b, c, d))))) {
        if b + d < n {
            prod[idx(a, b) * dim + idx(c, d)] = Some((q.pow((b * c) as i64), idx((a + c) % n, b + d)));
        }
    }
    let alg = Monomial { n: dim, prod };
    let one = field.one();
    let e = |i: usize, j: usize| SparseVec::unit(idx(i, j), one.clone());
    let tensor = |l: usize, r: usize| SparseVec::unit(l * dim + r, one.clone());

    let delta_g = tensor(idx(1, 0), idx(1, 0));
    let delta_x = SparseVec::from_pairs([(idx(0, 1) * dim + idx(0, 0), one.clone()), (idx(1, 0) * dim + idx(0, 1), one.clone())]);
    let ginv = e(n - 1, 0);
    let s_x = alg.mul(&ginv, &e(0, 1)).neg();

    let mut comult = vec![SparseVec::new(); dim];
    let mut antipode = vec![SparseVec::new(); dim];
    let mut labels = vec![String::new(); dim];
    for i in 0..n {
        for j in 0..n {
            let mut d = tensor(0, 0);
            let mut s = e(0, 0);
            for _ in 0..i {
                d = alg.mul_tensor(&d, &delta_g);
            }
            for _ in 0..j {
                d = alg.mul_tensor(&d, &delta_x);
                s = alg.mul(&s, &s_x);
            }
            for _ in 0..i {
                s = alg.mul(&s, &ginv);
            }
            comult[idx(i, j)] = d;
            antipode[idx(i, j)] = s;
            let l = power_label("g", i) + &power_label("x", j);
            labels[idx(i, j)] = if l.is_empty() { "1".into() } else { l };
        }
    }
    Ok(HopfTables {
        field,
        labels,
        mult: alg.matrix(field),
        unit: unit_col(field, dim, 0),
        comult: Matrix::from_columns(field, dim * dim, comult),
        counit: Matrix::from_rows(field, dim, vec![SparseVec::from_pairs((0..n).map(|i| (idx(i, 0), one.clone())))]),
        antipode: Matrix::from_columns(field, dim, antipode),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_labels_and_inverse() {
        let g = Abelian::new(&[4]).unwrap();
        assert_eq!((0..4).map(|i| g.label(i)).collect::<Vec<_>>(), ["1", "g", "g^2", "g^3"]);
        assert_eq!(g.inv(1), 3);
        let k = Abelian::new(&[2, 3]).unwrap();
        assert_eq!(k.label(5), "g1g2^2");
        assert_eq!(k.mul(5, 5), k.index(&[0, 1]));
    }

    #[test]
    fn taft_labels() {
        let t = taft(Field::Prime(7), 3, &Field::Prime(7).from_i64(2)).unwrap();
        assert_eq!(t.labels, ["1", "g", "g^2", "x", "gx", "g^2x", "x^2", "gx^2", "g^2x^2"]);
    }

    #[test]
    fn spec_names() {
        assert_eq!(AlgebraSpec::group(&[2, 2], Field::Rational).name(), "Q[C2xC2]");
        assert_eq!(AlgebraSpec::taft(3, 2, Field::Prime(7)).name(), "Taft(3,2)/GF(7)");
    }
}
