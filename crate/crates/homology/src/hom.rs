//! The right `H`-comodule structure on `Hom_A(M, N)` for Hopf modules in `M_A^H`.

use correspondence::Side;
use exactla::{build_map, ColumnMap, Matrix, SparseVec, Subspace};
use hopfmod::{module_homs, Category, ComoduleStr, HopfModule, Setting};

use crate::error::HomologyError;

/// `Hom_A(M, N)` in the basis `homs`, realised inside `N⊗U*` for a subcomodule `U ⊆ M` with
/// `UA = M`.
#[derive(Clone, Debug)]
pub struct HomComodule {
    pub comodule: ComoduleStr,
    pub homs: Vec<Matrix>,
    /// Embedding of `U` in `M`.
    pub generating_comodule: Matrix,
    /// `Hom_A(M, N)⊗M → N`.
    pub evaluation: Matrix,
    pub evaluation_colinear: bool,
}

/// Smallest-by-greedy subcomodule of `M` generating it as an `A`-module.
fn generating_subcomodule(m: &HopfModule) -> Subspace {
    let f = m.module().field();
    let mut vectors = Vec::new();
    let mut u = Subspace::zero(f, m.dim());
    let mut ua = u.clone();
    for i in 0..m.dim() {
        if ua.is_full() {
            break;
        }
        let e = SparseVec::unit(i, f.one());
        if !ua.contains(&e) {
            vectors.push(e);
            u = m.comodule().generated(&vectors);
            ua = m.module().generated(u.basis_vectors());
        }
    }
    u
}

/// `rows × cols` matrix from a vector indexed `row·cols + col`.
fn reshape(v: &SparseVec, rows: usize, cols: usize, field: exactla::Field) -> Matrix {
    Matrix::from_rows(field, cols, (0..rows).map(|r| v.window(r * cols, (r + 1) * cols)).collect())
}

fn flatten(m: &Matrix) -> SparseVec {
    let cols = m.ncols();
    SparseVec::from_pairs(m.rows().iter().enumerate().flat_map(|(r, row)| row.iter().map(move |(c, x)| (r * cols + c, x.clone()))))
}

/// Coaction `x⊗y ↦ x₀⊗y₀⊗x₁y₁` on a tensor product of right `H`-comodules.
fn tensor_coaction(s: &Setting, x: &Matrix, xdim: usize, y: &Matrix, ydim: usize) -> Matrix {
    let h = s.hopf();
    let hd = h.dim();
    let (x, y) = (ColumnMap::new(x), ColumnMap::new(y));
    build_map(h.field(), &[xdim, ydim], xdim * ydim * hd, |t| {
        t.apply(0, 1, &x, &[xdim, hd]).apply(2, 1, &y, &[ydim, hd]).permute(&[0, 2, 1, 3]).apply(2, 2, h.mult_map(), &[hd])
    })
}

pub fn hom_comodule(s: &Setting, m: &HopfModule, n: &HopfModule) -> Result<HomComodule, HomologyError> {
    m.expect_category(Category::RightARightH)?;
    n.expect_category(Category::RightARightH)?;
    let h = s.hopf();
    let f = h.field();
    let hd = h.dim();
    let (dm, dn) = (m.dim(), n.dim());
    let u = generating_subcomodule(m);
    let r = u.dim();
    let emb = u.embedding();
    let rho_m = m.comodule().coaction();
    // ρ(u_j) = Σ_i u_i ⊗ c_ij, stored as the r×h matrix of row i = c_ij
    let c: Vec<Matrix> = (0..r)
        .map(|j| {
            let z = reshape(&rho_m.apply(&u.basis_vectors()[j]), dm, hd, f);
            u.coordinates_of_columns(&z).ok_or(HomologyError::HomNotStable)
        })
        .collect::<Result<_, _>>()?;
    // left dual: u^i ↦ Σ_j u^j ⊗ S(c_ij)
    let s_map = h.antipode();
    let dual_cols = (0..r)
        .map(|i| {
            let mut pairs = Vec::new();
            for (j, cj) in c.iter().enumerate() {
                for (t, x) in s_map.apply(cj.row(i)).into_entries() {
                    pairs.push((j * hd + t, x));
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    let rho_dual = Matrix::from_columns(f, r * hd, dual_cols);
    let rho_space = tensor_coaction(s, n.comodule().coaction(), dn, &rho_dual, r);

    let homs = module_homs(m.module(), n.module());
    let k = homs.len();
    let g = Matrix::from_columns(f, dn * r, homs.iter().map(|x| flatten(&x.mul(&emb))).collect());
    let space = Subspace::image(&g);
    let to_g = if k == 0 {
        Matrix::identity(f, 0)
    } else {
        space.coordinates_of_columns(&g).and_then(|t| t.inverse()).expect("Hom basis is independent in N⊗U*")
    };
    let images = rho_space.mul(&g);
    let mut cols = Vec::with_capacity(k);
    for col in images.columns() {
        let z = reshape(&col, dn * r, hd, f);
        let x = to_g.mul(&space.coordinates_of_columns(&z).ok_or(HomologyError::HomNotStable)?);
        cols.push(flatten(&x));
    }
    let coaction = Matrix::from_columns(f, k * hd, cols);
    let comodule = ComoduleStr::new(h.coalgebra(), Side::Right, coaction)?;

    let evaluation = Matrix::from_columns(f, dn, homs.iter().flat_map(|x| x.columns()).collect());
    let source = tensor_coaction(s, comodule.coaction(), k, rho_m, dm);
    let lifted = evaluation.kron(&Matrix::identity(f, hd));
    let evaluation_colinear = n.comodule().coaction().mul(&evaluation) == lifted.mul(&source);
    Ok(HomComodule { comodule, homs, generating_comodule: emb, evaluation, evaluation_colinear })
}
