//! Free and cofree resolutions and the Tor, Ext and Cotor dimensions computed from them.

use correspondence::Side;
use exactla::{kernel, Matrix, SparseVec, Subspace};
use hopfcore::{Algebra, Coalgebra};
use hopfmod::{cotensor, module_homs, tensor_over, ComoduleStr, ModError, ModuleStr};

use crate::comodules::is_injective_comodule;
use crate::error::HomologyError;
use crate::modules::{free_cover, is_projective};
use crate::util::{block, eye, nullity, padded};

/// Resolutions are computed up to degree `max(8, 2·dim)`.
pub fn truncation_degree(dim: usize) -> usize {
    8.max(2 * dim)
}

/// One term of a resolution: a free `A^rank` or cofree `C⊗k^rank` of dimension `dim`, with
/// the differential that reaches it (cofree) or leaves it (free).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionStep {
    pub rank: usize,
    pub dim: usize,
    pub differential: Matrix,
}

fn expect_side(found: Side, expected: Side) -> Result<(), HomologyError> {
    if found == expected {
        Ok(())
    } else {
        Err(ModError::SideMismatch { expected, found }.into())
    }
}

/// `⋯ → F₁ → F₀ → M → 0` with `F_i = A^{r_i}`; `steps[0].differential` is the augmentation
/// `F₀ → M` and `steps[i].differential` is `F_i → F_{i−1}`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    pub side: Side,
    pub target_dim: usize,
    pub steps: Vec<ResolutionStep>,
    /// `coefficients[i][k][l]`: the `l`-th coordinate in `A` of the image of the `k`-th free
    /// generator of `F_i` (empty for `i = 0`).
    pub coefficients: Vec<Vec<Vec<SparseVec>>>,
}

/// A projective syzygy `K ⊆ F_{n−1}` that closes a resolution at degree `n = steps.len()`.
struct ProjectiveTail {
    module: ModuleStr,
    embedding: Matrix,
}

/// Resolution of `m` by iterated greedy free covers of kernels, through degree `length`.
pub fn free_resolution(alg: &Algebra, m: &ModuleStr, length: usize) -> FreeResolution {
    resolve(alg, m, length, false).0
}

/// Greedy free covers until degree `length`, or with `close` until the first projective
/// syzygy, which is returned instead of being covered further.
fn resolve(alg: &Algebra, m: &ModuleStr, length: usize, close: bool) -> (FreeResolution, Option<ProjectiveTail>) {
    let f = alg.field();
    let d = alg.dim();
    let one = alg.unit_vector();
    let cover = free_cover(alg, m);
    let mut steps = vec![ResolutionStep { rank: cover.rank(), dim: cover.free.dim(), differential: cover.map.clone() }];
    let mut coefficients = vec![Vec::new()];
    let mut free = cover.free;
    let mut ker = kernel(&cover.map);
    let finish = |steps, coefficients| FreeResolution { side: m.side(), target_dim: m.dim(), steps, coefficients };
    for _ in 1..=length {
        if ker.is_zero() {
            if close {
                let tail = ProjectiveTail { module: ModuleStr::free(alg, m.side(), 0), embedding: Matrix::zeros(f, free.dim(), 0) };
                return (finish(steps, coefficients), Some(tail));
            }
            steps.push(ResolutionStep { rank: 0, dim: 0, differential: Matrix::zeros(f, free.dim(), 0) });
            coefficients.push(Vec::new());
            free = ModuleStr::free(alg, m.side(), 0);
            ker = Subspace::zero(f, 0);
            continue;
        }
        let sub = free.submodule(&ker).expect("kernel of a module map");
        if close && is_projective(alg, &sub) {
            let tail = ProjectiveTail { module: sub, embedding: ker.embedding() };
            return (finish(steps, coefficients), Some(tail));
        }
        let cover = free_cover(alg, &sub);
        let diff = ker.embedding().mul(&cover.map);
        let rows = free.dim() / d;
        let coeffs = (0..cover.rank())
            .map(|k| {
                let image = diff.apply(&one.shifted(k * d));
                (0..rows).map(|l| block(&image, l, d)).collect()
            })
            .collect();
        coefficients.push(coeffs);
        ker = kernel(&diff);
        steps.push(ResolutionStep { rank: cover.rank(), dim: cover.free.dim(), differential: diff });
        free = cover.free;
    }
    (finish(steps, coefficients), None)
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.steps.len() - 1
    }

    /// Differentials compose to zero, the augmentation is onto, and the complex is exact at
    /// every interior term. Returns the first failing degree.
    pub fn validate(&self) -> Result<(), usize> {
        if self.steps[0].differential.rank() != self.target_dim {
            return Err(0);
        }
        for i in 1..self.steps.len() {
            let (prev, cur) = (&self.steps[i - 1].differential, &self.steps[i].differential);
            if !prev.mul(cur).is_zero() || nullity(prev) != cur.rank() {
                return Err(i);
            }
        }
        Ok(())
    }
}

/// Block matrix of `(x_k) ↦ (Σ_k x_k·a_{lk})_l` from `X^{cols}` to `X^{rows}`, or with
/// `transposed` the map `(x_l) ↦ (Σ_l a_{lk}·x_l)_k` from `X^{rows}` to `X^{cols}`.
fn coefficient_blocks(x: &ModuleStr, coefficients: &[Vec<SparseVec>], rows: usize, transposed: bool) -> Matrix {
    let f = x.field();
    let n = x.dim();
    let cols = coefficients.len();
    let (out_rank, in_rank) = if transposed { (cols, rows) } else { (rows, cols) };
    let mut out = Matrix::zeros(f, out_rank * n, in_rank * n);
    for (k, images) in coefficients.iter().enumerate() {
        for (l, a) in images.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (r, c) = if transposed { (k, l) } else { (l, k) };
            let unit = Matrix::column_vector(f, out_rank, SparseVec::unit(r, f.one()))
                .mul(&Matrix::row_vector(f, in_rank, SparseVec::unit(c, f.one())));
            out = out.add(&unit.kron(&x.act(a)));
        }
    }
    out
}

/// `H^i = d_i − r_{i−1} − r_i` for `i = 0..=max_degree`, where `r_i` is the rank of the
/// differential between degrees `i` and `i + 1` (in either direction); missing entries are zero.
fn homology_dims(dims: &[usize], ranks: &[usize], max_degree: usize) -> Vec<usize> {
    let at = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    (0..=max_degree).map(|i| at(dims, i) - at(ranks, i) - if i == 0 { 0 } else { at(ranks, i - 1) }).collect()
}

/// `M⊗A^r → M^r`, `m⊗(e_k⊗b) ↦ e_k⊗mb`, for a right module `M`.
fn act_blockwise(m: &ModuleStr, r: usize) -> Matrix {
    let f = m.field();
    let (n, d) = (m.dim(), m.algebra_dim());
    let cols = (0..n * r * d)
        .map(|j| {
            let (i, k, b) = (j / (r * d), (j / d) % r, j % d);
            m.action().column(i * d + b).shifted(k * n)
        })
        .collect();
    Matrix::from_columns(f, n * r, cols)
}

/// `dim Tor^A_i(M, V)` for `i = 0..=max_degree`: resolve `V` and apply `M⊗_A−`, using
/// `M⊗_A A^r ≅ M^r`.
pub fn tor_dims(alg: &Algebra, m: &ModuleStr, v: &ModuleStr, max_degree: usize) -> Result<Vec<usize>, HomologyError> {
    expect_side(m.side(), Side::Right)?;
    expect_side(v.side(), Side::Left)?;
    let (res, tail) = resolve(alg, v, max_degree + 1, true);
    let mut dims: Vec<usize> = res.steps.iter().map(|s| s.rank * m.dim()).collect();
    let mut ranks: Vec<usize> = (1..res.steps.len())
        .map(|i| coefficient_blocks(m, &res.coefficients[i], res.steps[i - 1].rank, false).rank())
        .collect();
    if let Some(tail) = tail {
        // M⊗_A K → M⊗_A F_{n−1} ≅ M^r through the inclusion K ⊆ F_{n−1}
        let tp = tensor_over(m, &tail.module)?;
        let r = res.steps.last().expect("nonempty").rank;
        let map = act_blockwise(m, r).mul(&eye(m.field(), m.dim()).kron(&tail.embedding)).mul(tp.section());
        dims.push(tp.dim());
        ranks.push(map.rank());
    }
    Ok(homology_dims(&dims, &ranks, max_degree))
}

pub fn tor(alg: &Algebra, m: &ModuleStr, v: &ModuleStr, degree: usize) -> Result<usize, HomologyError> {
    Ok(tor_dims(alg, m, v, degree)?[degree])
}

/// `dim Ext_A^i(M, V)` for `i = 0..=max_degree`, `M` and `V` on the same side: resolve `M`
/// and apply `Hom_A(−, V)`, using `Hom_A(A^r, V) ≅ V^r`.
pub fn ext_dims(alg: &Algebra, m: &ModuleStr, v: &ModuleStr, max_degree: usize) -> Result<Vec<usize>, HomologyError> {
    expect_side(v.side(), m.side())?;
    let (res, tail) = resolve(alg, m, max_degree + 1, true);
    let mut dims: Vec<usize> = res.steps.iter().map(|s| s.rank * v.dim()).collect();
    let mut ranks: Vec<usize> = (1..res.steps.len())
        .map(|i| coefficient_blocks(v, &res.coefficients[i], res.steps[i - 1].rank, true).rank())
        .collect();
    if let Some(tail) = tail {
        // V^r ≅ Hom_A(F_{n−1}, V) → Hom_A(K, V), f ↦ f|_K, with Hom(K, V) flattened column-major
        let f = v.field();
        let (nv, d, nk) = (v.dim(), alg.dim(), tail.module.dim());
        let r = res.steps.last().expect("nonempty").rank;
        let acts: Vec<Matrix> = (0..d).map(|b| v.act(&SparseVec::unit(b, f.one()))).collect();
        let cols = (0..r * nv)
            .map(|j| {
                let (k, i) = (j / nv, j % nv);
                let map_block = Matrix::from_columns(f, nv, acts.iter().map(|a| a.column(i)).collect());
                let rows: Vec<usize> = (k * d..(k + 1) * d).collect();
                let restricted = map_block.mul(&tail.embedding.select_rows(&rows));
                let mut flat = SparseVec::new();
                for (c, col) in restricted.columns().into_iter().enumerate() {
                    flat = flat.add(&col.shifted(c * nv));
                }
                flat
            })
            .collect();
        dims.push(module_homs(&tail.module, v).len());
        ranks.push(Matrix::from_columns(f, nv * nk, cols).rank());
    }
    Ok(homology_dims(&dims, &ranks, max_degree))
}

pub fn ext(alg: &Algebra, m: &ModuleStr, v: &ModuleStr, degree: usize) -> Result<usize, HomologyError> {
    Ok(ext_dims(alg, m, v, degree)?[degree])
}

/// `0 → W → I⁰ → I¹ → ⋯` with `I^i = C⊗k^{r_i}`; `steps[0].differential` is the
/// coaugmentation `W → I⁰` and `steps[i].differential` is `I^{i−1} → I^i`.
#[derive(Clone, Debug)]
pub struct CofreeResolution {
    pub side: Side,
    pub source_dim: usize,
    pub steps: Vec<ResolutionStep>,
}

/// Greedy cofree hull of a left comodule: coordinate functionals `T` are added until
/// `x ↦ Σ x₋₁ ⊗ x₀[t]e_t` is injective; each functional nonzero on the current kernel
/// shrinks it because `(ε⊗id)λ = id`.
fn cofree_hull(x: &ComoduleStr) -> (usize, Matrix) {
    let f = x.field();
    let (n, c) = (x.dim(), x.coalgebra_dim());
    let mut chosen: Vec<usize> = Vec::new();
    let embed = |chosen: &[usize]| {
        let select = Matrix::from_rows(f, n, chosen.iter().map(|&t| SparseVec::unit(t, f.one())).collect());
        padded(&select, c, 1).mul(x.coaction())
    };
    let mut map = embed(&chosen);
    loop {
        let ker = kernel(&map);
        let Some(v) = ker.basis_vectors().first() else { break };
        let (t, _) = *v.leading().expect("nonzero kernel vector");
        chosen.push(t);
        map = embed(&chosen);
    }
    (chosen.len(), map)
}

/// Minimal-by-greedy cofree resolution of a left comodule through `I^length`.
pub fn cofree_resolution(coalg: &Coalgebra, w: &ComoduleStr, length: usize) -> Result<CofreeResolution, HomologyError> {
    Ok(coresolve(coalg, w, length, false)?.0)
}

/// An injective cokernel `I^{n−1} → Q` that closes a resolution at degree `n = steps.len()`.
struct InjectiveTail {
    comodule: ComoduleStr,
    projection: Matrix,
}

fn coresolve(
    coalg: &Coalgebra,
    w: &ComoduleStr,
    length: usize,
    close: bool,
) -> Result<(CofreeResolution, Option<InjectiveTail>), HomologyError> {
    expect_side(w.side(), Side::Left)?;
    let f = coalg.field();
    let (rank, coaug) = cofree_hull(w);
    let mut steps = vec![ResolutionStep { rank, dim: coalg.dim() * rank, differential: coaug.clone() }];
    let mut incoming = coaug;
    let mut current_rank = rank;
    for _ in 1..=length {
        let cofree = ComoduleStr::new(coalg, Side::Left, coalg.comult().kron(&eye(f, current_rank)))?;
        let image = Subspace::image(&incoming);
        let (q, quot) = if image.is_zero() {
            (cofree.clone(), exactla::quotient(cofree.dim(), &image).expect("zero subspace"))
        } else {
            cofree.quotient(&image)?
        };
        if close && (q.dim() == 0 || is_injective_comodule(coalg, &q)) {
            let tail = InjectiveTail { comodule: q, projection: quot.projection };
            return Ok((CofreeResolution { side: Side::Left, source_dim: w.dim(), steps }, Some(tail)));
        }
        let (rank, hull) = cofree_hull(&q);
        let diff = hull.mul(&quot.projection);
        steps.push(ResolutionStep { rank, dim: coalg.dim() * rank, differential: diff.clone() });
        incoming = diff;
        current_rank = rank;
    }
    Ok((CofreeResolution { side: Side::Left, source_dim: w.dim(), steps }, None))
}

impl CofreeResolution {
    pub fn length(&self) -> usize {
        self.steps.len() - 1
    }

    /// The coaugmentation is injective, differentials compose to zero and the complex is
    /// exact at every interior term. Returns the first failing degree.
    pub fn validate(&self) -> Result<(), usize> {
        if self.steps[0].differential.rank() != self.source_dim {
            return Err(0);
        }
        for i in 1..self.steps.len() {
            let (prev, cur) = (&self.steps[i - 1].differential, &self.steps[i].differential);
            if !cur.mul(prev).is_zero() || nullity(cur) != prev.rank() {
                return Err(i);
            }
        }
        Ok(())
    }
}

/// `dim Cotor_C^i(V, W)` for `i = 0..=max_degree`, `V` right and `W` left: resolve `W` by
/// cofree comodules and apply `V□_C−`, using `V□_C(C⊗U) ≅ V⊗U` via `v⊗u ↦ v₀⊗v₁⊗u`.
pub fn cotor_dims(coalg: &Coalgebra, v: &ComoduleStr, w: &ComoduleStr, max_degree: usize) -> Result<Vec<usize>, HomologyError> {
    expect_side(v.side(), Side::Right)?;
    let (res, tail) = coresolve(coalg, w, max_degree + 1, true)?;
    let f = coalg.field();
    let n = v.dim();
    let eps = coalg.counit();
    let mut dims: Vec<usize> = res.steps.iter().map(|s| s.rank * n).collect();
    let mut ranks: Vec<usize> = (1..res.steps.len())
        .map(|i| {
            let (r_in, r_out) = (res.steps[i - 1].rank, res.steps[i].rank);
            padded(eps, n, r_out)
                .mul(&eye(f, n).kron(&res.steps[i].differential))
                .mul(&v.coaction().kron(&eye(f, r_in)))
                .rank()
        })
        .collect();
    if let Some(tail) = tail {
        // V⊗k^r ≅ V□_C I^{n−1} → V□_C Q through the projection
        let r = res.steps.last().expect("nonempty").rank;
        let map = eye(f, n).kron(&tail.projection).mul(&v.coaction().kron(&eye(f, r)));
        dims.push(cotensor(v, &tail.comodule)?.dim());
        ranks.push(map.rank());
    }
    Ok(homology_dims(&dims, &ranks, max_degree))
}

pub fn cotor(coalg: &Coalgebra, v: &ComoduleStr, w: &ComoduleStr, degree: usize) -> Result<usize, HomologyError> {
    Ok(cotor_dims(coalg, v, w, degree)?[degree])
}
