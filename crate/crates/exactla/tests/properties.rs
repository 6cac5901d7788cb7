use exactla::{coequalizer, equalizer, kernel, quotient, Field, Matrix, SparseVec, Subspace};
use proptest::prelude::*;

fn matrix_from(field: Field, rows: usize, cols: usize, vals: &[i64]) -> Matrix {
    Matrix::from_fn(field, rows, cols, |i, j| field.from_i64(vals[i * cols + j]))
}

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        (Just(r), Just(c), proptest::collection::vec(-2i64..3, r * c))
    })
}

/// Enumerate every vector of GF(p)^n and count those killed by `f`.
fn brute_force_kernel_size(f: &Matrix, p: u32) -> usize {
    let n = f.ncols();
    let field = f.field();
    let total = (p as usize).pow(n as u32);
    (0..total)
        .filter(|&code| {
            let mut c = code;
            let coords: Vec<_> = (0..n)
                .map(|_| {
                    let d = c % p as usize;
                    c /= p as usize;
                    field.from_i64(d as i64)
                })
                .collect();
            f.apply(&SparseVec::from_dense(&coords)).is_zero()
        })
        .count()
}

#[test]
fn counit_kernel_of_two_element_group_algebra() {
    // Hand reduction of the 1×2 matrix (1, 1): the kernel is spanned by (−1, 1), i.e. g − 1.
    let q = Field::Rational;
    let k = kernel(&Matrix::from_i64(q, &[&[1, 1]]));
    let expected = Subspace::span(q, 2, vec![SparseVec::from_dense(&[q.from_i64(-1), q.from_i64(1)])]);
    assert_eq!(k, expected);
}

#[test]
fn quotient_by_augmentation_sends_both_group_elements_to_one() {
    let q = Field::Rational;
    let u = Subspace::span(q, 2, vec![SparseVec::from_dense(&[q.from_i64(-1), q.from_i64(1)])]);
    let quo = quotient(2, &u).unwrap();
    // Any retraction kills g − 1. The echelon basis is (1, −1) with pivot at coordinate 0, so the
    // canonical complement is the axis of g.
    assert_eq!(quo.projection.get(0, 0), q.one());
    assert_eq!(quo.projection.get(0, 1), q.one());
    assert_eq!(quo.section, Matrix::from_i64(q, &[&[0], &[1]]));
}

proptest! {
    #[test]
    fn rank_nullity((r, c, vals) in small_matrix()) {
        let f = matrix_from(Field::Rational, r, c, &vals);
        let k = kernel(&f);
        prop_assert_eq!(k.dim() + f.rank(), c);
        for v in k.basis_vectors() {
            prop_assert!(f.apply(v).is_zero());
        }
    }

    #[test]
    fn kernel_matches_brute_force_over_gf5((r, c, vals) in small_matrix()) {
        let field = Field::prime(5).unwrap();
        let f = matrix_from(field, r, c, &vals);
        let size = brute_force_kernel_size(&f, 5);
        prop_assert_eq!(size, 5usize.pow(kernel(&f).dim() as u32));
    }

    #[test]
    fn quotient_section_is_right_inverse((r, c, vals) in small_matrix()) {
        let f = matrix_from(Field::Rational, r, c, &vals);
        let u = Subspace::row_space(&f);
        let q = quotient(c, &u).unwrap();
        prop_assert!(q.projection.mul(&q.section).is_identity());
        prop_assert_eq!(kernel(&q.projection), u);
    }

    #[test]
    fn canonical_form_is_order_independent((r, c, vals) in small_matrix(), seed in 0usize..24) {
        let f = matrix_from(Field::Rational, r, c, &vals);
        let mut rows: Vec<SparseVec> = f.rows().to_vec();
        let n = rows.len();
        rows.rotate_left(seed % n.max(1));
        if seed % 2 == 1 { rows.reverse(); }
        let a = Subspace::row_space(&f);
        let b = Subspace::span(Field::Rational, c, rows);
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(Subspace::row_space(a.basis()), a);
    }

    #[test]
    fn equalizer_is_kernel_of_difference((r, c, vals) in small_matrix(), (r2, c2, vals2) in small_matrix()) {
        let f = matrix_from(Field::Rational, r, c, &vals);
        // Reuse the first shape for g so the pair is comparable.
        let g = Matrix::from_fn(Field::Rational, r, c, |i, j| {
            Field::Rational.from_i64(vals2[(i * c + j) % (r2 * c2)])
        });
        let e = equalizer(&f, &g).unwrap();
        prop_assert_eq!(e, kernel(&f.sub(&g)));
        let q = coequalizer(&f, &g).unwrap();
        prop_assert_eq!(q.dim(), r - f.sub(&g).rank());
    }

    #[test]
    fn intersection_and_sum_dimensions((r, c, vals) in small_matrix(), (_r2, _c2, vals2) in small_matrix()) {
        let a = Subspace::row_space(&matrix_from(Field::Rational, r, c, &vals));
        let b = Subspace::row_space(&Matrix::from_fn(Field::Rational, r, c, |i, j| {
            Field::Rational.from_i64(vals2[(i * c + j) % vals2.len()])
        }));
        let s = a.sum(&b);
        let i = a.intersection(&b);
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
    }
}
