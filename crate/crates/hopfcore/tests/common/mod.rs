use exactla::{Field, Scalar};
use hopfcore::{FiniteHopfAlgebra, HopfTables};

/// Pointed Hopf algebra on `g^a x^b` (a < order, b < nil) with `xg = q·gx`, `Δx = x⊗1 + g⊗x`.
/// Index of `g^a x^b` is `b·order + a`. Hand-rolled here so the tests do not depend on the
/// catalog builders.
pub fn pointed(field: Field, order: usize, nil: usize, q: i64) -> HopfTables {
    let n = order * nil;
    let idx = |a: usize, b: usize| b * order + a;
    let q = field.from_i64(q);
    let zero = field.zero();
    let mut mu = vec![vec![vec![zero.clone(); n]; n]; n];
    for (a, b, c, d) in quad(order, nil) {
        if b + d < nil {
            mu[idx(a, b)][idx(c, d)][idx((a + c) % order, b + d)] = q.pow((b * c) as i64);
        }
    }
    // Δ(g^a x^b) = Δ(g)^a Δ(x)^b, expanded term by term.
    let mut delta = vec![vec![vec![zero.clone(); n]; n]; n];
    for a in 0..order {
        for b in 0..nil {
            let mut cur: Vec<(usize, usize, Scalar)> = vec![(idx(a, 0), idx(a, 0), field.one())];
            for _ in 0..b {
                let mut next = Vec::new();
                for (l, r, c) in &cur {
                    for (xl, xr) in [(idx(0, 1), idx(0, 0)), (idx(1 % order, 0), idx(0, 1))] {
                        let pl = mul(&mu, *l, xl);
                        let pr = mul(&mu, *r, xr);
                        for (i, s) in &pl {
                            for (j, t) in &pr {
                                next.push((*i, *j, c * s * t));
                            }
                        }
                    }
                }
                cur = next;
            }
            for (l, r, c) in cur {
                let e = &mut delta[idx(a, b)][l][r];
                *e = &*e + &c;
            }
        }
    }
    let unit: Vec<Scalar> = (0..n).map(|i| if i == 0 { field.one() } else { zero.clone() }).collect();
    let counit: Vec<Scalar> = (0..n).map(|i| if i < order { field.one() } else { zero.clone() }).collect();
    // S(g^a x^b) = S(x)^b S(g)^a with S(g) = g^{-1}, S(x) = -g^{-1}x.
    let mut s = vec![vec![zero.clone(); n]; n];
    for a in 0..order {
        for b in 0..nil {
            let mut v = vec![zero.clone(); n];
            v[0] = field.one();
            for _ in 0..b {
                v = right_mul(&mu, &v, idx(order - 1, 1), &field.from_i64(-1));
            }
            for _ in 0..a {
                v = right_mul(&mu, &v, idx(order - 1, 0), &field.one());
            }
            for (i, c) in v.into_iter().enumerate() {
                s[i][idx(a, b)] = c;
            }
        }
    }
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    HopfTables::from_tables(field, labels, &mu, &unit, &delta, &counit, &s).unwrap()
}

fn quad(order: usize, nil: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..order).flat_map(move |a| {
        (0..nil).flat_map(move |b| (0..order).flat_map(move |c| (0..nil).map(move |d| (a, b, c, d))))
    })
}

fn mul(mu: &[Vec<Vec<Scalar>>], i: usize, j: usize) -> Vec<(usize, Scalar)> {
    mu[i][j].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

fn right_mul(mu: &[Vec<Vec<Scalar>>], v: &[Scalar], j: usize, c: &Scalar) -> Vec<Scalar> {
    let mut out = vec![c.field().zero(); v.len()];
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (k, m) in mul(mu, i, j) {
            out[k] = &out[k] + &(vi * &m * c);
        }
    }
    out
}

pub fn sweedler() -> FiniteHopfAlgebra {
    FiniteHopfAlgebra::new(pointed(Field::Rational, 2, 2, -1)).unwrap()
}

pub fn cyclic(field: Field, order: usize) -> FiniteHopfAlgebra {
    FiniteHopfAlgebra::new(pointed(field, order, 1, 1)).unwrap()
}
