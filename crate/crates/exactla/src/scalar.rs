//! Exact field elements: arbitrary-precision rationals and residues modulo a prime.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::LinAlgError;

/// Largest modulus accepted for prime fields; keeps residue products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// A ground field: ℚ or GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// GF(p); rejects composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field, LinAlgError> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(LinAlgError::NotPrime(p));
        }
        Ok(Field::Prime(p as u32))
    }

    /// Parse a descriptor `"Q"` or `"p=<prime>"`.
    pub fn parse(desc: &str) -> Result<Field, LinAlgError> {
        let d = desc.trim();
        if d == "Q" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = d.strip_prefix("p=") {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| LinAlgError::BadFieldDescriptor(desc.to_string()))?;
            return Field::prime(p);
        }
        Err(LinAlgError::BadFieldDescriptor(desc.to_string()))
    }

    pub fn descriptor(&self) -> String {
        match self {
            Field::Rational => "Q".to_string(),
            Field::Prime(p) => format!("p={p}"),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p as u64,
        }
    }

    /// Number of elements, or `None` for ℚ.
    pub fn size(&self) -> Option<u64> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(*p as u64),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Fp {
                v: n.rem_euclid(*p as i64) as u32,
                p: *p,
            },
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, LinAlgError> {
        let d = self.from_i64(den);
        d.inv()
            .map(|i| self.from_i64(num) * i)
            .ok_or_else(|| LinAlgError::BadScalar(format!("{num}/{den}")))
    }

    /// Parse `"a"`, `"-a"` or `"a/b"` into this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, LinAlgError> {
        let t = s.trim();
        let bad = || LinAlgError::BadScalar(s.to_string());
        let (num, den) = match t.split_once('/') {
            Some((a, b)) => (
                a.trim().parse::<BigInt>().map_err(|_| bad())?,
                b.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (t.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match self {
            Field::Rational => Ok(Scalar::Q(BigRational::new(num, den))),
            Field::Prime(p) => {
                let m = BigInt::from(*p);
                let reduce = |x: &BigInt| x.mod_floor(&m).to_u32().expect("residue fits");
                let d = Scalar::Fp { v: reduce(&den), p: *p };
                let n = Scalar::Fp { v: reduce(&num), p: *p };
                d.inv().map(|i| n * i).ok_or_else(bad)
            }
        }
    }

    /// Every element of a prime field in increasing residue order; `None` for ℚ.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some((0..*p).map(|v| Scalar::Fp { v, p: *p }).collect()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element. Binary operations require both operands to live in the same field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u32, p: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(q) => q.is_one(),
            Scalar::Fp { v, .. } => *v == 1,
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(q) => Scalar::Q(q.recip()),
            Scalar::Fp { v, p } => Scalar::Fp {
                v: pow_mod(*v as u64, (*p - 2) as u64, *p as u64) as u32,
                p: *p,
            },
        })
    }

    /// Integer power; negative exponents invert (panics on 0 to a negative power).
    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 {
            self.inv().expect("zero to a negative power")
        } else {
            self.clone()
        };
        let mut acc = self.field().one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            n >>= 1;
        }
        acc
    }

    /// Multiplicative order, if finite and at most `bound`.
    pub fn multiplicative_order(&self, bound: u64) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let mut x = self.clone();
        for k in 1..=bound {
            if x.is_one() {
                return Some(k);
            }
            x = &x * self;
        }
        None
    }

    /// Canonical text form: integers as `"n"`, rationals as `"a/b"`, residues in `0..p`.
    pub fn to_text(&self) -> String {
        match self {
            Scalar::Q(q) => {
                if q.is_integer() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Fp { v, .. } => v.to_string(),
        }
    }

    /// Small integer value when the element is an integer that fits `i64`.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Scalar::Q(q) if q.is_integer() => q.numer().to_i64(),
            Scalar::Q(_) => None,
            Scalar::Fp { v, .. } => Some(*v as i64),
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Q(q) if q.is_negative())
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[inline]
fn same_prime(p: u32, q: u32) -> u32 {
    assert_eq!(p, q, "scalars from different prime fields");
    p
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Fp { v: ((*a as u64 + *b as u64) % p as u64) as u32, p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a - b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Fp { v: ((*a as u64 + p as u64 - *b as u64) % p as u64) as u32, p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                let p = same_prime(*p, *q);
                Scalar::Fp { v: ((*a as u64 * *b as u64) % p as u64) as u32, p }
            }
            _ => panic!("scalars from different fields"),
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { v, p } => Scalar::Fp { v: (*p - *v) % *p, p: *p },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a += b,
            (s, r) => *s = &*s + r,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a -= b,
            (s, r) => *s = &*s - r,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => *a *= b,
            (s, r) => *s = &*s * r,
        }
    }
}
