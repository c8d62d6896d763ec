//! Exact scalar arithmetic over Q and over prime fields F_p.
//!
//! Every scalar carries its field with it. Mixing scalars from different
//! fields is an internal bug, so arithmetic panics on mismatch; fallible
//! checks belong at input boundaries, not here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// The ground field of a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    /// F_p, p prime. Constructed through [`FieldSpec::prime`].
    Prime(u64),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec, FieldError> {
        if is_prime_u64(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    /// 0 for Q, p for F_p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Fp { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Fp { val: 1 % *p, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let m = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { val: m, p: *p }
            }
        }
    }

    /// n/d in this field. Fails if d maps to zero.
    pub fn from_ratio(&self, n: i64, d: i64) -> Option<Scalar> {
        let den = self.from_i64(d);
        if den.is_zero() {
            return None;
        }
        Some(self.from_i64(n).mul(&den.inv()))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{}", p),
        }
    }
}

/// An element of the ground field. Rationals are kept reduced (num-rational
/// guarantees this); F_p values are canonical residues in 0..p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { val: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { val, p } => *val == 1 % *p,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) if p == q => {
                // a,b < p <= u64::MAX so widen through u128
                let s = (*a as u128 + *b as u128) % *p as u128;
                Scalar::Fp { val: s as u64, p: *p }
            }
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { val, p } => Scalar::Fp { val: (*p - *val) % *p, p: *p },
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { val: a, p }, Scalar::Fp { val: b, p: q }) if p == q => {
                let m = (*a as u128 * *b as u128) % *p as u128;
                Scalar::Fp { val: m as u64, p: *p }
            }
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), other.field()),
        }
    }

    /// Multiplicative inverse. Panics on zero: callers must check first.
    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { val, p } => {
                assert!(*val != 0, "inverse of zero");
                Scalar::Fp { val: pow_mod(*val, *p - 2, *p), p: *p }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut acc = self.field().one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Sign-aware display form used by the polynomial printer: (is_negative,
    /// absolute-value string). F_p residues are never treated as negative.
    pub fn display_parts(&self) -> (bool, String) {
        match self {
            Scalar::Rat(r) => {
                if r.is_negative() {
                    (true, (-r).to_string())
                } else {
                    (false, r.to_string())
                }
            }
            Scalar::Fp { val, .. } => (false, val.to_string()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, body) = self.display_parts();
        if neg {
            write!(f, "-{}", body)
        } else {
            write!(f, "{}", body)
        }
    }
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce() {
        let f = FieldSpec::Rationals;
        let x = f.from_ratio(2, 4).unwrap();
        assert_eq!(x, f.from_ratio(1, 2).unwrap());
        assert_eq!(x.add(&x), f.one());
    }

    #[test]
    fn fp_arithmetic_wraps() {
        let f = FieldSpec::prime(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(a.mul(&b), f.from_i64(2));
        assert_eq!(a.add(&b), f.from_i64(2));
        assert_eq!(f.from_i64(-1), f.from_i64(4));
    }

    #[test]
    fn fp_inverse() {
        let f = FieldSpec::prime(7).unwrap();
        for v in 1..7 {
            let x = f.from_i64(v);
            assert!(x.mul(&x.inv()).is_one());
        }
    }

    #[test]
    fn prime_gate() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(101).is_ok());
        assert_eq!(FieldSpec::prime(1), Err(FieldError::NotPrime(1)));
        assert_eq!(FieldSpec::prime(91), Err(FieldError::NotPrime(91)));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics() {
        let a = FieldSpec::Rationals.one();
        let b = FieldSpec::prime(5).unwrap().one();
        let _ = a.add(&b);
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = FieldSpec::Rationals;
        let x = f.from_ratio(-3, 2).unwrap();
        let mut acc = f.one();
        for e in 0..8u32 {
            assert_eq!(x.pow(e), acc);
            acc = acc.mul(&x);
        }
    }
}
