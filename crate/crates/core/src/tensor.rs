//! Tensor products of superalgebras: two-leg elements with the Koszul
//! product rule (a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd, and a linear-only
//! three-leg form for coassociativity checks.

use crate::field::Scalar;
use crate::monomial::{Monomial, Sign};
use crate::poly::Polynomial;
use crate::presentation::{same_presentation, Parity, Presentation};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct TensorElement {
    left: Arc<Presentation>,
    right: Arc<Presentation>,
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        same_presentation(&self.left, &other.left)
            && same_presentation(&self.right, &other.right)
            && self.terms == other.terms
    }
}

impl Eq for TensorElement {}

impl TensorElement {
    pub fn zero(left: &Arc<Presentation>, right: &Arc<Presentation>) -> TensorElement {
        assert_eq!(left.field, right.field, "tensor legs over one field");
        TensorElement { left: Arc::clone(left), right: Arc::clone(right), terms: BTreeMap::new() }
    }

    pub fn one(left: &Arc<Presentation>, right: &Arc<Presentation>) -> TensorElement {
        TensorElement::pure(&Polynomial::one(left), &Polynomial::one(right))
    }

    /// f⊗h, bilinear in the terms of f and h.
    pub fn pure(f: &Polynomial, h: &Polynomial) -> TensorElement {
        let mut out = TensorElement::zero(f.presentation(), h.presentation());
        for (m1, c1) in f.terms() {
            for (m2, c2) in h.terms() {
                out.add_term(m1.clone(), m2.clone(), c1.mul(c2));
            }
        }
        out
    }

    pub fn left_presentation(&self) -> &Arc<Presentation> {
        &self.left
    }

    pub fn right_presentation(&self) -> &Arc<Presentation> {
        &self.right
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, l: Monomial, r: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let key = (l, r);
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        self.check_same(other);
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> TensorElement {
        TensorElement {
            left: Arc::clone(&self.left),
            right: Arc::clone(&self.right),
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero(&self.left, &self.right);
        for ((l, r), c) in &self.terms {
            out.add_term(l.clone(), r.clone(), c.mul(k));
        }
        out
    }

    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        self.check_same(other);
        let mut out = TensorElement::zero(&self.left, &self.right);
        for ((a, b), c1) in &self.terms {
            for ((x, y), c2) in &other.terms {
                let Some((lm, ls)) = a.mul(x, &self.left) else { continue };
                let Some((rm, rs)) = b.mul(y, &self.right) else { continue };
                let mut sign = ls * rs;
                if b.parity() == Parity::Odd && x.parity() == Parity::Odd {
                    sign = sign.negate();
                }
                let c = c1.mul(c2);
                let c = match sign {
                    Sign::Plus => c,
                    Sign::Minus => c.neg(),
                    Sign::Zero => unreachable!("zero products return None"),
                };
                out.add_term(lm, rm, c);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> TensorElement {
        let mut out = TensorElement::one(&self.left, &self.right);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Collapses the legs by multiplication: Σ c·a⊗b ↦ Σ c·a·b.
    /// Meaningful when both legs share one presentation.
    pub fn multiply_out(&self) -> Polynomial {
        assert!(same_presentation(&self.left, &self.right), "legs differ");
        let mut out = Polynomial::zero(&self.left);
        for ((a, b), c) in &self.terms {
            let pa = Polynomial::monomial(&self.left, a.clone(), c.clone());
            let pb = Polynomial::monomial(&self.right, b.clone(), self.left.field.one());
            out = out.add(&pa.mul(&pb));
        }
        out
    }

    /// Σ c·a⊗b ↦ Σ c·map(a)⊗b. The map must be parity-even; substitution
    /// in place introduces no sign.
    pub fn map_left<F: FnMut(&Monomial) -> Polynomial>(&self, target: &Arc<Presentation>, mut map: F) -> TensorElement {
        let mut out = TensorElement::zero(target, &self.right);
        for ((a, b), c) in &self.terms {
            for (m, k) in map(a).terms() {
                out.add_term(m.clone(), b.clone(), c.mul(k));
            }
        }
        out
    }

    pub fn map_right<F: FnMut(&Monomial) -> Polynomial>(&self, target: &Arc<Presentation>, mut map: F) -> TensorElement {
        let mut out = TensorElement::zero(&self.left, target);
        for ((a, b), c) in &self.terms {
            for (m, k) in map(b).terms() {
                out.add_term(a.clone(), m.clone(), c.mul(k));
            }
        }
        out
    }

    /// Gathers Σ c·a⊗b over fixed b = key into polynomials in the left leg.
    pub fn collect_by_right(&self) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for ((a, b), c) in &self.terms {
            let entry = out.entry(b.clone()).or_insert_with(|| Polynomial::zero(&self.left));
            *entry = entry.add(&Polynomial::monomial(&self.left, a.clone(), c.clone()));
        }
        out
    }

    fn check_same(&self, other: &TensorElement) {
        assert!(same_presentation(&self.left, &other.left), "left leg mismatch");
        assert!(same_presentation(&self.right, &other.right), "right leg mismatch");
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let pa = Polynomial::monomial(&self.left, a.clone(), c.clone());
            let pb = Polynomial::monomial(&self.right, b.clone(), self.right.field.one());
            write!(f, "({})(x)({})", pa, pb)?;
        }
        Ok(())
    }
}

/// Three tensor legs, linear structure only. Products happen leg-wise
/// before assembly, so no sign bookkeeping is needed here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    terms: BTreeMap<(Monomial, Monomial, Monomial), Scalar>,
}

impl Tensor3 {
    pub fn zero() -> Tensor3 {
        Tensor3 { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Monomial, b: Monomial, c: Monomial, k: Scalar) {
        if k.is_zero() {
            return;
        }
        let key = (a, b, c);
        match self.terms.remove(&key) {
            None => {
                self.terms.insert(key, k);
            }
            Some(old) => {
                let s = old.add(&k);
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
        }
    }

    /// Expand the left leg of a 2-tensor: Σ c·a⊗b with a ↦ Σ a1⊗a2
    /// becomes Σ c·a1⊗a2⊗b.
    pub fn from_left_expansion<F: FnMut(&Monomial) -> TensorElement>(t: &TensorElement, mut expand: F) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((a, b), c) in t.terms() {
            for ((a1, a2), k) in expand(a).terms() {
                out.add_term(a1.clone(), a2.clone(), b.clone(), c.mul(k));
            }
        }
        out
    }

    /// Expand the right leg: Σ c·a⊗b with b ↦ Σ b1⊗b2 becomes Σ c·a⊗b1⊗b2.
    pub fn from_right_expansion<F: FnMut(&Monomial) -> TensorElement>(t: &TensorElement, mut expand: F) -> Tensor3 {
        let mut out = Tensor3::zero();
        for ((a, b), c) in t.terms() {
            for ((b1, b2), k) in expand(b).terms() {
                out.add_term(a.clone(), b1.clone(), b2.clone(), c.mul(k));
            }
        }
        out
    }
}
