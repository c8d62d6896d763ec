//! Polynomials: exact scalar combinations of normal-form monomials.

use crate::field::Scalar;
use crate::monomial::{monomial_basis, Monomial, Sign};
use crate::presentation::{same_presentation, GenRef, Parity, Presentation};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct Polynomial {
    pres: Arc<Presentation>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_presentation(&self.pres, &other.pres) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(pres: &Arc<Presentation>) -> Polynomial {
        Polynomial { pres: Arc::clone(pres), terms: BTreeMap::new() }
    }

    /// The unit: with label blocks this is the sum over all label tuples
    /// (orthogonal idempotents summing to 1), otherwise the empty monomial.
    pub fn one(pres: &Arc<Presentation>) -> Polynomial {
        Polynomial::constant(pres, pres.field.one())
    }

    pub fn constant(pres: &Arc<Presentation>, c: Scalar) -> Polynomial {
        let mut p = Polynomial::zero(pres);
        if c.is_zero() {
            return p;
        }
        for labels in pres.label_tuples() {
            let m = Monomial::new(pres, vec![0; pres.n_even()], Vec::new(), labels).unwrap();
            p.terms.insert(m, c.clone());
        }
        p
    }

    /// The generator as an element: a variable, or one idempotent label
    /// (times the unit of every other block).
    pub fn generator(pres: &Arc<Presentation>, g: GenRef) -> Polynomial {
        let mut p = Polynomial::zero(pres);
        for labels in pres.label_tuples() {
            let mut exps = vec![0; pres.n_even()];
            let mut support = Vec::new();
            match g {
                GenRef::Even(i) => exps[i] = 1,
                GenRef::Odd(i) => support.push(i as u32),
                GenRef::Label(b, l) => {
                    if labels[b] != l as u32 {
                        continue;
                    }
                }
            }
            if let Some(m) = Monomial::new(pres, exps, support, labels) {
                p.terms.insert(m, pres.field.one());
            }
        }
        p
    }

    pub fn monomial(pres: &Arc<Presentation>, m: Monomial, c: Scalar) -> Polynomial {
        let mut p = Polynomial::zero(pres);
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(pres: &Arc<Presentation>, it: I) -> Polynomial {
        let mut p = Polynomial::zero(pres);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.pres.field.zero())
    }

    /// Coefficient of the degree-0, label-free part; with blocks, the
    /// common coefficient of the scalar-shaped monomials if they agree.
    pub fn constant_term(&self) -> Scalar {
        let tuples = self.pres.label_tuples();
        let mut vals = Vec::new();
        for labels in tuples {
            let m = Monomial::new(&self.pres, vec![0; self.pres.n_even()], Vec::new(), labels).unwrap();
            vals.push(self.coeff(&m));
        }
        let first = vals[0].clone();
        if vals.iter().all(|v| *v == first) {
            first
        } else {
            self.pres.field.zero()
        }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            None => {
                self.terms.insert(m, c);
            }
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_same(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            pres: Arc::clone(&self.pres),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.pres);
        }
        Polynomial {
            pres: Arc::clone(&self.pres),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_same(other);
        let mut out = Polynomial::zero(&self.pres);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, sign)) = m1.mul(m2, &self.pres) {
                    let c = c1.mul(c2);
                    let c = match sign {
                        Sign::Plus => c,
                        Sign::Minus => c.neg(),
                        Sign::Zero => unreachable!("zero products return None"),
                    };
                    out.add_term(m, c);
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.pres);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn truncate(&self, d: u32) -> Polynomial {
        Polynomial {
            pres: Arc::clone(&self.pres),
            terms: self.terms.iter().filter(|(m, _)| m.degree() <= d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            pres: Arc::clone(&self.pres),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Nonzero homogeneous components, degree ascending.
    pub fn components(&self) -> Vec<(u32, Polynomial)> {
        let mut degrees: Vec<u32> = self.terms.keys().map(|m| m.degree()).collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees.into_iter().map(|d| (d, self.homogeneous_component(d))).collect()
    }

    /// The parity if all terms agree; zero is vacuously homogeneous.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys();
        let first = it.next()?.parity();
        if it.all(|m| m.parity() == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn is_parity_homogeneous(&self, p: Parity) -> bool {
        self.terms.keys().all(|m| m.parity() == p)
    }

    pub fn is_degree_homogeneous(&self) -> bool {
        let mut it = self.terms.keys();
        match it.next() {
            None => true,
            Some(first) => {
                let d = first.degree();
                it.all(|m| m.degree() == d)
            }
        }
    }

    /// Coordinates against an indexed monomial basis. Panics when a term
    /// falls outside the index: callers size bases from degree bounds.
    pub fn coordinates(&self, index: &BTreeMap<Monomial, usize>, len: usize) -> Vec<Scalar> {
        let mut v = vec![self.pres.field.zero(); len];
        for (m, c) in &self.terms {
            let i = *index.get(m).unwrap_or_else(|| panic!("monomial outside coordinate basis"));
            v[i] = c.clone();
        }
        v
    }

    pub fn from_coordinates(pres: &Arc<Presentation>, basis: &[Monomial], coords: &[Scalar]) -> Polynomial {
        Polynomial::from_terms(pres, basis.iter().cloned().zip(coords.iter().cloned()))
    }

    fn check_same(&self, other: &Polynomial) {
        assert!(same_presentation(&self.pres, &other.pres), "presentation mismatch");
    }
}

/// Index for coordinatizing polynomials of degree ≤ d.
pub fn basis_index(pres: &Presentation, d: u32) -> (Vec<Monomial>, BTreeMap<Monomial, usize>) {
    let basis = crate::monomial::monomials_up_to(pres, d);
    let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    (basis, index)
}

/// Index for the degree-d slice alone.
pub fn slice_index(pres: &Presentation, d: u32) -> (Vec<Monomial>, BTreeMap<Monomial, usize>) {
    let basis = monomial_basis(pres, d);
    let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    (basis, index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn k_x_theta12() -> Arc<Presentation> {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_odd("theta1").unwrap();
        p.add_odd("theta2").unwrap();
        Arc::new(p)
    }

    fn gen(p: &Arc<Presentation>, name: &str) -> Polynomial {
        Polynomial::generator(p, p.find(name).unwrap())
    }

    #[test]
    fn odd_square_is_zero() {
        let p = k_x_theta12();
        let t1 = gen(&p, "theta1");
        assert!(t1.mul(&t1).is_zero());
    }

    #[test]
    fn anticommutativity() {
        let p = k_x_theta12();
        let t1 = gen(&p, "theta1");
        let t2 = gen(&p, "theta2");
        assert_eq!(t2.mul(&t1), t1.mul(&t2).neg());
    }

    #[test]
    fn hand_expansion() {
        // (x+θ1)(x+θ2) = x² + xθ1 + xθ2 + θ1θ2
        let p = k_x_theta12();
        let x = gen(&p, "x");
        let t1 = gen(&p, "theta1");
        let t2 = gen(&p, "theta2");
        let lhs = x.add(&t1).mul(&x.add(&t2));
        let rhs = x.mul(&x).add(&x.mul(&t1)).add(&x.mul(&t2)).add(&t1.mul(&t2));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.n_terms(), 4);
    }

    #[test]
    fn truncate_examples() {
        let p = k_x_theta12();
        let x = gen(&p, "x");
        let t1 = gen(&p, "theta1");
        let t2 = gen(&p, "theta2");
        let f = x.mul(&x).add(&t1);
        assert_eq!(f.truncate(1), t1);
        assert_eq!(Polynomial::zero(&p).truncate(5), Polynomial::zero(&p));
        let g = x.add(&x.mul(&t1).mul(&t2));
        assert_eq!(g.truncate(2), x);
    }

    #[test]
    fn power_relation_normal_form() {
        let mut pres = Presentation::new(FieldSpec::prime(3).unwrap());
        pres.add_even("x", Some(3)).unwrap();
        let p = Arc::new(pres);
        let x = gen(&p, "x");
        assert!(x.pow(3).is_zero());
        assert!(!x.pow(2).is_zero());
        let f = x.add(&Polynomial::one(&p));
        // (x+1)^3 = x^3 + 1 = 1 over F_3 after truncation
        assert_eq!(f.pow(3), Polynomial::one(&p));
    }

    #[test]
    fn unit_with_blocks() {
        let mut pres = Presentation::new(FieldSpec::Rationals);
        pres.add_block(vec!["e0".into(), "e1".into()]).unwrap();
        let p = Arc::new(pres);
        let one = Polynomial::one(&p);
        assert_eq!(one.n_terms(), 2);
        assert_eq!(one.mul(&one), one);
        let e0 = gen(&p, "e0");
        let e1 = gen(&p, "e1");
        assert_eq!(e0.add(&e1), one);
        assert!(e0.mul(&e1).is_zero());
        assert_eq!(e0.mul(&e0), e0);
        assert_eq!(one.mul(&e1), e1);
    }

    #[test]
    fn parity_and_components() {
        let p = k_x_theta12();
        let x = gen(&p, "x");
        let t1 = gen(&p, "theta1");
        let f = x.add(&t1);
        assert_eq!(f.parity(), None);
        assert_eq!(x.parity(), Some(Parity::Even));
        assert_eq!(t1.parity(), Some(Parity::Odd));
        let g = x.mul(&x).add(&t1);
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].0, 1);
        assert_eq!(comps[0].1, t1);
    }

    #[test]
    fn constant_term_reads_scalar_part() {
        let p = k_x_theta12();
        let x = gen(&p, "x");
        let f = x.add(&Polynomial::constant(&p, FieldSpec::Rationals.from_i64(7)));
        assert_eq!(f.constant_term(), FieldSpec::Rationals.from_i64(7));
        assert_eq!(x.constant_term(), FieldSpec::Rationals.from_i64(0));
    }
}
