//! Monomials in normal form and the Koszul sign rule.
//!
//! Order: degree ascending, then exponent vectors lexicographically
//! descending with even variables before odd ones (so x² precedes xθ),
//! then label tuples ascending. The order is total on monomials of one
//! presentation and drives every basis listed anywhere in the crate.

use crate::presentation::{GenRef, Parity, Presentation};
use std::cmp::Ordering;

/// Result of reordering odd factors: a sign, or zero from a repeated factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Zero,
    Plus,
    Minus,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (Sign::Plus, s) => s,
            (Sign::Minus, s) => s.negate(),
        }
    }
}

/// Sign of merging odd supports a then b into ascending order.
/// Zero iff the supports intersect; otherwise (−1)^inversions.
pub fn koszul_sign(a: &[u32], b: &[u32]) -> Sign {
    let mut inversions = 0usize;
    for &x in a {
        for &y in b {
            match x.cmp(&y) {
                Ordering::Equal => return Sign::Zero,
                Ordering::Greater => inversions += 1,
                Ordering::Less => {}
            }
        }
    }
    if inversions.is_multiple_of(2) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    even_exps: Vec<u32>,
    odd_support: Vec<u32>,
    labels: Vec<u32>,
}

impl Monomial {
    /// Normal-form monomial. Returns None when a power relation or a
    /// repeated odd factor makes it zero. Panics on shape mismatch:
    /// callers construct monomials against a known presentation.
    pub fn new(pres: &Presentation, even_exps: Vec<u32>, odd_support: Vec<u32>, labels: Vec<u32>) -> Option<Monomial> {
        assert_eq!(even_exps.len(), pres.n_even(), "even exponent arity");
        assert_eq!(labels.len(), pres.n_blocks(), "label arity");
        for w in odd_support.windows(2) {
            assert!(w[0] < w[1], "odd support must be strictly ascending");
        }
        for &i in &odd_support {
            assert!((i as usize) < pres.n_odd(), "odd index out of range");
        }
        for (b, &l) in labels.iter().enumerate() {
            assert!((l as usize) < pres.blocks()[b].labels.len(), "label out of range");
        }
        for (i, &e) in even_exps.iter().enumerate() {
            if let Some(q) = pres.power_of(i) {
                if e >= q {
                    return None;
                }
            }
        }
        let degree = even_exps.iter().enumerate().map(|(i, &e)| e * pres.even_weight(i)).sum::<u32>()
            + odd_support.iter().map(|&i| pres.odd_weight(i as usize)).sum::<u32>();
        Some(Monomial { degree, even_exps, odd_support, labels })
    }

    /// The empty monomial. Only a unit when the presentation has no blocks;
    /// with blocks the unit is a sum over label tuples (see Polynomial::one).
    pub fn empty(pres: &Presentation) -> Monomial {
        assert_eq!(pres.n_blocks(), 0, "empty monomial needs a blockless presentation");
        Monomial { degree: 0, even_exps: vec![0; pres.n_even()], odd_support: Vec::new(), labels: Vec::new() }
    }

    pub fn with_labels(pres: &Presentation, labels: Vec<u32>) -> Monomial {
        Monomial::new(pres, vec![0; pres.n_even()], Vec::new(), labels).unwrap()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        if self.odd_support.len().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn even_exps(&self) -> &[u32] {
        &self.even_exps
    }

    pub fn odd_support(&self) -> &[u32] {
        &self.odd_support
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn is_scalar_shape(&self) -> bool {
        self.degree == 0 && self.odd_support.is_empty() && self.even_exps.iter().all(|&e| e == 0)
    }

    /// Product with the Koszul sign; None when the result is zero.
    pub fn mul(&self, other: &Monomial, pres: &Presentation) -> Option<(Monomial, Sign)> {
        if self.labels != other.labels {
            return None;
        }
        let sign = koszul_sign(&self.odd_support, &other.odd_support);
        if sign == Sign::Zero {
            return None;
        }
        let mut even_exps = self.even_exps.clone();
        for (i, e) in other.even_exps.iter().enumerate() {
            even_exps[i] += e;
            if let Some(q) = pres.power_of(i) {
                if even_exps[i] >= q {
                    return None;
                }
            }
        }
        let mut odd_support = Vec::with_capacity(self.odd_support.len() + other.odd_support.len());
        odd_support.extend_from_slice(&self.odd_support);
        odd_support.extend_from_slice(&other.odd_support);
        odd_support.sort_unstable();
        Some((
            Monomial {
                degree: self.degree + other.degree,
                even_exps,
                odd_support,
                labels: self.labels.clone(),
            },
            sign,
        ))
    }

    /// Factor sequence in canonical order: even variables with multiplicity
    /// in declaration order, then odd variables ascending, then one label
    /// per block. Morphisms apply images as the ordered product of these.
    pub fn factors(&self) -> Vec<GenRef> {
        let mut out = Vec::new();
        for (i, &e) in self.even_exps.iter().enumerate() {
            for _ in 0..e {
                out.push(GenRef::Even(i));
            }
        }
        for &i in &self.odd_support {
            out.push(GenRef::Odd(i as usize));
        }
        for (b, &l) in self.labels.iter().enumerate() {
            out.push(GenRef::Label(b, l as usize));
        }
        out
    }
}

fn cmp_odd_desc(a: &[u32], b: &[u32]) -> Ordering {
    // Descending indicator-vector order: the support whose first
    // disagreement uses a smaller variable comes first; a proper prefix
    // follows its extensions.
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    b.len().cmp(&a.len())
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.even_exps.cmp(&self.even_exps))
            .then_with(|| cmp_odd_desc(&self.odd_support, &other.odd_support))
            .then_with(|| self.labels.cmp(&other.labels))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All normal-form monomials of weighted degree exactly d, in order.
pub fn monomial_basis(pres: &Presentation, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let n_odd = pres.n_odd();
    assert!(n_odd < 32, "odd variable count out of supported range");
    for mask in 0u32..(1 << n_odd) {
        let mut support = Vec::new();
        let mut odd_degree = 0u32;
        for i in 0..n_odd {
            if mask & (1 << i) != 0 {
                support.push(i as u32);
                odd_degree += pres.odd_weight(i);
            }
        }
        if odd_degree > d {
            continue;
        }
        let mut exps = vec![0u32; pres.n_even()];
        enumerate_even(pres, 0, d - odd_degree, &mut exps, &mut |exps| {
            for labels in pres.label_tuples() {
                if let Some(m) = Monomial::new(pres, exps.to_vec(), support.clone(), labels) {
                    out.push(m);
                }
            }
        });
    }
    out.sort();
    out
}

fn enumerate_even(pres: &Presentation, i: usize, remaining: u32, exps: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if i == pres.n_even() {
        if remaining == 0 {
            emit(exps);
        }
        return;
    }
    let w = pres.even_weight(i);
    let cap_rel = pres.power_of(i).map(|q| q - 1).unwrap_or(u32::MAX);
    let cap = (remaining / w).min(cap_rel);
    for e in 0..=cap {
        exps[i] = e;
        enumerate_even(pres, i + 1, remaining - e * w, exps, emit);
    }
    exps[i] = 0;
}

/// Concatenated bases of degrees 0..=d.
pub fn monomials_up_to(pres: &Presentation, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for e in 0..=d {
        out.extend(monomial_basis(pres, e));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn k_x_theta() -> Presentation {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_odd("theta").unwrap();
        p
    }

    #[test]
    fn koszul_examples() {
        assert_eq!(koszul_sign(&[], &[0]), Sign::Plus);
        assert_eq!(koszul_sign(&[1], &[0]), Sign::Minus);
        assert_eq!(koszul_sign(&[0], &[0]), Sign::Zero);
        assert_eq!(koszul_sign(&[1, 2], &[0]), Sign::Plus);
        assert_eq!(koszul_sign(&[2], &[0, 1]), Sign::Plus);
    }

    #[test]
    fn basis_x_theta_degree2() {
        let p = k_x_theta();
        let b = monomial_basis(&p, 2);
        let x2 = Monomial::new(&p, vec![2], vec![], vec![]).unwrap();
        let xt = Monomial::new(&p, vec![1], vec![0], vec![]).unwrap();
        assert_eq!(b, vec![x2, xt]);
    }

    #[test]
    fn basis_example_v1_v2_degree1() {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("v1", None).unwrap();
        p.add_odd("v2").unwrap();
        let b = monomial_basis(&p, 1);
        let v1 = Monomial::new(&p, vec![1], vec![], vec![]).unwrap();
        let v2 = Monomial::new(&p, vec![0], vec![0], vec![]).unwrap();
        assert_eq!(b, vec![v1, v2]);
    }

    #[test]
    fn truncated_basis_empty() {
        let mut p = Presentation::new(FieldSpec::prime(3).unwrap());
        p.add_even("x", Some(3)).unwrap();
        assert!(monomial_basis(&p, 3).is_empty());
        assert_eq!(monomial_basis(&p, 2).len(), 1);
    }

    #[test]
    fn product_signs_and_relations() {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", Some(2)).unwrap();
        p.add_odd("a").unwrap();
        p.add_odd("b").unwrap();
        let a = Monomial::new(&p, vec![0], vec![0], vec![]).unwrap();
        let b = Monomial::new(&p, vec![0], vec![1], vec![]).unwrap();
        let (ab, s) = b.mul(&a, &p).unwrap();
        assert_eq!(s, Sign::Minus);
        assert_eq!(ab.odd_support(), &[0, 1]);
        assert!(a.mul(&a, &p).is_none());
        let x = Monomial::new(&p, vec![1], vec![], vec![]).unwrap();
        assert!(x.mul(&x, &p).is_none());
    }

    #[test]
    fn label_mismatch_kills_product() {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_block(vec!["e0".into(), "e1".into()]).unwrap();
        let e0 = Monomial::with_labels(&p, vec![0]);
        let e1 = Monomial::with_labels(&p, vec![1]);
        assert!(e0.mul(&e1, &p).is_none());
        let (sq, s) = e0.mul(&e0, &p).unwrap();
        assert_eq!(s, Sign::Plus);
        assert_eq!(sq, e0);
    }

    #[test]
    fn order_degree_then_lex() {
        let p = k_x_theta();
        let one = Monomial::empty(&p);
        let x = Monomial::new(&p, vec![1], vec![], vec![]).unwrap();
        let t = Monomial::new(&p, vec![0], vec![0], vec![]).unwrap();
        let x2 = Monomial::new(&p, vec![2], vec![], vec![]).unwrap();
        assert!(one < x && x < t && t < x2);
    }

    #[test]
    fn basis_and_order_with_blocks() {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_block(vec!["e0".into(), "e1".into()]).unwrap();
        let b0 = monomial_basis(&p, 0);
        assert_eq!(b0.len(), 2);
        assert_eq!(b0[0].labels(), &[0]);
        assert_eq!(b0[1].labels(), &[1]);
        assert_eq!(monomial_basis(&p, 1).len(), 2);
    }

    #[test]
    fn factor_sequence_round_trip() {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_even("y", None).unwrap();
        p.add_odd("a").unwrap();
        let m = Monomial::new(&p, vec![2, 1], vec![0], vec![]).unwrap();
        assert_eq!(m.factors(), vec![GenRef::Even(0), GenRef::Even(0), GenRef::Even(1), GenRef::Odd(0)]);
    }
}
