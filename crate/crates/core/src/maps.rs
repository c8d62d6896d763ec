//! Superalgebra morphisms given by generator images, and the shared
//! machinery for extending generator-level data multiplicatively.

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::presentation::{same_presentation, GenRef, Presentation};
use crate::tensor::TensorElement;
use std::sync::Arc;

/// One value per generator: even and odd variables plus block labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenTable<T> {
    pub even: Vec<T>,
    pub odd: Vec<T>,
    pub labels: Vec<Vec<T>>,
}

impl<T> GenTable<T> {
    pub fn build(pres: &Presentation, mut f: impl FnMut(GenRef) -> T) -> GenTable<T> {
        GenTable {
            even: (0..pres.n_even()).map(|i| f(GenRef::Even(i))).collect(),
            odd: (0..pres.n_odd()).map(|i| f(GenRef::Odd(i))).collect(),
            labels: pres
                .blocks()
                .iter()
                .enumerate()
                .map(|(b, block)| (0..block.labels.len()).map(|l| f(GenRef::Label(b, l))).collect())
                .collect(),
        }
    }

    pub fn get(&self, g: GenRef) -> &T {
        match g {
            GenRef::Even(i) => &self.even[i],
            GenRef::Odd(i) => &self.odd[i],
            GenRef::Label(b, l) => &self.labels[b][l],
        }
    }

    pub fn matches(&self, pres: &Presentation) -> bool {
        self.even.len() == pres.n_even()
            && self.odd.len() == pres.n_odd()
            && self.labels.len() == pres.n_blocks()
            && self.labels.iter().zip(pres.blocks()).all(|(v, b)| v.len() == b.labels.len())
    }
}

/// Ordered product of generator images over the factors of a monomial.
pub fn extend_to_monomial<T, M>(m: &Monomial, one: T, image: &GenTable<T>, mul: M) -> T
where
    T: Clone,
    M: Fn(&T, &T) -> T,
{
    let mut acc = one;
    for g in m.factors() {
        acc = mul(&acc, image.get(g));
    }
    acc
}

/// Morphism K[src] → dst given on generators. Application is always the
/// multiplicative extension; whether the images actually define a
/// morphism (parity, relations) is checked separately at boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraMap {
    src: Arc<Presentation>,
    dst: Arc<Presentation>,
    images: GenTable<Polynomial>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MapError {
    #[error("image of {0} has wrong parity")]
    Parity(String),
    #[error("image of {0} violates its power relation")]
    PowerRelation(String),
    #[error("images of block {0} are not orthogonal idempotents summing to 1")]
    BlockRelations(usize),
    #[error("image table does not match the source presentation")]
    Arity,
}

impl AlgebraMap {
    pub fn new(src: &Arc<Presentation>, dst: &Arc<Presentation>, images: GenTable<Polynomial>) -> Result<AlgebraMap, MapError> {
        if !images.matches(src) {
            return Err(MapError::Arity);
        }
        Ok(AlgebraMap { src: Arc::clone(src), dst: Arc::clone(dst), images })
    }

    pub fn from_fn(src: &Arc<Presentation>, dst: &Arc<Presentation>, f: impl FnMut(GenRef) -> Polynomial) -> AlgebraMap {
        AlgebraMap { src: Arc::clone(src), dst: Arc::clone(dst), images: GenTable::build(src, f) }
    }

    pub fn identity(pres: &Arc<Presentation>) -> AlgebraMap {
        AlgebraMap::from_fn(pres, pres, |g| Polynomial::generator(pres, g))
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.src
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.dst
    }

    pub fn image(&self, g: GenRef) -> &Polynomial {
        self.images.get(g)
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Polynomial {
        extend_to_monomial(m, Polynomial::one(&self.dst), &self.images, |a, b| a.mul(b))
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        assert!(same_presentation(p.presentation(), &self.src), "map applied outside its source");
        let mut out = Polynomial::zero(&self.dst);
        for (m, c) in p.terms() {
            out = out.add(&self.apply_monomial(m).scale(c));
        }
        out
    }

    /// self ∘ inner.
    pub fn compose(&self, inner: &AlgebraMap) -> AlgebraMap {
        assert!(same_presentation(&self.src, &inner.dst), "composition sources do not line up");
        AlgebraMap::from_fn(&inner.src, &self.dst, |g| self.apply(inner.image(g)))
    }

    pub fn equal_on_generators(&self, other: &AlgebraMap) -> bool {
        let mut gens = self.src.variable_gens();
        for (b, block) in self.src.blocks().iter().enumerate() {
            for l in 0..block.labels.len() {
                gens.push(GenRef::Label(b, l));
            }
        }
        gens.into_iter().all(|g| self.image(g) == other.image(g))
    }

    /// Images are parity-homogeneous of the generator's parity (zero allowed).
    pub fn check_parity(&self) -> Result<(), MapError> {
        let check = |g: GenRef| -> Result<(), MapError> {
            let want = self.src.parity_of(g);
            if self.images.get(g).is_parity_homogeneous(want) {
                Ok(())
            } else {
                Err(MapError::Parity(self.src.name_of(g).to_string()))
            }
        };
        for g in self.src.variable_gens() {
            check(g)?;
        }
        for (b, block) in self.src.blocks().iter().enumerate() {
            for l in 0..block.labels.len() {
                check(GenRef::Label(b, l))?;
            }
        }
        Ok(())
    }

    /// Images satisfy the source relations, making the extension a genuine
    /// morphism: x^q = 0 for truncated evens, and per block orthogonal
    /// idempotents summing to 1. Odd squares vanish by parity.
    pub fn check_relations(&self) -> Result<(), MapError> {
        for i in 0..self.src.n_even() {
            if let Some(q) = self.src.power_of(i) {
                if !self.images.even[i].pow(q).is_zero() {
                    return Err(MapError::PowerRelation(self.src.even_vars()[i].name.clone()));
                }
            }
        }
        for (b, imgs) in self.images.labels.iter().enumerate() {
            let mut sum = Polynomial::zero(&self.dst);
            for (l, el) in imgs.iter().enumerate() {
                for (l2, el2) in imgs.iter().enumerate() {
                    let prod = el.mul(el2);
                    let want = if l == l2 { el.clone() } else { Polynomial::zero(&self.dst) };
                    if prod != want {
                        return Err(MapError::BlockRelations(b));
                    }
                }
                sum = sum.add(el);
            }
            if sum != Polynomial::one(&self.dst) {
                return Err(MapError::BlockRelations(b));
            }
        }
        Ok(())
    }

    pub fn check_morphism(&self) -> Result<(), MapError> {
        self.check_parity()?;
        self.check_relations()
    }
}

/// Multiplicative extension of generator images valued in a tensor algebra,
/// used for comultiplications and coactions.
pub fn extend_tensor(
    images: &GenTable<TensorElement>,
    left: &Arc<Presentation>,
    right: &Arc<Presentation>,
    p: &Polynomial,
) -> TensorElement {
    let mut out = TensorElement::zero(left, right);
    for (m, c) in p.terms() {
        let t = extend_to_monomial(m, TensorElement::one(left, right), images, |a, b| a.mul(b));
        out = out.add(&t.scale(c));
    }
    out
}

pub fn extend_tensor_monomial(
    images: &GenTable<TensorElement>,
    left: &Arc<Presentation>,
    right: &Arc<Presentation>,
    m: &Monomial,
) -> TensorElement {
    extend_to_monomial(m, TensorElement::one(left, right), images, |a, b| a.mul(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::textio::parse_polynomial;

    fn pres() -> Arc<Presentation> {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_odd("theta").unwrap();
        Arc::new(p)
    }

    #[test]
    fn identity_and_compose() {
        let p = pres();
        let id = AlgebraMap::identity(&p);
        let f = parse_polynomial(&p, "x^2 + x*theta - 3").unwrap();
        assert_eq!(id.apply(&f), f);
        // x ↦ −x, θ ↦ −θ squared is the identity
        let s = AlgebraMap::from_fn(&p, &p, |g| Polynomial::generator(&p, g).neg());
        assert_eq!(s.apply(&f), parse_polynomial(&p, "-3 + x^2 + x*theta").unwrap());
        assert!(s.compose(&s).equal_on_generators(&id));
    }

    #[test]
    fn parity_gate() {
        let p = pres();
        let bad = AlgebraMap::from_fn(&p, &p, |g| match g {
            GenRef::Even(_) => Polynomial::generator(&p, p.find("theta").unwrap()),
            _ => Polynomial::zero(&p),
        });
        assert_eq!(bad.check_parity(), Err(MapError::Parity("x".into())));
        let zero_ok = AlgebraMap::from_fn(&p, &p, |_| Polynomial::zero(&p));
        assert!(zero_ok.check_parity().is_ok());
    }

    #[test]
    fn relation_gate() {
        let mut t = Presentation::new(FieldSpec::prime(3).unwrap());
        t.add_even("u", Some(3)).unwrap();
        let t = Arc::new(t);
        let mut s = Presentation::new(FieldSpec::prime(3).unwrap());
        s.add_even("v", Some(3)).unwrap();
        let s = Arc::new(s);
        let ok = AlgebraMap::from_fn(&s, &t, |_| parse_polynomial(&t, "u + u^2").unwrap());
        assert!(ok.check_relations().is_ok());
        let mut free = Presentation::new(FieldSpec::prime(3).unwrap());
        free.add_even("w", None).unwrap();
        let free = Arc::new(free);
        let bad = AlgebraMap::from_fn(&s, &free, |_| parse_polynomial(&free, "w").unwrap());
        assert_eq!(bad.check_relations(), Err(MapError::PowerRelation("v".into())));
    }

    #[test]
    fn block_relation_gate() {
        let mut g = Presentation::new(FieldSpec::Rationals);
        g.add_block(vec!["e0".into(), "e1".into()]).unwrap();
        let g = Arc::new(g);
        let id = AlgebraMap::identity(&g);
        assert!(id.check_morphism().is_ok());
        // swapping labels is a morphism too
        let swap = AlgebraMap::from_fn(&g, &g, |r| match r {
            GenRef::Label(0, l) => Polynomial::generator(&g, GenRef::Label(0, 1 - l)),
            _ => unreachable!(),
        });
        assert!(swap.check_morphism().is_ok());
        // sending both labels to e0 breaks the sum relation
        let collapse = AlgebraMap::from_fn(&g, &g, |_| Polynomial::generator(&g, GenRef::Label(0, 0)));
        assert_eq!(collapse.check_relations(), Err(MapError::BlockRelations(0)));
    }

    #[test]
    fn morphism_is_multiplicative() {
        let p = pres();
        let s = AlgebraMap::from_fn(&p, &p, |g| match g {
            GenRef::Even(_) => parse_polynomial(&p, "x + 1").unwrap(),
            GenRef::Odd(_) => parse_polynomial(&p, "x*theta").unwrap(),
            GenRef::Label(..) => unreachable!(),
        });
        let f = parse_polynomial(&p, "x*theta").unwrap();
        let g = parse_polynomial(&p, "x + theta").unwrap();
        assert_eq!(s.apply(&f.mul(&g)), s.apply(&f).mul(&s.apply(&g)));
    }
}
