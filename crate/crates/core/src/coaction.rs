//! Right coactions τ: K[X] → K[X] ⊗ K[G] making K[X] a comodule algebra.
//! A coaction is stored by its generator images and extended
//! multiplicatively. Validation checks, on generators and optionally on
//! all basis monomials up to a degree: preservation of relations, the
//! counit law, coassociativity, parity evenness, and the degree
//! filtration (left tensor factors never exceed the source degree).

use crate::group::FiniteGroup;
use crate::hopf::{HopfSuperAlgebra, SupergroupSpec};
use crate::maps::{extend_tensor, extend_tensor_monomial, AlgebraMap, GenTable};
use crate::monomial::{monomials_up_to, Monomial};
use crate::poly::Polynomial;
use crate::presentation::{GenRef, Parity, Presentation};
use crate::tensor::{Tensor3, TensorElement};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoactionLaw {
    Relations,
    Counit,
    Coassociativity,
    Parity,
    Filtration,
}

impl std::fmt::Display for CoactionLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CoactionLaw::Relations => "relations",
            CoactionLaw::Counit => "counit",
            CoactionLaw::Coassociativity => "coassociativity",
            CoactionLaw::Parity => "parity",
            CoactionLaw::Filtration => "filtration",
        };
        write!(f, "{}", s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoactionFailure {
    pub law: CoactionLaw,
    pub witness: String,
}

#[derive(Debug, Clone)]
pub struct CoactionReport {
    pub checked: usize,
    pub failures: Vec<CoactionFailure>,
}

impl CoactionReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CoactionError {
    #[error("derivation image of {0} must be parity-homogeneous of the opposite parity")]
    PhiParity(String),
    #[error("derivation does not square to zero on {0}")]
    PhiSquare(String),
    #[error("expected one action map per group element: {got} for order {order}")]
    ActionCount { got: usize, order: usize },
    #[error("action map for {0} is not an algebra endomorphism of the space: {1}")]
    NotAMorphism(String, String),
    #[error("identity element must act as the identity map")]
    IdentityActs,
    #[error("composition law fails: {delta} after {gamma} differs from {product}")]
    Composition { delta: String, gamma: String, product: String },
    #[error("tensor images do not live in space ⊗ group")]
    LegMismatch,
    #[error("coaction laws fail: {}", format_failures(.0))]
    Laws(Vec<CoactionFailure>),
}

fn format_failures(fs: &[CoactionFailure]) -> String {
    fs.iter().map(|f| format!("{} at {}", f.law, f.witness)).collect::<Vec<_>>().join("; ")
}

/// An odd right superderivation φ of K[X]:
/// φ(ab) = a·φ(b) + (−1)^{|b|} φ(a)·b.
#[derive(Debug, Clone)]
pub struct OddDerivation {
    space: Arc<Presentation>,
    images: GenTable<Polynomial>,
}

impl OddDerivation {
    pub fn new(space: &Arc<Presentation>, images: GenTable<Polynomial>) -> Result<OddDerivation, CoactionError> {
        assert!(images.matches(space), "derivation arity");
        for g in space.variable_gens() {
            let img = images.get(g);
            if !img.is_parity_homogeneous(space.parity_of(g).flip()) {
                return Err(CoactionError::PhiParity(space.name_of(g).to_string()));
            }
        }
        let phi = OddDerivation { space: space.clone(), images };
        for g in space.variable_gens() {
            if !phi.apply(phi.image(g)).is_zero() {
                return Err(CoactionError::PhiSquare(space.name_of(g).to_string()));
            }
        }
        Ok(phi)
    }

    pub fn from_fn(space: &Arc<Presentation>, f: impl FnMut(GenRef) -> Polynomial) -> Result<OddDerivation, CoactionError> {
        Self::new(space, GenTable::build(space, f))
    }

    pub fn space(&self) -> &Arc<Presentation> {
        &self.space
    }

    pub fn image(&self, g: GenRef) -> &Polynomial {
        self.images.get(g)
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Polynomial {
        self.apply_factors(&m.factors())
    }

    fn apply_factors(&self, factors: &[GenRef]) -> Polynomial {
        match factors.split_first() {
            None => Polynomial::zero(&self.space),
            Some((&g, rest)) => {
                let gp = Polynomial::generator(&self.space, g);
                let mut out = gp.mul(&self.apply_factors(rest));
                let rest_odd = rest.iter().filter(|r| self.space.parity_of(**r) == Parity::Odd).count();
                let tail = self.image(g).mul(&rest.iter().fold(Polynomial::one(&self.space), |acc, &r| {
                    acc.mul(&Polynomial::generator(&self.space, r))
                }));
                out = if rest_odd % 2 == 1 { out.sub(&tail) } else { out.add(&tail) };
                out
            }
        }
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(&self.space);
        for (m, c) in p.terms() {
            out = out.add(&self.apply_monomial(m).scale(c));
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct Coaction {
    space: Arc<Presentation>,
    group: HopfSuperAlgebra,
    tau: GenTable<TensorElement>,
}

impl Coaction {
    pub fn from_explicit(
        space: &Arc<Presentation>,
        group: HopfSuperAlgebra,
        tau: GenTable<TensorElement>,
    ) -> Result<Coaction, CoactionError> {
        assert!(tau.matches(space), "coaction arity");
        for g in space.variable_gens() {
            let t = tau.get(g);
            if !crate::presentation::same_presentation(t.left_presentation(), space)
                || !crate::presentation::same_presentation(t.right_presentation(), group.presentation())
            {
                return Err(CoactionError::LegMismatch);
            }
        }
        let c = Coaction { space: space.clone(), group, tau };
        let report = c.validate_generators();
        if !report.passes() {
            return Err(CoactionError::Laws(report.failures));
        }
        Ok(c)
    }

    /// τ(x) = x⊗1 + φ(x)⊗t for an odd derivation φ with φ² = 0.
    pub fn from_odd_derivation(phi: &OddDerivation) -> Result<Coaction, CoactionError> {
        let space = phi.space().clone();
        let group = HopfSuperAlgebra::build(&SupergroupSpec::OddAdditive, space.field).unwrap();
        let one_g = Polynomial::one(group.presentation());
        let t = Polynomial::generator(group.presentation(), GenRef::Odd(0));
        let tau = GenTable::build(&space, |g| {
            let gp = Polynomial::generator(&space, g);
            TensorElement::pure(&gp, &one_g).add(&TensorElement::pure(phi.image(g), &t))
        });
        Self::from_explicit(&space, group, tau)
    }

    /// τ(x) = Σ_γ (γ·x) ⊗ e_γ for a left action of Γ by algebra
    /// automorphisms; actions[i] is the map for gamma.names()[i].
    pub fn from_group_action(
        space: &Arc<Presentation>,
        gamma: &FiniteGroup,
        actions: &[AlgebraMap],
    ) -> Result<Coaction, CoactionError> {
        if actions.len() != gamma.order() {
            return Err(CoactionError::ActionCount { got: actions.len(), order: gamma.order() });
        }
        for (i, a) in actions.iter().enumerate() {
            if !crate::presentation::same_presentation(a.source(), space)
                || !crate::presentation::same_presentation(a.target(), space)
            {
                return Err(CoactionError::LegMismatch);
            }
            a.check_morphism().map_err(|e| CoactionError::NotAMorphism(gamma.name(i).to_string(), e.to_string()))?;
        }
        let id = AlgebraMap::identity(space);
        if !actions[gamma.identity()].equal_on_generators(&id) {
            return Err(CoactionError::IdentityActs);
        }
        for d in 0..gamma.order() {
            for g in 0..gamma.order() {
                let composed = actions[d].compose(&actions[g]);
                let expected = &actions[gamma.mul(d, g)];
                if !composed.equal_on_generators(expected) {
                    return Err(CoactionError::Composition {
                        delta: gamma.name(d).to_string(),
                        gamma: gamma.name(g).to_string(),
                        product: gamma.name(gamma.mul(d, g)).to_string(),
                    });
                }
            }
        }
        let group = HopfSuperAlgebra::build(&SupergroupSpec::ConstantGroup(gamma.clone()), space.field)
            .map_err(|_| CoactionError::LegMismatch)?;
        let tau = GenTable::build(space, |g| {
            let mut out = TensorElement::zero(space, group.presentation());
            for (i, a) in actions.iter().enumerate() {
                let e_i = Polynomial::generator(group.presentation(), GenRef::Label(0, i));
                out = out.add(&TensorElement::pure(a.image(g), &e_i));
            }
            out
        });
        Self::from_explicit(space, group, tau)
    }

    pub fn trivial(space: &Arc<Presentation>, group: HopfSuperAlgebra) -> Coaction {
        let one_g = Polynomial::one(group.presentation());
        let tau = GenTable::build(space, |g| {
            TensorElement::pure(&Polynomial::generator(space, g), &one_g)
        });
        Self::from_explicit(space, group, tau).unwrap()
    }

    pub fn space(&self) -> &Arc<Presentation> {
        &self.space
    }

    pub fn group(&self) -> &HopfSuperAlgebra {
        &self.group
    }

    pub fn tau_gen(&self, g: GenRef) -> &TensorElement {
        self.tau.get(g)
    }

    pub fn coact_monomial(&self, m: &Monomial) -> TensorElement {
        extend_tensor_monomial(&self.tau, &self.space, self.group.presentation(), m)
    }

    pub fn coact(&self, p: &Polynomial) -> TensorElement {
        extend_tensor(&self.tau, &self.space, self.group.presentation(), p)
    }

    /// When K[G] is a single label block, recovers the per-element action
    /// maps γ ↦ (x ↦ coefficient of e_γ in τ(x)).
    pub fn constant_actions(&self) -> Option<Vec<AlgebraMap>> {
        let gp = self.group.presentation();
        if gp.n_even() != 0 || gp.n_odd() != 0 || gp.n_blocks() != 1 {
            return None;
        }
        let n = gp.blocks()[0].labels.len();
        let maps = (0..n)
            .map(|l| {
                let e_l = Monomial::with_labels(gp, vec![l as u32]);
                AlgebraMap::from_fn(&self.space, &self.space, |g| {
                    self.tau_gen(g)
                        .collect_by_right()
                        .remove(&e_l)
                        .unwrap_or_else(|| Polynomial::zero(&self.space))
                })
            })
            .collect();
        Some(maps)
    }

    pub fn validate_generators(&self) -> CoactionReport {
        let mut failures = Vec::new();
        let unit = TensorElement::one(&self.space, self.group.presentation());
        // relations carry over to tensor images
        for i in 0..self.space.n_even() {
            if let Some(q) = self.space.power_of(i) {
                if !self.tau_gen(GenRef::Even(i)).pow(q).is_zero() {
                    failures.push(CoactionFailure {
                        law: CoactionLaw::Relations,
                        witness: self.space.name_of(GenRef::Even(i)).to_string(),
                    });
                }
            }
        }
        for i in 0..self.space.n_odd() {
            if !self.tau_gen(GenRef::Odd(i)).pow(2).is_zero() {
                failures.push(CoactionFailure {
                    law: CoactionLaw::Relations,
                    witness: self.space.name_of(GenRef::Odd(i)).to_string(),
                });
            }
        }
        for (b, block) in self.space.blocks().iter().enumerate() {
            let n = block.labels.len();
            let mut sum = TensorElement::zero(&self.space, self.group.presentation());
            let mut ok = true;
            for l in 0..n {
                let tl = self.tau_gen(GenRef::Label(b, l));
                sum = sum.add(tl);
                ok &= tl.mul(tl) == *tl;
                for l2 in 0..n {
                    if l2 != l {
                        ok &= tl.mul(self.tau_gen(GenRef::Label(b, l2))).is_zero();
                    }
                }
            }
            ok &= sum == unit;
            if !ok {
                failures.push(CoactionFailure { law: CoactionLaw::Relations, witness: format!("block {}", b) });
            }
        }
        let mut checked = 0;
        for g in self.space.variable_gens() {
            checked += 1;
            let gen_poly = Polynomial::generator(&self.space, g);
            self.check_linear_laws(
                &gen_poly,
                self.tau_gen(g),
                self.space.weight_of(g),
                self.space.parity_of(g),
                self.space.name_of(g),
                &mut failures,
            );
        }
        CoactionReport { checked, failures }
    }

    /// Re-checks the linear laws on every basis monomial of degree ≤ d.
    pub fn validate_monomials(&self, d: u32) -> CoactionReport {
        let mut failures = Vec::new();
        let basis = monomials_up_to(&self.space, d);
        for m in &basis {
            let mp = Polynomial::monomial(&self.space, m.clone(), self.space.field.one());
            self.check_linear_laws(&mp, &self.coact_monomial(m), m.degree(), m.parity(), &mp.to_string(), &mut failures);
        }
        CoactionReport { checked: basis.len(), failures }
    }

    fn check_linear_laws(
        &self,
        elem: &Polynomial,
        image: &TensorElement,
        degree: u32,
        parity: Parity,
        witness: &str,
        failures: &mut Vec<CoactionFailure>,
    ) {
        let counit_applied = {
            let mut out = Polynomial::zero(&self.space);
            for ((a, b), c) in image.terms() {
                let k = self.group.counit_monomial(b).mul(c);
                out = out.add(&Polynomial::monomial(&self.space, a.clone(), k));
            }
            out
        };
        if counit_applied != *elem {
            failures.push(CoactionFailure { law: CoactionLaw::Counit, witness: witness.to_string() });
        }
        let lhs = Tensor3::from_left_expansion(image, |a| self.coact_monomial(a));
        let rhs = Tensor3::from_right_expansion(image, |b| self.group.comult_monomial(b));
        if lhs != rhs {
            failures.push(CoactionFailure { law: CoactionLaw::Coassociativity, witness: witness.to_string() });
        }
        if image.terms().any(|((a, b), _)| (a.parity() == b.parity()) != (parity == Parity::Even)) {
            failures.push(CoactionFailure { law: CoactionLaw::Parity, witness: witness.to_string() });
        }
        if image.terms().any(|((a, _), _)| a.degree() > degree) {
            failures.push(CoactionFailure { law: CoactionLaw::Filtration, witness: witness.to_string() });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn free_line() -> Arc<Presentation> {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_odd("theta").unwrap();
        Arc::new(p)
    }

    fn plane_with_odd() -> Arc<Presentation> {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_odd("theta").unwrap();
        Arc::new(p)
    }

    #[test]
    fn odd_translation_coaction() {
        let space = free_line();
        let phi = OddDerivation::from_fn(&space, |_| Polynomial::one(&space)).unwrap();
        let c = Coaction::from_odd_derivation(&phi).unwrap();
        assert!(c.validate_generators().passes());
        assert!(c.validate_monomials(6).passes());
        let theta = Polynomial::generator(&space, GenRef::Odd(0));
        let img = c.coact(&theta);
        assert_eq!(img.n_terms(), 2);
    }

    #[test]
    fn derivation_leibniz_sign() {
        let space = plane_with_odd();
        let theta = Polynomial::generator(&space, GenRef::Odd(0));
        let phi = OddDerivation::from_fn(&space, |g| match g {
            GenRef::Even(0) => theta.clone(),
            _ => Polynomial::zero(&space),
        })
        .unwrap();
        let x = Polynomial::generator(&space, GenRef::Even(0));
        // φ(x·θ) = x·φ(θ) − φ(x)·θ = −θ² = 0, and φ(x²) = 2xθ
        assert!(phi.apply(&x.mul(&theta)).is_zero());
        assert_eq!(phi.apply(&x.mul(&x)), x.mul(&theta).scale(&FieldSpec::Rationals.from_i64(2)));
    }

    #[test]
    fn derivation_must_flip_parity() {
        let space = plane_with_odd();
        let x = Polynomial::generator(&space, GenRef::Even(0));
        let err = OddDerivation::from_fn(&space, |_| x.clone()).unwrap_err();
        assert!(matches!(err, CoactionError::PhiParity(_)));
    }

    #[test]
    fn truncated_even_blocks_derivation_coaction() {
        // x² = 0 with φ(x) = θ: φ² = 0 on generators, yet τ(x)² = 2xθ⊗t ≠ 0,
        // so the relation law must reject it over the rationals.
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", Some(2)).unwrap();
        p.add_odd("theta").unwrap();
        let space = Arc::new(p);
        let theta = Polynomial::generator(&space, GenRef::Odd(0));
        let phi = OddDerivation::from_fn(&space, |g| match g {
            GenRef::Even(0) => theta.clone(),
            _ => Polynomial::zero(&space),
        })
        .unwrap();
        let err = Coaction::from_odd_derivation(&phi).unwrap_err();
        let CoactionError::Laws(fails) = err else { panic!("expected law failures") };
        assert!(fails.iter().any(|f| f.law == CoactionLaw::Relations && f.witness == "x"));
    }

    #[test]
    fn sign_action_of_z2() {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_odd("theta1").unwrap();
        p.add_odd("theta2").unwrap();
        let space = Arc::new(p);
        let z2 = FiniteGroup::cyclic(2);
        let id = AlgebraMap::identity(&space);
        let flip = AlgebraMap::from_fn(&space, &space, |g| Polynomial::generator(&space, g).neg());
        let c = Coaction::from_group_action(&space, &z2, &[id, flip]).unwrap();
        assert!(c.validate_monomials(4).passes());
        let actions = c.constant_actions().unwrap();
        assert_eq!(actions.len(), 2);
        let theta1 = Polynomial::generator(&space, GenRef::Odd(0));
        assert_eq!(actions[1].apply(&theta1), theta1.neg());
    }

    #[test]
    fn translations_form_z5_not_z4() {
        let f5 = FieldSpec::prime(5).unwrap();
        let mut p = Presentation::new(f5);
        p.add_even("x", None).unwrap();
        let space = Arc::new(p);
        let shift = |k: i64| {
            AlgebraMap::from_fn(&space, &space, |g| {
                Polynomial::generator(&space, g).add(&Polynomial::constant(&space, f5.from_i64(k)))
            })
        };
        let z5 = FiniteGroup::cyclic(5);
        let acts: Vec<_> = (0..5).map(|k| shift(k as i64)).collect();
        let c = Coaction::from_group_action(&space, &z5, &acts).unwrap();
        assert!(c.validate_monomials(3).passes());

        let z4 = FiniteGroup::cyclic(4);
        let acts4: Vec<_> = (0..4).map(|k| shift(k as i64)).collect();
        let err = Coaction::from_group_action(&space, &z4, &acts4).unwrap_err();
        assert!(matches!(err, CoactionError::Composition { .. }));
    }

    #[test]
    fn trivial_coaction_fixes_everything() {
        let space = plane_with_odd();
        let g = HopfSuperAlgebra::build(&SupergroupSpec::OddAdditive, FieldSpec::Rationals).unwrap();
        let c = Coaction::trivial(&space, g);
        assert!(c.validate_monomials(5).passes());
        let x = Polynomial::generator(&space, GenRef::Even(0));
        let img = c.coact(&x.pow(3));
        assert_eq!(img, TensorElement::pure(&x.pow(3), &Polynomial::one(c.group().presentation())));
    }

    #[test]
    fn explicit_coaction_failing_counit() {
        let space = plane_with_odd();
        let g = HopfSuperAlgebra::build(&SupergroupSpec::OddAdditive, FieldSpec::Rationals).unwrap();
        let one_g = Polynomial::one(g.presentation());
        let x = Polynomial::generator(&space, GenRef::Even(0));
        let theta = Polynomial::generator(&space, GenRef::Odd(0));
        let tau = GenTable::build(&space, |gr| match gr {
            GenRef::Even(0) => TensorElement::pure(&x.pow(2), &one_g),
            _ => TensorElement::pure(&theta, &one_g),
        });
        let err = Coaction::from_explicit(&space, g, tau).unwrap_err();
        let CoactionError::Laws(fails) = err else { panic!("expected law failures") };
        assert!(fails.iter().any(|f| f.law == CoactionLaw::Counit && f.witness == "x"));
        // x ↦ x²⊗1 also breaks the filtration law
        assert!(fails.iter().any(|f| f.law == CoactionLaw::Filtration && f.witness == "x"));
    }

    #[test]
    fn example_with_even_and_odd_coordinates() {
        let space = plane_with_odd();
        let theta = Polynomial::generator(&space, GenRef::Odd(0));
        let phi = OddDerivation::from_fn(&space, |g| match g {
            GenRef::Even(0) => theta.clone(),
            _ => Polynomial::zero(&space),
        })
        .unwrap();
        let c = Coaction::from_odd_derivation(&phi).unwrap();
        assert!(c.validate_monomials(6).passes());
        // τ(xθ) = xθ⊗1: x θ is invariant
        let x = Polynomial::generator(&space, GenRef::Even(0));
        let xt = x.mul(&theta);
        assert_eq!(c.coact(&xt), TensorElement::pure(&xt, &Polynomial::one(c.group().presentation())));
        // τ(x²) = x²⊗1 + 2xθ⊗t: not invariant
        assert_eq!(c.coact(&x.pow(2)).n_terms(), 2);
    }
}
