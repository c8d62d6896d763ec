//! Freeness of the action, decided with sound certificates in both
//! directions. Membership of 1⊗M in the ideal J = ⟨τ(f) − f⊗1⟩ is
//! searched degreewise by exact linear algebra and returned only with a
//! re-verified combination; refutation only via a re-verified stabilizer
//! witness; otherwise UnknownAtBound. The module also builds the rank-2
//! splitting for free odd-additive actions, the quotient map ψ with its
//! surjectivity/bijectivity certification, and the degreewise free-basis
//! check.

use crate::coaction::{Coaction, OddDerivation};
use crate::field::Scalar;
use crate::hopf::HopfError;
use crate::invariants::invariant_slice;
use crate::linalg::{kernel_basis, solve, Matrix, RowSpace};
use crate::maps::{AlgebraMap, GenTable};
use crate::monomial::{monomials_up_to, Monomial};
use crate::poly::{slice_index, Polynomial};
use crate::presentation::{same_presentation, Parity};
use crate::tensor::TensorElement;
use std::collections::BTreeMap;

type Pair = (Monomial, Monomial);

fn index_pairs<'a>(tensors: impl Iterator<Item = &'a TensorElement>) -> BTreeMap<Pair, usize> {
    let mut idx = BTreeMap::new();
    for t in tensors {
        for ((a, b), _) in t.terms() {
            let next = idx.len();
            idx.entry((a.clone(), b.clone())).or_insert(next);
        }
    }
    idx
}

fn pair_coords(t: &TensorElement, idx: &BTreeMap<Pair, usize>, len: usize) -> Vec<Scalar> {
    let field = t.left_presentation().field;
    let mut v = vec![field.zero(); len];
    for ((a, b), c) in t.terms() {
        v[idx[&(a.clone(), b.clone())]] = c.clone();
    }
    v
}

#[derive(Debug, Clone)]
pub struct FreenessProblem {
    coaction: Coaction,
    j_generators: Vec<(String, TensorElement)>,
    m_basis: Vec<Polynomial>,
}

impl FreenessProblem {
    /// Requires a finite supergroup; J generators are τ(f) − f⊗1 over the
    /// generators of K[X], M is the augmentation ideal of K[G].
    pub fn new(c: &Coaction) -> Result<FreenessProblem, HopfError> {
        let m_basis = c.group().augmentation_ideal_basis()?;
        let one_g = Polynomial::one(c.group().presentation());
        let j_generators = c
            .space()
            .variable_gens()
            .into_iter()
            .map(|g| {
                let f = Polynomial::generator(c.space(), g);
                let jg = c.coact(&f).sub(&TensorElement::pure(&f, &one_g));
                (c.space().name_of(g).to_string(), jg)
            })
            .collect();
        Ok(FreenessProblem { coaction: c.clone(), j_generators, m_basis })
    }

    pub fn coaction(&self) -> &Coaction {
        &self.coaction
    }

    pub fn j_generators(&self) -> &[(String, TensorElement)] {
        &self.j_generators
    }

    pub fn m_basis(&self) -> &[Polynomial] {
        &self.m_basis
    }
}

/// One solved membership 1⊗target = Σ ξ_i · J_i with every K[X]-degree in
/// ξ_i at most coefficient_degree (minimal such degree).
#[derive(Debug, Clone)]
pub struct MembershipCertificate {
    pub target: Polynomial,
    pub coefficient_degree: u32,
    pub combination: Vec<(usize, TensorElement)>,
}

#[derive(Debug, Clone)]
pub struct FreeCertificate {
    pub memberships: Vec<MembershipCertificate>,
}

#[derive(Debug, Clone)]
pub enum FreenessVerdict {
    Free(FreeCertificate),
    NotFree(Box<StabilizerWitness>),
    UnknownAtBound(u32),
}

pub fn verify_certificate(problem: &FreenessProblem, cert: &FreeCertificate) -> bool {
    if cert.memberships.len() != problem.m_basis.len() {
        return false;
    }
    let one_x = Polynomial::one(problem.coaction.space());
    for (m, mc) in problem.m_basis.iter().zip(&cert.memberships) {
        if mc.target != *m {
            return false;
        }
        let mut acc = TensorElement::zero(problem.coaction.space(), problem.coaction.group().presentation());
        for (i, xi) in &mc.combination {
            match problem.j_generators.get(*i) {
                Some((_, jg)) => acc = acc.add(&xi.mul(jg)),
                None => return false,
            }
        }
        if acc != TensorElement::pure(&one_x, m) {
            return false;
        }
    }
    true
}

/// Degreewise membership search. Free only with a certificate that
/// re-expands; exhaustion gives UnknownAtBound, never a refutation.
pub fn check_free(problem: &FreenessProblem, bound: u32) -> FreenessVerdict {
    let space = problem.coaction.space();
    let gpres = problem.coaction.group().presentation();
    let field = space.field;
    let one = field.one();
    let g_basis = problem.coaction.group().basis(None);
    let x_mons = monomials_up_to(space, bound);

    struct Col {
        deg: u32,
        j_index: usize,
        pure_part: TensorElement,
        elem: TensorElement,
    }
    let mut cols: Vec<Col> = Vec::new();
    for (i, (_, jg)) in problem.j_generators.iter().enumerate() {
        if jg.is_zero() {
            continue;
        }
        for a in &x_mons {
            let xa = Polynomial::monomial(space, a.clone(), one.clone());
            for h in &g_basis {
                let hj = Polynomial::monomial(gpres, h.clone(), one.clone());
                let pure_part = TensorElement::pure(&xa, &hj);
                let elem = pure_part.mul(jg);
                if !elem.is_zero() {
                    cols.push(Col { deg: a.degree(), j_index: i, pure_part, elem });
                }
            }
        }
    }

    let one_x = Polynomial::one(space);
    let targets: Vec<TensorElement> = problem.m_basis.iter().map(|m| TensorElement::pure(&one_x, m)).collect();
    let idx = index_pairs(cols.iter().map(|c| &c.elem).chain(targets.iter()));
    let n_pairs = idx.len().max(1);

    let mut memberships = Vec::new();
    for (m, target) in problem.m_basis.iter().zip(&targets) {
        let tvec = pair_coords(target, &idx, n_pairs);
        let mut found = None;
        'degrees: for sub in 0..=bound {
            let active: Vec<&Col> = cols.iter().filter(|c| c.deg <= sub).collect();
            let mut mat = Matrix::zero(field, n_pairs, active.len());
            for (k, col) in active.iter().enumerate() {
                for ((a, b), c) in col.elem.terms() {
                    mat.set(idx[&(a.clone(), b.clone())], k, c.clone());
                }
            }
            if let Some(sol) = solve(&mat, &tvec) {
                let mut by_j: BTreeMap<usize, TensorElement> = BTreeMap::new();
                for (k, col) in active.iter().enumerate() {
                    if !sol[k].is_zero() {
                        let entry = by_j
                            .entry(col.j_index)
                            .or_insert_with(|| TensorElement::zero(space, gpres));
                        *entry = entry.add(&col.pure_part.scale(&sol[k]));
                    }
                }
                found = Some(MembershipCertificate {
                    target: m.clone(),
                    coefficient_degree: sub,
                    combination: by_j.into_iter().collect(),
                });
                break 'degrees;
            }
        }
        match found {
            Some(mc) => memberships.push(mc),
            None => return FreenessVerdict::UnknownAtBound(bound),
        }
    }
    let cert = FreeCertificate { memberships };
    assert!(verify_certificate(problem, &cert), "membership certificate must re-expand");
    FreenessVerdict::Free(cert)
}

/// A point α: K[X] → A and a non-identity element g: K[G] → A with
/// g stabilizing α; a sound refutation of freeness once verified.
#[derive(Debug, Clone)]
pub struct StabilizerWitness {
    pub point: AlgebraMap,
    pub element: AlgebraMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessOutcome {
    Confirmed,
    Rejected(String),
}

pub fn verify_stabilizer_witness(c: &Coaction, w: &StabilizerWitness) -> WitnessOutcome {
    use WitnessOutcome::Rejected;
    if !same_presentation(w.point.source(), c.space()) {
        return Rejected("point does not have domain K[X]".into());
    }
    if !same_presentation(w.element.source(), c.group().presentation()) {
        return Rejected("element does not have domain K[G]".into());
    }
    if !same_presentation(w.point.target(), w.element.target()) {
        return Rejected("point and element land in different algebras".into());
    }
    if let Err(e) = w.point.check_morphism() {
        return Rejected(format!("point is not a superalgebra morphism: {}", e));
    }
    if let Err(e) = w.element.check_morphism() {
        return Rejected(format!("element is not a superalgebra morphism: {}", e));
    }
    let a_pres = w.point.target().clone();
    let identity_of_g = AlgebraMap::from_fn(c.group().presentation(), &a_pres, |g| {
        Polynomial::constant(&a_pres, c.group().counit_gen(g).clone())
    });
    if w.element.equal_on_generators(&identity_of_g) {
        return Rejected("element is the identity of G(A)".into());
    }
    for f in c.space().variable_gens() {
        // (α ⊗̄ g)(τ(f)) = Σ α(h₁)·g(h₂) must equal α(f)
        let mut lhs = Polynomial::zero(&a_pres);
        for ((u, v), cf) in c.tau_gen(f).terms() {
            lhs = lhs.add(&w.point.apply_monomial(u).mul(&w.element.apply_monomial(v)).scale(cf));
        }
        if lhs != *w.point.image(f) {
            return Rejected(format!("stabilizer equation fails on {}", c.space().name_of(f)));
        }
    }
    WitnessOutcome::Confirmed
}

/// Recovers φ from an odd-additive coaction: τ(x) = x⊗1 + φ(x)⊗t.
pub fn derivation_of(c: &Coaction) -> Option<OddDerivation> {
    let gp = c.group().presentation();
    if gp.n_even() != 0 || gp.n_odd() != 1 || gp.n_blocks() != 0 {
        return None;
    }
    let t_mon = Monomial::new(gp, vec![], vec![0], vec![])?;
    let images = GenTable::build(c.space(), |g| {
        c.tau_gen(g)
            .collect_by_right()
            .remove(&t_mon)
            .unwrap_or_else(|| Polynomial::zero(c.space()))
    });
    OddDerivation::new(c.space(), images).ok()
}

#[derive(Debug, Clone)]
pub struct SplittingElement {
    /// Odd element with φ(z) = 1.
    pub z: Polynomial,
    pub f: Polynomial,
    /// φ(f), a unit, and its exact inverse.
    pub unit: Polynomial,
    pub unit_inverse: Polynomial,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SplittingError {
    #[error("coaction is not by the odd additive supergroup")]
    NotOddAdditive,
    #[error("label blocks are not supported in the splitting search")]
    Blocks,
    #[error("no odd element of degree ≤ {0} has invertible image under φ")]
    NotFoundAtBound(u32),
}

fn monomial_is_nilpotent(pres: &crate::presentation::Presentation, m: &Monomial) -> bool {
    if !m.odd_support().is_empty() {
        return true;
    }
    m.even_exps().iter().enumerate().any(|(i, &e)| e > 0 && pres.power_of(i).is_some())
}

/// Inverse of c + n with c a nonzero scalar and n nilpotent, by the finite
/// geometric series. Returns None when the constant term vanishes or some
/// non-constant monomial is not nilpotent.
pub fn invert_unit(u: &Polynomial) -> Option<Polynomial> {
    let pres = u.presentation();
    let c = u.constant_term();
    if c.is_zero() {
        return None;
    }
    let n = u.sub(&Polynomial::constant(pres, c.clone()));
    if n.terms().any(|(m, _)| !monomial_is_nilpotent(pres, m)) {
        return None;
    }
    let cinv = c.inv();
    let mut inv = Polynomial::constant(pres, cinv.clone());
    let mut term = Polynomial::constant(pres, cinv.clone());
    loop {
        term = term.mul(&n).scale(&cinv).neg();
        if term.is_zero() {
            break;
        }
        inv = inv.add(&term);
    }
    assert!(u.mul(&inv) == Polynomial::one(pres), "unit inverse must verify");
    Some(inv)
}

/// Searches odd f of degree ≤ bound with φ(f) a unit and returns
/// z = f·φ(f)⁻¹, so that φ(z) = 1.
pub fn find_gana_splitting(c: &Coaction, bound: u32) -> Result<SplittingElement, SplittingError> {
    let phi = derivation_of(c).ok_or(SplittingError::NotOddAdditive)?;
    let space = c.space();
    if space.n_blocks() != 0 {
        return Err(SplittingError::Blocks);
    }
    let field = space.field;
    let odd_mons: Vec<Monomial> = monomials_up_to(space, bound)
        .into_iter()
        .filter(|m| m.parity() == Parity::Odd)
        .collect();
    let images: Vec<Polynomial> = odd_mons.iter().map(|m| phi.apply_monomial(m)).collect();
    // linear constraints: coefficients of non-nilpotent positive-degree
    // monomials must vanish; within that kernel the constant term must not
    let mut bad_idx: BTreeMap<Monomial, usize> = BTreeMap::new();
    for img in &images {
        for (m, _) in img.terms() {
            if !monomial_is_nilpotent(space, m) && m.degree() > 0 {
                let next = bad_idx.len();
                bad_idx.entry(m.clone()).or_insert(next);
            }
        }
    }
    let mut mat = Matrix::zero(field, bad_idx.len().max(1), odd_mons.len());
    for (k, img) in images.iter().enumerate() {
        for (m, cf) in img.terms() {
            if let Some(&r) = bad_idx.get(m) {
                mat.set(r, k, cf.clone());
            }
        }
    }
    for v in kernel_basis(&mat) {
        let f: Polynomial = odd_mons
            .iter()
            .zip(&v)
            .fold(Polynomial::zero(space), |acc, (m, cf)| {
                acc.add(&Polynomial::monomial(space, m.clone(), cf.clone()))
            });
        let u = phi.apply(&f);
        if u.constant_term().is_zero() {
            continue;
        }
        let uinv = invert_unit(&u).expect("kernel vector image must be a unit");
        let z = f.mul(&uinv);
        assert!(phi.apply(&z) == Polynomial::one(space), "splitting must satisfy φ(z) = 1");
        return Ok(SplittingElement { z, f, unit: u, unit_inverse: uinv });
    }
    Err(SplittingError::NotFoundAtBound(bound))
}

/// h = r0 + r1·z with r0 = φ(hz), r1 = φ(h), both invariant.
pub fn decompose(c: &Coaction, s: &SplittingElement, h: &Polynomial) -> (Polynomial, Polynomial) {
    let phi = derivation_of(c).expect("decompose needs an odd-additive coaction");
    let r0 = phi.apply(&h.mul(&s.z));
    let r1 = phi.apply(h);
    assert!(*h == r0.add(&r1.mul(&s.z)), "splitting identity must hold exactly");
    (r0, r1)
}

/// ψ(f, h) = Σ f·h₁ ⊗ h₂ where τ(h) = Σ h₁⊗h₂.
pub fn psi_apply(c: &Coaction, f: &Polynomial, h: &Polynomial) -> TensorElement {
    TensorElement::pure(f, &Polynomial::one(c.group().presentation())).mul(&c.coact(h))
}

#[derive(Debug, Clone)]
pub struct PsiReport {
    pub max_degree: u32,
    pub surjective: bool,
    pub missing_targets: Vec<String>,
    pub image_dim: usize,
    pub balanced_upper_bound: usize,
    pub certified_bijective: bool,
}

/// Certifies ψ degreewise: surjectivity onto every m⊗h' with
/// deg m + deg h' ≤ d, and bijectivity when the image dimension attains
/// the balanced-quotient upper bound (relations fr⊗h − f⊗rh from
/// homogeneous invariants r; an upper bound, so never an unsound claim).
pub fn psi_certify(c: &Coaction, d: u32) -> PsiReport {
    let space = c.space();
    let gpres = c.group().presentation();
    let field = space.field;
    let one = field.one();
    let x_mons = monomials_up_to(space, d);

    let mut inputs: Vec<TensorElement> = Vec::new();
    for f in &x_mons {
        let fp = Polynomial::monomial(space, f.clone(), one.clone());
        for h in &x_mons {
            if f.degree() + h.degree() > d {
                continue;
            }
            let hp = Polynomial::monomial(space, h.clone(), one.clone());
            let t = psi_apply(c, &fp, &hp);
            if !t.is_zero() {
                inputs.push(t);
            }
        }
    }
    let mut targets: Vec<(Monomial, Monomial)> = Vec::new();
    for m in &x_mons {
        for h in monomials_up_to(gpres, d - m.degree()) {
            targets.push((m.clone(), h));
        }
    }
    let target_tensors: Vec<TensorElement> = targets
        .iter()
        .map(|(m, h)| {
            let mut t = TensorElement::zero(space, gpres);
            t.add_term(m.clone(), h.clone(), one.clone());
            t
        })
        .collect();
    let idx = index_pairs(inputs.iter().chain(target_tensors.iter()));
    let n_pairs = idx.len().max(1);
    let mut image = RowSpace::new(n_pairs);
    for t in &inputs {
        image.insert(&pair_coords(t, &idx, n_pairs));
    }
    let mut missing_targets = Vec::new();
    for ((m, h), t) in targets.iter().zip(&target_tensors) {
        if !image.contains(&pair_coords(t, &idx, n_pairs)) {
            let mp = Polynomial::monomial(space, m.clone(), one.clone());
            let hp = Polynomial::monomial(gpres, h.clone(), one.clone());
            missing_targets.push(format!("({})({})", mp, hp));
        }
    }
    let surjective = missing_targets.is_empty();
    let image_dim = image.rank();

    // balanced quotient of K[X]⊗K[X] through total degree d
    let mut u_idx: BTreeMap<Pair, usize> = BTreeMap::new();
    for a in &x_mons {
        for b in &x_mons {
            if a.degree() + b.degree() <= d {
                let next = u_idx.len();
                u_idx.insert((a.clone(), b.clone()), next);
            }
        }
    }
    let mut relations = RowSpace::new(u_idx.len().max(1));
    let mut slices: Vec<Vec<Polynomial>> = Vec::new();
    for e in 0..=d {
        slices.push(invariant_slice(c, e));
    }
    for e in 1..=d {
        for r in &slices[e as usize] {
            for a in &x_mons {
                for b in &x_mons {
                    if a.degree() + b.degree() + e > d {
                        continue;
                    }
                    let ap = Polynomial::monomial(space, a.clone(), one.clone());
                    let bp = Polynomial::monomial(space, b.clone(), one.clone());
                    let ar = ap.mul(r);
                    let rb = r.mul(&bp);
                    let mut row = vec![field.zero(); u_idx.len().max(1)];
                    for (m, cf) in ar.terms() {
                        let slot = &mut row[u_idx[&(m.clone(), b.clone())]];
                        *slot = slot.add(cf);
                    }
                    for (m, cf) in rb.terms() {
                        let slot = &mut row[u_idx[&(a.clone(), m.clone())]];
                        *slot = slot.sub(cf);
                    }
                    relations.insert(&row);
                }
            }
        }
    }
    let balanced_upper_bound = u_idx.len() - relations.rank();
    let certified_bijective = surjective && image_dim == balanced_upper_bound;
    PsiReport { max_degree: d, surjective, missing_targets, image_dim, balanced_upper_bound, certified_bijective }
}

#[derive(Debug, Clone)]
pub struct BasisRow {
    pub degree: u32,
    pub space_dim: usize,
    /// Σ_i dim R_{e − deg b_i}
    pub predicted_dim: usize,
    pub span_rank: usize,
}

#[derive(Debug, Clone)]
pub struct BasisReport {
    pub rows: Vec<BasisRow>,
    pub verified: bool,
}

/// Checks that the candidates form a degreewise free R-basis of K[X]
/// through degree d: the dimension identity and fullness of the R-span.
pub fn verify_free_basis(c: &Coaction, candidates: &[Polynomial], d: u32) -> BasisReport {
    let space = c.space();
    for b in candidates {
        assert!(!b.is_zero() && b.is_degree_homogeneous(), "basis candidates must be homogeneous");
        assert!(b.parity().is_some(), "basis candidates must be parity-homogeneous");
    }
    let slices: Vec<Vec<Polynomial>> = (0..=d).map(|e| invariant_slice(c, e)).collect();
    let mut rows = Vec::new();
    let mut verified = true;
    for e in 0..=d {
        let (smons, sidx) = slice_index(space, e);
        let space_dim = smons.len();
        let mut predicted = 0usize;
        let mut span = RowSpace::new(space_dim.max(1));
        for b in candidates {
            let db = b.degree().unwrap();
            if db > e {
                continue;
            }
            let rslice = &slices[(e - db) as usize];
            predicted += rslice.len();
            for r in rslice {
                let p = r.mul(b);
                if !p.is_zero() {
                    span.insert(&p.coordinates(&sidx, space_dim.max(1)));
                }
            }
        }
        let span_rank = if space_dim == 0 { 0 } else { span.rank() };
        verified &= predicted == space_dim && span_rank == space_dim;
        rows.push(BasisRow { degree: e, space_dim, predicted_dim: predicted, span_rank });
    }
    BasisReport { rows, verified }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::hopf::{HopfSuperAlgebra, SupergroupSpec};
    use crate::presentation::{GenRef, Presentation};
    use std::sync::Arc;

    fn gana_free() -> Coaction {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_odd("theta").unwrap();
        let space = Arc::new(p);
        let one = Polynomial::one(&space);
        let phi = OddDerivation::from_fn(&space, |g| match g {
            GenRef::Odd(0) => one.clone(),
            _ => Polynomial::zero(&space),
        })
        .unwrap();
        Coaction::from_odd_derivation(&phi).unwrap()
    }

    fn example_3_1() -> Coaction {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_odd("theta").unwrap();
        let space = Arc::new(p);
        let theta = Polynomial::generator(&space, GenRef::Odd(0));
        let phi = OddDerivation::from_fn(&space, |g| match g {
            GenRef::Even(0) => theta.clone(),
            _ => Polynomial::zero(&space),
        })
        .unwrap();
        Coaction::from_odd_derivation(&phi).unwrap()
    }

    fn frobenius_translation() -> Coaction {
        let f5 = FieldSpec::prime(5).unwrap();
        let mut p = Presentation::new(f5);
        p.add_even("x", None).unwrap();
        let space = Arc::new(p);
        let g = HopfSuperAlgebra::build(&SupergroupSpec::FrobeniusKernelHeight1, f5).unwrap();
        let x = Polynomial::generator(&space, GenRef::Even(0));
        let u = Polynomial::generator(g.presentation(), GenRef::Even(0));
        let tau = GenTable::build(&space, |_| {
            TensorElement::pure(&x, &Polynomial::one(g.presentation()))
                .add(&TensorElement::pure(&Polynomial::one(&space), &u))
        });
        Coaction::from_explicit(&space, g, tau).unwrap()
    }

    #[test]
    fn gana_free_certificate_at_degree_zero() {
        let c = gana_free();
        let problem = FreenessProblem::new(&c).unwrap();
        assert_eq!(problem.m_basis().len(), 1);
        match check_free(&problem, 4) {
            FreenessVerdict::Free(cert) => {
                assert_eq!(cert.memberships.len(), 1);
                assert_eq!(cert.memberships[0].coefficient_degree, 0);
                assert!(verify_certificate(&problem, &cert));
            }
            other => panic!("expected Free, got {:?}", other),
        }
    }

    #[test]
    fn frobenius_certificate_covers_all_powers() {
        let c = frobenius_translation();
        let problem = FreenessProblem::new(&c).unwrap();
        assert_eq!(problem.m_basis().len(), 4);
        match check_free(&problem, 4) {
            FreenessVerdict::Free(cert) => {
                for mc in &cert.memberships {
                    assert_eq!(mc.coefficient_degree, 0);
                }
                assert!(verify_certificate(&problem, &cert));
            }
            other => panic!("expected Free, got {:?}", other),
        }
    }

    #[test]
    fn non_free_example_is_unknown_at_every_bound() {
        let c = example_3_1();
        let problem = FreenessProblem::new(&c).unwrap();
        for bound in 2..=6 {
            assert!(matches!(check_free(&problem, bound), FreenessVerdict::UnknownAtBound(b) if b == bound));
        }
    }

    fn witness_algebra() -> Arc<Presentation> {
        let mut a = Presentation::new(FieldSpec::Rationals);
        a.add_even("w", None).unwrap();
        a.add_odd("xi").unwrap();
        Arc::new(a)
    }

    #[test]
    fn stabilizer_witness_for_non_free_example() {
        let c = example_3_1();
        let a = witness_algebra();
        let w_gen = Polynomial::generator(&a, GenRef::Even(0));
        let xi = Polynomial::generator(&a, GenRef::Odd(0));
        let point = AlgebraMap::from_fn(c.space(), &a, |g| match g {
            GenRef::Even(0) => w_gen.clone(),
            _ => Polynomial::zero(&a),
        });
        let element = AlgebraMap::from_fn(c.group().presentation(), &a, |_| xi.clone());
        let w = StabilizerWitness { point, element };
        assert_eq!(verify_stabilizer_witness(&c, &w), WitnessOutcome::Confirmed);
    }

    #[test]
    fn identity_element_is_rejected() {
        let c = example_3_1();
        let a = witness_algebra();
        let w_gen = Polynomial::generator(&a, GenRef::Even(0));
        let point = AlgebraMap::from_fn(c.space(), &a, |g| match g {
            GenRef::Even(0) => w_gen.clone(),
            _ => Polynomial::zero(&a),
        });
        let element = AlgebraMap::from_fn(c.group().presentation(), &a, |_| Polynomial::zero(&a));
        let w = StabilizerWitness { point, element };
        match verify_stabilizer_witness(&c, &w) {
            WitnessOutcome::Rejected(r) => assert!(r.contains("identity")),
            o => panic!("expected rejection, got {:?}", o),
        }
    }

    #[test]
    fn failed_stabilizer_equation_is_rejected() {
        // two independent odd generators so that α(θ)·g(t) survives
        let c = example_3_1();
        let mut a = Presentation::new(FieldSpec::Rationals);
        a.add_even("w", None).unwrap();
        a.add_odd("xi1").unwrap();
        a.add_odd("xi2").unwrap();
        let a = Arc::new(a);
        let w_gen = Polynomial::generator(&a, GenRef::Even(0));
        let xi1 = Polynomial::generator(&a, GenRef::Odd(0));
        let xi2 = Polynomial::generator(&a, GenRef::Odd(1));
        let point = AlgebraMap::from_fn(c.space(), &a, |g| match g {
            GenRef::Even(0) => w_gen.clone(),
            _ => xi2.clone(),
        });
        let element = AlgebraMap::from_fn(c.group().presentation(), &a, |_| xi1.clone());
        let w = StabilizerWitness { point, element };
        match verify_stabilizer_witness(&c, &w) {
            WitnessOutcome::Rejected(r) => assert!(r.contains("stabilizer equation fails on x")),
            o => panic!("expected rejection, got {:?}", o),
        }
    }

    #[test]
    fn splitting_for_free_example_is_theta() {
        let c = gana_free();
        let s = find_gana_splitting(&c, 4).unwrap();
        assert_eq!(s.z.to_string(), "theta");
        assert_eq!(s.unit.to_string(), "1");
    }

    #[test]
    fn splitting_with_nilpotent_unit() {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", Some(2)).unwrap();
        p.add_odd("theta").unwrap();
        let space = Arc::new(p);
        let x = Polynomial::generator(&space, GenRef::Even(0));
        let phi = OddDerivation::from_fn(&space, |g| match g {
            GenRef::Odd(0) => Polynomial::one(&space).add(&x),
            _ => Polynomial::zero(&space),
        })
        .unwrap();
        let c = Coaction::from_odd_derivation(&phi).unwrap();
        let s = find_gana_splitting(&c, 4).unwrap();
        // z = θ(1+x)⁻¹ = θ(1−x)
        let theta = Polynomial::generator(&space, GenRef::Odd(0));
        assert_eq!(s.z, theta.sub(&theta.mul(&x)));
        let phi2 = derivation_of(&c).unwrap();
        assert_eq!(phi2.apply(&s.z), Polynomial::one(&space));
    }

    #[test]
    fn no_splitting_in_non_free_example() {
        let c = example_3_1();
        assert!(matches!(find_gana_splitting(&c, 5), Err(SplittingError::NotFoundAtBound(5))));
    }

    #[test]
    fn decompose_matches_hand_results() {
        let c = gana_free();
        let space = c.space().clone();
        let s = find_gana_splitting(&c, 4).unwrap();
        let x = Polynomial::generator(&space, GenRef::Even(0));
        let theta = Polynomial::generator(&space, GenRef::Odd(0));
        let (r0, r1) = decompose(&c, &s, &x);
        assert_eq!((r0, r1), (x.clone(), Polynomial::zero(&space)));
        let (r0, r1) = decompose(&c, &s, &x.mul(&theta));
        assert_eq!((r0.clone(), r1.clone()), (Polynomial::zero(&space), x.clone()));
        let (r0, r1) = decompose(&c, &s, &theta);
        assert_eq!((r0, r1), (Polynomial::zero(&space), Polynomial::one(&space)));
        // decomposition parts are invariant
        let h = x.pow(2).add(&x.mul(&theta)).add(&theta);
        let (r0, r1) = decompose(&c, &s, &h);
        assert!(crate::invariants::is_invariant(&c, &r0));
        assert!(crate::invariants::is_invariant(&c, &r1));
    }

    #[test]
    fn psi_values() {
        let c = gana_free();
        let space = c.space();
        let one_x = Polynomial::one(space);
        let theta = Polynomial::generator(space, GenRef::Odd(0));
        let img = psi_apply(&c, &one_x, &theta);
        assert_eq!(img.n_terms(), 2);
        assert_eq!(psi_apply(&c, &one_x, &one_x), TensorElement::one(space, c.group().presentation()));
        // functoriality on an instance
        let x = Polynomial::generator(space, GenRef::Even(0));
        let f = x.add(&theta);
        let h = x.mul(&theta).add(&x);
        let lhs = psi_apply(&c, &f, &h);
        let rhs = TensorElement::pure(&f, &Polynomial::one(c.group().presentation())).mul(&psi_apply(&c, &one_x, &h));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn psi_certified_for_free_examples() {
        let r = psi_certify(&gana_free(), 4);
        assert!(r.surjective, "missing: {:?}", r.missing_targets);
        assert!(r.certified_bijective);
        let r5 = psi_certify(&frobenius_translation(), 5);
        assert!(r5.surjective, "missing: {:?}", r5.missing_targets);
        assert!(r5.certified_bijective);
    }

    #[test]
    fn psi_not_surjective_for_non_free_example() {
        let r = psi_certify(&example_3_1(), 3);
        assert!(!r.surjective);
        assert!(r.missing_targets.iter().any(|t| t.contains("(t)")));
        assert!(!r.certified_bijective);
    }

    #[test]
    fn psi_bijective_for_trivial_group() {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_odd("theta").unwrap();
        let space = Arc::new(p);
        let g = HopfSuperAlgebra::build(
            &SupergroupSpec::ConstantGroup(crate::group::FiniteGroup::cyclic(1)),
            FieldSpec::Rationals,
        )
        .unwrap();
        let c = Coaction::trivial(&space, g);
        let r = psi_certify(&c, 3);
        assert!(r.surjective);
        assert!(r.certified_bijective);
    }

    #[test]
    fn free_basis_reports() {
        let c = gana_free();
        let space = c.space();
        let one = Polynomial::one(space);
        let theta = Polynomial::generator(space, GenRef::Odd(0));
        let report = verify_free_basis(&c, &[one.clone(), theta], 6);
        assert!(report.verified);
        for row in &report.rows {
            assert_eq!(row.space_dim, row.predicted_dim);
            assert_eq!(row.space_dim, row.span_rank);
        }

        let cf = frobenius_translation();
        let x = Polynomial::generator(cf.space(), GenRef::Even(0));
        let candidates: Vec<Polynomial> = (0..5u32).map(|k| x.pow(k)).collect();
        assert!(verify_free_basis(&cf, &candidates, 12).verified);

        let ce = example_3_1();
        let report = verify_free_basis(&ce, &[Polynomial::one(ce.space())], 3);
        assert!(!report.verified);
        assert_eq!(report.rows[1].space_dim, 2);
        assert_eq!(report.rows[1].predicted_dim, 1);
    }
}
