//! Coordinate Hopf superalgebras of finite supergroups: the odd additive
//! supergroup, height-1 Frobenius kernels, constant (dual group algebra)
//! supergroups, and finite tensor products of these. Structure maps are
//! stored on generators and extended multiplicatively; the axiom checker
//! verifies every identity on basis monomials by exact expansion.

use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroup;
use crate::linalg::{kernel_basis, Matrix};
use crate::maps::{extend_tensor, extend_tensor_monomial, extend_to_monomial, AlgebraMap, GenTable};
use crate::monomial::{monomials_up_to, Monomial};
use crate::poly::Polynomial;
use crate::presentation::{GenRef, Parity, Presentation};
use crate::tensor::{Tensor3, TensorElement};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub enum SupergroupSpec {
    /// K[t], t odd and primitive.
    OddAdditive,
    /// K[u]/u^p over F_p, u even and primitive.
    FrobeniusKernelHeight1,
    /// (KΓ)* with idempotent basis e_γ.
    ConstantGroup(FiniteGroup),
    Product(Vec<SupergroupSpec>),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum HopfError {
    #[error("height-1 Frobenius kernels need positive characteristic")]
    FrobeniusNeedsCharP,
    #[error("group element name {0} is not an identifier")]
    BadElementName(String),
    #[error("empty product spec")]
    EmptyProduct,
    #[error("presentation is infinite dimensional")]
    InfiniteDimensional,
}

#[derive(Debug, Clone)]
pub struct HopfSuperAlgebra {
    pres: Arc<Presentation>,
    comult: GenTable<TensorElement>,
    counit: GenTable<Scalar>,
    antipode: GenTable<Polynomial>,
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.bytes().next().is_some_and(|b| b.is_ascii_alphabetic() || b == b'_')
        && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl HopfSuperAlgebra {
    /// Installs structure maps without validation; callers either build
    /// catalog members (correct by construction, still axiom-checked in
    /// tests) or deliberately broken fixtures.
    pub fn custom(
        pres: Arc<Presentation>,
        comult: GenTable<TensorElement>,
        counit: GenTable<Scalar>,
        antipode: GenTable<Polynomial>,
    ) -> HopfSuperAlgebra {
        assert!(comult.matches(&pres) && counit.matches(&pres) && antipode.matches(&pres), "structure map arity");
        HopfSuperAlgebra { pres, comult, counit, antipode }
    }

    pub fn build(spec: &SupergroupSpec, field: FieldSpec) -> Result<HopfSuperAlgebra, HopfError> {
        match spec {
            SupergroupSpec::OddAdditive => Ok(Self::odd_additive(field)),
            SupergroupSpec::FrobeniusKernelHeight1 => {
                let p = field.characteristic();
                if p == 0 {
                    return Err(HopfError::FrobeniusNeedsCharP);
                }
                Ok(Self::primitive_even(field, Some(p as u32)))
            }
            SupergroupSpec::ConstantGroup(g) => Self::constant(field, g),
            SupergroupSpec::Product(specs) => {
                if specs.is_empty() {
                    return Err(HopfError::EmptyProduct);
                }
                let factors = specs.iter().map(|s| Self::build(s, field)).collect::<Result<Vec<_>, _>>()?;
                Ok(Self::product(&factors))
            }
        }
    }

    fn odd_additive(field: FieldSpec) -> HopfSuperAlgebra {
        let mut p = Presentation::new(field);
        p.add_odd("t").unwrap();
        let pres = Arc::new(p);
        let t = GenRef::Odd(0);
        let one = Polynomial::one(&pres);
        let tp = Polynomial::generator(&pres, t);
        let comult = GenTable::build(&pres, |_| {
            TensorElement::pure(&tp, &one).add(&TensorElement::pure(&one, &tp))
        });
        let counit = GenTable::build(&pres, |_| field.zero());
        let antipode = GenTable::build(&pres, |_| tp.neg());
        HopfSuperAlgebra { pres, comult, counit, antipode }
    }

    /// K[u] with primitive even u, truncated by u^q when q is given.
    /// q = p gives the height-1 Frobenius kernel; no relation gives the
    /// additive supergroup used for unipotent comparisons.
    pub fn primitive_even(field: FieldSpec, q: Option<u32>) -> HopfSuperAlgebra {
        let mut p = Presentation::new(field);
        p.add_even("u", q).unwrap();
        let pres = Arc::new(p);
        let one = Polynomial::one(&pres);
        let up = Polynomial::generator(&pres, GenRef::Even(0));
        let comult = GenTable::build(&pres, |_| {
            TensorElement::pure(&up, &one).add(&TensorElement::pure(&one, &up))
        });
        let counit = GenTable::build(&pres, |_| field.zero());
        let antipode = GenTable::build(&pres, |_| up.neg());
        HopfSuperAlgebra { pres, comult, counit, antipode }
    }

    pub fn even_additive(field: FieldSpec) -> HopfSuperAlgebra {
        Self::primitive_even(field, None)
    }

    fn constant(field: FieldSpec, group: &FiniteGroup) -> Result<HopfSuperAlgebra, HopfError> {
        for name in group.names() {
            if !is_identifier(name) && name.parse::<u64>().is_err() {
                return Err(HopfError::BadElementName(name.clone()));
            }
        }
        let mut p = Presentation::new(field);
        let labels: Vec<String> = group.names().iter().map(|n| format!("e_{}", n)).collect();
        p.add_block(labels).map_err(|_| HopfError::BadElementName("duplicate label".into()))?;
        let pres = Arc::new(p);
        let e = |g: usize| Polynomial::generator(&pres, GenRef::Label(0, g));
        let comult = GenTable::build(&pres, |r| {
            let GenRef::Label(_, g) = r else { unreachable!() };
            let mut out = TensorElement::zero(&pres, &pres);
            for gp in 0..group.order() {
                // e_γ ↦ Σ_γ' e_γ' ⊗ e_{γ'⁻¹γ}
                out = out.add(&TensorElement::pure(&e(gp), &e(group.mul(group.inv(gp), g))));
            }
            out
        });
        let counit = GenTable::build(&pres, |r| {
            let GenRef::Label(_, g) = r else { unreachable!() };
            if g == group.identity() {
                field.one()
            } else {
                field.zero()
            }
        });
        let antipode = GenTable::build(&pres, |r| {
            let GenRef::Label(_, g) = r else { unreachable!() };
            e(group.inv(g))
        });
        Ok(HopfSuperAlgebra { pres, comult, counit, antipode })
    }

    fn product(factors: &[HopfSuperAlgebra]) -> HopfSuperAlgebra {
        let field = factors[0].pres.field;
        // names collide across factors ⇒ suffix every name with _k
        let mut all_names: Vec<&str> = Vec::new();
        let mut collision = false;
        for f in factors {
            for v in f.pres.even_vars().iter().chain(f.pres.odd_vars()) {
                collision |= all_names.contains(&v.name.as_str());
                all_names.push(&v.name);
            }
            for b in f.pres.blocks() {
                for l in &b.labels {
                    collision |= all_names.contains(&l.as_str());
                    all_names.push(l);
                }
            }
        }
        let rename = |name: &str, k: usize| {
            if collision {
                format!("{}_{}", name, k + 1)
            } else {
                name.to_string()
            }
        };
        let mut combined = Presentation::new(field);
        let mut even_offset = Vec::new();
        let mut odd_offset = Vec::new();
        let mut block_offset = Vec::new();
        for (k, f) in factors.iter().enumerate() {
            even_offset.push(combined.n_even());
            odd_offset.push(combined.n_odd());
            block_offset.push(combined.n_blocks());
            for (i, v) in f.pres.even_vars().iter().enumerate() {
                combined.add_even_weighted(&rename(&v.name, k), f.pres.power_of(i), v.weight).unwrap();
            }
            for v in f.pres.odd_vars() {
                combined.add_odd_weighted(&rename(&v.name, k), v.weight).unwrap();
            }
            for b in f.pres.blocks() {
                combined.add_block(b.labels.iter().map(|l| rename(l, k)).collect()).unwrap();
            }
        }
        let combined = Arc::new(combined);
        let map_ref = |k: usize, g: GenRef| match g {
            GenRef::Even(i) => GenRef::Even(even_offset[k] + i),
            GenRef::Odd(i) => GenRef::Odd(odd_offset[k] + i),
            GenRef::Label(b, l) => GenRef::Label(block_offset[k] + b, l),
        };
        let embeddings: Vec<AlgebraMap> = factors
            .iter()
            .enumerate()
            .map(|(k, f)| AlgebraMap::from_fn(&f.pres, &combined, |g| Polynomial::generator(&combined, map_ref(k, g))))
            .collect();
        let embed_tensor = |k: usize, t: &TensorElement| {
            let mut out = TensorElement::zero(&combined, &combined);
            for ((a, b), c) in t.terms() {
                let pa = embeddings[k].apply_monomial(a);
                let pb = embeddings[k].apply_monomial(b);
                out = out.add(&TensorElement::pure(&pa, &pb).scale(c));
            }
            out
        };
        // locate the owning factor of a combined generator
        let owner = |g: GenRef| -> (usize, GenRef) {
            match g {
                GenRef::Even(i) => {
                    let k = (0..factors.len()).rfind(|&k| even_offset[k] <= i).unwrap();
                    (k, GenRef::Even(i - even_offset[k]))
                }
                GenRef::Odd(i) => {
                    let k = (0..factors.len()).rfind(|&k| odd_offset[k] <= i).unwrap();
                    (k, GenRef::Odd(i - odd_offset[k]))
                }
                GenRef::Label(b, l) => {
                    let k = (0..factors.len()).rfind(|&k| block_offset[k] <= b).unwrap();
                    (k, GenRef::Label(b - block_offset[k], l))
                }
            }
        };
        let comult = GenTable::build(&combined, |g| {
            let (k, g0) = owner(g);
            embed_tensor(k, factors[k].comult.get(g0))
        });
        let counit = GenTable::build(&combined, |g| {
            let (k, g0) = owner(g);
            factors[k].counit.get(g0).clone()
        });
        let antipode = GenTable::build(&combined, |g| {
            let (k, g0) = owner(g);
            embeddings[k].apply(factors[k].antipode.get(g0))
        });
        HopfSuperAlgebra { pres: combined, comult, counit, antipode }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn field(&self) -> FieldSpec {
        self.pres.field
    }

    /// Dimension of K[G]; the order of G.
    pub fn order(&self) -> Result<u64, HopfError> {
        self.pres.dimension().ok_or(HopfError::InfiniteDimensional)
    }

    pub fn comult_gen(&self, g: GenRef) -> &TensorElement {
        self.comult.get(g)
    }

    pub fn comult_monomial(&self, m: &Monomial) -> TensorElement {
        extend_tensor_monomial(&self.comult, &self.pres, &self.pres, m)
    }

    pub fn comult_poly(&self, p: &Polynomial) -> TensorElement {
        extend_tensor(&self.comult, &self.pres, &self.pres, p)
    }

    pub fn counit_gen(&self, g: GenRef) -> &Scalar {
        self.counit.get(g)
    }

    pub fn counit_monomial(&self, m: &Monomial) -> Scalar {
        extend_to_monomial(m, self.field().one(), &self.counit, |a, b| a.mul(b))
    }

    pub fn counit_poly(&self, p: &Polynomial) -> Scalar {
        let mut out = self.field().zero();
        for (m, c) in p.terms() {
            out = out.add(&self.counit_monomial(m).mul(c));
        }
        out
    }

    pub fn antipode_map(&self) -> AlgebraMap {
        AlgebraMap::from_fn(&self.pres, &self.pres, |g| self.antipode.get(g).clone())
    }

    /// Monomial basis: all of it for finite members, degrees ≤ bound else.
    pub fn basis(&self, bound: Option<u32>) -> Vec<Monomial> {
        let d = match self.max_degree() {
            Some(d) => d,
            None => bound.expect("infinite-dimensional Hopf algebra needs a degree bound"),
        };
        monomials_up_to(&self.pres, d)
    }

    fn max_degree(&self) -> Option<u32> {
        let mut d = 0u32;
        for i in 0..self.pres.n_even() {
            d += (self.pres.power_of(i)? - 1) * self.pres.even_weight(i);
        }
        for i in 0..self.pres.n_odd() {
            d += self.pres.odd_weight(i);
        }
        Some(d)
    }

    /// Basis of M = ker ε as a linear subspace.
    pub fn augmentation_ideal_basis(&self) -> Result<Vec<Polynomial>, HopfError> {
        self.order()?;
        let basis = self.basis(None);
        let row: Vec<Scalar> = basis.iter().map(|m| self.counit_monomial(m)).collect();
        let mat = Matrix::from_rows(self.field(), vec![row]);
        Ok(kernel_basis(&mat)
            .into_iter()
            .map(|v| Polynomial::from_coordinates(&self.pres, &basis, &v))
            .collect())
    }

    pub fn check_hopf_axioms(&self, bound: Option<u32>) -> HopfReport {
        let mut failures = Vec::new();
        let basis = self.basis(bound);
        let one = Polynomial::one(&self.pres);
        let witness = |m: &Monomial| Polynomial::monomial(&self.pres, m.clone(), self.field().one()).to_string();
        for m in &basis {
            let dm = self.comult_monomial(m);
            let lhs = Tensor3::from_left_expansion(&dm, |a| self.comult_monomial(a));
            let rhs = Tensor3::from_right_expansion(&dm, |b| self.comult_monomial(b));
            if lhs != rhs {
                failures.push(HopfFailure { axiom: HopfAxiom::Coassociativity, witness: witness(m) });
            }
            let id_poly = Polynomial::monomial(&self.pres, m.clone(), self.field().one());
            let left_counit = {
                let mut out = Polynomial::zero(&self.pres);
                for ((a, b), c) in dm.terms() {
                    let k = self.counit_monomial(a).mul(c);
                    out = out.add(&Polynomial::monomial(&self.pres, b.clone(), k));
                }
                out
            };
            let right_counit = {
                let mut out = Polynomial::zero(&self.pres);
                for ((a, b), c) in dm.terms() {
                    let k = self.counit_monomial(b).mul(c);
                    out = out.add(&Polynomial::monomial(&self.pres, a.clone(), k));
                }
                out
            };
            if left_counit != id_poly || right_counit != id_poly {
                failures.push(HopfFailure { axiom: HopfAxiom::Counit, witness: witness(m) });
            }
            let s = self.antipode_map();
            let left_antipode = dm.map_left(&self.pres, |a| s.apply_monomial(a)).multiply_out();
            let right_antipode = dm.map_right(&self.pres, |b| s.apply_monomial(b)).multiply_out();
            let unit_eps = one.scale(&self.counit_monomial(m));
            if left_antipode != unit_eps || right_antipode != unit_eps {
                failures.push(HopfFailure { axiom: HopfAxiom::Antipode, witness: witness(m) });
            }
            let p = m.parity();
            if dm.terms().any(|((a, b), _)| (a.parity() == b.parity()) != (p == Parity::Even)) {
                failures.push(HopfFailure { axiom: HopfAxiom::ComultParity, witness: witness(m) });
            }
            if p == Parity::Odd && !self.counit_monomial(m).is_zero() {
                failures.push(HopfFailure { axiom: HopfAxiom::CounitParity, witness: witness(m) });
            }
            if !s.apply_monomial(m).is_parity_homogeneous(p) {
                failures.push(HopfFailure { axiom: HopfAxiom::AntipodeParity, witness: witness(m) });
            }
        }
        // multiplicativity of Δ and ε on basis pairs within the bound
        let cap = basis.iter().map(|m| m.degree()).max().unwrap_or(0);
        for m1 in &basis {
            for m2 in &basis {
                if m1.degree() + m2.degree() > cap {
                    continue;
                }
                let p1 = Polynomial::monomial(&self.pres, m1.clone(), self.field().one());
                let p2 = Polynomial::monomial(&self.pres, m2.clone(), self.field().one());
                let prod = p1.mul(&p2);
                if self.comult_poly(&prod) != self.comult_monomial(m1).mul(&self.comult_monomial(m2)) {
                    failures.push(HopfFailure {
                        axiom: HopfAxiom::ComultMultiplicative,
                        witness: format!("{} , {}", witness(m1), witness(m2)),
                    });
                }
                if self.counit_poly(&prod) != self.counit_monomial(m1).mul(&self.counit_monomial(m2)) {
                    failures.push(HopfFailure {
                        axiom: HopfAxiom::CounitMultiplicative,
                        witness: format!("{} , {}", witness(m1), witness(m2)),
                    });
                }
            }
        }
        HopfReport { checked: basis.len(), failures }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HopfAxiom {
    Coassociativity,
    Counit,
    Antipode,
    ComultParity,
    CounitParity,
    AntipodeParity,
    ComultMultiplicative,
    CounitMultiplicative,
}

impl std::fmt::Display for HopfAxiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            HopfAxiom::Coassociativity => "coassociativity",
            HopfAxiom::Counit => "counit",
            HopfAxiom::Antipode => "antipode",
            HopfAxiom::ComultParity => "comultiplication parity",
            HopfAxiom::CounitParity => "counit parity",
            HopfAxiom::AntipodeParity => "antipode parity",
            HopfAxiom::ComultMultiplicative => "comultiplication multiplicativity",
            HopfAxiom::CounitMultiplicative => "counit multiplicativity",
        };
        write!(f, "{}", s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfFailure {
    pub axiom: HopfAxiom,
    pub witness: String,
}

#[derive(Debug, Clone)]
pub struct HopfReport {
    pub checked: usize,
    pub failures: Vec<HopfFailure>,
}

impl HopfReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// True when `rename` carries the structure maps of `a` to those of `b`
/// on every generator: (ρ⊗ρ)∘Δ_a = Δ_b∘ρ, ε_b∘ρ = ε_a, ρ∘S_a = S_b∘ρ.
/// The caller supplies ρ as a generator-to-generator renaming.
pub fn structure_maps_agree(a: &HopfSuperAlgebra, b: &HopfSuperAlgebra, rename: &AlgebraMap) -> bool {
    if !crate::presentation::same_presentation(rename.source(), a.presentation())
        || !crate::presentation::same_presentation(rename.target(), b.presentation())
    {
        return false;
    }
    let sa = a.antipode_map();
    let sb = b.antipode_map();
    a.presentation().variable_gens().into_iter().all(|g| {
        let lhs = a
            .comult_gen(g)
            .map_left(b.presentation(), |m| rename.apply_monomial(m))
            .map_right(b.presentation(), |m| rename.apply_monomial(m));
        let rhs = b.comult_poly(rename.image(g));
        lhs == rhs
            && b.counit_poly(rename.image(g)) == *a.counit_gen(g)
            && rename.apply(sa.image(g)) == sb.apply(rename.image(g))
    })
}

/// The odd additive Hopf algebra with the antipode deliberately set to
/// S(t) = t. Over fields of characteristic ≠ 2 the antipode axiom fails
/// with witness t. Test fixture only.
pub fn corrupted_odd_additive(field: FieldSpec) -> HopfSuperAlgebra {
    let h = HopfSuperAlgebra::build(&SupergroupSpec::OddAdditive, field).unwrap();
    let tp = Polynomial::generator(&h.pres, GenRef::Odd(0));
    let antipode = GenTable::build(&h.pres, |_| tp.clone());
    HopfSuperAlgebra { antipode, ..h }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_additive_catalog() {
        let h = HopfSuperAlgebra::build(&SupergroupSpec::OddAdditive, FieldSpec::Rationals).unwrap();
        assert_eq!(h.order().unwrap(), 2);
        assert!(h.check_hopf_axioms(None).passes());
        let m_basis = h.augmentation_ideal_basis().unwrap();
        assert_eq!(m_basis.len(), 1);
        assert_eq!(m_basis[0].to_string(), "t");
    }

    #[test]
    fn frobenius_kernel_catalog() {
        assert_eq!(
            HopfSuperAlgebra::build(&SupergroupSpec::FrobeniusKernelHeight1, FieldSpec::Rationals).unwrap_err(),
            HopfError::FrobeniusNeedsCharP
        );
        for p in [3u64, 5] {
            let f = FieldSpec::prime(p).unwrap();
            let h = HopfSuperAlgebra::build(&SupergroupSpec::FrobeniusKernelHeight1, f).unwrap();
            assert_eq!(h.order().unwrap(), p);
            assert!(h.check_hopf_axioms(None).passes());
        }
        let h3 = HopfSuperAlgebra::build(&SupergroupSpec::FrobeniusKernelHeight1, FieldSpec::prime(3).unwrap()).unwrap();
        let basis = h3.augmentation_ideal_basis().unwrap();
        let names: Vec<String> = basis.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["u", "u^2"]);
    }

    #[test]
    fn constant_group_catalog() {
        let z2 = FiniteGroup::cyclic(2);
        let h = HopfSuperAlgebra::build(&SupergroupSpec::ConstantGroup(z2), FieldSpec::Rationals).unwrap();
        assert_eq!(h.order().unwrap(), 2);
        assert!(h.check_hopf_axioms(None).passes());
        // Δe_1 = e_0⊗e_1 + e_1⊗e_0 for the nontrivial element
        let d = h.comult_gen(GenRef::Label(0, 1));
        let e0 = Polynomial::generator(h.presentation(), GenRef::Label(0, 0));
        let e1 = Polynomial::generator(h.presentation(), GenRef::Label(0, 1));
        let want = TensorElement::pure(&e0, &e1).add(&TensorElement::pure(&e1, &e0));
        assert_eq!(*d, want);
        let m_basis = h.augmentation_ideal_basis().unwrap();
        assert_eq!(m_basis.len(), 1);
        assert_eq!(m_basis[0].to_string(), "e_1");
    }

    #[test]
    fn bigger_constant_groups() {
        for g in [FiniteGroup::cyclic(4), FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2))] {
            let h = HopfSuperAlgebra::build(&SupergroupSpec::ConstantGroup(g), FieldSpec::Rationals).unwrap();
            assert_eq!(h.order().unwrap(), 4);
            assert!(h.check_hopf_axioms(None).passes());
        }
    }

    #[test]
    fn products_multiply_order() {
        let spec = SupergroupSpec::Product(vec![SupergroupSpec::OddAdditive, SupergroupSpec::FrobeniusKernelHeight1]);
        let h = HopfSuperAlgebra::build(&spec, FieldSpec::prime(5).unwrap()).unwrap();
        assert_eq!(h.order().unwrap(), 10);
        assert!(h.check_hopf_axioms(None).passes());
    }

    #[test]
    fn product_with_constant_group() {
        let spec = SupergroupSpec::Product(vec![
            SupergroupSpec::OddAdditive,
            SupergroupSpec::ConstantGroup(FiniteGroup::cyclic(2)),
        ]);
        let h = HopfSuperAlgebra::build(&spec, FieldSpec::Rationals).unwrap();
        assert_eq!(h.order().unwrap(), 4);
        assert!(h.check_hopf_axioms(None).passes());
    }

    #[test]
    fn colliding_product_names_get_suffixes() {
        let spec = SupergroupSpec::Product(vec![SupergroupSpec::OddAdditive, SupergroupSpec::OddAdditive]);
        let h = HopfSuperAlgebra::build(&spec, FieldSpec::Rationals).unwrap();
        assert_eq!(h.order().unwrap(), 4);
        assert!(h.presentation().find("t_1").is_some());
        assert!(h.presentation().find("t_2").is_some());
        assert!(h.check_hopf_axioms(None).passes());
    }

    #[test]
    fn corrupted_antipode_fails_with_witness_t() {
        let h = corrupted_odd_additive(FieldSpec::Rationals);
        let report = h.check_hopf_axioms(None);
        assert!(!report.passes());
        let f = report.failures.iter().find(|f| f.axiom == HopfAxiom::Antipode).unwrap();
        assert_eq!(f.witness, "t");
        // only the antipode identity breaks
        assert!(report.failures.iter().all(|f| f.axiom == HopfAxiom::Antipode));
    }

    #[test]
    fn even_additive_is_a_hopf_algebra_at_bound() {
        let h = HopfSuperAlgebra::even_additive(FieldSpec::Rationals);
        assert_eq!(h.order(), Err(HopfError::InfiniteDimensional));
        assert!(h.check_hopf_axioms(Some(3)).passes());
    }

    #[test]
    fn augmentation_ideal_is_two_sided() {
        let z2 = FiniteGroup::cyclic(2);
        let specs = [
            SupergroupSpec::OddAdditive,
            SupergroupSpec::ConstantGroup(z2),
            SupergroupSpec::Product(vec![SupergroupSpec::OddAdditive, SupergroupSpec::ConstantGroup(FiniteGroup::cyclic(2))]),
        ];
        for spec in specs {
            let h = HopfSuperAlgebra::build(&spec, FieldSpec::Rationals).unwrap();
            let m_basis = h.augmentation_ideal_basis().unwrap();
            let full = h.basis(None);
            let (basis, index) = crate::poly::basis_index(&h.pres, full.iter().map(|m| m.degree()).max().unwrap_or(0));
            let mut span = crate::linalg::RowSpace::new(basis.len());
            for f in &m_basis {
                span.insert(&f.coordinates(&index, basis.len()));
            }
            for m in &full {
                let h_elem = Polynomial::monomial(&h.pres, m.clone(), h.field().one());
                for f in &m_basis {
                    let prod = h_elem.mul(f);
                    assert!(span.contains(&prod.coordinates(&index, basis.len())), "M not an ideal");
                }
            }
        }
    }
}
