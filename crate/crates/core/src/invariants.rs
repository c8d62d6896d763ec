//! Invariant rings R = K[X]^G = ker(τ − (·)⊗1). Degree slices are exact
//! kernels on homogeneous components; generators are found greedily by
//! comparing each slice against products of lower-degree generators.
//! For constant groups two independent oracles cross-check the kernel:
//! averaging over the group and two-step (subgroup then quotient)
//! invariants.

use crate::coaction::Coaction;
use crate::group::FiniteGroup;
use crate::linalg::{kernel_basis, same_span, Matrix, RowSpace};
use crate::poly::{basis_index, slice_index, Polynomial};
use crate::tensor::TensorElement;
use std::collections::BTreeMap;

/// Basis of R ∩ K[X]_d, the invariants among homogeneous degree-d elements.
pub fn invariant_slice(c: &Coaction, d: u32) -> Vec<Polynomial> {
    let space = c.space();
    let (mons, _) = slice_index(space, d);
    if mons.is_empty() {
        return Vec::new();
    }
    let one_g = Polynomial::one(c.group().presentation());
    let images: Vec<TensorElement> = mons
        .iter()
        .map(|m| {
            let mp = Polynomial::monomial(space, m.clone(), space.field.one());
            c.coact_monomial(m).sub(&TensorElement::pure(&mp, &one_g))
        })
        .collect();
    let mut pairs: BTreeMap<(crate::monomial::Monomial, crate::monomial::Monomial), usize> = BTreeMap::new();
    for t in &images {
        for ((a, b), _) in t.terms() {
            let next = pairs.len();
            pairs.entry((a.clone(), b.clone())).or_insert(next);
        }
    }
    let mut mat = Matrix::zero(space.field, pairs.len().max(1), mons.len());
    for (j, t) in images.iter().enumerate() {
        for ((a, b), cf) in t.terms() {
            mat.set(pairs[&(a.clone(), b.clone())], j, cf.clone());
        }
    }
    kernel_basis(&mat)
        .into_iter()
        .map(|v| Polynomial::from_coordinates(space, &mons, &v))
        .collect()
}

pub fn is_invariant(c: &Coaction, f: &Polynomial) -> bool {
    let one_g = Polynomial::one(c.group().presentation());
    c.coact(f) == TensorElement::pure(f, &one_g)
}

#[derive(Debug, Clone)]
pub struct DegreeEntry {
    pub degree: u32,
    pub slice_dim: usize,
    /// Rank of products of lower-degree generators inside the slice.
    pub product_rank: usize,
    pub new_generators: Vec<Polynomial>,
}

#[derive(Debug, Clone)]
pub struct GeneratorLedger {
    pub entries: Vec<DegreeEntry>,
}

impl GeneratorLedger {
    pub fn generators(&self) -> Vec<(u32, Polynomial)> {
        self.entries
            .iter()
            .flat_map(|e| e.new_generators.iter().map(move |g| (e.degree, g.clone())))
            .collect()
    }
}

/// Greedy minimal generation ledger for R up to max_degree. At each degree
/// the span of products of already-chosen generators is completed to the
/// full slice; the completion vectors are the new generators.
pub fn generator_ledger(c: &Coaction, max_degree: u32) -> GeneratorLedger {
    let space = c.space();
    let mut slices: Vec<Vec<Polynomial>> = vec![invariant_slice(c, 0)];
    let mut gens: Vec<(u32, Polynomial)> = Vec::new();
    let mut entries = Vec::new();
    for e in 1..=max_degree {
        let slice = invariant_slice(c, e);
        let (smons, sidx) = slice_index(space, e);
        let mut span = RowSpace::new(smons.len());
        for (k, g) in &gens {
            for b in &slices[(e - k) as usize] {
                let prod = g.mul(b);
                if !prod.is_zero() {
                    span.insert(&prod.coordinates(&sidx, smons.len()));
                }
            }
        }
        let product_rank = span.rank();
        let mut new_generators = Vec::new();
        for f in &slice {
            if span.insert(&f.coordinates(&sidx, smons.len())) {
                new_generators.push(f.clone());
            }
        }
        gens.extend(new_generators.iter().map(|g| (e, g.clone())));
        entries.push(DegreeEntry { degree: e, slice_dim: slice.len(), product_rank, new_generators });
        slices.push(slice);
    }
    GeneratorLedger { entries }
}

/// Averaging oracle for constant groups of order invertible in K:
/// span of π(m) over monomials of degree ≤ d, π = |Γ|⁻¹ Σ_γ act(γ),
/// must equal the span of the kernel slices in the same degrees.
pub fn averaging_matches(c: &Coaction, gamma: &FiniteGroup, d: u32) -> Option<bool> {
    let actions = c.constant_actions()?;
    if actions.len() != gamma.order() {
        return None;
    }
    let field = c.space().field;
    let p = field.characteristic();
    if p != 0 && (gamma.order() as u64).is_multiple_of(p) {
        return None;
    }
    let inv_order = field.from_i64(gamma.order() as i64).inv();
    let (mons, idx) = basis_index(c.space(), d);
    let mut averaged = RowSpace::new(mons.len());
    for m in &mons {
        let mp = Polynomial::monomial(c.space(), m.clone(), field.one());
        let mut acc = Polynomial::zero(c.space());
        for a in &actions {
            acc = acc.add(&a.apply(&mp));
        }
        averaged.insert(&acc.scale(&inv_order).coordinates(&idx, mons.len()));
    }
    let mut kernel = RowSpace::new(mons.len());
    for e in 0..=d {
        for f in invariant_slice(c, e) {
            kernel.insert(&f.coordinates(&idx, mons.len()));
        }
    }
    Some(same_span(averaged.basis(), kernel.basis(), mons.len()))
}

/// For a normal subgroup N of Γ acting by a constant coaction, checks at
/// degree d that (K[X]^N)^{Γ/N} = K[X]^Γ, computing the left side by the
/// two-step restriction and the right side both directly from the action
/// and from the coaction kernel.
pub fn iterated_invariants_agree(c: &Coaction, gamma: &FiniteGroup, n: &[usize], d: u32) -> Option<bool> {
    let actions = c.constant_actions()?;
    if actions.len() != gamma.order() || !gamma.is_normal(n) {
        return None;
    }
    let space = c.space();
    let field = space.field;
    let (smons, _) = slice_index(space, d);
    let (bmons, bidx) = basis_index(space, d);
    if smons.is_empty() {
        return Some(true);
    }
    // coordinates of (act(γ) − id)(m) for m in the degree-d slice
    let delta = |g: usize, f: &Polynomial| -> Vec<Scalar> {
        actions[g].apply(f).sub(f).coordinates(&bidx, bmons.len())
    };
    let kernel_of = |elems: &[usize], fs: &[Polynomial]| -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![field.zero(); fs.len()]; elems.len() * bmons.len()];
        for (gi, &g) in elems.iter().enumerate() {
            for (j, f) in fs.iter().enumerate() {
                for (r, v) in delta(g, f).into_iter().enumerate() {
                    rows[gi * bmons.len() + r][j] = v;
                }
            }
        }
        kernel_basis(&Matrix::from_rows(field, rows))
    };
    let slice_polys: Vec<Polynomial> = smons
        .iter()
        .map(|m| Polynomial::monomial(space, m.clone(), field.one()))
        .collect();
    // step 1: N-invariants inside the degree-d slice
    let n_inv_coords = kernel_of(n, &slice_polys);
    let n_inv: Vec<Polynomial> = n_inv_coords
        .iter()
        .map(|v| Polynomial::from_coordinates(space, &smons, v))
        .collect();
    // step 2: Γ/N-invariants of the N-invariants, via coset representatives
    let (quot, coset_of) = gamma.quotient(n).ok()?;
    let mut reps = vec![usize::MAX; quot.order()];
    for (g, &cs) in coset_of.iter().enumerate() {
        if reps[cs] == usize::MAX {
            reps[cs] = g;
        }
    }
    let two_step_coords = kernel_of(&reps, &n_inv);
    let mut two_step = Vec::new();
    for w in &two_step_coords {
        let mut v = vec![field.zero(); smons.len()];
        for (k, cw) in w.iter().enumerate() {
            for (j, cv) in n_inv_coords[k].iter().enumerate() {
                v[j] = v[j].add(&cv.mul(cw));
            }
        }
        two_step.push(v);
    }
    // direct: Γ-invariants of the slice, by the action and by the coaction
    let direct = kernel_of(&(0..gamma.order()).collect::<Vec<_>>(), &slice_polys);
    let from_coaction: Vec<Vec<Scalar>> = invariant_slice(c, d)
        .iter()
        .map(|f| {
            let (_, sidx) = slice_index(space, d);
            f.coordinates(&sidx, smons.len())
        })
        .collect();
    Some(
        same_span(&two_step, &direct, smons.len())
            && same_span(&direct, &from_coaction, smons.len()),
    )
}

use crate::field::Scalar;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coaction::OddDerivation;
    use crate::field::FieldSpec;
    use crate::hopf::{HopfSuperAlgebra, SupergroupSpec};
    use crate::maps::AlgebraMap;
    use crate::presentation::{GenRef, Presentation};
    use std::sync::Arc;

    fn mixed_plane() -> Arc<Presentation> {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_odd("theta").unwrap();
        Arc::new(p)
    }

    fn example_derivation(space: &Arc<Presentation>, on_x: bool) -> Coaction {
        let theta = Polynomial::generator(space, GenRef::Odd(0));
        let one = Polynomial::one(space);
        let phi = OddDerivation::from_fn(space, |g| match (g, on_x) {
            (GenRef::Even(0), true) => theta.clone(),
            (GenRef::Odd(0), false) => one.clone(),
            _ => Polynomial::zero(space),
        })
        .unwrap();
        Coaction::from_odd_derivation(&phi).unwrap()
    }

    #[test]
    fn non_free_example_slices() {
        let space = mixed_plane();
        let c = example_derivation(&space, true);
        for d in 0..=6u32 {
            let basis = invariant_slice(&c, d);
            assert_eq!(basis.len(), 1, "degree {}", d);
        }
        assert_eq!(invariant_slice(&c, 3)[0].to_string(), "x^2*theta");
        assert_eq!(invariant_slice(&c, 0)[0].to_string(), "1");
    }

    #[test]
    fn non_free_example_ledger_needs_a_generator_every_degree() {
        let space = mixed_plane();
        let c = example_derivation(&space, true);
        let ledger = generator_ledger(&c, 6);
        for e in &ledger.entries {
            assert_eq!(e.slice_dim, 1);
            assert_eq!(e.product_rank, 0);
            assert_eq!(e.new_generators.len(), 1);
        }
        assert_eq!(ledger.generators().len(), 6);
    }

    #[test]
    fn free_example_invariants_are_a_polynomial_ring() {
        let space = mixed_plane();
        let c = example_derivation(&space, false);
        for d in 0..=8u32 {
            let basis = invariant_slice(&c, d);
            assert_eq!(basis.len(), 1, "degree {}", d);
        }
        assert_eq!(invariant_slice(&c, 4)[0].to_string(), "x^4");
        let ledger = generator_ledger(&c, 8);
        assert_eq!(ledger.generators().len(), 1);
        assert_eq!(ledger.entries[0].new_generators[0].to_string(), "x");
        for e in &ledger.entries[1..] {
            assert_eq!(e.product_rank, 1);
            assert!(e.new_generators.is_empty());
        }
    }

    #[test]
    fn frobenius_translation_invariants() {
        let f5 = FieldSpec::prime(5).unwrap();
        let mut p = Presentation::new(f5);
        p.add_even("x", None).unwrap();
        let space = Arc::new(p);
        let g = HopfSuperAlgebra::build(&SupergroupSpec::FrobeniusKernelHeight1, f5).unwrap();
        let x = Polynomial::generator(&space, GenRef::Even(0));
        let u = Polynomial::generator(g.presentation(), GenRef::Even(0));
        let one_g = Polynomial::one(g.presentation());
        let tau = crate::maps::GenTable::build(&space, |_| {
            TensorElement::pure(&x, &one_g).add(&TensorElement::pure(&Polynomial::one(&space), &u))
        });
        let c = Coaction::from_explicit(&space, g, tau).unwrap();
        assert!(c.validate_monomials(6).passes());
        let dims: Vec<usize> = (0..=12).map(|d| invariant_slice(&c, d).len()).collect();
        let expected: Vec<usize> = (0..=12).map(|d| usize::from(d % 5 == 0)).collect();
        assert_eq!(dims, expected);
        assert_eq!(invariant_slice(&c, 5)[0].to_string(), "x^5");
        let ledger = generator_ledger(&c, 12);
        let gens = ledger.generators();
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].0, 5);
    }

    fn sign_action_z2() -> (Arc<Presentation>, Coaction, FiniteGroup) {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_odd("theta1").unwrap();
        p.add_odd("theta2").unwrap();
        let space = Arc::new(p);
        let z2 = FiniteGroup::cyclic(2);
        let id = AlgebraMap::identity(&space);
        let flip = AlgebraMap::from_fn(&space, &space, |g| Polynomial::generator(&space, g).neg());
        let c = Coaction::from_group_action(&space, &z2, &[id, flip]).unwrap();
        (space, c, z2)
    }

    #[test]
    fn sign_invariants_and_averaging() {
        let (_, c, z2) = sign_action_z2();
        let dims: Vec<usize> = (0..=3).map(|d| invariant_slice(&c, d).len()).collect();
        assert_eq!(dims, [1, 0, 1, 0]);
        assert_eq!(invariant_slice(&c, 2)[0].to_string(), "theta1*theta2");
        assert_eq!(averaging_matches(&c, &z2, 4), Some(true));
    }

    #[test]
    fn averaging_refuses_modular_case() {
        let f2 = FieldSpec::prime(2).unwrap();
        let mut p = Presentation::new(f2);
        p.add_even("x", None).unwrap();
        let space = Arc::new(p);
        let z2 = FiniteGroup::cyclic(2);
        let id = AlgebraMap::identity(&space);
        let shift = AlgebraMap::from_fn(&space, &space, |g| {
            Polynomial::generator(&space, g).add(&Polynomial::one(&space))
        });
        let c = Coaction::from_group_action(&space, &z2, &[id, shift]).unwrap();
        assert_eq!(averaging_matches(&c, &z2, 4), None);
        // the kernel slice itself is still exact: x²+x is invariant but
        // no homogeneous component of positive degree below 2 is
        assert_eq!(invariant_slice(&c, 1).len(), 0);
        let f = Polynomial::generator(&space, GenRef::Even(0));
        let inv = f.pow(2).add(&f);
        assert!(is_invariant(&c, &inv));
    }

    fn sign_sign_action() -> (Arc<Presentation>, Coaction, FiniteGroup) {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_even("y", None).unwrap();
        let space = Arc::new(p);
        let klein = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        let acts: Vec<AlgebraMap> = (0..4)
            .map(|i| {
                let (a, b) = (i / 2, i % 2);
                AlgebraMap::from_fn(&space, &space, |g| {
                    let gp = Polynomial::generator(&space, g);
                    match g {
                        GenRef::Even(0) if a == 1 => gp.neg(),
                        GenRef::Even(1) if b == 1 => gp.neg(),
                        _ => gp,
                    }
                })
            })
            .collect();
        let c = Coaction::from_group_action(&space, &klein, &acts).unwrap();
        (space, c, klein)
    }

    #[test]
    fn klein_four_iterated_invariants() {
        let (_, c, klein) = sign_sign_action();
        let dims: Vec<usize> = (0..=4).map(|d| invariant_slice(&c, d).len()).collect();
        assert_eq!(dims, [1, 0, 2, 0, 3]);
        // N = first factor {00, 10}: indices 0 and 2
        for d in 0..=4 {
            assert_eq!(iterated_invariants_agree(&c, &klein, &[0, 2], d), Some(true), "degree {}", d);
        }
        assert_eq!(averaging_matches(&c, &klein, 4), Some(true));
    }
}
