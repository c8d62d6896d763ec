//! Seeded random sampling of polynomials, used by randomized checks.

use crate::monomial::monomials_up_to;
use crate::poly::Polynomial;
use crate::presentation::Presentation;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Deterministic generator for a given seed, independent of platform.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Non-deterministic fallback kept for exploratory use.
pub fn entropy_rng() -> StdRng {
    StdRng::from_os_rng()
}

/// A random polynomial of degree at most `max_degree` with up to `terms`
/// nonzero terms. Coefficients are small integers, never zero, reduced
/// into the field (so over F_p a sampled coefficient may still vanish
/// only when p divides it, which the range avoids for p > 7).
pub fn random_polynomial(
    r: &mut impl Rng,
    pres: &Arc<Presentation>,
    max_degree: u32,
    terms: usize,
) -> Polynomial {
    let monomials = monomials_up_to(pres, max_degree);
    let mut out = Polynomial::zero(pres);
    for _ in 0..terms {
        let m = &monomials[r.random_range(0..monomials.len())];
        let c = pres.field.from_i64(r.random_range(1..=7i64));
        out = out.add(&Polynomial::monomial(pres, m.clone(), c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn space() -> Arc<Presentation> {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_odd("theta").unwrap();
        p.into()
    }

    #[test]
    fn same_seed_same_polynomial() {
        let pres = space();
        let a = random_polynomial(&mut rng(7), &pres, 4, 5);
        let b = random_polynomial(&mut rng(7), &pres, 4, 5);
        assert_eq!(a, b);
    }

    #[test]
    fn degree_bound_respected() {
        let pres = space();
        let mut r = rng(11);
        for _ in 0..50 {
            let f = random_polynomial(&mut r, &pres, 3, 4);
            assert!(f.degree().unwrap_or(0) <= 3);
        }
    }
}
