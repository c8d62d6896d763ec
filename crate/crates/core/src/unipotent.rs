//! Unitriangular supergroup schemes U_σ(m|n). The coordinate ring is
//! polynomial on x_ij for σ(i) < σ(j); comultiplication is the matrix
//! rule with the unitriangular diagonal absorbed. The weight of a
//! monomial drives the filtration underlying unipotence, and the B_k
//! chain of Hopf supersubalgebras is checked generator by generator.

use crate::field::FieldSpec;
use crate::hopf::HopfSuperAlgebra;
use crate::maps::GenTable;
use crate::monomial::{monomial_basis, Monomial};
use crate::poly::Polynomial;
use crate::presentation::{GenRef, Presentation};
use crate::tensor::TensorElement;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ShuffleError {
    #[error("sigma must be a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("sigma must increase on the even block and on the odd block")]
    NotAShuffle,
}

/// Sizes (m|n) and a shuffle σ ∈ S_{m+n}: increasing on 1..m and on
/// m+1..m+n. Stored one-based, sigma[i−1] = σ(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShuffleData {
    m: usize,
    n: usize,
    sigma: Vec<usize>,
}

impl ShuffleData {
    pub fn new(m: usize, n: usize, sigma: Vec<usize>) -> Result<ShuffleData, ShuffleError> {
        let r = m + n;
        let mut seen = vec![false; r + 1];
        if sigma.len() != r {
            return Err(ShuffleError::NotAPermutation(r));
        }
        for &v in &sigma {
            if v < 1 || v > r || seen[v] {
                return Err(ShuffleError::NotAPermutation(r));
            }
            seen[v] = true;
        }
        if sigma.windows(2).enumerate().any(|(i, w)| i + 1 != m && w[0] >= w[1]) {
            return Err(ShuffleError::NotAShuffle);
        }
        Ok(ShuffleData { m, n, sigma })
    }

    pub fn identity(m: usize, n: usize) -> ShuffleData {
        ShuffleData { m, n, sigma: (1..=m + n).collect() }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.m + self.n
    }

    pub fn sigma(&self, i: usize) -> usize {
        self.sigma[i - 1]
    }

    fn even_index(&self, i: usize) -> bool {
        i <= self.m
    }
}

#[derive(Debug, Clone)]
pub struct USigmaAlgebra {
    shuffle: ShuffleData,
    pairs: Vec<(usize, usize)>,
    gen_refs: Vec<GenRef>,
    hopf: HopfSuperAlgebra,
}

pub fn build_u_sigma(s: &ShuffleData, field: FieldSpec) -> USigmaAlgebra {
    let r = s.r();
    let mut pairs = Vec::new();
    for i in 1..=r {
        for j in 1..=r {
            if s.sigma(i) < s.sigma(j) {
                pairs.push((i, j));
            }
        }
    }
    let mut pres = Presentation::new(field);
    let mut gen_refs = Vec::new();
    for &(i, j) in &pairs {
        let name = format!("x{}{}", i, j);
        if s.even_index(i) == s.even_index(j) {
            gen_refs.push(GenRef::Even(pres.add_even(&name, None).unwrap()));
        } else {
            gen_refs.push(GenRef::Odd(pres.add_odd(&name).unwrap()));
        }
    }
    let pres = Arc::new(pres);
    let pair_index: BTreeMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    let gen_poly = |k: usize| Polynomial::generator(&pres, gen_refs[k]);
    let one = Polynomial::one(&pres);

    let comult = GenTable::build(&pres, |g| {
        let k = gen_refs.iter().position(|&gr| gr == g).unwrap();
        let (i, j) = pairs[k];
        let xij = gen_poly(k);
        let mut out = TensorElement::pure(&xij, &one).add(&TensorElement::pure(&one, &xij));
        for l in 1..=r {
            if s.sigma(i) < s.sigma(l) && s.sigma(l) < s.sigma(j) {
                let xlj = gen_poly(pair_index[&(l, j)]);
                let xil = gen_poly(pair_index[&(i, l)]);
                out = out.add(&TensorElement::pure(&xlj, &xil));
            }
        }
        out
    });
    let counit = GenTable::build(&pres, |_| field.zero());

    // S(x_ij) = −x_ij − Σ_l S(x_lj)·x_il, well-founded by weight
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    order.sort_by_key(|&k| s.sigma(pairs[k].1) - s.sigma(pairs[k].0));
    let mut antipode_of: Vec<Option<Polynomial>> = vec![None; pairs.len()];
    for &k in &order {
        let (i, j) = pairs[k];
        let mut img = gen_poly(k).neg();
        for l in 1..=r {
            if s.sigma(i) < s.sigma(l) && s.sigma(l) < s.sigma(j) {
                let s_xlj = antipode_of[pair_index[&(l, j)]].clone().unwrap();
                img = img.sub(&s_xlj.mul(&gen_poly(pair_index[&(i, l)])));
            }
        }
        antipode_of[k] = Some(img);
    }
    let antipode = GenTable::build(&pres, |g| {
        let k = gen_refs.iter().position(|&gr| gr == g).unwrap();
        antipode_of[k].clone().unwrap()
    });

    let hopf = HopfSuperAlgebra::custom(pres, comult, counit, antipode);
    USigmaAlgebra { shuffle: s.clone(), pairs, gen_refs, hopf }
}

impl USigmaAlgebra {
    pub fn hopf(&self) -> &HopfSuperAlgebra {
        &self.hopf
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        self.hopf.presentation()
    }

    pub fn shuffle(&self) -> &ShuffleData {
        &self.shuffle
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn gen_of(&self, i: usize, j: usize) -> Option<GenRef> {
        self.pairs.iter().position(|&p| p == (i, j)).map(|k| self.gen_refs[k])
    }

    pub fn pair_weight(&self, i: usize, j: usize) -> u32 {
        (self.shuffle.sigma(j) - self.shuffle.sigma(i)) as u32
    }

    /// v(m) = Σ_t (σ(j_t) − σ(i_t)) over the factors with multiplicity.
    pub fn monomial_weight(&self, m: &Monomial) -> u32 {
        m.factors()
            .into_iter()
            .map(|g| {
                let k = self.gen_refs.iter().position(|&gr| gr == g).unwrap();
                self.pair_weight(self.pairs[k].0, self.pairs[k].1)
            })
            .sum()
    }
}

#[derive(Debug, Clone)]
pub struct FiltrationReport {
    pub max_degree: u32,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl FiltrationReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every monomial m of degree k ≤ d, each left factor of Δ(m) − m⊗1
/// must have degree < k, or degree k with strictly smaller weight.
pub fn filtration_check(u: &USigmaAlgebra, d: u32) -> FiltrationReport {
    let pres = u.presentation();
    let one = pres.field.one();
    let mut checked = 0;
    let mut failures = Vec::new();
    for k in 1..=d {
        for m in monomial_basis(pres, k) {
            checked += 1;
            let mp = Polynomial::monomial(pres, m.clone(), one.clone());
            let rest = u
                .hopf()
                .comult_monomial(&m)
                .sub(&TensorElement::pure(&mp, &Polynomial::one(pres)));
            let vm = u.monomial_weight(&m);
            for ((a, _), _) in rest.terms() {
                let ok = a.degree() < k || (a.degree() == k && u.monomial_weight(a) < vm);
                if !ok {
                    failures.push(format!("{}", mp));
                    break;
                }
            }
        }
    }
    FiltrationReport { max_degree: d, checked, failures }
}

#[derive(Debug, Clone)]
pub struct BkReport {
    pub level: u32,
    pub generator_count: usize,
    pub failures: Vec<String>,
}

impl BkReport {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }
}

fn monomial_in_bk(u: &USigmaAlgebra, m: &Monomial, k: u32) -> bool {
    m.factors().into_iter().all(|g| {
        let idx = u.gen_refs.iter().position(|&gr| gr == g).unwrap();
        u.pair_weight(u.pairs[idx].0, u.pairs[idx].1) <= k
    })
}

/// Verifies that B_k = K[x_ij | σ(j)−σ(i) ≤ k] is a Hopf supersubalgebra:
/// Δ(x_ij) ∈ B_k⊗B_k and S(x_ij) ∈ B_k for every generator of B_k.
pub fn bk_subbialgebra_check(u: &USigmaAlgebra, k: u32) -> BkReport {
    let s = u.hopf().antipode_map();
    let mut generator_count = 0;
    let mut failures = Vec::new();
    for (idx, &(i, j)) in u.pairs.iter().enumerate() {
        if u.pair_weight(i, j) > k {
            continue;
        }
        generator_count += 1;
        let g = u.gen_refs[idx];
        let comult_ok = u
            .hopf()
            .comult_gen(g)
            .terms()
            .all(|((a, b), _)| monomial_in_bk(u, a, k) && monomial_in_bk(u, b, k));
        let antipode_ok = s.image(g).terms().all(|(m, _)| monomial_in_bk(u, m, k));
        if !comult_ok || !antipode_ok {
            failures.push(u.presentation().name_of(g).to_string());
        }
    }
    BkReport { level: k, generator_count, failures }
}

/// Largest generator weight; B_k at this level is the whole algebra.
pub fn max_weight(u: &USigmaAlgebra) -> u32 {
    u.pairs.iter().map(|&(i, j)| u.pair_weight(i, j)).max().unwrap_or(0)
}
