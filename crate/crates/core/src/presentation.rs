//! Presentations of supercommutative superalgebras.
//!
//! A presentation lists even variables (optionally truncated by a power
//! relation x^q = 0), odd variables (θ² = 0 implicit), and label blocks.
//! A label block models a family of orthogonal idempotents summing to 1,
//! as in the dual group algebra of a finite group: every monomial carries
//! exactly one label per block, so monomials stay a linear basis.

use crate::field::FieldSpec;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperVariable {
    pub name: String,
    pub parity: Parity,
    /// Degree weight, 1 unless stated otherwise.
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelBlock {
    pub labels: Vec<String>,
}

/// Reference to a multiplicative generator: a variable or one block label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenRef {
    Even(usize),
    Odd(usize),
    /// (block index, label index within block)
    Label(usize, usize),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("duplicate generator name {0}")]
    DuplicateName(String),
    #[error("power relation exponent must be at least 2, got {0}")]
    BadExponent(u32),
    #[error("variable weight must be positive")]
    ZeroWeight,
    #[error("label block must be nonempty")]
    EmptyBlock,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub field: FieldSpec,
    even_vars: Vec<SuperVariable>,
    even_power: Vec<Option<u32>>,
    odd_vars: Vec<SuperVariable>,
    blocks: Vec<LabelBlock>,
}

impl Presentation {
    pub fn new(field: FieldSpec) -> Presentation {
        Presentation { field, even_vars: Vec::new(), even_power: Vec::new(), odd_vars: Vec::new(), blocks: Vec::new() }
    }

    fn check_fresh(&self, name: &str) -> Result<(), PresentationError> {
        if self.find(name).is_some() {
            return Err(PresentationError::DuplicateName(name.to_string()));
        }
        Ok(())
    }

    /// Even variable of weight 1, with optional relation x^q = 0.
    pub fn add_even(&mut self, name: &str, power: Option<u32>) -> Result<usize, PresentationError> {
        self.add_even_weighted(name, power, 1)
    }

    pub fn add_even_weighted(&mut self, name: &str, power: Option<u32>, weight: u32) -> Result<usize, PresentationError> {
        self.check_fresh(name)?;
        if let Some(q) = power {
            if q < 2 {
                return Err(PresentationError::BadExponent(q));
            }
        }
        if weight == 0 {
            return Err(PresentationError::ZeroWeight);
        }
        self.even_vars.push(SuperVariable { name: name.to_string(), parity: Parity::Even, weight });
        self.even_power.push(power);
        Ok(self.even_vars.len() - 1)
    }

    pub fn add_odd(&mut self, name: &str) -> Result<usize, PresentationError> {
        self.add_odd_weighted(name, 1)
    }

    pub fn add_odd_weighted(&mut self, name: &str, weight: u32) -> Result<usize, PresentationError> {
        self.check_fresh(name)?;
        if weight == 0 {
            return Err(PresentationError::ZeroWeight);
        }
        self.odd_vars.push(SuperVariable { name: name.to_string(), parity: Parity::Odd, weight });
        Ok(self.odd_vars.len() - 1)
    }

    /// Label blocks carry degree 0: idempotents do not contribute to grading.
    pub fn add_block(&mut self, labels: Vec<String>) -> Result<usize, PresentationError> {
        if labels.is_empty() {
            return Err(PresentationError::EmptyBlock);
        }
        for l in &labels {
            self.check_fresh(l)?;
            if labels.iter().filter(|x| *x == l).count() > 1 {
                return Err(PresentationError::DuplicateName(l.clone()));
            }
        }
        self.blocks.push(LabelBlock { labels });
        Ok(self.blocks.len() - 1)
    }

    pub fn n_even(&self) -> usize {
        self.even_vars.len()
    }

    pub fn n_odd(&self) -> usize {
        self.odd_vars.len()
    }

    pub fn n_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn even_vars(&self) -> &[SuperVariable] {
        &self.even_vars
    }

    pub fn odd_vars(&self) -> &[SuperVariable] {
        &self.odd_vars
    }

    pub fn blocks(&self) -> &[LabelBlock] {
        &self.blocks
    }

    /// Power relation exponent of even variable i, if truncated.
    pub fn power_of(&self, i: usize) -> Option<u32> {
        self.even_power[i]
    }

    pub fn even_weight(&self, i: usize) -> u32 {
        self.even_vars[i].weight
    }

    pub fn odd_weight(&self, i: usize) -> u32 {
        self.odd_vars[i].weight
    }

    pub fn find(&self, name: &str) -> Option<GenRef> {
        if let Some(i) = self.even_vars.iter().position(|v| v.name == name) {
            return Some(GenRef::Even(i));
        }
        if let Some(i) = self.odd_vars.iter().position(|v| v.name == name) {
            return Some(GenRef::Odd(i));
        }
        for (b, block) in self.blocks.iter().enumerate() {
            if let Some(l) = block.labels.iter().position(|x| x == name) {
                return Some(GenRef::Label(b, l));
            }
        }
        None
    }

    pub fn name_of(&self, g: GenRef) -> &str {
        match g {
            GenRef::Even(i) => &self.even_vars[i].name,
            GenRef::Odd(i) => &self.odd_vars[i].name,
            GenRef::Label(b, l) => &self.blocks[b].labels[l],
        }
    }

    pub fn parity_of(&self, g: GenRef) -> Parity {
        match g {
            GenRef::Even(_) | GenRef::Label(..) => Parity::Even,
            GenRef::Odd(_) => Parity::Odd,
        }
    }

    pub fn weight_of(&self, g: GenRef) -> u32 {
        match g {
            GenRef::Even(i) => self.even_weight(i),
            GenRef::Odd(i) => self.odd_weight(i),
            GenRef::Label(..) => 0,
        }
    }

    /// Variable generators in declaration order, even block first.
    /// Labels are not included: they are basis bookkeeping, not variables.
    pub fn variable_gens(&self) -> Vec<GenRef> {
        (0..self.n_even()).map(GenRef::Even).chain((0..self.n_odd()).map(GenRef::Odd)).collect()
    }

    /// All tuples choosing one label per block, lexicographically ascending.
    /// Without blocks this is the single empty tuple.
    pub fn label_tuples(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for block in &self.blocks {
            let mut next = Vec::with_capacity(out.len() * block.labels.len());
            for t in &out {
                for l in 0..block.labels.len() {
                    let mut t2 = t.clone();
                    t2.push(l as u32);
                    next.push(t2);
                }
            }
            out = next;
        }
        out
    }

    /// Dimension as a K-vector space, None when some even variable is free.
    pub fn dimension(&self) -> Option<u64> {
        let mut dim: u64 = 1;
        for q in &self.even_power {
            dim = dim.checked_mul((*q)? as u64)?;
        }
        dim = dim.checked_mul(1u64.checked_shl(self.n_odd() as u32)?)?;
        for b in &self.blocks {
            dim = dim.checked_mul(b.labels.len() as u64)?;
        }
        Some(dim)
    }
}

/// Presentations are compared by value; Arc identity is only a fast path.
pub fn same_presentation(a: &Arc<Presentation>, b: &Arc<Presentation>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
