use std::collections::HashMap;
use std::ops::Range;

use num_bigint::BigUint;

use super::EngineError;
use crate::arith::witt_sum;
use crate::commutator::{basic_by_weight, BasicCommutator};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineLimits {
    pub max_class: u32,
    pub max_alphabet: u32,
    pub max_basis: usize,
}

impl Default for EngineLimits {
    fn default() -> Self {
        EngineLimits { max_class: 6, max_alphabet: 4, max_basis: 5_000 }
    }
}

/// Basic commutators of weight `1..=class_cap` in Hall order. Position `k` in
/// the list is the `k`-th letter of the normal form.
#[derive(Debug)]
pub struct HallBasis {
    alphabet_size: u32,
    class_cap: u32,
    elements: Vec<BasicCommutator>,
    weights: Vec<u32>,
    positions: HashMap<BasicCommutator, usize>,
    weight_starts: Vec<usize>,
}

impl HallBasis {
    pub fn build(alphabet_size: u32, class_cap: u32) -> Result<Self, EngineError> {
        Self::build_with(alphabet_size, class_cap, &EngineLimits::default())
    }

    pub fn build_with(alphabet_size: u32, class_cap: u32, limits: &EngineLimits) -> Result<Self, EngineError> {
        if class_cap == 0 {
            return Err(EngineError::ZeroCap);
        }
        if alphabet_size == 0 {
            return Err(EngineError::EmptyAlphabet);
        }
        if class_cap > limits.max_class {
            return Err(EngineError::ResourceGuard(format!(
                "class cap {class_cap} exceeds the limit {}",
                limits.max_class
            )));
        }
        if alphabet_size > limits.max_alphabet {
            return Err(EngineError::ResourceGuard(format!(
                "alphabet size {alphabet_size} exceeds the limit {}",
                limits.max_alphabet
            )));
        }
        let predicted = witt_sum(u64::from(alphabet_size), 1, i64::from(class_cap));
        if predicted > BigUint::from(limits.max_basis) {
            return Err(EngineError::ResourceGuard(format!(
                "Hall basis would have {predicted} elements, limit is {}",
                limits.max_basis
            )));
        }

        let levels = basic_by_weight(alphabet_size, class_cap);
        let mut elements = Vec::new();
        let mut weights = Vec::new();
        let mut weight_starts = Vec::with_capacity(levels.len() + 1);
        for (i, level) in levels.into_iter().enumerate() {
            weight_starts.push(elements.len());
            weights.extend(std::iter::repeat_n(i as u32 + 1, level.len()));
            elements.extend(level);
        }
        weight_starts.push(elements.len());
        let positions = elements.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect();
        Ok(HallBasis { alphabet_size, class_cap, elements, weights, positions, weight_starts })
    }

    pub fn alphabet_size(&self) -> u32 {
        self.alphabet_size
    }

    pub fn class_cap(&self) -> u32 {
        self.class_cap
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[BasicCommutator] {
        &self.elements
    }

    pub fn get(&self, position: usize) -> &BasicCommutator {
        &self.elements[position]
    }

    pub fn weight(&self, position: usize) -> u32 {
        self.weights[position]
    }

    pub fn position(&self, commutator: &BasicCommutator) -> Option<usize> {
        self.positions.get(commutator).copied()
    }

    /// Positions of the basis elements whose weight lies in `[lo, hi]`.
    pub fn weight_window(&self, lo: u32, hi: u32) -> Range<usize> {
        let lo = lo.clamp(1, self.class_cap + 1);
        let hi = hi.min(self.class_cap);
        if lo > hi {
            return 0..0;
        }
        self.weight_starts[lo as usize - 1]..self.weight_starts[hi as usize]
    }

    pub(crate) fn same_as(&self, other: &HallBasis) -> bool {
        std::ptr::eq(self, other) || (self.alphabet_size == other.alphabet_size && self.class_cap == other.class_cap)
    }
}
