//! Self-checks of the collection engine: group axioms on random samples,
//! basis sizes against the Witt count, and the free abelian sections
//! `gamma_n / gamma_{n+i}`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::element::GroupElement;
use super::engine::HallEngine;
use super::EngineError;
use crate::arith::{witt_chi, witt_sum};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HallRankReport {
    pub alphabet_size: u32,
    pub class_cap: u32,
    pub samples: usize,
    pub associativity_failures: usize,
    pub inverse_failures: usize,
    /// `(weight, basis elements of that weight, Witt count)` where they differ.
    pub count_mismatches: Vec<(u32, usize, BigUint)>,
}

impl HallRankReport {
    pub fn passed(&self) -> bool {
        self.associativity_failures == 0 && self.inverse_failures == 0 && self.count_mismatches.is_empty()
    }
}

pub(crate) fn random_element(engine: &HallEngine<i64>, rng: &mut StdRng, max_terms: usize, max_abs: i64) -> GroupElement<i64> {
    let len = engine.basis().len();
    let terms = rng.gen_range(0..=max_terms);
    engine.element((0..terms).map(|_| (rng.gen_range(0..len), rng.gen_range(-max_abs..=max_abs))))
}

pub fn verify_hall_ranks(alphabet_size: u32, class_cap: u32, samples: usize, seed: u64) -> Result<HallRankReport, EngineError> {
    let engine = HallEngine::<i64>::new(alphabet_size, class_cap)?;
    let mut rng = StdRng::seed_from_u64(seed);
    let mut associativity_failures = 0;
    let mut inverse_failures = 0;
    for _ in 0..samples {
        let a = random_element(&engine, &mut rng, 4, 3);
        let b = random_element(&engine, &mut rng, 4, 3);
        let c = random_element(&engine, &mut rng, 4, 3);
        let left = engine.multiply(&engine.multiply(&a, &b)?, &c)?;
        let right = engine.multiply(&a, &engine.multiply(&b, &c)?)?;
        if left != right {
            associativity_failures += 1;
        }
        let inv = engine.inverse(&a)?;
        if !engine.multiply(&a, &inv)?.is_identity() || !engine.multiply(&inv, &a)?.is_identity() {
            inverse_failures += 1;
        }
    }
    let mut count_mismatches = Vec::new();
    for w in 1..=class_cap {
        let got = engine.basis().weight_window(w, w).len();
        let expected = witt_chi(w, u64::from(alphabet_size)).expect("weight >= 1");
        if BigUint::from(got) != expected {
            count_mismatches.push((w, got, expected));
        }
    }
    Ok(HallRankReport { alphabet_size, class_cap, samples, associativity_failures, inverse_failures, count_mismatches })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionCheck {
    pub n: u32,
    pub i: u32,
    /// Witt sum over the weights `n ..= n+i-1`.
    pub expected_rank: BigUint,
    /// Number of basis coordinates in the weight window.
    pub window_size: usize,
    /// Rank of the window projections of sampled elements of `gamma_n`.
    pub sampled_rank: usize,
    /// Sampled elements of `gamma_n` with a coordinate of weight below `n`.
    pub leaks: usize,
    /// Sampled elements of `gamma_{n+i}` with a nonzero window coordinate.
    pub nonvanishing: usize,
}

impl SectionCheck {
    pub fn passed(&self) -> bool {
        let size = BigUint::from(self.window_size);
        size == self.expected_rank && BigUint::from(self.sampled_rank) == self.expected_rank && self.leaks == 0 && self.nonvanishing == 0
    }
}

// every letter gets a random exponent so that commutators rarely degenerate
fn random_dense_element(engine: &HallEngine<i64>, rng: &mut StdRng) -> GroupElement<i64> {
    let letters = engine.basis().alphabet_size() as usize;
    let tail = random_element(engine, rng, 2, 2);
    let head = engine.element((0..letters).map(|k| (k, rng.gen_range(-3..=3))));
    engine.multiply(&head, &tail).expect("same basis")
}

fn random_commutator(engine: &HallEngine<i64>, rng: &mut StdRng, weight: u32) -> Result<GroupElement<i64>, EngineError> {
    let mut acc = random_dense_element(engine, rng);
    for _ in 1..weight {
        let next = random_dense_element(engine, rng);
        acc = engine.commutator(&acc, &next)?;
    }
    Ok(acc)
}

/// Checks that `gamma_n / gamma_{n+i}` (`1 <= i <= n`) is free abelian on the
/// basic commutators of weights `n ..= n+i-1`: random left-normed commutators
/// of weight `n` stay in weight `>= n` and their window coordinates have full
/// rank, while those of weight `n+i` vanish on the window.
pub fn section_rank_check(engine: &HallEngine<i64>, n: u32, i: u32, samples: usize, seed: u64) -> Result<SectionCheck, EngineError> {
    let hi = n + i - 1;
    if hi > engine.class_cap() {
        return Err(EngineError::CapExceeded { weight: hi, cap: engine.class_cap() });
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let window = engine.basis().weight_window(n, hi);
    let expected_rank = witt_sum(u64::from(engine.basis().alphabet_size()), i64::from(n), i64::from(hi));
    let mut rows = Vec::new();
    let mut leaks = 0;
    for _ in 0..samples {
        // products of two commutators also lie in gamma_n
        let a = random_commutator(engine, &mut rng, n)?;
        let b = random_commutator(engine, &mut rng, n)?;
        let g = engine.multiply(&a, &b)?;
        if g.leading_weight().is_some_and(|w| w < n) {
            leaks += 1;
        }
        rows.push(window.clone().map(|k| g.exponent(k)).collect::<Vec<_>>());
    }
    // n + i may run past the cap, in which case gamma_{n+i} is trivial here
    let mut nonvanishing = 0;
    for _ in 0..samples {
        let g = random_commutator(engine, &mut rng, n + i)?;
        if window.clone().any(|k| g.exponent(k) != 0) {
            nonvanishing += 1;
        }
    }
    Ok(SectionCheck {
        n,
        i,
        expected_rank,
        window_size: window.len(),
        sampled_rank: lattice_rank(&rows),
        leaks,
        nonvanishing,
    })
}

/// Rank over the rationals of a list of integer vectors, by fraction-free
/// elimination.
pub fn lattice_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for r in rank + 1..m.len() {
            let f = m[r][col].clone();
            if f.is_zero() {
                continue;
            }
            let pivot_row = m[rank].clone();
            let mut g = BigInt::zero();
            for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                *x = &*x * &p - &f * y;
                g = g.gcd(x);
            }
            if !g.is_zero() && !g.abs().is_zero() && g != BigInt::from(1) {
                for x in m[r].iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(lattice_rank(&[]), 0);
        assert_eq!(lattice_rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(lattice_rank(&[vec![0, 0], vec![0, 3]]), 1);
        assert_eq!(lattice_rank(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]]), 2);
        assert_eq!(lattice_rank(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5], vec![1, 1, 1]]), 3);
    }

    #[test]
    fn hall_ranks_small() {
        assert!(verify_hall_ranks(2, 4, 50, 1).unwrap().passed());
        assert!(verify_hall_ranks(3, 3, 50, 2).unwrap().passed());
        assert!(verify_hall_ranks(1, 5, 20, 3).unwrap().passed());
    }

    #[test]
    fn sections_small() {
        let engine = HallEngine::<i64>::new(2, 4).unwrap();
        for (n, i) in [(1, 1), (2, 1), (2, 2), (3, 1), (4, 1)] {
            let check = section_rank_check(&engine, n, i, 40, 7).unwrap();
            assert!(check.passed(), "{check:?}");
        }
        assert!(section_rank_check(&engine, 3, 3, 4, 7).is_err());
    }
}
