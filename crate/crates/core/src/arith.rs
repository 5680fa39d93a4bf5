//! Exact integer number theory behind the Witt count of basic commutators.
//!
//! Every count that can grow with the weight is returned as a [`BigUint`]:
//! `witt_chi(10, 3)` already needs more than 32 bits and the multiplier
//! formulas multiply such sums together.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("the Möbius function is only defined for n >= 1")]
    MobiusOfZero,
    #[error("weight must be at least 1")]
    ZeroWeight,
}

/// Prime factorisation by trial division, as `(prime, multiplicity)` pairs in
/// increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(n: u64) -> Result<i8, ArithError> {
    if n == 0 {
        return Err(ArithError::MobiusOfZero);
    }
    let mut sign = 1i8;
    for (_, k) in factorize(n) {
        if k > 1 {
            return Ok(0);
        }
        sign = -sign;
    }
    Ok(sign)
}

/// Positive divisors of `n` in increasing order. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&p| factorize(p) == [(p, 1)]).collect()
}

pub fn gcd<T: Integer + Clone>(a: T, b: T) -> T {
    a.gcd(&b)
}

/// `C(n, k)` over any integer type, computed with the exact running product
/// `C(n, i+1) = C(n, i) * (n - i) / (i + 1)`.
pub fn binomial<T>(n: T, k: u32) -> T
where
    T: Integer + Clone + FromPrimitive,
{
    let mut acc = T::one();
    for i in 0..k {
        let i_t = T::from_u32(i).expect("small integer");
        acc = acc * (n.clone() - i_t.clone()) / (i_t + T::one());
    }
    acc
}

/// Number of basic commutators of a given weight on `alphabet_size` letters,
/// `(1/w) * sum_{e | w} mu(e) * d^(w/e)`.
pub fn witt_chi(weight: u32, alphabet_size: u64) -> Result<BigUint, ArithError> {
    if weight == 0 {
        return Err(ArithError::ZeroWeight);
    }
    let base = BigInt::from(alphabet_size);
    let mut total = BigInt::zero();
    for e in divisors(u64::from(weight)) {
        let mu = mobius(e)?;
        if mu == 0 {
            continue;
        }
        let term = num_traits::pow(base.clone(), (u64::from(weight) / e) as usize);
        if mu > 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    let (q, r) = total.div_rem(&BigInt::from(weight));
    debug_assert!(r.is_zero(), "necklace sum not divisible by its weight");
    debug_assert!(!q.is_negative());
    Ok(q.magnitude().clone())
}

/// `sum_{i=lo}^{hi} witt_chi(i, alphabet_size)`; zero for an empty range.
pub fn witt_sum(alphabet_size: u64, lo: i64, hi: i64) -> BigUint {
    let lo = lo.max(1);
    if lo > hi {
        return BigUint::zero();
    }
    (lo..=hi)
        .map(|w| witt_chi(w as u32, alphabet_size).expect("weight >= 1"))
        .sum()
}

/// `chi_2(N) = N(N-1)/2`: the number of unordered pairs of distinct items out
/// of `N`, which is also the weight-2 Witt count on `N` letters.
pub fn choose_two(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    n * (n - BigUint::one()) / BigUint::from(2u8)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mobius_by_brute_force(n: u64) -> i8 {
        // count prime factors with multiplicity by repeated smallest-divisor removal
        let mut n = n;
        let mut seen = Vec::new();
        let mut d = 2;
        while n > 1 {
            if n.is_multiple_of(d) {
                if seen.contains(&d) {
                    return 0;
                }
                seen.push(d);
                n /= d;
            } else {
                d += 1;
            }
        }
        if seen.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn mobius_examples() {
        assert_eq!(mobius(1), Ok(1));
        assert_eq!(mobius(4), Ok(0));
        assert_eq!(mobius(6), Ok(1));
        assert_eq!(mobius(30), Ok(-1));
        assert_eq!(mobius(0), Err(ArithError::MobiusOfZero));
    }

    #[test]
    fn mobius_matches_brute_force() {
        for n in 1..500 {
            assert_eq!(mobius(n).unwrap(), mobius_by_brute_force(n), "n = {n}");
        }
    }

    #[test]
    fn divisors_are_complete_and_sorted() {
        for n in 1..200u64 {
            let expected: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n), expected);
        }
    }

    #[test]
    fn witt_examples() {
        for d in 0..6 {
            assert_eq!(witt_chi(1, d).unwrap(), BigUint::from(d));
        }
        assert_eq!(witt_chi(2, 2).unwrap(), BigUint::from(1u8));
        assert_eq!(witt_chi(6, 2).unwrap(), BigUint::from(9u8));
        assert_eq!(witt_chi(5, 3).unwrap(), BigUint::from(48u8));
        assert_eq!(witt_chi(0, 3), Err(ArithError::ZeroWeight));
    }

    #[test]
    fn witt_degenerate_alphabets() {
        for w in 1..12 {
            assert!(witt_chi(w, 0).unwrap().is_zero());
        }
        for w in 2..12 {
            assert!(witt_chi(w, 1).unwrap().is_zero());
        }
    }

    #[test]
    fn witt_sum_examples() {
        assert_eq!(witt_sum(2, 4, 5), BigUint::from(9u8));
        assert_eq!(witt_sum(3, 4, 5), BigUint::from(66u8));
        assert!(witt_sum(7, 5, 4).is_zero());
    }

    #[test]
    fn prime_weight_necklace_identity() {
        for w in [2u32, 3, 5, 7, 11, 13] {
            for d in 0..6u64 {
                let lhs = witt_chi(w, d).unwrap() * BigUint::from(w);
                let dw = num_traits::pow(BigUint::from(d), w as usize);
                assert_eq!(lhs + BigUint::from(d), dw, "w={w} d={d}");
            }
        }
    }

    #[test]
    fn full_necklace_identity() {
        // d^w = sum_{e | w} e * chi_e(d)
        for w in 1..16u32 {
            for d in 0..5u64 {
                let rhs: BigUint = divisors(u64::from(w))
                    .into_iter()
                    .map(|e| witt_chi(e as u32, d).unwrap() * BigUint::from(e))
                    .sum();
                assert_eq!(rhs, num_traits::pow(BigUint::from(d), w as usize));
            }
        }
    }

    #[test]
    fn witt_is_monotone_in_alphabet() {
        for w in 1..12 {
            for d in 0..6 {
                assert!(witt_chi(w, d).unwrap() <= witt_chi(w, d + 1).unwrap());
            }
        }
    }

    #[test]
    fn large_weight_exceeds_u64() {
        let v = witt_chi(45, 3).unwrap();
        assert!(v > BigUint::from(u64::MAX));
    }

    #[test]
    fn binomial_is_generic() {
        assert_eq!(binomial(25i64, 2), 300);
        assert_eq!(binomial(25i64, 3), 2300);
        assert_eq!(binomial(BigInt::from(60), 30).to_string(), "118264581564861424");
        assert_eq!(binomial(-3i64, 2), 6);
        assert_eq!(binomial(5u32, 0), 1);
    }

    #[test]
    fn choose_two_matches_weight_two_count() {
        for n in 0..50u64 {
            assert_eq!(choose_two(&BigUint::from(n)), witt_chi(2, n).unwrap());
        }
    }

    #[test]
    fn small_primes() {
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        assert!(primes_up_to(1).is_empty());
        assert_eq!(gcd(25u64, 5), 5);
    }
}
