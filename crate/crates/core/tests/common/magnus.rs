//! Independent oracle: the Magnus map `x_i -> 1 + X_i` into noncommutative
//! integer polynomials truncated above degree `cap`. Its kernel on the free
//! group is exactly `gamma_{cap+1}`, so two words agree in the free nilpotent
//! group of class `cap` iff their images agree. Nothing here touches the
//! collection engine.

use std::collections::BTreeMap;

use baermult::commutator::Commutator;
use baermult::hall::GroupElement;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    cap: usize,
    terms: BTreeMap<Vec<u32>, i128>,
}

impl Series {
    pub fn one(cap: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), 1);
        Series { cap, terms }
    }

    fn zero(cap: usize) -> Self {
        Series { cap, terms: BTreeMap::new() }
    }

    pub fn generator(cap: usize, index: u32) -> Self {
        let mut s = Series::one(cap);
        if cap >= 1 {
            s.terms.insert(vec![index], 1);
        }
        s
    }

    fn add_term(&mut self, word: Vec<u32>, c: i128) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(word.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&word);
        }
    }

    pub fn mul(&self, other: &Series) -> Series {
        let mut out = Series::zero(self.cap);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                if u.len() + v.len() > self.cap {
                    continue;
                }
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }

    /// `(1 + n)^-1 = sum_k (-n)^k`, finite after truncation.
    pub fn inverse(&self) -> Series {
        assert_eq!(self.terms.get(&Vec::new()), Some(&1), "only unipotent series are inverted");
        let mut neg = self.clone();
        neg.terms.remove(&Vec::new());
        for c in neg.terms.values_mut() {
            *c = -*c;
        }
        let mut out = Series::one(self.cap);
        let mut power = Series::one(self.cap);
        for _ in 0..self.cap {
            power = power.mul(&neg);
            for (w, c) in &power.terms {
                out.add_term(w.clone(), *c);
            }
        }
        out
    }

    pub fn pow(&self, k: i64) -> Series {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Series::one(self.cap);
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, other: &Series) -> Series {
        self.inverse().mul(&other.inverse()).mul(self).mul(other)
    }
}

pub fn of_commutator(cap: usize, c: &Commutator) -> Series {
    match c.children() {
        None => Series::generator(cap, c.as_letter().unwrap()),
        Some((l, r)) => of_commutator(cap, l).commutator(&of_commutator(cap, r)),
    }
}

/// Image of a signed word `x_{i1}^{s1} x_{i2}^{s2} ...`.
pub fn of_word(cap: usize, word: &[(u32, i64)]) -> Series {
    word.iter()
        .fold(Series::one(cap), |acc, &(g, s)| acc.mul(&Series::generator(cap, g).pow(s)))
}

/// Image of a normal form `b_1^e_1 b_2^e_2 ...`.
pub fn of_element(e: &GroupElement<i64>) -> Series {
    let cap = e.basis().class_cap() as usize;
    e.exponents().iter().fold(Series::one(cap), |acc, (&k, &x)| {
        acc.mul(&of_commutator(cap, e.basis().get(k)).pow(x))
    })
}
