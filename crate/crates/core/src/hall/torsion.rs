//! Passing from the free nilpotent group to the nilpotent product of cyclic
//! groups: a basis coordinate whose commutator involves torsion generators
//! is reduced modulo `r_j`, `j` the highest torsion index present. Under the
//! divisibility chain `r_j` is the gcd of all orders involved.

use num_integer::Integer;

use super::element::{Exponent, GroupElement};
use super::engine::HallEngine;
use super::word::Word;
use super::EngineError;
use crate::arith::primes_up_to;
use crate::group::GroupSpec;

fn check_hypotheses(spec: &GroupSpec, alphabet: u32, cap: u32) -> Result<(), EngineError> {
    if spec.alphabet_size() != alphabet {
        return Err(EngineError::AlphabetMismatch { spec: spec.alphabet_size(), engine: alphabet });
    }
    if let Some((hi, lo)) = spec.divisibility_violation() {
        return Err(EngineError::Hypothesis(format!("{lo} does not divide {hi}")));
    }
    if let Some(r1) = spec.r(1) {
        if let Some(p) = primes_up_to(u64::from(cap)).into_iter().find(|p| r1 % p == 0) {
            return Err(EngineError::Hypothesis(format!("prime {p} <= class cap {cap} divides r_1 = {r1}")));
        }
    }
    Ok(())
}

pub fn reduce_mod_torsion<E: Exponent>(e: &GroupElement<E>, spec: &GroupSpec) -> Result<GroupElement<E>, EngineError> {
    let basis = e.basis();
    check_hypotheses(spec, basis.alphabet_size(), basis.class_cap())?;
    let reduced = e.exponents().iter().filter_map(|(&k, x)| {
        let value = match basis.get(k).max_torsion_index(spec) {
            None => x.clone(),
            Some(j) => {
                let r = E::from_u64(spec.r(j).expect("torsion index in range")).expect("order fits exponent type");
                x.mod_floor(&r)
            }
        };
        (!value.is_zero()).then_some((k, value))
    });
    Ok(GroupElement::from_exponents(basis.clone(), reduced.collect::<Vec<_>>()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StruikOutcome {
    /// `u^N` reduces to the identity, `N` the gcd of the orders involved.
    Holds { modulus: u64 },
    Fails { modulus: u64, residue: String },
    /// A generator of infinite order occurs, so there is nothing to check.
    NotApplicable,
}

impl StruikOutcome {
    pub fn holds(&self) -> bool {
        !matches!(self, StruikOutcome::Fails { .. })
    }
}

/// Checks that an outer commutator on torsion generators has order dividing
/// the gcd of the orders of the generators occurring in it.
pub fn struik_order_check<E: Exponent>(
    engine: &HallEngine<E>,
    u: &Word,
    spec: &GroupSpec,
) -> Result<StruikOutcome, EngineError> {
    let cap = engine.class_cap();
    check_hypotheses(spec, engine.basis().alphabet_size(), cap)?;
    if u.weight() > cap {
        return Err(EngineError::CapExceeded { weight: u.weight(), cap });
    }
    let mut modulus = 0u64;
    for g in u.generators() {
        match spec.torsion_index(g) {
            Some(j) => modulus = modulus.gcd(&spec.r(j).expect("in range")),
            None if g >= 1 && g <= spec.m => return Ok(StruikOutcome::NotApplicable),
            None => return Err(EngineError::UnknownGenerator(g)),
        }
    }
    let value = engine.evaluate(u)?;
    let powered = engine.power(&value, modulus as i64)?;
    let reduced = reduce_mod_torsion(&powered, spec)?;
    Ok(if reduced.is_identity() {
        StruikOutcome::Holds { modulus }
    } else {
        StruikOutcome::Fails { modulus, residue: reduced.to_string() }
    })
}
