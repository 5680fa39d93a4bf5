use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use super::basis::HallBasis;

/// Integer ring the normal-form exponents live in. `i64` covers desk-scale
/// work; `BigInt` never overflows.
pub trait Exponent:
    Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

impl<T> Exponent for T where
    T: Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Exponent vector over a Hall basis, read as the ordered product
/// `b_1^e_1 b_2^e_2 ...`. Zero exponents are never stored, so two elements
/// are equal iff their maps are equal.
#[derive(Clone)]
pub struct GroupElement<E> {
    basis: Arc<HallBasis>,
    exponents: BTreeMap<usize, E>,
}

impl<E: Exponent> GroupElement<E> {
    pub fn identity(basis: Arc<HallBasis>) -> Self {
        GroupElement { basis, exponents: BTreeMap::new() }
    }

    /// Builds an element from `(position, exponent)` pairs; repeated
    /// positions add up. Panics on a position outside the basis.
    pub fn from_exponents(basis: Arc<HallBasis>, pairs: impl IntoIterator<Item = (usize, E)>) -> Self {
        let mut exponents = BTreeMap::new();
        for (k, e) in pairs {
            assert!(k < basis.len(), "position {k} outside a basis of {} elements", basis.len());
            add_into(&mut exponents, k, e);
        }
        GroupElement { basis, exponents }
    }

    pub(crate) fn from_map(basis: Arc<HallBasis>, exponents: BTreeMap<usize, E>) -> Self {
        debug_assert!(exponents.values().all(|e| !e.is_zero()));
        GroupElement { basis, exponents }
    }

    pub fn basis(&self) -> &Arc<HallBasis> {
        &self.basis
    }

    pub fn exponents(&self) -> &BTreeMap<usize, E> {
        &self.exponents
    }

    pub(crate) fn into_map(self) -> BTreeMap<usize, E> {
        self.exponents
    }

    pub fn exponent(&self, position: usize) -> E {
        self.exponents.get(&position).cloned().unwrap_or_else(E::zero)
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Smallest weight carrying a nonzero exponent; `None` for the identity.
    pub fn leading_weight(&self) -> Option<u32> {
        self.exponents.keys().next().map(|&k| self.basis.weight(k))
    }

    /// Drops every coordinate of weight above `cap`.
    pub fn truncate(&self, cap: u32) -> BTreeMap<usize, E> {
        self.exponents
            .iter()
            .filter(|(&k, _)| self.basis.weight(k) <= cap)
            .map(|(&k, e)| (k, e.clone()))
            .collect()
    }
}

pub(crate) fn add_into<E: Exponent>(map: &mut BTreeMap<usize, E>, k: usize, e: E) {
    if e.is_zero() {
        return;
    }
    let entry = map.entry(k).or_insert_with(E::zero);
    *entry = entry.clone() + e;
    if entry.is_zero() {
        map.remove(&k);
    }
}

impl<E: PartialEq> PartialEq for GroupElement<E> {
    fn eq(&self, other: &Self) -> bool {
        self.basis.same_as(&other.basis) && self.exponents == other.exponents
    }
}

impl<E: Eq> Eq for GroupElement<E> {}

impl<E: Exponent> fmt::Display for GroupElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponents.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(&k, e)| {
                if e.is_one() {
                    self.basis.get(k).to_string()
                } else {
                    format!("{}^{}", self.basis.get(k), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl<E: Exponent> fmt::Debug for GroupElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
