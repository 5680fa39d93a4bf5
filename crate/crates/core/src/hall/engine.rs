use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::basis::{EngineLimits, HallBasis};
use super::element::{add_into, Exponent, GroupElement};
use super::word::Word;
use super::EngineError;
use crate::commutator::Commutator;

type Coords<E> = BTreeMap<usize, E>;

fn single<E: Exponent>(k: usize, e: E) -> Coords<E> {
    let mut m = BTreeMap::new();
    add_into(&mut m, k, e);
    m
}

/// Pairwise relations of the Hall basis. For positions `j > i` whose weights
/// sum to at most the cap, holds the normal form of `[b_j, b_i]` and of
/// `b_i b_j b_i^-1`; pairs that commute have no entry.
#[derive(Debug, Default)]
pub struct StructureTable<E> {
    commutators: HashMap<(usize, usize), Coords<E>>,
    inverse_conjugates: HashMap<(usize, usize), Coords<E>>,
}

impl<E: Exponent> StructureTable<E> {
    /// Normal form of `[b_j, b_i]` for `j > i`, `None` when they commute.
    pub fn commutator(&self, j: usize, i: usize) -> Option<&BTreeMap<usize, E>> {
        self.commutators.get(&(j, i))
    }

    /// Number of noncommuting pairs.
    pub fn len(&self) -> usize {
        self.commutators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.commutators.is_empty()
    }
}

/// Collection engine for one `(alphabet, class cap)`. The structure table is
/// filled once at construction and is read-only afterwards.
#[derive(Debug)]
pub struct HallEngine<E> {
    basis: Arc<HallBasis>,
    table: StructureTable<E>,
}

impl<E: Exponent> HallEngine<E> {
    pub fn new(alphabet_size: u32, class_cap: u32) -> Result<Self, EngineError> {
        Self::with_limits(alphabet_size, class_cap, &EngineLimits::default())
    }

    pub fn with_limits(alphabet_size: u32, class_cap: u32, limits: &EngineLimits) -> Result<Self, EngineError> {
        let basis = Arc::new(HallBasis::build_with(alphabet_size, class_cap, limits)?);
        Ok(Self::from_basis(basis))
    }

    pub fn from_basis(basis: Arc<HallBasis>) -> Self {
        let mut engine = HallEngine { basis, table: StructureTable { commutators: HashMap::new(), inverse_conjugates: HashMap::new() } };
        engine.fill_table();
        engine
    }

    // Relations for pairs (j, i) only use pairs whose lower index exceeds i,
    // so filling by decreasing i never reads a missing entry.
    fn fill_table(&mut self) {
        let cap = self.basis.class_cap();
        let len = self.basis.len();
        for i in (0..len).rev() {
            let wi = self.basis.weight(i);
            for j in i + 1..len {
                if wi + self.basis.weight(j) > cap {
                    break;
                }
                let entry = self.pair_commutator(j, i);
                if !entry.is_empty() {
                    self.table.commutators.insert((j, i), entry);
                }
            }
            for j in i + 1..len {
                if self.table.commutators.contains_key(&(j, i)) {
                    let conj = self.inverse_conjugate(&single(j, E::one()), i);
                    self.table.inverse_conjugates.insert((j, i), conj);
                }
            }
        }
    }

    fn pair_commutator(&self, j: usize, i: usize) -> Coords<E> {
        let bj = self.basis.get(j);
        let bi = self.basis.get(i);
        match bj.children() {
            // [u, v]^b = [u^b, v^b], and u, v both sit after b_i
            Some((u, v)) if v > bi => {
                let pu = self.basis.position(u).expect("subterm of a basic commutator is basic");
                let pv = self.basis.position(v).expect("subterm of a basic commutator is basic");
                let conj_u = self.conjugate_letter(pu, i);
                let conj_v = self.conjugate_letter(pv, i);
                let conj_bj = self.commutator_coords(&conj_u, &conj_v);
                let mut out = single(j, -E::one());
                self.mul_coords(&mut out, &conj_bj);
                out
            }
            _ => {
                let c = Commutator::bracket(bj.clone(), bi.clone());
                self.basis.position(&c).map_or_else(BTreeMap::new, |k| single(k, E::one()))
            }
        }
    }

    /// `b_k^{b_i} = b_k [b_k, b_i]` for `k > i`.
    fn conjugate_letter(&self, k: usize, i: usize) -> Coords<E> {
        let mut out = self.table.commutators.get(&(k, i)).cloned().unwrap_or_default();
        out.insert(k, E::one());
        out
    }

    /// `b_i h b_i^-1` for `h` supported after position `i`, by solving
    /// `b_i^-1 y b_i = h` one commutator layer at a time.
    fn inverse_conjugate(&self, h: &Coords<E>, i: usize) -> Coords<E> {
        if h.is_empty() {
            return BTreeMap::new();
        }
        let mut conj = single(i, -E::one());
        self.mul_coords(&mut conj, h);
        self.mul_letter(&mut conj, i, E::one());
        // conj^-1 h = [h, b_i]^-1 lies one weight deeper than h
        let mut rest = self.inverse_coords(&conj);
        self.mul_coords(&mut rest, h);
        let correction = self.inverse_conjugate(&rest, i);
        let mut out = h.clone();
        self.mul_coords(&mut out, &correction);
        out
    }

    /// `g <- g * b_i^e`.
    fn mul_letter(&self, g: &mut Coords<E>, i: usize, e: E) {
        if e.is_zero() {
            return;
        }
        let central = g.range(i + 1..).all(|(&k, _)| !self.table.commutators.contains_key(&(k, i)));
        if central {
            add_into(g, i, e);
            return;
        }
        // g = A B with A on positions <= i, so g b_i^e = A b_i^e (b_i^-e B b_i^e)
        let suffix = g.split_off(&(i + 1));
        add_into(g, i, e.clone());
        let image = self.conjugate_by_letter_power(&suffix, i, e);
        self.mul_coords(g, &image);
    }

    /// `b_i^-e h b_i^e` for `h` supported after `i`, raising the conjugation
    /// automorphism to the power `e` by repeated squaring.
    fn conjugate_by_letter_power(&self, h: &Coords<E>, i: usize, e: E) -> Coords<E> {
        let positive = e.is_positive();
        let two = E::one() + E::one();
        let mut k = e.abs();
        let mut levels: Vec<HashMap<usize, Coords<E>>> = Vec::new();
        let mut out = h.clone();
        let mut level = 0;
        while !k.is_zero() {
            if k.is_odd() {
                out = self.apply_automorphism(&mut levels, level, &out, i, positive);
            }
            k = k / two.clone();
            level += 1;
        }
        out
    }

    fn apply_automorphism(
        &self,
        levels: &mut Vec<HashMap<usize, Coords<E>>>,
        level: usize,
        h: &Coords<E>,
        i: usize,
        positive: bool,
    ) -> Coords<E> {
        let mut out = BTreeMap::new();
        for (&l, f) in h {
            let image = self.automorphism_image(levels, level, l, i, positive);
            let p = self.power_coords(&image, f.clone());
            self.mul_coords(&mut out, &p);
        }
        out
    }

    // image of b_letter under conjugation by b_i^(+-2^level)
    fn automorphism_image(
        &self,
        levels: &mut Vec<HashMap<usize, Coords<E>>>,
        level: usize,
        letter: usize,
        i: usize,
        positive: bool,
    ) -> Coords<E> {
        if let Some(image) = levels.get(level).and_then(|m| m.get(&letter)) {
            return image.clone();
        }
        let image = if level == 0 {
            let entry = if positive {
                self.table.commutators.get(&(letter, i)).map(|_| self.conjugate_letter(letter, i))
            } else {
                self.table.inverse_conjugates.get(&(letter, i)).cloned()
            };
            entry.unwrap_or_else(|| single(letter, E::one()))
        } else {
            let half = self.automorphism_image(levels, level - 1, letter, i, positive);
            self.apply_automorphism(levels, level - 1, &half, i, positive)
        };
        if levels.len() <= level {
            levels.resize_with(level + 1, HashMap::new);
        }
        levels[level].insert(letter, image.clone());
        image
    }

    fn mul_coords(&self, g: &mut Coords<E>, h: &Coords<E>) {
        for (&l, f) in h {
            self.mul_letter(g, l, f.clone());
        }
    }

    fn inverse_coords(&self, h: &Coords<E>) -> Coords<E> {
        let mut out = BTreeMap::new();
        for (&l, f) in h.iter().rev() {
            self.mul_letter(&mut out, l, -f.clone());
        }
        out
    }

    fn power_coords(&self, h: &Coords<E>, k: E) -> Coords<E> {
        if k.is_negative() {
            return self.power_coords(&self.inverse_coords(h), -k);
        }
        if h.len() == 1 {
            let (&l, f) = h.iter().next().expect("one entry");
            return single(l, f.clone() * k);
        }
        let two = E::one() + E::one();
        let mut k = k;
        let mut base = h.clone();
        let mut out = BTreeMap::new();
        while !k.is_zero() {
            if k.is_odd() {
                self.mul_coords(&mut out, &base);
            }
            k = k / two.clone();
            if !k.is_zero() {
                let b = base.clone();
                self.mul_coords(&mut base, &b);
            }
        }
        out
    }

    fn commutator_coords(&self, a: &Coords<E>, b: &Coords<E>) -> Coords<E> {
        let mut out = self.inverse_coords(a);
        let b_inv = self.inverse_coords(b);
        self.mul_coords(&mut out, &b_inv);
        self.mul_coords(&mut out, a);
        self.mul_coords(&mut out, b);
        out
    }

    fn check(&self, a: &GroupElement<E>) -> Result<(), EngineError> {
        if a.basis().same_as(&self.basis) {
            Ok(())
        } else {
            Err(EngineError::BasisMismatch)
        }
    }

    fn wrap(&self, coords: Coords<E>) -> GroupElement<E> {
        GroupElement::from_map(Arc::clone(&self.basis), coords)
    }

    pub fn basis(&self) -> &Arc<HallBasis> {
        &self.basis
    }

    pub fn table(&self) -> &StructureTable<E> {
        &self.table
    }

    pub fn class_cap(&self) -> u32 {
        self.basis.class_cap()
    }

    pub fn identity(&self) -> GroupElement<E> {
        GroupElement::identity(Arc::clone(&self.basis))
    }

    /// The basis element at `position`, as a group element.
    pub fn letter(&self, position: usize) -> GroupElement<E> {
        self.wrap(single(position, E::one()))
    }

    /// The generator `x_index`, numbered from 1.
    pub fn generator(&self, index: u32) -> Result<GroupElement<E>, EngineError> {
        if index == 0 || index > self.basis.alphabet_size() {
            return Err(EngineError::UnknownGenerator(index));
        }
        Ok(self.letter(index as usize - 1))
    }

    pub fn element(&self, pairs: impl IntoIterator<Item = (usize, E)>) -> GroupElement<E> {
        GroupElement::from_exponents(Arc::clone(&self.basis), pairs)
    }

    pub fn multiply(&self, a: &GroupElement<E>, b: &GroupElement<E>) -> Result<GroupElement<E>, EngineError> {
        self.check(a)?;
        self.check(b)?;
        let mut out = a.exponents().clone();
        self.mul_coords(&mut out, b.exponents());
        Ok(self.wrap(out))
    }

    pub fn inverse(&self, a: &GroupElement<E>) -> Result<GroupElement<E>, EngineError> {
        self.check(a)?;
        Ok(self.wrap(self.inverse_coords(a.exponents())))
    }

    pub fn power(&self, a: &GroupElement<E>, k: i64) -> Result<GroupElement<E>, EngineError> {
        self.check(a)?;
        let k = E::from_i64(k).expect("exponent type holds i64");
        Ok(self.wrap(self.power_coords(a.exponents(), k)))
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: &GroupElement<E>, b: &GroupElement<E>) -> Result<GroupElement<E>, EngineError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.commutator_coords(a.exponents(), b.exponents())))
    }

    /// `a^b = b^-1 a b`.
    pub fn conjugate(&self, a: &GroupElement<E>, b: &GroupElement<E>) -> Result<GroupElement<E>, EngineError> {
        let b_inv = self.inverse(b)?;
        let t = self.multiply(&b_inv, a)?;
        self.multiply(&t, b)
    }

    /// Evaluates a group word; the result is taken modulo `gamma_{cap+1}`.
    pub fn evaluate(&self, word: &Word) -> Result<GroupElement<E>, EngineError> {
        Ok(self.wrap(self.evaluate_coords(word)?))
    }

    fn evaluate_coords(&self, word: &Word) -> Result<Coords<E>, EngineError> {
        Ok(match word {
            Word::Gen(i) => self.generator(*i)?.into_map(),
            Word::Pow(w, k) => {
                let inner = self.evaluate_coords(w)?;
                self.power_coords(&inner, E::from_i64(*k).expect("exponent type holds i64"))
            }
            Word::Comm(a, b) => {
                let a = self.evaluate_coords(a)?;
                let b = self.evaluate_coords(b)?;
                self.commutator_coords(&a, &b)
            }
            Word::Product(items) => {
                let mut out = BTreeMap::new();
                for w in items {
                    let x = self.evaluate_coords(w)?;
                    self.mul_coords(&mut out, &x);
                }
                out
            }
        })
    }

    /// Re-expresses an element of a higher-cap engine on the same alphabet by
    /// discarding the coordinates above this engine's cap. The lower basis is
    /// a prefix of the higher one, so positions carry over unchanged.
    pub fn project(&self, a: &GroupElement<E>) -> Result<GroupElement<E>, EngineError> {
        if a.basis().alphabet_size() != self.basis.alphabet_size() || a.basis().class_cap() < self.class_cap() {
            return Err(EngineError::BasisMismatch);
        }
        Ok(self.wrap(a.truncate(self.class_cap())))
    }
}
