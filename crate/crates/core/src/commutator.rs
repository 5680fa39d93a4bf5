//! Commutator trees over the ordered alphabet `x1 < x2 < ...`, the Hall order
//! on them, and the inductive construction of basic commutators.
//!
//! The order puts lower weight first; within a weight, letters compare by
//! index and brackets compare lexicographically by `(left, right)`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::group::GroupSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseCommutatorError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unexpected character {0:?} at offset {1}")]
    Unexpected(char, usize),
    #[error("letter index must be a positive integer")]
    BadIndex,
    #[error("a bracket needs at least two entries")]
    ShortBracket,
}

#[derive(Debug, PartialEq, Eq, Hash)]
enum Term {
    Letter(u32),
    Bracket { left: Commutator, right: Commutator, weight: u32 },
}

/// An immutable commutator tree. `[b, a]` is stored as a bracket with
/// `left = b`, `right = a`; the weight is cached at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Commutator(Arc<Term>);

/// Trees produced by [`generate_basic`] and [`Commutator::basic`] satisfy
/// [`Commutator::is_basic`].
pub type BasicCommutator = Commutator;

impl Commutator {
    pub fn letter(index: u32) -> Self {
        assert!(index >= 1, "letters are numbered from 1");
        Commutator(Arc::new(Term::Letter(index)))
    }

    /// `[left, right]` with no basic-ness check.
    pub fn bracket(left: Commutator, right: Commutator) -> Self {
        let weight = left.weight() + right.weight();
        Commutator(Arc::new(Term::Bracket { left, right, weight }))
    }

    /// `[b, a]` if it is a basic commutator, given that `b` and `a` are.
    pub fn basic(b: Commutator, a: Commutator) -> Option<Self> {
        let ok = b > a && b.right().is_none_or(|b2| b2 <= &a);
        ok.then(|| Commutator::bracket(b, a))
    }

    /// `[c1, c2, ..., ck] = [[...[c1, c2], ...], ck]`.
    pub fn left_normed(items: &[Commutator]) -> Option<Self> {
        let (first, rest) = items.split_first()?;
        Some(rest.iter().fold(first.clone(), |acc, c| Commutator::bracket(acc, c.clone())))
    }

    pub fn weight(&self) -> u32 {
        match &*self.0 {
            Term::Letter(_) => 1,
            Term::Bracket { weight, .. } => *weight,
        }
    }

    pub fn as_letter(&self) -> Option<u32> {
        match &*self.0 {
            Term::Letter(i) => Some(*i),
            Term::Bracket { .. } => None,
        }
    }

    pub fn children(&self) -> Option<(&Commutator, &Commutator)> {
        match &*self.0 {
            Term::Letter(_) => None,
            Term::Bracket { left, right, .. } => Some((left, right)),
        }
    }

    pub fn left(&self) -> Option<&Commutator> {
        self.children().map(|(l, _)| l)
    }

    pub fn right(&self) -> Option<&Commutator> {
        self.children().map(|(_, r)| r)
    }

    /// Every bracket `[b, a]` in the tree has `b > a`, and `b2 <= a` whenever
    /// `b = [b1, b2]`.
    pub fn is_basic(&self) -> bool {
        match self.children() {
            None => true,
            Some((b, a)) => {
                b.is_basic()
                    && a.is_basic()
                    && b > a
                    && b.right().is_none_or(|b2| b2 <= a)
            }
        }
    }

    /// Indices of the letters occurring in the tree.
    pub fn generators_in(&self) -> BTreeSet<u32> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut BTreeSet<u32>) {
        match &*self.0 {
            Term::Letter(i) => {
                out.insert(*i);
            }
            Term::Bracket { left, right, .. } => {
                left.collect_letters(out);
                right.collect_letters(out);
            }
        }
    }

    pub fn max_letter(&self) -> u32 {
        match &*self.0 {
            Term::Letter(i) => *i,
            Term::Bracket { left, right, .. } => left.max_letter().max(right.max_letter()),
        }
    }

    /// Largest `j` such that the torsion generator `x_{m+j}` occurs.
    pub fn max_torsion_index(&self, spec: &GroupSpec) -> Option<u32> {
        spec.torsion_index(self.max_letter())
    }
}

impl Ord for Commutator {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.weight().cmp(&other.weight()).then_with(|| match (&*self.0, &*other.0) {
            (Term::Letter(a), Term::Letter(b)) => a.cmp(b),
            (Term::Letter(_), Term::Bracket { .. }) => Ordering::Less,
            (Term::Bracket { .. }, Term::Letter(_)) => Ordering::Greater,
            (
                Term::Bracket { left: l1, right: r1, .. },
                Term::Bracket { left: l2, right: r2, .. },
            ) => l1.cmp(l2).then_with(|| r1.cmp(r2)),
        })
    }
}

impl PartialOrd for Commutator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Commutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Term::Letter(i) => write!(f, "x{i}"),
            Term::Bracket { left, right, .. } => write!(f, "[{left},{right}]"),
        }
    }
}

impl fmt::Debug for Commutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Commutator {
    type Err = ParseCommutatorError;

    /// Accepts `x3`, `[x2,x1]` and the left-normed shorthand `[x2,x1,x1]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let chars: Vec<(usize, char)> = s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_term(&chars, &mut pos)?;
        match chars.get(pos) {
            None => Ok(tree),
            Some(&(at, c)) => Err(ParseCommutatorError::Unexpected(c, at)),
        }
    }
}

fn parse_term(chars: &[(usize, char)], pos: &mut usize) -> Result<Commutator, ParseCommutatorError> {
    let &(at, c) = chars.get(*pos).ok_or(ParseCommutatorError::UnexpectedEnd)?;
    match c {
        'x' => {
            *pos += 1;
            let start = *pos;
            while chars.get(*pos).is_some_and(|(_, c)| c.is_ascii_digit()) {
                *pos += 1;
            }
            let digits: String = chars[start..*pos].iter().map(|(_, c)| c).collect();
            match digits.parse::<u32>() {
                Ok(i) if i >= 1 => Ok(Commutator::letter(i)),
                _ => Err(ParseCommutatorError::BadIndex),
            }
        }
        '[' => {
            *pos += 1;
            let mut items = vec![parse_term(chars, pos)?];
            loop {
                let &(at, c) = chars.get(*pos).ok_or(ParseCommutatorError::UnexpectedEnd)?;
                *pos += 1;
                match c {
                    ',' => items.push(parse_term(chars, pos)?),
                    ']' => break,
                    _ => return Err(ParseCommutatorError::Unexpected(c, at)),
                }
            }
            if items.len() < 2 {
                return Err(ParseCommutatorError::ShortBracket);
            }
            Ok(Commutator::left_normed(&items).expect("nonempty"))
        }
        _ => Err(ParseCommutatorError::Unexpected(c, at)),
    }
}

/// Basic commutators on `alphabet_size` letters grouped by weight: entry
/// `w - 1` holds weight `w`, sorted by the Hall order.
pub fn basic_by_weight(alphabet_size: u32, max_weight: u32) -> Vec<Vec<BasicCommutator>> {
    let mut levels: Vec<Vec<BasicCommutator>> = Vec::with_capacity(max_weight as usize);
    for w in 1..=max_weight {
        let mut level = Vec::new();
        if w == 1 {
            level.extend((1..=alphabet_size).map(Commutator::letter));
        } else {
            // [b, a] with b > a forces wt(b) >= wt(a)
            for wa in 1..=w / 2 {
                let wb = w - wa;
                for b in &levels[wb as usize - 1] {
                    for a in &levels[wa as usize - 1] {
                        if let Some(c) = Commutator::basic(b.clone(), a.clone()) {
                            level.push(c);
                        }
                    }
                }
            }
            level.sort();
        }
        levels.push(level);
    }
    levels
}

/// All basic commutators with weight in `[min_weight, max_weight]`, in Hall
/// order.
pub fn generate_basic(alphabet_size: u32, min_weight: u32, max_weight: u32) -> Vec<BasicCommutator> {
    let min_weight = min_weight.max(1);
    if min_weight > max_weight {
        return Vec::new();
    }
    basic_by_weight(alphabet_size, max_weight)
        .into_iter()
        .skip(min_weight as usize - 1)
        .flatten()
        .collect()
}
