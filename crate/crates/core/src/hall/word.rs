use std::fmt;

use crate::commutator::Commutator;

/// A group word built from generators, integer powers, commutators and
/// products. Used for outer commutators such as `[x1^25, x2, [x1, x2]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    Gen(u32),
    Pow(Box<Word>, i64),
    Comm(Box<Word>, Box<Word>),
    Product(Vec<Word>),
}

impl Word {
    pub fn gen(index: u32) -> Self {
        Word::Gen(index)
    }

    pub fn pow(self, k: i64) -> Self {
        Word::Pow(Box::new(self), k)
    }

    pub fn comm(a: Word, b: Word) -> Self {
        Word::Comm(Box::new(a), Box::new(b))
    }

    /// `[w1, w2, ..., wk]` bracketed to the left.
    pub fn left_normed(items: impl IntoIterator<Item = Word>) -> Option<Self> {
        let mut it = items.into_iter();
        let first = it.next()?;
        Some(it.fold(first, Word::comm))
    }

    pub fn from_commutator(c: &Commutator) -> Self {
        match c.children() {
            None => Word::Gen(c.as_letter().expect("leaf")),
            Some((l, r)) => Word::comm(Word::from_commutator(l), Word::from_commutator(r)),
        }
    }

    /// Every bracketing of every sequence of `weight` letters drawn from
    /// `letters`: all outer commutator shapes of that weight.
    pub fn outer_commutators(letters: &[u32], weight: u32) -> Vec<Word> {
        if weight == 0 {
            return Vec::new();
        }
        if weight == 1 {
            return letters.iter().map(|&i| Word::Gen(i)).collect();
        }
        let mut out = Vec::new();
        for left in 1..weight {
            let lhs = Word::outer_commutators(letters, left);
            let rhs = Word::outer_commutators(letters, weight - left);
            for a in &lhs {
                out.extend(rhs.iter().map(|b| Word::comm(a.clone(), b.clone())));
            }
        }
        out
    }

    /// Commutator weight: generators and their powers count 1, brackets add,
    /// products take the smallest factor weight.
    pub fn weight(&self) -> u32 {
        match self {
            Word::Gen(_) => 1,
            Word::Pow(w, _) => w.weight(),
            Word::Comm(a, b) => a.weight() + b.weight(),
            Word::Product(items) => items.iter().map(Word::weight).min().unwrap_or(0),
        }
    }

    /// Generator indices occurring in the word, sorted and deduplicated.
    pub fn generators(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect(&self, out: &mut Vec<u32>) {
        match self {
            Word::Gen(i) => out.push(*i),
            Word::Pow(w, _) => w.collect(out),
            Word::Comm(a, b) => {
                a.collect(out);
                b.collect(out);
            }
            Word::Product(items) => items.iter().for_each(|w| w.collect(out)),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Gen(i) => write!(f, "x{i}"),
            Word::Pow(w, k) => write!(f, "{w}^{k}"),
            Word::Comm(a, b) => write!(f, "[{a},{b}]"),
            Word::Product(items) => {
                let parts: Vec<String> = items.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(" "))
            }
        }
    }
}
