//! The `[N_c1, N_c2]`-multiplier of an `n`-th nilpotent product of cyclic
//! groups `Z * ... * Z * Z_r1 * ... * Z_rt` (divisibility chain
//! `r_{i+1} | r_i`).
//!
//! The multiplier is free abelian on the pairs `[beta, alpha]` of basic
//! commutators in `A - C`, except that a pair whose highest torsion generator
//! is `x_{m+k}` only generates a copy of `Z_{r_k}`. [`MultiplierQuery`]
//! enumerates those sets and counts them; it also evaluates the closed-form
//! rank formulas verbatim so that the two can be compared.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{choose_two, primes_up_to, witt_chi, witt_sum};
use crate::commutator::{basic_by_weight, BasicCommutator, Commutator};
use crate::group::GroupSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultiplierError {
    #[error("hypotheses failed: {}", failed_summary(.0))]
    Hypotheses(Vec<Hypothesis>),
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("parameters must be positive: {0}")]
    BadParameter(String),
}

fn failed_summary(checks: &[Hypothesis]) -> String {
    checks
        .iter()
        .filter(|h| !h.passed)
        .map(|h| format!("{} ({})", h.name, h.detail))
        .collect::<Vec<_>>()
        .join("; ")
}

/// One named hypothesis check with the values it was evaluated on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Hypothesis {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Hypothesis { name, passed, detail }
    }
}

/// Primes up to `bound` dividing `r_1`, or a passing check when there is no
/// torsion.
pub(crate) fn coprimality_check(name: &'static str, spec: &GroupSpec, bound: u64, relation: &str) -> Hypothesis {
    let Some(r1) = spec.r(1) else {
        return Hypothesis::new(name, true, "no torsion factors".to_string());
    };
    let bad: Vec<u64> = primes_up_to(bound).into_iter().filter(|p| r1 % p == 0).collect();
    let detail = match bad.as_slice() {
        [] => format!("every prime {relation} {bound} is coprime to r_1 = {r1}"),
        [p] => format!("prime {p} divides r_1 = {r1}"),
        ps => format!(
            "primes {} divide r_1 = {r1}",
            ps.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
        ),
    };
    Hypothesis::new(name, bad.is_empty(), detail)
}

pub(crate) fn divisibility_check(spec: &GroupSpec) -> Hypothesis {
    match spec.divisibility_violation() {
        None => Hypothesis::new("divisibility_chain", true, format!("{:?} is a divisibility chain", spec.torsion)),
        Some((hi, lo)) => Hypothesis::new("divisibility_chain", false, format!("{lo} does not divide {hi}")),
    }
}

/// Evaluates every hypothesis of the multiplier structure result; failures are
/// reported, never thrown.
pub fn validate_hypotheses(spec: &GroupSpec, c1: u32, c2: u32) -> Vec<Hypothesis> {
    let n = i64::from(spec.n);
    let (c1i, c2i) = (i64::from(c1), i64::from(c2));
    vec![
        divisibility_check(spec),
        Hypothesis::new("c1_at_least_c2", c1 >= c2, format!("c1 = {c1}, c2 = {c2}")),
        Hypothesis::new(
            "class_covers_degree",
            c1i + c2i + 1 >= n,
            format!("c1 + c2 + 1 = {} vs n = {n}", c1i + c2i + 1),
        ),
        Hypothesis::new(
            "window_gap",
            2 * c2i - c1i > 2 * n - 2,
            format!("2c2 - c1 = {} vs 2n - 2 = {}", 2 * c2i - c1i, 2 * n - 2),
        ),
        coprimality_check("coprime_to_r1", spec, u64::from(c1 + c2 + spec.n), "<="),
    ]
}

/// `[beta, alpha]` with `beta > alpha`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CommutatorPair {
    pub beta: BasicCommutator,
    pub alpha: BasicCommutator,
}

impl CommutatorPair {
    pub fn as_commutator(&self) -> Commutator {
        Commutator::bracket(self.beta.clone(), self.alpha.clone())
    }

    /// Highest torsion index over both components.
    pub fn max_torsion_index(&self, spec: &GroupSpec) -> Option<u32> {
        self.beta.max_torsion_index(spec).max(self.alpha.max_torsion_index(spec))
    }
}

impl fmt::Display for CommutatorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.beta, self.alpha)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionSummand {
    pub modulus: u64,
    pub multiplicity: BigUint,
}

/// `Z^free_rank + Z_{r_1}^{mult_1} + ... + Z_{r_t}^{mult_t}`, one torsion
/// entry per `k = 1..t` even when its multiplicity is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierStructure {
    pub free_rank: BigUint,
    pub torsion: Vec<TorsionSummand>,
}

impl MultiplierStructure {
    pub fn is_trivial(&self) -> bool {
        self.free_rank.is_zero() && self.torsion.iter().all(|s| s.multiplicity.is_zero())
    }

    /// Total number of cyclic summands.
    pub fn total_summands(&self) -> BigUint {
        self.torsion.iter().fold(self.free_rank.clone(), |acc, s| acc + &s.multiplicity)
    }
}

impl fmt::Display for MultiplierStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.free_rank.is_zero() {
            parts.push(format!("Z^{}", self.free_rank));
        }
        for s in self.torsion.iter().filter(|s| !s.multiplicity.is_zero()) {
            parts.push(format!("Z_{}^{}", s.modulus, s.multiplicity));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Enumerated,
    Printed,
    Both,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Enumerated => "enumerated",
            Mode::Printed => "printed",
            Mode::Both => "both",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    /// `"free_rank"` or `"torsion[k]"`.
    pub component: String,
    pub enumerated: BigUint,
    pub printed: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankReport {
    pub spec: GroupSpec,
    pub c1: u32,
    pub c2: u32,
    pub mode: Mode,
    pub hypotheses: Vec<Hypothesis>,
    /// Normative structure, counted from the enumeration.
    pub enumerated: Option<MultiplierStructure>,
    /// Closed-form formulas evaluated as printed.
    pub as_printed: Option<MultiplierStructure>,
    /// Components where the printed formulas give a negative value, which
    /// cannot be a multiplicity.
    pub printed_raw: Option<(BigInt, Vec<BigInt>)>,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiplierLimits {
    pub max_pairs: u64,
    pub max_basics: u64,
}

impl Default for MultiplierLimits {
    fn default() -> Self {
        MultiplierLimits { max_pairs: 10_000_000, max_basics: 2_000_000 }
    }
}

/// A validated `(G, c1, c2)`: construction fails unless every hypothesis
/// holds.
#[derive(Debug, Clone)]
pub struct MultiplierQuery {
    spec: GroupSpec,
    c1: u32,
    c2: u32,
    limits: MultiplierLimits,
    hypotheses: Vec<Hypothesis>,
}

/// Inclusive weight window.
type Window = (u32, u32);

impl MultiplierQuery {
    pub fn new(spec: GroupSpec, c1: u32, c2: u32) -> Result<Self, MultiplierError> {
        Self::with_limits(spec, c1, c2, MultiplierLimits::default())
    }

    pub fn with_limits(spec: GroupSpec, c1: u32, c2: u32, limits: MultiplierLimits) -> Result<Self, MultiplierError> {
        if c1 == 0 || c2 == 0 {
            return Err(MultiplierError::BadParameter(format!("c1 = {c1}, c2 = {c2}")));
        }
        let hypotheses = validate_hypotheses(&spec, c1, c2);
        if hypotheses.iter().any(|h| !h.passed) {
            return Err(MultiplierError::Hypotheses(hypotheses));
        }
        Ok(MultiplierQuery { spec, c1, c2, limits, hypotheses })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn hypotheses(&self) -> &[Hypothesis] {
        &self.hypotheses
    }

    fn beta_window(&self) -> Window {
        (self.c1 + 1, self.c1 + self.spec.n)
    }

    fn alpha_window(&self) -> Window {
        (self.c2 + 1, self.c2 + self.spec.n)
    }

    /// True when the weights of `[beta, alpha]` put it in `C`.
    fn weights_in_c(&self, wb: u32, wa: u32) -> bool {
        let n = self.spec.n;
        wb > self.c2 + n && wa > self.c1 && wb + wa <= 2 * n + self.c1 + self.c2 + 1
    }

    /// Window-disjoint case: every alpha weight is below every beta weight.
    pub fn windows_disjoint(&self) -> bool {
        self.c2 + self.spec.n < self.c1 + 1
    }

    fn basics(&self) -> Result<Vec<Vec<BasicCommutator>>, MultiplierError> {
        let d = self.spec.alphabet_size();
        let top = self.beta_window().1.max(self.alpha_window().1);
        let predicted = witt_sum(u64::from(d), 1, i64::from(top));
        if predicted > BigUint::from(self.limits.max_basics) {
            return Err(MultiplierError::ResourceGuard(format!(
                "{predicted} basic commutators of weight <= {top} on {d} letters exceed the limit {}",
                self.limits.max_basics
            )));
        }
        Ok(basic_by_weight(d, top))
    }

    fn window_items(levels: &[Vec<BasicCommutator>], (lo, hi): Window) -> impl Iterator<Item = &BasicCommutator> {
        (lo..=hi).flat_map(move |w| levels[w as usize - 1].iter())
    }

    fn guard_pairs(&self, what: &str) -> Result<(), MultiplierError> {
        let count = self.count_pairs(|_, _| true);
        if count > BigUint::from(self.limits.max_pairs) {
            return Err(MultiplierError::ResourceGuard(format!(
                "{what} would materialize {count} pairs, limit is {}",
                self.limits.max_pairs
            )));
        }
        Ok(())
    }

    // number of pairs in A, by weight buckets, restricted by a weight filter
    fn count_pairs(&self, keep: impl Fn(u32, u32) -> bool) -> BigUint {
        let d = u64::from(self.spec.alphabet_size());
        let (b_lo, b_hi) = self.beta_window();
        let (a_lo, a_hi) = self.alpha_window();
        let mut total = BigUint::zero();
        for wb in b_lo..=b_hi {
            for wa in a_lo..=a_hi.min(wb) {
                if !keep(wb, wa) {
                    continue;
                }
                let nb = witt_chi(wb, d).expect("weight >= 1");
                total += if wa == wb { choose_two(&nb) } else { nb * witt_chi(wa, d).expect("weight >= 1") };
            }
        }
        total
    }

    fn pairs_where(&self, keep: impl Fn(&Self, &BasicCommutator, &BasicCommutator) -> bool) -> Result<Vec<CommutatorPair>, MultiplierError> {
        self.guard_pairs("pair enumeration")?;
        let levels = self.basics()?;
        let mut out = Vec::new();
        for beta in Self::window_items(&levels, self.beta_window()) {
            for alpha in Self::window_items(&levels, self.alpha_window()) {
                if beta > alpha && keep(self, beta, alpha) {
                    out.push(CommutatorPair { beta: beta.clone(), alpha: alpha.clone() });
                }
            }
        }
        Ok(out)
    }

    /// All `[beta, alpha]` with `beta > alpha`, `c1+1 <= wt(beta) <= c1+n`
    /// and `c2+1 <= wt(alpha) <= c2+n`, ordered by `(beta, alpha)`.
    pub fn enumerate_a(&self) -> Result<Vec<CommutatorPair>, MultiplierError> {
        self.pairs_where(|_, _, _| true)
    }

    pub fn enumerate_c(&self) -> Result<Vec<CommutatorPair>, MultiplierError> {
        self.pairs_where(|q, b, a| q.weights_in_c(b.weight(), a.weight()))
    }

    pub fn enumerate_a_minus_c(&self) -> Result<Vec<CommutatorPair>, MultiplierError> {
        self.pairs_where(|q, b, a| !q.weights_in_c(b.weight(), a.weight()))
    }

    /// Pairs of `A - C` involving a torsion generator, each tagged with
    /// `r_j`, `j` the highest torsion index in the pair.
    pub fn enumerate_y(&self) -> Result<Vec<(CommutatorPair, u64)>, MultiplierError> {
        Ok(self
            .enumerate_a_minus_c()?
            .into_iter()
            .filter_map(|p| {
                let j = p.max_torsion_index(&self.spec)?;
                Some((p, self.spec.r(j).expect("index in range")))
            })
            .collect())
    }

    /// `D_1 = {[b, c] : b in D_{c1}, c basic with c2+1 <= wt(c) <= c2+n}`,
    /// as `(b, r_j, c)`.
    pub fn enumerate_d1(&self) -> Result<Vec<(BasicCommutator, u64, BasicCommutator)>, MultiplierError> {
        self.d_products(self.c1, self.alpha_window())
    }

    /// `D_2 = {[b, c] : b in D_{c2}, c basic with c1+1 <= wt(c) <= c1+n}`.
    pub fn enumerate_d2(&self) -> Result<Vec<(BasicCommutator, u64, BasicCommutator)>, MultiplierError> {
        self.d_products(self.c2, self.beta_window())
    }

    fn d_products(&self, c: u32, window: Window) -> Result<Vec<(BasicCommutator, u64, BasicCommutator)>, MultiplierError> {
        let d_c = enumerate_d_c(&self.spec, c, self.spec.n + 1)?;
        let levels = self.basics()?;
        let others: Vec<&BasicCommutator> = Self::window_items(&levels, window).collect();
        let count = d_c.len() as u64 * others.len() as u64;
        if count > self.limits.max_pairs {
            return Err(MultiplierError::ResourceGuard(format!("{count} products exceed the limit {}", self.limits.max_pairs)));
        }
        Ok(d_c
            .iter()
            .flat_map(|(b, r)| others.iter().map(move |o| (b.clone(), *r, (*o).clone())))
            .collect())
    }

    /// Counts the pairs of `A - C` by highest torsion index, from the
    /// enumerated basic commutators. This is the normative structure.
    pub fn ranks_enumerated(&self) -> Result<MultiplierStructure, MultiplierError> {
        let levels = self.basics()?;
        let t = self.spec.t() as usize;
        // cumulative[w][L]: basics of weight w whose torsion index is <= L
        let cumulative: Vec<Vec<BigUint>> = levels
            .iter()
            .map(|level| {
                let mut counts = vec![0u64; t + 1];
                for b in level {
                    counts[b.max_torsion_index(&self.spec).unwrap_or(0) as usize] += 1;
                }
                counts
                    .iter()
                    .scan(0u64, |acc, &c| {
                        *acc += c;
                        Some(BigUint::from(*acc))
                    })
                    .collect()
            })
            .collect();

        let (b_lo, b_hi) = self.beta_window();
        let (a_lo, a_hi) = self.alpha_window();
        let pairs_up_to = |l: usize| -> BigUint {
            let mut total = BigUint::zero();
            for wb in b_lo..=b_hi {
                for wa in a_lo..=a_hi.min(wb) {
                    if self.weights_in_c(wb, wa) {
                        continue;
                    }
                    let nb = &cumulative[wb as usize - 1][l];
                    total += if wa == wb { choose_two(nb) } else { nb * &cumulative[wa as usize - 1][l] };
                }
            }
            total
        };
        let totals: Vec<BigUint> = (0..=t).map(pairs_up_to).collect();
        Ok(MultiplierStructure {
            free_rank: totals[0].clone(),
            torsion: (1..=t)
                .map(|k| TorsionSummand {
                    modulus: self.spec.torsion[k - 1],
                    multiplicity: &totals[k] - &totals[k - 1],
                })
                .collect(),
        })
    }

    /// The closed-form ranks exactly as printed: `(free, [d_1..d_t])`, signed
    /// because nothing forces the printed differences to be nonnegative.
    pub fn ranks_printed_raw(&self) -> (BigInt, Vec<BigInt>) {
        let m = u64::from(self.spec.m);
        let (c1, c2, n) = (i64::from(self.c1), i64::from(self.c2), i64::from(self.spec.n));
        let s1 = |a: u64| BigInt::from(witt_sum(a, c1 + 1, c1 + n));
        let s2 = |a: u64| BigInt::from(witt_sum(a, c2 + 1, c2 + n));
        let low = |a: u64| BigInt::from(witt_sum(a, c2 + 1, c1));
        let overlap = |a: u64| BigInt::from(choose_two(&witt_sum(a, c1 + 1, c2 + n)));
        let disjoint = self.windows_disjoint();

        let mut free = s1(m) * low(m);
        if !disjoint {
            free += overlap(m);
        }
        let torsion = (1..=u64::from(self.spec.t()))
            .map(|k| {
                let (hi, lo) = (m + k + 1, m + k);
                let mut d = (s1(hi) - s1(lo)) * s2(lo) + s1(lo) * (s2(hi) - s2(lo));
                if !disjoint {
                    d += overlap(hi) - overlap(lo);
                }
                d
            })
            .collect();
        (free, torsion)
    }

    /// [`Self::ranks_printed_raw`] as a structure; a negative printed value
    /// is clamped to zero and always shows up as a discrepancy.
    pub fn ranks_printed(&self) -> MultiplierStructure {
        let (free, torsion) = self.ranks_printed_raw();
        let clamp = |x: &BigInt| if x.is_negative() { BigUint::zero() } else { x.magnitude().clone() };
        MultiplierStructure {
            free_rank: clamp(&free),
            torsion: torsion
                .iter()
                .zip(&self.spec.torsion)
                .map(|(d, &r)| TorsionSummand { modulus: r, multiplicity: clamp(d) })
                .collect(),
        }
    }

    pub fn multiplier_structure(&self, mode: Mode) -> Result<RankReport, MultiplierError> {
        let enumerated = match mode {
            Mode::Enumerated | Mode::Both => Some(self.ranks_enumerated()?),
            Mode::Printed => None,
        };
        let printed_raw = match mode {
            Mode::Printed | Mode::Both => Some(self.ranks_printed_raw()),
            Mode::Enumerated => None,
        };
        let as_printed = printed_raw.as_ref().map(|_| self.ranks_printed());
        let mut discrepancies = Vec::new();
        if let (Some(e), Some((free, torsion))) = (&enumerated, &printed_raw) {
            if BigInt::from(e.free_rank.clone()) != *free {
                discrepancies.push(Discrepancy {
                    component: "free_rank".to_string(),
                    enumerated: e.free_rank.clone(),
                    printed: free.clone(),
                });
            }
            for (k, (s, p)) in e.torsion.iter().zip(torsion).enumerate() {
                if BigInt::from(s.multiplicity.clone()) != *p {
                    discrepancies.push(Discrepancy {
                        component: format!("torsion[{}]", k + 1),
                        enumerated: s.multiplicity.clone(),
                        printed: p.clone(),
                    });
                }
            }
        }
        Ok(RankReport {
            spec: self.spec.clone(),
            c1: self.c1,
            c2: self.c2,
            mode,
            hypotheses: self.hypotheses.clone(),
            enumerated,
            as_printed,
            printed_raw,
            discrepancies,
        })
    }

    /// `|A - C|` from the counting identity
    /// `S(c1+1, c1+n) * S(c2+1, c1) + chi_2(S(c1+1, c2+n))` on the full
    /// alphabet, valid when the windows overlap.
    pub fn a_minus_c_identity(&self) -> BigUint {
        let d = u64::from(self.spec.alphabet_size());
        let (c1, c2, n) = (i64::from(self.c1), i64::from(self.c2), i64::from(self.spec.n));
        witt_sum(d, c1 + 1, c1 + n) * witt_sum(d, c2 + 1, c1) + choose_two(&witt_sum(d, c1 + 1, c2 + n))
    }

    /// `|A - C|` counted by weight buckets, without materializing pairs.
    pub fn count_a_minus_c(&self) -> BigUint {
        self.count_pairs(|wb, wa| !self.weights_in_c(wb, wa))
    }

    pub fn count_a(&self) -> BigUint {
        self.count_pairs(|_, _| true)
    }
}

/// `D_c`: basic commutators `b` of weight `c+1 ..= c+l-1` on
/// `x_1..x_{m+j}` in which `x_{m+j}` occurs, each paired with `r_j`.
pub fn enumerate_d_c(spec: &GroupSpec, c: u32, l: u32) -> Result<Vec<(BasicCommutator, u64)>, MultiplierError> {
    if c == 0 || l == 0 {
        return Err(MultiplierError::BadParameter(format!("c = {c}, l = {l}")));
    }
    let checks = vec![
        divisibility_check(spec),
        coprimality_check("coprime_to_r1", spec, u64::from(l - 1), "<="),
    ];
    if checks.iter().any(|h| !h.passed) {
        return Err(MultiplierError::Hypotheses(checks));
    }
    if l < 2 {
        return Ok(Vec::new());
    }
    let top = c + l - 1;
    let levels = basic_by_weight(spec.alphabet_size(), top);
    Ok(levels[c as usize..top as usize]
        .iter()
        .flatten()
        .filter_map(|b| {
            let j = b.max_torsion_index(spec)?;
            Some((b.clone(), spec.r(j).expect("index in range")))
        })
        .collect())
}

impl RankReport {
    /// Number of discrepancies, as a convenience for callers that only care
    /// whether the printed formulas agree.
    pub fn agrees(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn printed_value(&self, k: usize) -> Option<i128> {
        self.printed_raw.as_ref().and_then(|(f, t)| if k == 0 { f.to_i128() } else { t.get(k - 1)?.to_i128() })
    }
}
