//! Descriptions of `Z_c(H)` and of the marginal subgroup `V*(H)` for
//! `H = Z * ... * Z * Z_r1 * ... * Z_rt` of degree `c + n`, and the
//! sufficient condition for `[N_c1, N_c2]`-capability that follows from them.
//!
//! The verdict is deliberately two-valued: the criterion is sufficient only,
//! so a group outside its clauses is reported as [`Verdict::Unknown`], never
//! as not capable.

use std::fmt;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::group::GroupSpec;
use crate::hall::{reduce_mod_torsion, EngineError, HallEngine, Word};
use crate::multiplier::{coprimality_check, divisibility_check, Hypothesis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CapabilityError {
    #[error("hypotheses failed: {}", .0.iter().filter(|h| !h.passed).map(|h| format!("{} ({})", h.name, h.detail)).collect::<Vec<_>>().join("; "))]
    Hypotheses(Vec<Hypothesis>),
    #[error("degree {degree} of H must exceed c = {c}")]
    DegreeTooSmall { degree: u32, c: u32 },
    #[error("parameters must be positive: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Which of the three cases of the description applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FreeRankCase {
    None,
    One,
    AtLeastTwo,
}

impl FreeRankCase {
    pub fn of(spec: &GroupSpec) -> Self {
        match spec.m {
            0 => FreeRankCase::None,
            1 => FreeRankCase::One,
            _ => FreeRankCase::AtLeastTwo,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            FreeRankCase::None => "m=0",
            FreeRankCase::One => "m=1",
            FreeRankCase::AtLeastTwo => "m>=2",
        }
    }
}

/// A power of a generator of `H` adjoined to `gamma_{n+1}(H)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtraGenerator {
    /// `"x1"` for the first torsion letter when `m = 0`, `"y1"` for the
    /// single infinite cyclic letter when `m = 1`.
    pub name: &'static str,
    /// Index of the letter in the generating alphabet of `H`.
    pub index: u32,
    pub exponent: u64,
}

/// `<gamma_{n+1}(H), extra_generators>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupDescriptor {
    /// Lower central term index: the base is `gamma_{n+1}(H)`.
    pub n: u32,
    pub extra_generators: Vec<ExtraGenerator>,
    pub case: FreeRankCase,
    pub notes: Vec<String>,
}

impl SubgroupDescriptor {
    pub fn base(&self) -> String {
        format!("gamma_{}(H)", self.n + 1)
    }
}

impl fmt::Display for SubgroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.extra_generators.is_empty() {
            return write!(f, "{}", self.base());
        }
        let extras: Vec<String> = self.extra_generators.iter().map(|g| format!("{}^{}", g.name, g.exponent)).collect();
        write!(f, "<{}, {}>", self.base(), extras.join(", "))
    }
}

/// Checks shared by the descriptions: divisibility chain and every prime
/// `< bound` coprime to `r_1`.
fn description_checks(spec: &GroupSpec, bound: u32) -> Vec<Hypothesis> {
    vec![
        divisibility_check(spec),
        coprimality_check("coprime_to_r1_below_c_plus_n", spec, u64::from(bound.saturating_sub(1)), "<="),
    ]
}

fn require(checks: Vec<Hypothesis>) -> Result<Vec<Hypothesis>, CapabilityError> {
    if checks.iter().all(|h| h.passed) {
        Ok(checks)
    } else {
        Err(CapabilityError::Hypotheses(checks))
    }
}

/// `r_j` with the convention `r_{t+1} = 1`: the extra generator then has
/// exponent 1, which matches `H` being cyclic in those degenerate cases.
fn r_or_one(spec: &GroupSpec, j: u32) -> u64 {
    spec.r(j).unwrap_or(1)
}

fn describe(spec_h: &GroupSpec, c: u32) -> Result<SubgroupDescriptor, CapabilityError> {
    if c == 0 {
        return Err(CapabilityError::BadParameter("c = 0".to_string()));
    }
    if spec_h.n <= c {
        return Err(CapabilityError::DegreeTooSmall { degree: spec_h.n, c });
    }
    require(description_checks(spec_h, spec_h.n))?;
    let n = spec_h.n - c;
    let case = FreeRankCase::of(spec_h);
    let (extra_generators, notes) = match case {
        FreeRankCase::None => (
            vec![ExtraGenerator { name: "x1", index: 1, exponent: r_or_one(spec_h, 2) }],
            Vec::new(),
        ),
        FreeRankCase::One => (
            vec![ExtraGenerator { name: "y1", index: 1, exponent: r_or_one(spec_h, 1) }],
            vec!["y1 is read as the single infinite cyclic generator".to_string()],
        ),
        FreeRankCase::AtLeastTwo => (Vec::new(), Vec::new()),
    };
    Ok(SubgroupDescriptor { n, extra_generators, case, notes })
}

/// `Z_c(H)` for `H` given with its full degree `c + n`.
pub fn c_center_descriptor(spec_h: &GroupSpec, c: u32) -> Result<SubgroupDescriptor, CapabilityError> {
    describe(spec_h, c)
}

/// `V*(H)` for the variety `[N_c1, N_c2]`; it has the same description as
/// `Z_c(H)` with `c = c1 + c2 + 1`.
pub fn verbal_center_descriptor(spec_h: &GroupSpec, c1: u32, c2: u32) -> Result<SubgroupDescriptor, CapabilityError> {
    if c1 == 0 || c2 == 0 {
        return Err(CapabilityError::BadParameter(format!("c1 = {c1}, c2 = {c2}")));
    }
    describe(spec_h, c1 + c2 + 1)
}

/// `H`: the same factors as `G` at degree `c1 + c2 + 1 + n`.
pub fn cover_spec(spec: &GroupSpec, c1: u32, c2: u32) -> GroupSpec {
    spec.with_degree(c1 + c2 + 1 + spec.n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Capable,
    Unknown,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Capable => "Capable",
            Verdict::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CapabilityVerdict {
    pub verdict: Verdict,
    /// The clause that fired, verbatim, or `"no clause fires"`.
    pub witness: &'static str,
    pub hypotheses: Vec<Hypothesis>,
}

/// Hypothesis checks of the capability criterion. The strict bound
/// `p < c + n` is the one required; the multiplier bound `p <= c1 + c2 + n`
/// is evaluated and reported alongside it.
pub fn capability_hypotheses(spec: &GroupSpec, c1: u32, c2: u32) -> Vec<Hypothesis> {
    let c_plus_n = c1 + c2 + 1 + spec.n;
    vec![
        divisibility_check(spec),
        coprimality_check("coprime_to_r1_below_c_plus_n", spec, u64::from(c_plus_n - 1), "<="),
        coprimality_check("coprime_to_r1_up_to_c1_c2_n", spec, u64::from(c1 + c2 + spec.n), "<="),
    ]
}

pub fn is_capable(spec: &GroupSpec, c1: u32, c2: u32) -> Result<CapabilityVerdict, CapabilityError> {
    if c1 == 0 || c2 == 0 {
        return Err(CapabilityError::BadParameter(format!("c1 = {c1}, c2 = {c2}")));
    }
    let hypotheses = capability_hypotheses(spec, c1, c2);
    if !hypotheses[..2].iter().all(|h| h.passed) {
        return Err(CapabilityError::Hypotheses(hypotheses));
    }
    let (verdict, witness) = if spec.m >= 2 {
        (Verdict::Capable, "m≥2")
    } else if spec.m == 0 && spec.t() >= 2 && spec.r(1) == spec.r(2) {
        (Verdict::Capable, "m=0 ∧ r_1=r_2")
    } else {
        (Verdict::Unknown, "no clause fires")
    };
    Ok(CapabilityVerdict { verdict, witness, hypotheses })
}

/// Evaluates `[g^e, h_1, ..., h_c1, [h'_1, ..., h'_{c2+1}]]`, with `g^e` the
/// extra generator of the `V*(H)` description and all `h`, `h'` letters of
/// `H`, in the free nilpotent group of class `c1 + c2 + 2`, reduces it modulo
/// torsion, and checks that it vanishes. Every tuple is tried when there are
/// at most `samples` of them; otherwise `samples` tuples are drawn with a
/// fixed seed.
pub fn power_absorption_check(spec_h: &GroupSpec, c1: u32, c2: u32, samples: usize) -> Result<bool, CapabilityError> {
    power_absorption_check_seeded(spec_h, c1, c2, samples, 0x5eed)
}

pub fn power_absorption_check_seeded(
    spec_h: &GroupSpec,
    c1: u32,
    c2: u32,
    samples: usize,
    seed: u64,
) -> Result<bool, CapabilityError> {
    let descriptor = verbal_center_descriptor(spec_h, c1, c2)?;
    let Some(extra) = descriptor.extra_generators.first() else {
        // V*(H) = gamma_{n+1}(H): nothing beyond the lower central term to check
        return Ok(true);
    };
    if samples == 0 {
        return Ok(true);
    }
    let cap = c1 + c2 + 2;
    let engine = HallEngine::<BigInt>::new(spec_h.alphabet_size(), cap)?;
    let exponent = i64::try_from(extra.exponent).map_err(|_| CapabilityError::BadParameter(format!("exponent {} too large", extra.exponent)))?;
    let letters = spec_h.alphabet_size();
    let slots = (c1 + c2 + 1) as usize;
    let total = (letters as u128).checked_pow(slots as u32).unwrap_or(u128::MAX);

    let check = |choice: &[u32]| -> Result<bool, CapabilityError> {
        let (hs, inner) = choice.split_at(c1 as usize);
        let inner = Word::left_normed(inner.iter().map(|&i| Word::gen(i))).expect("c2 + 1 >= 2 letters");
        let word = Word::left_normed(
            std::iter::once(Word::gen(extra.index).pow(exponent))
                .chain(hs.iter().map(|&i| Word::gen(i)))
                .chain(std::iter::once(inner)),
        )
        .expect("nonempty");
        let value = engine.evaluate(&word)?;
        Ok(reduce_mod_torsion(&value, spec_h)?.is_identity())
    };

    if total <= samples as u128 {
        let mut choice = vec![1u32; slots];
        loop {
            if !check(&choice)? {
                return Ok(false);
            }
            // odometer over {1..letters}^slots
            let Some(pos) = choice.iter().rposition(|&x| x < letters) else {
                return Ok(true);
            };
            choice[pos] += 1;
            choice[pos + 1..].iter_mut().for_each(|x| *x = 1);
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let choice: Vec<u32> = (0..slots).map(|_| rng.gen_range(1..=letters)).collect();
        if !check(&choice)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(m: u32, r: &[u64], n: u32) -> GroupSpec {
        GroupSpec::new(m, r.to_vec(), n).unwrap()
    }

    #[test]
    fn center_descriptions() {
        let d = c_center_descriptor(&spec(0, &[25, 5], 4), 3).unwrap();
        assert_eq!(d.case, FreeRankCase::None);
        assert_eq!(d.to_string(), "<gamma_2(H), x1^5>");
        let d = c_center_descriptor(&spec(1, &[25], 4), 3).unwrap();
        assert_eq!(d.to_string(), "<gamma_2(H), y1^25>");
        assert_eq!(d.notes.len(), 1);
        let d = c_center_descriptor(&spec(3, &[], 4), 3).unwrap();
        assert_eq!(d.to_string(), "gamma_2(H)");
        assert!(d.extra_generators.is_empty());
    }

    #[test]
    fn verbal_matches_center() {
        for (m, r) in [(0u32, vec![25u64, 25]), (0, vec![49, 7]), (1, vec![25]), (2, vec![11]), (3, vec![])] {
            let h = spec(m, &r, 5);
            assert_eq!(verbal_center_descriptor(&h, 1, 1).unwrap(), c_center_descriptor(&h, 3).unwrap());
        }
    }

    #[test]
    fn description_hypotheses() {
        // c + n = 4: primes 2 and 3 must be coprime to r_1
        assert!(matches!(c_center_descriptor(&spec(0, &[6, 6], 4), 3), Err(CapabilityError::Hypotheses(_))));
        // c + n = 5: 5 itself is not below the bound, but it is below 6
        assert!(c_center_descriptor(&spec(0, &[5, 5], 5), 3).is_ok());
        assert!(matches!(c_center_descriptor(&spec(0, &[5, 5], 6), 3), Err(CapabilityError::Hypotheses(_))));
        assert!(matches!(c_center_descriptor(&spec(0, &[25, 5], 3), 3), Err(CapabilityError::DegreeTooSmall { .. })));
        assert!(matches!(c_center_descriptor(&spec(0, &[25, 7], 5), 3), Err(CapabilityError::Hypotheses(_))));
    }

    #[test]
    fn verdict_examples() {
        let v = is_capable(&spec(2, &[11], 2), 3, 3).unwrap();
        assert_eq!((v.verdict, v.witness), (Verdict::Capable, "m≥2"));
        let v = is_capable(&spec(0, &[25, 25], 1), 1, 1).unwrap();
        assert_eq!((v.verdict, v.witness), (Verdict::Capable, "m=0 ∧ r_1=r_2"));
        let v = is_capable(&spec(1, &[25], 1), 1, 1).unwrap();
        assert_eq!(v.verdict, Verdict::Unknown);
        let v = is_capable(&spec(0, &[25, 5], 1), 1, 1).unwrap();
        assert_eq!(v.verdict, Verdict::Unknown);
        assert!(matches!(is_capable(&spec(2, &[3], 1), 1, 1), Err(CapabilityError::Hypotheses(_))));
    }

    #[test]
    fn verdict_monotone_in_m() {
        for m in 2..6 {
            for r in [vec![], vec![11], vec![121, 11]] {
                assert_eq!(is_capable(&spec(m, &r, 2), 2, 2).unwrap().verdict, Verdict::Capable);
                assert_eq!(is_capable(&spec(m + 1, &r, 2), 2, 2).unwrap().verdict, Verdict::Capable);
            }
        }
    }

    #[test]
    fn both_prime_bounds_are_reported() {
        let v = is_capable(&spec(2, &[11], 2), 3, 3).unwrap();
        let names: Vec<_> = v.hypotheses.iter().map(|h| h.name).collect();
        assert_eq!(names, ["divisibility_chain", "coprime_to_r1_below_c_plus_n", "coprime_to_r1_up_to_c1_c2_n"]);
        for spec in [spec(2, &[7], 1), spec(2, &[11], 3), spec(0, &[13, 13], 4)] {
            let checks = capability_hypotheses(&spec, 2, 3);
            assert_eq!(checks[1].passed, checks[2].passed, "{spec}");
        }
    }

    #[test]
    fn quotient_recovers_parameters() {
        let g = spec(0, &[25, 25], 1);
        let h = cover_spec(&g, 1, 1);
        assert_eq!(h.n, 4);
        let d = verbal_center_descriptor(&h, 1, 1).unwrap();
        assert_eq!(h.with_degree(d.n), g);
    }

    #[test]
    fn power_absorption_examples() {
        let h = cover_spec(&spec(0, &[25, 25], 1), 1, 1);
        assert!(power_absorption_check(&h, 1, 1, 1000).unwrap());
        assert!(power_absorption_check(&h, 1, 1, 0).unwrap());
        // sampled rather than exhaustive
        assert!(power_absorption_check(&h, 1, 1, 3).unwrap());
        let h = cover_spec(&spec(0, &[49, 7], 1), 1, 1);
        assert!(power_absorption_check(&h, 1, 1, 1000).unwrap());
        let h = cover_spec(&spec(1, &[25], 1), 1, 1);
        assert!(power_absorption_check(&h, 1, 1, 1000).unwrap());
        assert!(matches!(
            power_absorption_check(&cover_spec(&spec(0, &[6, 6], 1), 1, 1), 1, 1, 10),
            Err(CapabilityError::Hypotheses(_))
        ));
    }

    #[test]
    fn absorption_is_not_vacuous_on_three_letters() {
        let h = cover_spec(&spec(0, &[25, 25, 25], 1), 1, 1);
        assert!(power_absorption_check(&h, 1, 1, 1000).unwrap());

        // on two letters every such word is trivial, since [x1,x2] commutes
        // with [x2,x1]; on three letters x1^5 leaves a residue mod 25
        let engine = HallEngine::<BigInt>::new(3, 4).unwrap();
        let word = |e: i64| {
            Word::left_normed([
                Word::gen(1).pow(e),
                Word::gen(2),
                Word::left_normed([Word::gen(3), Word::gen(1)]).unwrap(),
            ])
            .unwrap()
        };
        let residue = reduce_mod_torsion(&engine.evaluate(&word(5)).unwrap(), &h).unwrap();
        assert!(!residue.is_identity());
        let absorbed = reduce_mod_torsion(&engine.evaluate(&word(25)).unwrap(), &h).unwrap();
        assert!(absorbed.is_identity());
    }
}
