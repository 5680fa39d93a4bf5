//! Oracle suites behind the `verify` subcommand. Each suite checks one family
//! of identities against an independent computation and reports every
//! failing case.

use num_bigint::BigUint;

use crate::arith::witt_chi;
use crate::capability::{cover_spec, power_absorption_check};
use crate::commutator::generate_basic;
use crate::group::GroupSpec;
use crate::hall::{section_rank_check, struik_order_check, verify_hall_ranks, EngineError, StruikOutcome, Word};
use crate::multiplier::{validate_hypotheses, MultiplierError, MultiplierQuery};
use crate::Engine;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Multiplier(#[from] MultiplierError),
    #[error("{0}")]
    Other(String),
}

/// `|generate_basic(d, w, w)| = witt_chi(w, d)` for `d <= max_alphabet`,
/// `w <= max_weight`.
pub fn witt_suite(max_weight: u32, max_alphabet: u32) -> SuiteOutcome {
    let mut out = SuiteOutcome { name: "witt", cases: 0, failures: Vec::new() };
    for d in 1..=max_alphabet {
        for w in 1..=max_weight {
            out.cases += 1;
            let listed = generate_basic(d, w, w).len();
            let counted = witt_chi(w, u64::from(d)).expect("weight >= 1");
            if BigUint::from(listed) != counted {
                out.failures.push(format!("d={d} w={w}: {listed} listed, Witt count {counted}"));
            }
        }
    }
    out
}

/// Group axioms on random samples, per-weight basis sizes, and the free
/// abelian sections `gamma_n / gamma_{n+i}` for `n + i - 1 <= cap`.
pub fn hall_suite(alphabet: u32, cap: u32, samples: usize, seed: u64) -> Result<SuiteOutcome, SuiteError> {
    let mut out = SuiteOutcome { name: "hall", cases: 1, failures: Vec::new() };
    let report = verify_hall_ranks(alphabet, cap, samples, seed)?;
    if !report.passed() {
        out.failures.push(format!("{report:?}"));
    }
    let engine = Engine::new(alphabet, cap)?;
    for n in 1..=cap {
        for i in 1..=n.min(cap + 1 - n) {
            out.cases += 1;
            let check = section_rank_check(&engine, n, i, samples.clamp(1, 64), seed ^ u64::from(n * 16 + i))?;
            if !check.passed() {
                out.failures.push(format!("{check:?}"));
            }
        }
    }
    Ok(out)
}

/// Every `(c1, c2, n)` passing the hypotheses with `c1 + n <= max_top` and
/// overlapping windows `c2 + n >= c1 + 1`.
pub fn admissible_overlap_triples(max_top: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for n in 1..max_top {
        for c1 in 1..=max_top - n {
            for c2 in 1..=c1 {
                let probe = GroupSpec::new(1, Vec::new(), n).expect("valid");
                let ok = validate_hypotheses(&probe, c1, c2).iter().all(|h| h.passed);
                if ok && c2 + n > c1 {
                    out.push((c1, c2, n));
                }
            }
        }
    }
    out
}

/// Materialized `|A - C|` against the closed-form count on torsion-free
/// alphabets of size `1..=max_alphabet`.
pub fn identity_suite(max_top: u32, max_alphabet: u32) -> Result<SuiteOutcome, SuiteError> {
    let mut out = SuiteOutcome { name: "identity", cases: 0, failures: Vec::new() };
    for (c1, c2, n) in admissible_overlap_triples(max_top) {
        for d in 1..=max_alphabet {
            out.cases += 1;
            let spec = GroupSpec::new(d, Vec::new(), n).expect("valid");
            let query = MultiplierQuery::new(spec, c1, c2)?;
            let listed = query.enumerate_a_minus_c()?.len();
            let formula = query.a_minus_c_identity();
            if BigUint::from(listed) != formula {
                out.failures.push(format!("d={d} c1={c1} c2={c2} n={n}: {listed} enumerated, identity gives {formula}"));
            }
        }
    }
    Ok(out)
}

/// `[x1^{r_2}, h, [h', h'']]` vanishes modulo torsion for every choice of
/// letters, in `Z_25 * Z_25` with `c1 = c2 = 1`, `n = 1`.
pub fn absorption_suite() -> Result<SuiteOutcome, SuiteError> {
    let g = GroupSpec::new(0, vec![25, 25], 1).expect("valid");
    let h = cover_spec(&g, 1, 1);
    let ok = power_absorption_check(&h, 1, 1, 10_000).map_err(|e| SuiteError::Other(e.to_string()))?;
    Ok(SuiteOutcome {
        name: "absorption",
        cases: 8,
        failures: if ok { Vec::new() } else { vec![format!("{h}: a sampled word did not vanish")] },
    })
}

/// Every outer commutator of weight `<= 4` on the torsion letters of
/// `Z_25 * Z_5` has order dividing the gcd of the orders involved.
pub fn struik_suite() -> Result<SuiteOutcome, SuiteError> {
    let spec = GroupSpec::new(0, vec![25, 5], 1).expect("valid");
    let engine = Engine::new(2, 4)?;
    let mut out = SuiteOutcome { name: "struik", cases: 0, failures: Vec::new() };
    for w in 1..=4 {
        for word in Word::outer_commutators(&[1, 2], w) {
            out.cases += 1;
            match struik_order_check(&engine, &word, &spec)? {
                StruikOutcome::Holds { .. } => {}
                other => out.failures.push(format!("{word}: {other:?}")),
            }
        }
    }
    Ok(out)
}
