//! The input group: an `n`-th nilpotent product of `m` infinite cyclic groups
//! followed by finite cyclic groups of orders `r_1, ..., r_t`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("torsion order {0} is smaller than 2")]
    TrivialTorsion(u64),
    #[error("the product needs at least one cyclic factor")]
    NoFactors,
    #[error("nilpotency degree n must be at least 1")]
    ZeroDegree,
    #[error("cannot parse group expression {0:?}: {1}")]
    Parse(String, String),
}

/// A generator `x_index` of the free presentation. Indices `1..=m` are the
/// infinite cyclic factors (order 0), `m+1..=m+t` carry `r_1..r_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Generator {
    pub index: u32,
    pub torsion_order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    pub m: u32,
    pub torsion: Vec<u64>,
    pub n: u32,
}

impl GroupSpec {
    /// Structural validation only. The divisibility chain is a hypothesis of
    /// the multiplier and capability results and is reported by their checks.
    pub fn new(m: u32, torsion: Vec<u64>, n: u32) -> Result<Self, SpecError> {
        if let Some(&r) = torsion.iter().find(|&&r| r < 2) {
            return Err(SpecError::TrivialTorsion(r));
        }
        if m == 0 && torsion.is_empty() {
            return Err(SpecError::NoFactors);
        }
        if n == 0 {
            return Err(SpecError::ZeroDegree);
        }
        Ok(GroupSpec { m, torsion, n })
    }

    pub fn t(&self) -> u32 {
        self.torsion.len() as u32
    }

    pub fn alphabet_size(&self) -> u32 {
        self.m + self.t()
    }

    /// `r_j` for `1 <= j <= t`.
    pub fn r(&self, j: u32) -> Option<u64> {
        j.checked_sub(1).and_then(|i| self.torsion.get(i as usize)).copied()
    }

    pub fn generators(&self) -> Vec<Generator> {
        (1..=self.alphabet_size())
            .map(|index| Generator {
                index,
                torsion_order: self.torsion_index(index).map_or(0, |j| self.torsion[j as usize - 1]),
            })
            .collect()
    }

    /// `Some(j)` when generator `index` is the torsion generator `x_{m+j}`.
    pub fn torsion_index(&self, index: u32) -> Option<u32> {
        (index > self.m && index <= self.alphabet_size()).then(|| index - self.m)
    }

    /// First `i` with `r_{i+1}` not dividing `r_i`, as `(r_i, r_{i+1})`.
    pub fn divisibility_violation(&self) -> Option<(u64, u64)> {
        self.torsion
            .windows(2)
            .find(|w| w[0] % w[1] != 0)
            .map(|w| (w[0], w[1]))
    }

    /// Same group with a different nilpotency degree.
    pub fn with_degree(&self, n: u32) -> Self {
        GroupSpec { n, ..self.clone() }
    }

    /// Parses the compact form `Z^2 * Z11 * Z11 @ n=2`. `Z` alone is one
    /// infinite cyclic factor and `Zk` is cyclic of order `k`.
    pub fn parse_expression(text: &str) -> Result<Self, SpecError> {
        let err = |msg: &str| SpecError::Parse(text.to_string(), msg.to_string());
        let (product, degree) = text.split_once('@').ok_or_else(|| err("missing '@ n=<degree>'"))?;
        let degree = degree.trim();
        let n: u32 = degree
            .strip_prefix("n")
            .map(str::trim_start)
            .and_then(|d| d.strip_prefix('='))
            .ok_or_else(|| err("degree must look like 'n=2'"))?
            .trim()
            .parse()
            .map_err(|_| err("degree is not a nonnegative integer"))?;
        let mut m = 0u32;
        let mut torsion = Vec::new();
        for factor in product.split('*') {
            let factor = factor.trim();
            let rest = factor.strip_prefix('Z').ok_or_else(|| err("factors must start with 'Z'"))?;
            if rest.is_empty() {
                m += 1;
            } else if let Some(power) = rest.strip_prefix('^') {
                m += power.trim().parse::<u32>().map_err(|_| err("bad exponent on Z"))?;
            } else {
                let order = rest.trim_start_matches('_');
                torsion.push(order.parse::<u64>().map_err(|_| err("bad cyclic order"))?);
            }
        }
        GroupSpec::new(m, torsion, n)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.m {
            0 => {}
            1 => parts.push("Z".to_string()),
            m => parts.push(format!("Z^{m}")),
        }
        parts.extend(self.torsion.iter().map(|r| format!("Z{r}")));
        write!(f, "{} @ n={}", parts.join(" * "), self.n)
    }
}
