//! Arithmetic in the free nilpotent group `F / gamma_{cap+1}(F)` on a finite
//! alphabet, with elements in Hall-basis normal form.
//!
//! The commutator convention is `[a, b] = a^-1 b^-1 a b`, so that
//! `x2 x1 = x1 x2 [x2, x1]`.

mod basis;
mod element;
mod engine;
mod torsion;
mod verify;
mod word;

pub use basis::{EngineLimits, HallBasis};
pub use element::{Exponent, GroupElement};
pub use engine::{HallEngine, StructureTable};
pub use torsion::{reduce_mod_torsion, struik_order_check, StruikOutcome};
pub use verify::{lattice_rank, section_rank_check, verify_hall_ranks, HallRankReport, SectionCheck};
pub use word::Word;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("class cap must be at least 1")]
    ZeroCap,
    #[error("alphabet must have at least one letter")]
    EmptyAlphabet,
    #[error("resource guard: {0}")]
    ResourceGuard(String),
    #[error("elements belong to different Hall bases")]
    BasisMismatch,
    #[error("generator x{0} is not in the alphabet")]
    UnknownGenerator(u32),
    #[error("expression of weight {weight} exceeds the class cap {cap}")]
    CapExceeded { weight: u32, cap: u32 },
    #[error("group has {spec} generators but the engine alphabet has {engine}")]
    AlphabetMismatch { spec: u32, engine: u32 },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}
