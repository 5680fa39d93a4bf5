pub mod arith;
pub mod capability;
pub mod cli;
pub mod commutator;
pub mod group;
pub mod hall;
pub mod multiplier;
pub mod suites;

use num_bigint::BigInt;

/// Collection engine with machine-word exponents.
pub type Engine = hall::HallEngine<i64>;
/// Collection engine with arbitrary-precision exponents.
pub type BigEngine = hall::HallEngine<BigInt>;
pub type Element = hall::GroupElement<i64>;
pub type BigElement = hall::GroupElement<BigInt>;
