pub mod chartab;
pub mod cyclo;
pub mod error;
pub mod grp;
pub mod harness;
pub mod structure;
pub mod symchar;

pub use error::{Error, Result};

use num_bigint::BigInt;

/// Cyclotomic integers with unbounded coefficients.
pub type ExactCyclotomic = cyclo::Cyclotomic<BigInt>;
/// Character table with unbounded coefficients.
pub type ExactCharacterTable = chartab::CharacterTable<BigInt>;
/// Cyclotomic integers with checked `i64` coefficients.
pub type Cyclotomic64 = cyclo::Cyclotomic<i64>;
pub type CharacterTable64 = chartab::CharacterTable<i64>;
