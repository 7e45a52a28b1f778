//! Exact arithmetic for classical, weighted, and quantum weighted double
//! Hurwitz numbers.
//!
//! The crate provides, over exact rationals only:
//!
//! - integer partitions and their combinatorial statistics;
//! - symmetric-group characters via the rim-hook recursion, with a shared
//!   memoization table;
//! - classical Hurwitz numbers from the character sum formula, checked
//!   against an independent class-algebra oracle;
//! - the quantum weight families and finite-parameter symmetric-function
//!   weights at exact rational `q`;
//! - measures on branching configurations and on colength profiles, their
//!   partition functions, and weighted Hurwitz numbers;
//! - truncated Laurent-series expansions in the semiclassical parameter,
//!   recomputing every displayed coefficient and recording confirmations
//!   and discrepancies in a claims report;
//! - weight generating series, content products, and a coefficient-wise
//!   checker for the hypergeometric tau-function generating identity.

pub mod characters;
pub mod error;
pub mod hurwitz;
pub mod measures;
pub mod partitions;
pub mod rational;
pub mod semiclassics;
pub mod series;
pub mod tau;
pub mod weights;

mod util;

pub use characters::CharacterTable;
pub use error::{Error, Result};
pub use measures::{BranchConfig, Convention, MeasureTable, DEFAULT_CONVENTION};
pub use partitions::Partition;
pub use rational::Rational;
pub use semiclassics::{ClaimRecord, ClaimStatus};
pub use series::{TruncatedSeries, Variable};
pub use weights::WeightModel;
