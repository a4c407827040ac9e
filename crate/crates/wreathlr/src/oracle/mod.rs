//! Explicit finite groups, matrix representations and character-theoretic
//! verification of the combinatorial branching rules.
//!
//! All scalar arithmetic is complex floating point; multiplicities are read
//! off by rounding inner products to the nearest integer and asserting the
//! residual stays below `TOL`.

mod engine;
mod group;
mod rep;
mod specht;
mod wreath;

pub use engine::{builtin_group, BuiltinGroup, Report, WreathOracle};
pub use group::{GroupData, ProductGroup};
pub use rep::{induce, induced_character, ClassFunction, MatrixRep};
pub use specht::{specht_rep, standard_tableaux};
pub use wreath::{symmetric_group, WreathGroup};

use thiserror::Error;

/// Entrywise tolerance for multiplicity extraction and character checks.
pub const TOL: f64 = 1e-6;

/// Tolerance for the homomorphism law on constructed matrices.
pub const MATRIX_TOL: f64 = 1e-9;

/// Default cap on the order of any explicitly constructed group.
pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("unknown builtin group `{0}`")]
    UnknownGroup(String),
    #[error("group table is not a valid group: {0}")]
    InvalidGroup(&'static str),
    #[error("map is not an injective homomorphism")]
    NotAnEmbedding,
    #[error("group order {order} exceeds budget {budget}")]
    BudgetExceeded { order: usize, budget: usize },
    #[error("representations live over different groups")]
    GroupMismatch,
    #[error("partition weight {0} exceeds the Specht construction limit of 5")]
    SpechtTooLarge(u32),
    #[error("inner product {value} is not within {tol} of an integer")]
    NonIntegralMultiplicity { value: f64, tol: f64 },
    #[error(transparent)]
    Core(#[from] wreathlr_core::Error),
    #[error("group import: {0}")]
    Import(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;
