//! Combinatorics of Littlewood-Richardson coefficients and their wreath-product
//! generalization.
//!
//! The crate is split into four layers:
//!
//! - [`partition`]: integer partitions, compositions, multipartitions and
//!   Young-diagram box operations,
//! - [`tableaux`]: skew shapes, semistandard skew tableaux and the classical
//!   Littlewood-Richardson rule by direct enumeration,
//! - [`wreath`]: the Littlewood-Richardson rule and one-step branching rules
//!   for `F wr S_n`, parameterized only by the number and dimensions of the
//!   irreducibles of `F`,
//! - [`quiver`]: the ordinary quiver of the category `F wr FI_n`.
//!
//! Everything here is exact integer combinatorics; no floating point is used.
//! The crate is `no_std` (with `alloc`) so it can be embedded anywhere.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod partition;
pub mod quiver;
pub mod tableaux;
pub mod text;
pub mod wreath;

pub use partition::{
    multipartitions_of, partitions_of, standard_tableau_count, Composition, MultiPartition,
    Partition,
};
pub use quiver::{arrow_exists, arrows_via_branching, build_quiver, Quiver};
pub use tableaux::{
    enumerate_lr_tableaux, is_lattice_word, lr_coefficient, lr_expand, SkewShape, SkewTableau,
};
pub use wreath::{
    induce_one_step, restrict_one_step, wreath_lr_coefficient, wreath_lr_expand, Decomposition,
    IrrLabel,
};

use core::fmt;

/// Errors produced by constructors and operations in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A partition constructor was given parts that are not weakly decreasing.
    NotWeaklyDecreasing,
    /// A skew shape was requested whose inner partition is not contained in
    /// the outer one, or whose box count does not match a requested content.
    ShapeMismatch,
    /// Multipartition arguments do not share one component count.
    ComponentCountMismatch { expected: usize, got: usize },
    /// A dims vector had the wrong length or its first entry was not 1.
    InvalidDims,
    /// One-step restriction from weight 0 was requested.
    EmptyRestriction,
    /// Textual input could not be parsed.
    Parse(text::ParseError),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotWeaklyDecreasing => write!(f, "partition parts must be weakly decreasing"),
            Error::ShapeMismatch => write!(f, "skew shape mismatch (containment or box count)"),
            Error::ComponentCountMismatch { expected, got } => {
                write!(f, "expected {expected} components, got {got}")
            }
            Error::InvalidDims => {
                write!(f, "dims must have one entry per component and dims[0] = 1")
            }
            Error::EmptyRestriction => write!(f, "cannot restrict below weight 0"),
            Error::Parse(e) => write!(f, "parse error: {e}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<text::ParseError> for Error {
    fn from(e: text::ParseError) -> Self {
        Error::Parse(e)
    }
}

pub type Result<T> = core::result::Result<T, Error>;
