//! Brute-force character-theoretic engine and tooling around `wreathlr-core`.
//!
//! The [`oracle`] module builds finite groups from multiplication tables,
//! constructs wreath products `F wr S_n` and their irreducible matrix
//! representations explicitly, and verifies the combinatorial rules of the
//! core crate by decomposing induced characters. [`formats`] carries JSON and
//! DOT serialization, [`cli`] the command-line driver.

pub mod cli;
pub mod formats;
pub mod oracle;
