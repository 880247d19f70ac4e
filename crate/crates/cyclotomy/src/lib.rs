//! Exact computational algebra for the dihedral Lie coalgebras of roots of
//! unity, the Lie algebra of special equivariant derivations presented on
//! cyclic words, and the rank-m modular complexes (m <= 3), together with
//! the generating-function dimension oracles used to cross-check them.
//!
//! Everything is computed over the rationals by brute-force linear algebra;
//! there is no floating point anywhere in this crate.

pub mod dihedral;
pub mod linalg;
pub mod modcx;
pub mod series;
pub mod words;

pub use linalg::{
    ChainComplex, ComputeMode, Error, QuotientSpace, Rational, Result, SparseMatrix, SparseVec,
};

/// Library version for reproducibility manifests.
pub fn version() -> &'static str {
    env!("CARGO_PKG_VERSION")
}
