//! Exact sparse linear algebra over arbitrary-precision rationals.
//!
//! Ranks can be taken either in `Exact` mode (fraction-free elimination over
//! the rationals) or in `Fast` mode (elimination modulo at least three
//! independent random 31-bit primes, accepted only on unanimity, with
//! automatic escalation to exact mode on disagreement).

mod complex;
mod modular;
mod quotient;
mod rank;
mod sparse;

pub use complex::ChainComplex;
pub use quotient::{induced_map, rref, QuotientSpace};
pub use rank::{fast_mode_primes, rank, rows_in_span, span_contains};
pub use sparse::{vec_add_scaled, vec_from_entries, vec_scale, SparseMatrix, SparseVec};

use num::BigRational;

pub type Rational = BigRational;

/// How rank computations are carried out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComputeMode {
    /// Fraction-free elimination over the rationals.
    Exact,
    /// Ranks modulo >= 3 independent random 31-bit primes, unanimity
    /// required; disagreement escalates to `Exact` silently.
    #[default]
    Fast,
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("map is not well defined on quotients; witness relation index {witness_index}")]
    WellDefinedness {
        witness_index: usize,
        witness: SparseVec,
    },
    #[error("composition of differentials {position} -> {position_plus_two} is nonzero")]
    Complex {
        position: usize,
        position_plus_two: usize,
        witness: SparseVec,
    },
    #[error("unsupported variant: {0}")]
    UnsupportedVariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub(crate) fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
