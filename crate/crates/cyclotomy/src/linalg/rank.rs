//! Rank over Q, with the fast modular path and the exact fallback.

use super::modular::{random_prime, rank_mod};
use super::quotient::rref;
use super::sparse::SparseMatrix;
use super::ComputeMode;
use rand::SeedableRng;
use rayon::prelude::*;
use std::sync::OnceLock;

/// How many independent primes must agree in fast mode.
const FAST_PRIMES: usize = 3;

/// The random 31-bit primes used by fast mode in this process, drawn once
/// so that reports can record them.
pub fn fast_mode_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut rng = rand_chacha::ChaCha8Rng::from_entropy();
        (0..FAST_PRIMES).map(|_| random_prime(&mut rng)).collect()
    })
}

/// Rank of `m` over the rationals.
///
/// In fast mode the rank is computed modulo `FAST_PRIMES` independent random
/// 31-bit primes and returned only if all agree; any disagreement (or a prime
/// hitting a denominator) escalates to exact elimination. Callers never see
/// an error from the fast path.
pub fn rank(m: &SparseMatrix, mode: ComputeMode) -> usize {
    match mode {
        ComputeMode::Exact => rank_exact(m),
        ComputeMode::Fast => {
            let primes = fast_mode_primes();
            let ranks: Vec<Option<usize>> =
                primes.par_iter().map(|&p| rank_mod(m, p)).collect();
            let mut agreed = None;
            for r in &ranks {
                match (r, agreed) {
                    (None, _) => return rank_exact(m),
                    (Some(v), None) => agreed = Some(*v),
                    (Some(v), Some(w)) if *v != w => return rank_exact(m),
                    _ => {}
                }
            }
            agreed.unwrap_or(0)
        }
    }
}

pub fn rank_exact(m: &SparseMatrix) -> usize {
    rref(m).len()
}

/// Do all rows of `extra` lie in the row span of `base`? Checked by
/// comparing the rank of the stack with the rank of the base (per prime in
/// fast mode, with the usual unanimity-or-escalate policy).
pub fn rows_in_span(base: &SparseMatrix, extra: &SparseMatrix, mode: ComputeMode) -> bool {
    let mut stacked = base.clone();
    for row in extra.rows_iter() {
        stacked.push_row(row.clone());
    }
    match mode {
        ComputeMode::Exact => rank_exact(&stacked) == rank_exact(base),
        ComputeMode::Fast => {
            let primes = fast_mode_primes();
            let answers: Vec<Option<bool>> = primes
                .par_iter()
                .map(|&p| {
                    Some(super::modular::rank_mod(&stacked, p)? == super::modular::rank_mod(base, p)?)
                })
                .collect();
            let mut agreed = None;
            for a in &answers {
                match (a, agreed) {
                    (None, _) => return rows_in_span(base, extra, ComputeMode::Exact),
                    (Some(x), None) => agreed = Some(*x),
                    (Some(x), Some(y)) if *x != y => {
                        return rows_in_span(base, extra, ComputeMode::Exact)
                    }
                    _ => {}
                }
            }
            agreed.unwrap_or(true)
        }
    }
}

/// Does `v` lie in the row span of `m`?
///
/// Fast mode checks membership modulo `FAST_PRIMES` random primes with the
/// same unanimity-or-escalate policy as `rank`.
pub fn span_contains(m: &SparseMatrix, v: &super::SparseVec, mode: ComputeMode) -> bool {
    match mode {
        ComputeMode::Exact => {
            let mut with = m.clone();
            with.push_row(v.clone());
            rank_exact(&with) == rank_exact(m)
        }
        ComputeMode::Fast => {
            let mut with = m.clone();
            with.push_row(v.clone());
            let primes = fast_mode_primes();
            let answers: Vec<Option<bool>> = primes
                .par_iter()
                .map(|&p| Some(rank_mod(&with, p)? == rank_mod(m, p)?))
                .collect();
            let mut agreed = None;
            for a in &answers {
                match (a, agreed) {
                    (None, _) => return span_contains(m, v, ComputeMode::Exact),
                    (Some(x), None) => agreed = Some(*x),
                    (Some(x), Some(y)) if *x != y => {
                        return span_contains(m, v, ComputeMode::Exact)
                    }
                    _ => {}
                }
            }
            agreed.unwrap_or(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn identity_rank() {
        let id = SparseMatrix::identity(3);
        assert_eq!(rank(&id, ComputeMode::Exact), 3);
        assert_eq!(rank(&id, ComputeMode::Fast), 3);
    }

    #[test]
    fn proportional_rows() {
        let m = SparseMatrix::from_dense(&[vec![rat(1), rat(2)], vec![rat(2), rat(4)]]);
        assert_eq!(rank(&m, ComputeMode::Exact), 1);
        assert_eq!(rank(&m, ComputeMode::Fast), 1);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let m = SparseMatrix::from_dense(&[
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(-1)],
        ]);
        assert_eq!(rank(&m, ComputeMode::Exact), rank(&m.transpose(), ComputeMode::Exact));
    }

    #[test]
    fn span_membership() {
        let m = SparseMatrix::from_dense(&[vec![rat(1), rat(1), rat(0)], vec![rat(0), rat(1), rat(1)]]);
        let inside = vec![(0, rat(1)), (2, rat(-1))];
        let outside = vec![(0, rat(1))];
        for mode in [ComputeMode::Exact, ComputeMode::Fast] {
            assert!(span_contains(&m, &inside, mode));
            assert!(!span_contains(&m, &outside, mode));
            assert!(span_contains(&m, &Vec::new(), mode));
        }
    }
}
