//! Property tests for the combinatorial kernels.

use cyclotomy::linalg::{rank, ComputeMode, QuotientSpace, SparseMatrix};
use cyclotomy::words::{cyclic_canonical, shuffle, shuffle_poly, Letter, NoncommPoly, Word};
use proptest::prelude::*;

fn letter_strategy(modulus: u32) -> impl Strategy<Value = Letter> {
    (0..=modulus).prop_map(move |k| if k == 0 { Letter::Y } else { Letter::X(k - 1) })
}

fn word_strategy(modulus: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(letter_strategy(modulus), 1..=max_len).prop_map(Word)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclic_canonical_rotation_invariant(w in word_strategy(3, 8), r in 0usize..8) {
        let n = w.0.len();
        let r = r % n;
        let mut rotated = w.0[r..].to_vec();
        rotated.extend_from_slice(&w.0[..r]);
        let a = cyclic_canonical(&w).unwrap();
        let b = cyclic_canonical(&Word(rotated)).unwrap();
        prop_assert_eq!(&a, &b);
        // idempotent
        let again = cyclic_canonical(a.representative()).unwrap();
        prop_assert_eq!(&again, &a);
    }

    #[test]
    fn shuffle_commutative(a in word_strategy(2, 4), b in word_strategy(2, 4)) {
        prop_assert_eq!(shuffle(&a, &b), shuffle(&b, &a));
    }

    #[test]
    fn shuffle_associative(a in word_strategy(2, 3), b in word_strategy(2, 3), c in word_strategy(2, 3)) {
        let left = shuffle_poly(&shuffle(&a, &b), &NoncommPoly::from_word(c.clone()));
        let right = shuffle_poly(&NoncommPoly::from_word(a), &shuffle(&b, &c));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rank_transpose_and_quotient_identity(
        entries in prop::collection::vec(((0usize..6), (0usize..5), -4i64..=4), 0..18)
    ) {
        let mut m = SparseMatrix::zero(6, 5);
        for (i, j, v) in entries {
            m.set(i, j, cyclotomy::Rational::from_integer(v.into()));
        }
        let r = rank(&m, ComputeMode::Exact);
        prop_assert_eq!(r, rank(&m.transpose(), ComputeMode::Exact));
        let q = QuotientSpace::new(5, &m).unwrap();
        prop_assert_eq!(q.dim() + q.rank(), 5);
        // every row of m reduces to zero in its own quotient
        for row in m.rows_iter() {
            prop_assert!(q.in_span(row));
        }
    }
}
