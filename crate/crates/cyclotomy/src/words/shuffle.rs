use super::letters::Word;
use super::poly::NoncommPoly;
use crate::linalg::Rational;
use num::One;
use std::collections::BTreeMap;

/// Shuffle product of two words: the sum over all interleavings that
/// preserve the internal order of each factor.
pub fn shuffle(a: &Word, b: &Word) -> NoncommPoly {
    let mut out = NoncommPoly::zero();
    let mut stack = vec![(0usize, 0usize, Vec::with_capacity(a.0.len() + b.0.len()))];
    while let Some((i, j, acc)) = stack.pop() {
        if i == a.0.len() && j == b.0.len() {
            out.add_term(Word(acc), Rational::one());
            continue;
        }
        if i < a.0.len() {
            let mut next = acc.clone();
            next.push(a.0[i]);
            stack.push((i + 1, j, next));
        }
        if j < b.0.len() {
            let mut next = acc;
            next.push(b.0[j]);
            stack.push((i, j + 1, next));
        }
    }
    out
}

/// Shuffle product extended bilinearly to polynomials.
pub fn shuffle_poly(a: &NoncommPoly, b: &NoncommPoly) -> NoncommPoly {
    let mut out = NoncommPoly::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            let s = shuffle(wa, wb);
            for (w, c) in s.terms() {
                out.add_term(w.clone(), ca * cb * c);
            }
        }
    }
    out
}

/// Reduced coproduct of a polynomial with all letters primitive:
/// bar Delta (Z) = Delta(Z) - 1 (x) Z - Z (x) 1.
///
/// Returned as a map (left word, right word) -> coefficient with both sides
/// nonempty.
pub fn coproduct_reduced(p: &NoncommPoly) -> BTreeMap<(Word, Word), Rational> {
    let mut acc: BTreeMap<(Word, Word), Rational> = BTreeMap::new();
    for (w, c) in p.terms() {
        let n = w.0.len();
        // Delta(w) = sum over subsets S of positions of w_S (x) w_{S^c};
        // skip the two trivial subsets.
        for mask in 1..(1u64 << n) - 1 {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (k, letter) in w.0.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    left.push(*letter);
                } else {
                    right.push(*letter);
                }
            }
            let slot = acc
                .entry((Word(left), Word(right)))
                .or_insert_with(num::Zero::zero);
            *slot += c;
        }
    }
    acc.retain(|_, v| !num::Zero::is_zero(v));
    acc
}

/// Friedrichs' criterion: p lies in the free Lie algebra iff its reduced
/// coproduct vanishes.
pub fn is_primitive(p: &NoncommPoly) -> bool {
    coproduct_reduced(p).is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::letters::Letter;
    use crate::linalg::rat;

    const X0: Letter = Letter::X(0);
    const X1: Letter = Letter::X(1);
    const X2: Letter = Letter::X(2);
    const Y: Letter = Letter::Y;

    fn w(ls: &[Letter]) -> Word {
        Word(ls.to_vec())
    }

    #[test]
    fn three_letter_shuffle() {
        // shuffle(s1 s2, s3) = s1 s2 s3 + s1 s3 s2 + s3 s1 s2
        let s = shuffle(&w(&[X0, X1]), &w(&[X2]));
        assert_eq!(s.coeff(&w(&[X0, X1, X2])), rat(1));
        assert_eq!(s.coeff(&w(&[X0, X2, X1])), rat(1));
        assert_eq!(s.coeff(&w(&[X2, X0, X1])), rat(1));
        assert_eq!(s.terms().count(), 3);
    }

    #[test]
    fn shuffle_term_count_is_binomial() {
        let a = w(&[X0, Y, X1]);
        let b = w(&[Y, X0]);
        let s = shuffle(&a, &b);
        let total: Rational = s.terms().map(|(_, c)| c.clone()).sum();
        // C(5, 3) = 10 counting multiplicity
        assert_eq!(total, rat(10));
    }

    #[test]
    fn square_shuffle() {
        let s = shuffle(&w(&[X0]), &w(&[X0]));
        assert_eq!(s.coeff(&w(&[X0, X0])), rat(2));
    }

    #[test]
    fn shuffle_commutes() {
        let a = w(&[X0, Y]);
        let b = w(&[X1]);
        assert_eq!(shuffle(&a, &b), shuffle(&b, &a));
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&NoncommPoly::from_letter(X0)));
        let xy = NoncommPoly::from_word(w(&[X0, X1]));
        let yx = NoncommPoly::from_word(w(&[X1, X0]));
        assert!(is_primitive(&(&xy - &yx)));
        assert!(!is_primitive(&xy));
    }
}
