//! Words and cyclic words in the alphabet {Y} u {X_g : g in Z/N}, the
//! shuffle product, the Lie bracket on cyclic words, and the map kappa to
//! special derivations.

mod cyclic;
mod derivation;
mod letters;
mod level;
mod poly;
pub mod random;
mod shuffle;

pub use cyclic::{
    cyclic_bracket, cyclic_canonical, d_s, full_alphabet, orbit_sum, x_alphabet, CyclicPoly,
    CyclicWord,
};
pub use derivation::{derivation_bracket, kappa, SpecialDerivation};
pub use letters::{GroupElt, Letter, Word};
pub use level::{level_maps, LevelMapKind};
pub use poly::NoncommPoly;
pub use random::{
    jacobi_check, kappa_homomorphism_check, level_bracket_preservation_check,
    level_identities_check, orbit_invariance_check, random_invariant_poly, random_reduced_poly,
};
pub use shuffle::{coproduct_reduced, is_primitive, shuffle, shuffle_poly};

use crate::linalg::{rank, ComputeMode, SparseMatrix};
use itertools::Itertools;
use std::collections::BTreeMap;

/// All words of the given weight over {Y} u {X_0..X_{N-1}}.
pub fn words_of_weight(weight: usize, modulus: u32) -> Vec<Word> {
    if weight == 0 {
        return vec![Word::empty()];
    }
    let alphabet = full_alphabet(modulus);
    (0..weight)
        .map(|_| alphabet.iter().copied())
        .multi_cartesian_product()
        .map(Word)
        .collect()
}

/// All necklaces (canonical cyclic words) of the given weight.
pub fn necklaces_of_weight(weight: usize, modulus: u32) -> Vec<CyclicWord> {
    let mut set: Vec<CyclicWord> = words_of_weight(weight, modulus)
        .iter()
        .map(|w| cyclic_canonical(w).unwrap())
        .collect();
    set.sort();
    set.dedup();
    set
}

/// Exactness data for the weight-w piece of the sequence
/// 0 -> C+(A) -d-> F^1(A) -t-> [A, A] -> 0, for A free on |S| = modulus + 1
/// letters, where d(C) = sum_s D_s C (x) ds and t(a (x) ds) = [a, s].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessReport {
    pub dim_cyclic: usize,
    pub dim_f1: usize,
    pub dim_commutator: usize,
    pub rank_d: usize,
    pub rank_t: usize,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.rank_d == self.dim_cyclic // d injective
            && self.rank_t == self.dim_commutator // t surjective onto [A,A]
            && self.rank_d + self.rank_t == self.dim_f1 // exact in the middle
    }

    pub fn euler_identity_holds(&self) -> bool {
        self.dim_cyclic as i64 - self.dim_f1 as i64 + self.dim_commutator as i64 == 0
    }
}

pub fn exactness_report(weight: usize, modulus: u32) -> ExactnessReport {
    assert!(weight >= 1);
    let alphabet = full_alphabet(modulus);
    let s_count = alphabet.len();
    let necklaces = necklaces_of_weight(weight, modulus);
    let short_words = words_of_weight(weight - 1, modulus);
    let long_words = words_of_weight(weight, modulus);
    let word_index: BTreeMap<&Word, usize> =
        long_words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let short_index: BTreeMap<&Word, usize> =
        short_words.iter().enumerate().map(|(i, w)| (w, i)).collect();

    let dim_f1 = s_count * short_words.len();

    // d: C+(A)_w -> F^1(A)_w, columns indexed by necklaces.
    let mut d = SparseMatrix::zero(dim_f1, necklaces.len());
    for (col, neck) in necklaces.iter().enumerate() {
        let cp = CyclicPoly::from_cyclic(neck.clone());
        for (si, s) in alphabet.iter().enumerate() {
            for (w, c) in d_s(&cp, *s).terms() {
                let row = si * short_words.len() + short_index[w];
                d.set(row, col, c.clone());
            }
        }
    }

    // t: F^1(A)_w -> A_w, a (x) ds -> [a, s].
    let mut t = SparseMatrix::zero(long_words.len(), dim_f1);
    for (si, s) in alphabet.iter().enumerate() {
        let sp = NoncommPoly::from_letter(*s);
        for (wi, w) in short_words.iter().enumerate() {
            let img = NoncommPoly::from_word(w.clone()).commutator(&sp);
            let col = si * short_words.len() + wi;
            for (word, c) in img.terms() {
                let row = word_index[word];
                let mut cur = t.get(row, col);
                cur += c.clone();
                t.set(row, col, cur);
            }
        }
    }

    // dim [A, A]_w = dim A_w - #necklaces (A/[A,A] has the necklaces as basis).
    let dim_commutator = long_words.len() - necklaces.len();

    // t . d = 0 is the specialness identity for Cycl images.
    debug_assert!(t.matmul(&d).is_zero());

    ExactnessReport {
        dim_cyclic: necklaces.len(),
        dim_f1,
        dim_commutator,
        rank_d: rank(&d, ComputeMode::Exact),
        rank_t: rank(&t, ComputeMode::Exact),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exactness_small() {
        for modulus in [1u32, 2] {
            for w in 1..=4 {
                let r = exactness_report(w, modulus);
                assert!(r.is_exact(), "weight {w}, N {modulus}: {r:?}");
                assert!(r.euler_identity_holds());
                // dim F^1(A)_w = |S| * dim A_{w-1}
                let s = modulus as usize + 1;
                assert_eq!(r.dim_f1, s * s.pow(w as u32 - 1));
            }
        }
    }
}
