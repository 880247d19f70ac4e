use super::cyclic::{d_s, full_alphabet, CyclicPoly};
use super::letters::{Letter, Word};
use super::poly::NoncommPoly;
use crate::linalg::{Error, Result};
use std::collections::BTreeMap;

/// A special derivation D of A(G): D(s) = [B_s, s] for every generator s,
/// subject to sum_s [B_s, s] = 0, recorded by its system B.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialDerivation {
    modulus: u32,
    assignments: BTreeMap<Letter, NoncommPoly>,
}

impl SpecialDerivation {
    /// Build from a B-system, checking specialness eagerly.
    pub fn new(modulus: u32, assignments: BTreeMap<Letter, NoncommPoly>) -> Result<Self> {
        let d = SpecialDerivation {
            modulus,
            assignments,
        };
        if !d.specialness_holds() {
            return Err(Error::InvalidArgument(
                "B-system violates the specialness identity sum [B_s, s] = 0".into(),
            ));
        }
        Ok(d)
    }

    pub fn zero(modulus: u32) -> Self {
        SpecialDerivation {
            modulus,
            assignments: BTreeMap::new(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn b_of(&self, s: Letter) -> NoncommPoly {
        self.assignments.get(&s).cloned().unwrap_or_default()
    }

    fn specialness_holds(&self) -> bool {
        let mut total = NoncommPoly::zero();
        for s in full_alphabet(self.modulus) {
            total = &total + &self.b_of(s).commutator(&NoncommPoly::from_letter(s));
        }
        total.is_zero()
    }

    /// D applied to a single generator.
    pub fn apply_letter(&self, s: Letter) -> NoncommPoly {
        self.b_of(s).commutator(&NoncommPoly::from_letter(s))
    }

    /// D extended to A(G) by the Leibniz rule.
    pub fn apply(&self, p: &NoncommPoly) -> NoncommPoly {
        let mut out = NoncommPoly::zero();
        for (w, c) in p.terms() {
            for i in 0..w.0.len() {
                let prefix = NoncommPoly::from_word(Word(w.0[..i].to_vec()));
                let suffix = NoncommPoly::from_word(Word(w.0[i + 1..].to_vec()));
                let mid = self.apply_letter(w.0[i]);
                out = &out + &(&(&prefix * &mid) * &suffix).scale(c);
            }
        }
        out
    }

    /// Equality as derivations: the B-systems may differ by central parts
    /// Q[s], so compare the images of the generators.
    pub fn eq_as_derivation(&self, other: &SpecialDerivation) -> bool {
        debug_assert_eq!(self.modulus, other.modulus);
        full_alphabet(self.modulus)
            .into_iter()
            .all(|s| self.apply_letter(s) == other.apply_letter(s))
    }

    pub fn is_zero_derivation(&self) -> bool {
        full_alphabet(self.modulus)
            .into_iter()
            .all(|s| self.apply_letter(s).is_zero())
    }
}

/// The map kappa: reduced cyclic words -> special derivations,
/// B_s = partial_s . Cycl.
pub fn kappa(c: &CyclicPoly, modulus: u32) -> Result<SpecialDerivation> {
    let mut assignments = BTreeMap::new();
    for s in full_alphabet(modulus) {
        let b = d_s(c, s);
        if !b.is_zero() {
            assignments.insert(s, b);
        }
    }
    SpecialDerivation::new(modulus, assignments)
}

/// Lie bracket of special derivations:
/// [B, C]_s = D_B(C_s) - D_C(B_s) - [B_s, C_s].
pub fn derivation_bracket(
    d1: &SpecialDerivation,
    d2: &SpecialDerivation,
) -> Result<SpecialDerivation> {
    assert_eq!(d1.modulus(), d2.modulus());
    let mut assignments = BTreeMap::new();
    for s in full_alphabet(d1.modulus()) {
        let b1 = d1.b_of(s);
        let b2 = d2.b_of(s);
        let b = &(&d1.apply(&b2) - &d2.apply(&b1)) - &b1.commutator(&b2);
        if !b.is_zero() {
            assignments.insert(s, b);
        }
    }
    SpecialDerivation::new(d1.modulus(), assignments)
}
