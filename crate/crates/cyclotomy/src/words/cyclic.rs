use super::letters::{GroupElt, Letter, Word};
use super::poly::NoncommPoly;
use crate::linalg::{Error, Rational, Result};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Index of the lexicographically least rotation (Booth's algorithm).
fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    if n <= 1 {
        return 0;
    }
    let at = |i: usize| s[i % n];
    let mut f: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = f[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = f[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    k % n
}

/// A necklace: the equivalence class of a nonempty word under rotation,
/// stored as the lexicographically minimal rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    representative: Word,
}

impl CyclicWord {
    pub fn representative(&self) -> &Word {
        &self.representative
    }

    pub fn weight(&self) -> usize {
        self.representative.weight()
    }

    pub fn depth(&self) -> usize {
        self.representative.depth()
    }

    pub fn is_pure_power(&self) -> bool {
        self.representative.is_pure_power()
    }

    /// Sum of all rotations of the representative (the map Cycl), with
    /// multiplicity for symmetric words.
    pub fn cycl(&self) -> NoncommPoly {
        let n = self.representative.0.len();
        let mut out = NoncommPoly::zero();
        for r in 0..n {
            let mut v = self.representative.0[r..].to_vec();
            v.extend_from_slice(&self.representative.0[..r]);
            out.add_term(Word(v), Rational::one());
        }
        out
    }

    pub fn translate(&self, h: &GroupElt) -> CyclicWord {
        cyclic_canonical(&self.representative.translate(h)).unwrap()
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.representative)
    }
}

/// Canonicalize a nonempty word to its necklace.
pub fn cyclic_canonical(w: &Word) -> Result<CyclicWord> {
    if w.0.is_empty() {
        return Err(Error::InvalidArgument(
            "cyclic words must be nonempty".into(),
        ));
    }
    let k = least_rotation(&w.0);
    let mut v = w.0[k..].to_vec();
    v.extend_from_slice(&w.0[..k]);
    Ok(CyclicWord {
        representative: Word(v),
    })
}

/// A finite Q-linear combination of cyclic words.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CyclicPoly {
    terms: BTreeMap<CyclicWord, Rational>,
}

impl CyclicPoly {
    pub fn zero() -> Self {
        CyclicPoly::default()
    }

    pub fn from_cyclic(c: CyclicWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(c, Rational::one());
        CyclicPoly { terms }
    }

    pub fn add_term(&mut self, c: CyclicWord, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(c.clone()).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&c);
        }
    }

    pub fn add_in(&mut self, other: &CyclicPoly) {
        for (c, v) in &other.terms {
            self.add_term(c.clone(), v.clone());
        }
    }

    pub fn scale(&self, k: &Rational) -> CyclicPoly {
        if k.is_zero() {
            return CyclicPoly::zero();
        }
        CyclicPoly {
            terms: self.terms.iter().map(|(c, v)| (c.clone(), v * k)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CyclicWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, c: &CyclicWord) -> Rational {
        self.terms.get(c).cloned().unwrap_or_else(Rational::zero)
    }

    /// The projection C: A -> C(A).
    pub fn project(p: &NoncommPoly) -> CyclicPoly {
        let mut out = CyclicPoly::zero();
        for (w, c) in p.terms() {
            if w.0.is_empty() {
                continue; // constants have no cyclic class here
            }
            out.add_term(cyclic_canonical(w).unwrap(), c.clone());
        }
        out
    }

    /// Kill pure powers Y^n and X_g^n (pass to the quotient C~ of C(A)).
    pub fn reduced(&self) -> CyclicPoly {
        CyclicPoly {
            terms: self
                .terms
                .iter()
                .filter(|(c, _)| !c.is_pure_power())
                .map(|(c, v)| (c.clone(), v.clone()))
                .collect(),
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.terms.keys().all(|c| !c.is_pure_power())
    }

    pub fn translate(&self, h: &GroupElt) -> CyclicPoly {
        let mut out = CyclicPoly::zero();
        for (c, v) in &self.terms {
            out.add_term(c.translate(h), v.clone());
        }
        out
    }
}

impl fmt::Display for CyclicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (c, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v}){c}")?;
        }
        Ok(())
    }
}

/// D_s = partial_s . Cycl applied to a cyclic polynomial.
pub fn d_s(c: &CyclicPoly, s: Letter) -> NoncommPoly {
    let mut out = NoncommPoly::zero();
    for (cw, coeff) in c.terms() {
        for (w, m) in cw.cycl().terms() {
            if w.0.first() == Some(&s) {
                out.add_term(Word(w.0[1..].to_vec()), coeff * m);
            }
        }
    }
    out
}

/// Sum of the G-orbit of a cyclic word: sum_h h.c (h sends X_g to X_{hg}).
pub fn orbit_sum(c: &CyclicWord, modulus: u32) -> CyclicPoly {
    let mut out = CyclicPoly::zero();
    for h in GroupElt::all(modulus) {
        out.add_term(c.translate(&h), Rational::one());
    }
    out
}

/// The Lie bracket on cyclic words:
/// [c1, c2] = - sum_{s in alphabet_subset} C([D_s c1, D_s c2] . s).
///
/// With the full alphabet this is the bracket transported from special
/// derivations; with the X letters only it is the depth-graded bracket.
pub fn cyclic_bracket(c1: &CyclicPoly, c2: &CyclicPoly, alphabet_subset: &[Letter]) -> CyclicPoly {
    let mut out = CyclicPoly::zero();
    for s in alphabet_subset {
        let a = d_s(c1, *s);
        let b = d_s(c2, *s);
        if a.is_zero() || b.is_zero() {
            continue;
        }
        let comm = a.commutator(&b);
        let shifted = &comm * &NoncommPoly::from_letter(*s);
        out.add_in(&CyclicPoly::project(&shifted).scale(&-Rational::one()));
    }
    out
}

/// Full alphabet {Y} u {X_0..X_{N-1}}.
pub fn full_alphabet(modulus: u32) -> Vec<Letter> {
    let mut v = vec![Letter::Y];
    v.extend((0..modulus).map(Letter::X));
    v
}

/// X letters only.
pub fn x_alphabet(modulus: u32) -> Vec<Letter> {
    (0..modulus).map(Letter::X).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn word(ls: &[Letter]) -> Word {
        Word(ls.to_vec())
    }

    const X0: Letter = Letter::X(0);
    const X1: Letter = Letter::X(1);
    const Y: Letter = Letter::Y;

    #[test]
    fn canonical_rotation_basics() {
        let w = word(&[X0, Y, X1]);
        let c = cyclic_canonical(&w).unwrap();
        // Y < X0 < X1, minimal rotation starts with Y
        assert_eq!(c.representative(), &word(&[Y, X1, X0]));
        let yy = cyclic_canonical(&word(&[Y, Y])).unwrap();
        assert_eq!(yy.representative(), &word(&[Y, Y]));
    }

    #[test]
    fn rotations_collapse() {
        let w = word(&[X0, Y, X1]);
        let c = cyclic_canonical(&w).unwrap();
        for r in 1..3 {
            let mut v = w.0[r..].to_vec();
            v.extend_from_slice(&w.0[..r]);
            assert_eq!(cyclic_canonical(&Word(v)).unwrap(), c);
        }
    }

    #[test]
    fn empty_word_rejected() {
        assert!(cyclic_canonical(&Word::empty()).is_err());
    }

    #[test]
    fn cycl_multiplicity() {
        let c = cyclic_canonical(&word(&[X0, Y, X0, Y])).unwrap();
        let p = c.cycl();
        assert_eq!(p.coeff(&word(&[X0, Y, X0, Y])), rat(2));
        assert_eq!(p.coeff(&word(&[Y, X0, Y, X0])), rat(2));
    }

    #[test]
    fn d_s_examples() {
        // d_{X_a}(C(X_a X_b)) = X_b (a != b)
        let c = CyclicPoly::from_cyclic(cyclic_canonical(&word(&[X0, X1])).unwrap());
        assert_eq!(d_s(&c, X0), NoncommPoly::from_letter(X1));
        // d_Y of it is zero
        assert!(d_s(&c, Y).is_zero());
        // d_s(C(s^k)) = k s^{k-1}
        let c = CyclicPoly::from_cyclic(cyclic_canonical(&word(&[Y, Y, Y])).unwrap());
        assert_eq!(
            d_s(&c, Y),
            NoncommPoly::from_word(word(&[Y, Y])).scale(&rat(3))
        );
    }

    #[test]
    fn orbit_sum_examples() {
        let c = cyclic_canonical(&word(&[X0, Y])).unwrap();
        // N = 1: orbit is the word itself
        assert_eq!(orbit_sum(&c, 1), CyclicPoly::from_cyclic(c.clone()));
        // N = 2: two-element orbit
        let o = orbit_sum(&c, 2);
        assert_eq!(o.coeff(&cyclic_canonical(&word(&[Y, X0])).unwrap()), rat(1));
        assert_eq!(o.coeff(&cyclic_canonical(&word(&[Y, X1])).unwrap()), rat(1));
        // invariance under every h
        for h in GroupElt::all(2) {
            assert_eq!(o.translate(&h), o);
        }
    }

    #[test]
    fn bracket_antisymmetry() {
        let c = CyclicPoly::from_cyclic(cyclic_canonical(&word(&[X0, Y, X1, Y])).unwrap());
        let b = cyclic_bracket(&c, &c, &full_alphabet(2));
        assert!(b.is_zero());
    }
}
