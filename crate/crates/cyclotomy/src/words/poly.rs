use super::letters::{GroupElt, Letter, Word};
use crate::linalg::Rational;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An element of the free associative algebra A(G): a finite Q-linear
/// combination of words, canonically ordered, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NoncommPoly {
    terms: BTreeMap<Word, Rational>,
}

impl NoncommPoly {
    pub fn zero() -> Self {
        NoncommPoly::default()
    }

    pub fn one() -> Self {
        NoncommPoly::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Rational::one());
        NoncommPoly { terms }
    }

    pub fn from_letter(l: Letter) -> Self {
        NoncommPoly::from_word(Word(vec![l]))
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Word, Rational)>) -> Self {
        let mut p = NoncommPoly::zero();
        for (w, c) in it {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            // re-lookup to remove; borrow rules
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> NoncommPoly {
        if c.is_zero() {
            return NoncommPoly::zero();
        }
        NoncommPoly {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn commutator(&self, other: &NoncommPoly) -> NoncommPoly {
        &(self * other) - &(other * self)
    }

    pub fn translate(&self, h: &GroupElt) -> NoncommPoly {
        NoncommPoly::from_terms(self.terms.iter().map(|(w, c)| (w.translate(h), c.clone())))
    }

    /// Keep only terms of the given weight.
    pub fn weight_part(&self, weight: usize) -> NoncommPoly {
        NoncommPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.weight() == weight)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add for &NoncommPoly {
    type Output = NoncommPoly;
    fn add(self, rhs: &NoncommPoly) -> NoncommPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NoncommPoly {
    type Output = NoncommPoly;
    fn sub(self, rhs: &NoncommPoly) -> NoncommPoly {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &NoncommPoly {
    type Output = NoncommPoly;
    fn neg(self) -> NoncommPoly {
        self.scale(&-Rational::one())
    }
}

impl Mul for &NoncommPoly {
    type Output = NoncommPoly;
    fn mul(self, rhs: &NoncommPoly) -> NoncommPoly {
        let mut out = NoncommPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for NoncommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){w}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn x(a: u32) -> Letter {
        Letter::X(a)
    }

    #[test]
    fn ring_ops() {
        let p = NoncommPoly::from_letter(x(0));
        let q = NoncommPoly::from_letter(Letter::Y);
        let pq = &p * &q;
        let qp = &q * &p;
        assert_ne!(pq, qp);
        let c = p.commutator(&q);
        assert_eq!(c, &pq - &qp);
        assert!((&c - &c).is_zero());
        assert_eq!(c.scale(&rat(0)), NoncommPoly::zero());
    }

    #[test]
    fn cancellation() {
        let p = NoncommPoly::from_letter(x(0));
        let mut s = &p + &p;
        s.add_term(Word(vec![x(0)]), rat(-2));
        assert!(s.is_zero());
    }
}
