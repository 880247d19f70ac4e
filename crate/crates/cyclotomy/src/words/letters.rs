use serde::Serialize;
use std::fmt;

/// An element of Z/N, written multiplicatively as zeta^a.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupElt {
    residue: u32,
    modulus: u32,
}

impl GroupElt {
    pub fn new(residue: i64, modulus: u32) -> Self {
        assert!(modulus >= 1);
        GroupElt {
            residue: residue.rem_euclid(modulus as i64) as u32,
            modulus,
        }
    }

    pub fn identity(modulus: u32) -> Self {
        GroupElt::new(0, modulus)
    }

    pub fn residue(&self) -> u32 {
        self.residue
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn mul(&self, other: &GroupElt) -> GroupElt {
        assert_eq!(self.modulus, other.modulus);
        GroupElt::new(self.residue as i64 + other.residue as i64, self.modulus)
    }

    pub fn inv(&self) -> GroupElt {
        GroupElt::new(-(self.residue as i64), self.modulus)
    }

    pub fn pow(&self, k: i64) -> GroupElt {
        GroupElt::new(self.residue as i64 * k, self.modulus)
    }

    pub fn is_identity(&self) -> bool {
        self.residue == 0
    }

    pub fn all(modulus: u32) -> impl Iterator<Item = GroupElt> {
        (0..modulus).map(move |a| GroupElt::new(a as i64, modulus))
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.residue == 0 {
            write!(f, "e")
        } else {
            write!(f, "z^{}", self.residue)
        }
    }
}

/// A letter of the free algebra A(G): Y or X_g.
///
/// The fixed total order is Y < X_0 < X_1 < ... < X_{N-1}; minimal-rotation
/// canonicalization of cyclic words is taken with respect to it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Letter {
    Y,
    X(u32),
}

impl Letter {
    pub fn is_x(&self) -> bool {
        matches!(self, Letter::X(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Y => write!(f, "Y"),
            Letter::X(a) => write!(f, "X{a}"),
        }
    }
}

/// A word in the letters; weight = length, depth = number of X letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    pub fn depth(&self) -> usize {
        self.0.iter().filter(|l| l.is_x()).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_pure_power(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|l| *l == self.0[0])
    }

    /// Apply h in G: X_g -> X_{hg}, Y fixed.
    pub fn translate(&self, h: &GroupElt) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| match l {
                    Letter::Y => Letter::Y,
                    Letter::X(a) => {
                        Letter::X(GroupElt::new(*a as i64, h.modulus()).mul(h).residue())
                    }
                })
                .collect(),
        )
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_arithmetic() {
        let g = GroupElt::new(3, 5);
        assert_eq!(g.mul(&g.inv()), GroupElt::identity(5));
        assert_eq!(g.pow(2).residue(), 1);
        assert_eq!(GroupElt::new(-1, 5).residue(), 4);
    }

    #[test]
    fn letter_order() {
        assert!(Letter::Y < Letter::X(0));
        assert!(Letter::X(0) < Letter::X(3));
    }

    #[test]
    fn weight_and_depth() {
        let w = Word(vec![Letter::X(0), Letter::Y, Letter::X(1)]);
        assert_eq!(w.weight(), 3);
        assert_eq!(w.depth(), 2);
    }
}
