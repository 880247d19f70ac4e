//! Construction of the dihedral spaces by variant, plus the piece cache
//! shared by the cobracket and cochain-complex builders.

use super::basis::GeneratorBasis;
use super::relations::{relation_matrix, RelationFamily};
use super::tilde;
use crate::linalg::{rank, ComputeMode, Error, QuotientSpace, Result, SparseMatrix};
use crate::words::CyclicWord;
use serde_json::json;
use std::cell::RefCell;
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Variant {
    /// All defining relations (homogeneity, double shuffle, distribution,
    /// I_1(e:e) = 0).
    D,
    /// As D but without I_1(e:e) = 0: D-hat = D + Q_{(1,1)}.
    DHat,
    /// Cyclic words modulo pure powers: only homogeneity, cyclic symmetry
    /// and the vanishing of the constant diagonal term.
    DTilde,
    /// D-tilde modulo the cyclic-word shuffle relations.
    DPrime,
    /// Kernel of v_p inside the diagonal of D over a prime level.
    DUnramified,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Variant::D => "D",
            Variant::DHat => "Dhat",
            Variant::DTilde => "Dtilde",
            Variant::DPrime => "Dprime",
            Variant::DUnramified => "Dun",
        };
        write!(f, "{s}")
    }
}

/// What the ambient space is indexed by.
#[derive(Debug, Clone)]
pub enum BasisDescriptor {
    Generators(GeneratorBasis),
    /// Orbit representatives of cyclic words (variants D-tilde, D-prime).
    Orbits(Vec<CyclicWord>),
}

#[derive(Debug, Clone)]
pub struct DihedralSpace {
    pub weight: u32,
    pub depth: u32,
    pub level: u32,
    pub variant: Variant,
    pub basis: BasisDescriptor,
    pub quotient: QuotientSpace,
    /// For subspace variants (D-un at depth 1): coordinates, in the quotient
    /// basis, of a basis of the subspace.
    pub sub_basis: Option<Vec<Vec<crate::linalg::Rational>>>,
}

impl DihedralSpace {
    pub fn ambient(&self) -> usize {
        self.quotient.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        match &self.sub_basis {
            Some(b) => b.len(),
            None => self.quotient.dim(),
        }
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Build the (w, m) piece of the given variant over mu_N, with the exact
/// echelonized relation row space.
pub fn build_space(w: u32, m: u32, level: u32, variant: Variant) -> Result<DihedralSpace> {
    match variant {
        Variant::D | Variant::DHat => {
            let families = if variant == Variant::DHat {
                RelationFamily::defining_hat()
            } else {
                RelationFamily::defining()
            };
            let basis = GeneratorBasis::new(w, m, level)?;
            let rel = relation_matrix(w, m, level, &families)?;
            let quotient = QuotientSpace::new(basis.count(), &rel)?;
            Ok(DihedralSpace {
                weight: w,
                depth: m,
                level,
                variant,
                basis: BasisDescriptor::Generators(basis),
                quotient,
                sub_basis: None,
            })
        }
        Variant::DTilde | Variant::DPrime => {
            let orbits = tilde::orbit_basis(w, m, level);
            let rel = if variant == Variant::DPrime {
                tilde::shuffle_relation_rows(w, m, level, &orbits)?
            } else {
                SparseMatrix::zero(0, orbits.len())
            };
            let quotient = QuotientSpace::new(orbits.len(), &rel)?;
            Ok(DihedralSpace {
                weight: w,
                depth: m,
                level,
                variant,
                basis: BasisDescriptor::Orbits(orbits),
                quotient,
                sub_basis: None,
            })
        }
        Variant::DUnramified => {
            if !is_prime(level) {
                return Err(Error::UnsupportedVariant(format!(
                    "D-un requires a prime level, got {level}"
                )));
            }
            if w != m {
                return Err(Error::UnsupportedVariant(
                    "D-un is defined on the diagonal weight = depth".into(),
                ));
            }
            let d = build_space(w, m, level, Variant::D)?;
            let sub = super::unramified::kernel_basis(&d)?;
            Ok(DihedralSpace {
                sub_basis: Some(sub),
                variant: Variant::DUnramified,
                ..d
            })
        }
    }
}

/// Dimension only; fast mode avoids echelonizing over Q.
pub fn space_dim(w: u32, m: u32, level: u32, variant: Variant, mode: ComputeMode) -> Result<usize> {
    match variant {
        Variant::D | Variant::DHat => {
            let families = if variant == Variant::DHat {
                RelationFamily::defining_hat()
            } else {
                RelationFamily::defining()
            };
            let basis = GeneratorBasis::new(w, m, level)?;
            let rel = relation_matrix(w, m, level, &families)?;
            Ok(basis.count() - rank(&rel, mode))
        }
        Variant::DTilde => Ok(tilde::orbit_basis(w, m, level).len()),
        Variant::DPrime => {
            let orbits = tilde::orbit_basis(w, m, level);
            let rel = tilde::shuffle_relation_rows(w, m, level, &orbits)?;
            Ok(orbits.len() - rank(&rel, mode))
        }
        Variant::DUnramified => Ok(build_space(w, m, level, variant)?.dim()),
    }
}

/// JSON layout for golden tests: basis listing + echelon relation rows.
/// Rational entries are recorded as [index, "num", "den"] triples.
pub fn serialize_space(s: &DihedralSpace) -> serde_json::Value {
    let basis = match &s.basis {
        BasisDescriptor::Generators(b) => {
            b.iter().map(|g| g.to_string()).collect::<Vec<_>>()
        }
        BasisDescriptor::Orbits(o) => o.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    };
    let rows: Vec<Vec<serde_json::Value>> = s
        .quotient
        .relation_rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|(i, c)| {
                    json!([i, c.numer().to_string(), c.denom().to_string()])
                })
                .collect()
        })
        .collect();
    json!({
        "grading": {"w": s.weight, "m": s.depth, "N": s.level},
        "variant": s.variant.to_string(),
        "ambient": s.ambient(),
        "dim": s.dim(),
        "basis": basis,
        "relation_rows": rows,
    })
}

/// Cache of exact quotient pieces of one variant family over one level.
/// `hat` controls whether the (1,1) piece keeps I_1(e:e) as a generator.
pub struct PieceCache {
    level: u32,
    hat: bool,
    map: RefCell<BTreeMap<(u32, u32), Rc<QuotientSpace>>>,
}

impl PieceCache {
    pub fn new(level: u32, hat: bool) -> Self {
        PieceCache {
            level,
            hat,
            map: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_hat(&self) -> bool {
        self.hat
    }

    pub fn quotient(&self, w: u32, m: u32) -> Result<Rc<QuotientSpace>> {
        if let Some(q) = self.map.borrow().get(&(w, m)) {
            return Ok(q.clone());
        }
        let variant = if self.hat && (w, m) == (1, 1) {
            Variant::DHat
        } else {
            Variant::D
        };
        let space = build_space(w, m, self.level, variant)?;
        let q = Rc::new(space.quotient);
        self.map.borrow_mut().insert((w, m), q.clone());
        Ok(q)
    }

    pub fn dim(&self, w: u32, m: u32) -> Result<usize> {
        Ok(self.quotient(w, m)?.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dhat_splits_off_one_dimension_at_11() {
        let d = build_space(1, 1, 1, Variant::D).unwrap();
        let dh = build_space(1, 1, 1, Variant::DHat).unwrap();
        assert_eq!(d.dim(), 0);
        assert_eq!(dh.dim(), 1);
        // higher pieces agree
        for (w, m) in [(3u32, 1u32), (8, 2)] {
            let a = build_space(w, m, 1, Variant::D).unwrap().dim();
            let b = build_space(w, m, 1, Variant::DHat).unwrap().dim();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn unramified_requires_prime_level() {
        assert!(matches!(
            build_space(1, 1, 4, Variant::DUnramified),
            Err(Error::UnsupportedVariant(_))
        ));
    }

    #[test]
    fn serialization_is_deterministic() {
        let s1 = serialize_space(&build_space(8, 2, 1, Variant::D).unwrap());
        let s2 = serialize_space(&build_space(8, 2, 1, Variant::D).unwrap());
        assert_eq!(s1.to_string(), s2.to_string());
        assert_eq!(s1["dim"], 1);
        assert_eq!(s1["ambient"], 7);
    }
}
