//! Extended bases, homogeneous affine bases, and rigid generators of the
//! modular complexes.

use super::mat::{det, from_cols, IntMat};
use crate::linalg::{Error, Result};

/// An (m+1)-tuple of integer m-vectors summing to zero whose first m form
/// a basis of the lattice.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExtendedBasisSymbol {
    pub vectors: Vec<Vec<i64>>,
}

impl ExtendedBasisSymbol {
    pub fn new(vectors: Vec<Vec<i64>>) -> Result<Self> {
        let m = vectors.len() - 1;
        for k in 0..vectors[0].len() {
            let s: i64 = vectors.iter().map(|v| v[k]).sum();
            if s != 0 {
                return Err(Error::InvalidArgument(
                    "extended basis vectors must sum to zero".into(),
                ));
            }
        }
        let g = from_cols(&vectors[..m]);
        if det(&g).abs() != 1 {
            return Err(Error::InvalidArgument(
                "first m vectors must form a lattice basis".into(),
            ));
        }
        Ok(ExtendedBasisSymbol { vectors })
    }

    /// The reference: standard unit vectors and v_{m+1} = -(e_1+...+e_m).
    pub fn reference(m: usize) -> Self {
        let mut vectors: Vec<Vec<i64>> = (0..m)
            .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
            .collect();
        vectors.push((0..m).map(|_| -1).collect());
        ExtendedBasisSymbol { vectors }
    }

    pub fn rank(&self) -> usize {
        self.vectors.len() - 1
    }
}

/// The canonical bijection between homogeneous affine bases and extended
/// bases: {u_1 : ... : u_{m+1}} <-> (u_2-u_1, ..., u_1-u_{m+1}).
pub fn affine_to_extended(us: &[Vec<i64>]) -> Result<ExtendedBasisSymbol> {
    let n = us.len();
    let mut vectors = Vec::with_capacity(n);
    for i in 0..n {
        let a = &us[(i + 1) % n];
        let b = &us[i];
        vectors.push(a.iter().zip(b).map(|(x, y)| x - y).collect());
    }
    ExtendedBasisSymbol::new(vectors)
}

/// Inverse of `affine_to_extended`, normalized so u_1 = 0.
pub fn extended_to_affine(e: &ExtendedBasisSymbol) -> Vec<Vec<i64>> {
    let m = e.rank();
    let dim = e.vectors[0].len();
    let mut us = vec![vec![0i64; dim]];
    for i in 0..m {
        let next: Vec<i64> = us[i].iter().zip(&e.vectors[i]).map(|(a, b)| a + b).collect();
        us.push(next);
    }
    us
}

/// A generator of M^k: an ordered tuple of extended bases of direct
/// summands whose concatenated bases form a basis of Z^m, with a sign from
/// reordering the (odd) tensor factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidGenerator {
    pub factors: Vec<ExtendedBasisSymbol>,
    pub twist: i8,
}

impl RigidGenerator {
    pub fn level(&self) -> usize {
        self.factors.len()
    }

    pub fn total_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    /// Reference generator of the decomposition type with ranks descending.
    pub fn reference(ranks: &[usize]) -> Self {
        let m: usize = ranks.iter().sum();
        let mut factors = Vec::with_capacity(ranks.len());
        let mut offset = 0usize;
        for &r in ranks {
            let mut vectors: Vec<Vec<i64>> = (0..r)
                .map(|i| {
                    (0..m)
                        .map(|j| i64::from(j == offset + i))
                        .collect()
                })
                .collect();
            let last: Vec<i64> = (0..m)
                .map(|j| {
                    if j >= offset && j < offset + r {
                        -1
                    } else {
                        0
                    }
                })
                .collect();
            vectors.push(last);
            factors.push(ExtendedBasisSymbol { vectors });
            offset += r;
        }
        RigidGenerator { factors, twist: 1 }
    }

    /// The unique unimodular matrix carrying the reference generator of the
    /// same decomposition type to this generator: its columns are the
    /// concatenated basis vectors of the factors. Returns (is_reference,
    /// transform).
    pub fn canonicalize(&self) -> Result<(bool, IntMat)> {
        let mut cols: Vec<Vec<i64>> = Vec::new();
        for f in &self.factors {
            // validate each factor
            let check = ExtendedBasisSymbol::new(f.vectors.clone());
            if check.is_err() && f.rank() > 0 {
                // rank-r factor inside Z^m: sum-zero still applies, but the
                // unimodularity check is on the concatenation below
                for k in 0..f.vectors[0].len() {
                    let s: i64 = f.vectors.iter().map(|v| v[k]).sum();
                    if s != 0 {
                        return Err(Error::InvalidArgument(
                            "factor vectors must sum to zero".into(),
                        ));
                    }
                }
            }
            for v in &f.vectors[..f.rank()] {
                cols.push(v.clone());
            }
        }
        let g = from_cols(&cols);
        if det(&g).abs() != 1 {
            return Err(Error::InvalidArgument(
                "concatenated factor bases are not unimodular".into(),
            ));
        }
        let is_ref =
            *self == RigidGenerator::reference(&self.factors.iter().map(|f| f.rank()).collect::<Vec<_>>())
                && self.twist == 1;
        Ok((is_ref, g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::mat::{identity, mul};

    #[test]
    fn reference_is_reference() {
        let r = RigidGenerator::reference(&[2, 1]);
        let (is_ref, g) = r.canonicalize().unwrap();
        assert!(is_ref);
        assert_eq!(g, identity(3));
    }

    #[test]
    fn bijection_round_trips() {
        let e = ExtendedBasisSymbol::new(vec![vec![0, 1], vec![-1, 0], vec![1, -1]]).unwrap();
        let us = extended_to_affine(&e);
        let back = affine_to_extended(&us).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn transform_solves_columns() {
        // m=2 generator <(0,1),(-1,0),(1,-1)>
        let e = ExtendedBasisSymbol::new(vec![vec![0, 1], vec![-1, 0], vec![1, -1]]).unwrap();
        let g = RigidGenerator {
            factors: vec![e],
            twist: 1,
        };
        let (is_ref, t) = g.canonicalize().unwrap();
        assert!(!is_ref);
        assert_eq!(t, vec![vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn equivariance_of_transform() {
        let e = ExtendedBasisSymbol::new(vec![vec![0, 1], vec![-1, 0], vec![1, -1]]).unwrap();
        let g = RigidGenerator {
            factors: vec![e.clone()],
            twist: 1,
        };
        let (_, t) = g.canonicalize().unwrap();
        // act by h: vectors h*v, transform becomes h*t
        let h = vec![vec![1, 1], vec![0, 1]];
        let acted = RigidGenerator {
            factors: vec![ExtendedBasisSymbol::new(
                e.vectors
                    .iter()
                    .map(|v| super::super::mat::mat_vec(&h, v))
                    .collect(),
            )
            .unwrap()],
            twist: 1,
        };
        let (_, t2) = acted.canonicalize().unwrap();
        assert_eq!(t2, mul(&h, &t));
    }
}
