//! Symmetric powers of the standard representation of GL_m.

use super::mat::IntMat;
use crate::dihedral::compositions_with_zeros;
use crate::linalg::{rat, Rational, SparseMatrix};
use num::{One, Zero};
use std::collections::BTreeMap;

/// Monomial basis of S^d V_m, deterministic order.
pub fn monomials(m: usize, d: usize) -> Vec<Vec<u32>> {
    compositions_with_zeros(d as u32, m as u32)
}

pub fn sym_dim(m: usize, d: usize) -> usize {
    monomials(m, d).len()
}

/// The matrix of g on the monomial basis of S^d V_m, where g sends the
/// basis vector x_i to sum_j g[j][i] x_j (column action).
pub fn sym_power_rep(m: usize, d: usize, g: &IntMat) -> SparseMatrix {
    let basis = monomials(m, d);
    let index: BTreeMap<&Vec<u32>, usize> =
        basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut out = SparseMatrix::zero(basis.len(), basis.len());
    for (col, alpha) in basis.iter().enumerate() {
        // product over i of (sum_j g[j][i] x_j)^{alpha_i}
        let mut poly: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        poly.insert(vec![0; m], Rational::one());
        for (i, &a) in alpha.iter().enumerate() {
            for _ in 0..a {
                let mut next: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
                for (mono, c) in &poly {
                    for j in 0..m {
                        if g[j][i] == 0 {
                            continue;
                        }
                        let mut mm = mono.clone();
                        mm[j] += 1;
                        let slot = next.entry(mm).or_insert_with(Rational::zero);
                        *slot += c * rat(g[j][i]);
                    }
                }
                poly = next;
            }
        }
        for (mono, c) in poly {
            if !c.is_zero() {
                out.set(index[&mono], col, c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::mat::{identity, mul};

    #[test]
    fn dims() {
        assert_eq!(sym_dim(2, 6), 7);
        assert_eq!(sym_dim(3, 2), 6);
        assert_eq!(sym_dim(1, 5), 1);
    }

    #[test]
    fn identity_maps_to_identity() {
        let r = sym_power_rep(2, 3, &identity(2));
        assert_eq!(r, SparseMatrix::identity(4));
    }

    #[test]
    fn multiplicative() {
        let g = vec![vec![1, 1], vec![0, 1]];
        let h = vec![vec![0, -1], vec![1, 0]];
        let lhs = sym_power_rep(2, 4, &mul(&g, &h));
        let rhs = sym_power_rep(2, 4, &g).matmul(&sym_power_rep(2, 4, &h));
        assert_eq!(lhs, rhs);
    }
}
