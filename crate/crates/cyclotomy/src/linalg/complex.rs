//! Finite complexes of finite-dimensional rational spaces.

use super::rank::rank_exact;
use super::sparse::SparseMatrix;
use super::{Error, Result};

/// A finite sequence of finite-dimensional rational spaces with differential
/// matrices. `diffs[i]` maps the `i`-th space into the `(i+1)`-th; matrices
/// act on chosen (quotient) bases, so spaces are recorded by dimension only.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    dims: Vec<usize>,
    diffs: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(dims: Vec<usize>, diffs: Vec<SparseMatrix>) -> Result<Self> {
        if diffs.len() + 1 != dims.len() && !(dims.is_empty() && diffs.is_empty()) {
            return Err(Error::Dimension(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len().saturating_sub(1),
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.ncols() != dims[i] || d.nrows() != dims[i + 1] {
                return Err(Error::Dimension(format!(
                    "differential {} is {}x{}, expected {}x{}",
                    i,
                    d.nrows(),
                    d.ncols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        Ok(ChainComplex { dims, diffs })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn diffs(&self) -> &[SparseMatrix] {
        &self.diffs
    }

    /// Certify d.d = 0; error carries the first offending position.
    pub fn check_composition_zero(&self) -> Result<()> {
        for i in 0..self.diffs.len().saturating_sub(1) {
            let comp = self.diffs[i + 1].matmul(&self.diffs[i]);
            if !comp.is_zero() {
                let witness = comp
                    .rows_iter()
                    .find(|r| !r.is_empty())
                    .cloned()
                    .unwrap_or_default();
                return Err(Error::Complex {
                    position: i,
                    position_plus_two: i + 2,
                    witness,
                });
            }
        }
        Ok(())
    }

    /// Homology dimensions dim ker/im at each position. Asserts d.d = 0.
    pub fn homology_dims(&self) -> Result<Vec<usize>> {
        self.check_composition_zero()?;
        let ranks: Vec<usize> = self.diffs.iter().map(rank_exact).collect();
        let mut out = Vec::with_capacity(self.dims.len());
        for i in 0..self.dims.len() {
            let r_out = if i < ranks.len() { ranks[i] } else { 0 };
            let r_in = if i > 0 { ranks[i - 1] } else { 0 };
            out.push(self.dims[i] - r_out - r_in);
        }
        Ok(out)
    }

    /// Alternating sum of space dimensions, signs starting with `+` at the
    /// first space.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn single_zero_map() {
        let c = ChainComplex::new(vec![1, 1], vec![SparseMatrix::zero(1, 1)]).unwrap();
        assert_eq!(c.homology_dims().unwrap(), vec![1, 1]);
    }

    #[test]
    fn identity_is_acyclic() {
        let c = ChainComplex::new(vec![1, 1], vec![SparseMatrix::identity(1)]).unwrap();
        assert_eq!(c.homology_dims().unwrap(), vec![0, 0]);
    }

    #[test]
    fn nonzero_composition_detected() {
        let d0 = SparseMatrix::identity(1);
        let d1 = SparseMatrix::identity(1);
        let c = ChainComplex::new(vec![1, 1, 1], vec![d0, d1]).unwrap();
        match c.homology_dims() {
            Err(Error::Complex { position, .. }) => assert_eq!(position, 0),
            other => panic!("expected complex error, got {other:?}"),
        }
    }

    #[test]
    fn euler_characteristic_matches_homology() {
        let d0 = SparseMatrix::from_dense(&[vec![rat(1), rat(0)], vec![rat(0), rat(0)]]);
        let c = ChainComplex::new(vec![2, 2], vec![d0]).unwrap();
        let h = c.homology_dims().unwrap();
        let chi_h: i64 = h
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum();
        assert_eq!(c.euler_characteristic(), chi_h);
    }
}
