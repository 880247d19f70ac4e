//! Cross-checks between the shuffle and dihedral presentations of the
//! modular complexes.

use super::coinv::{collapse_operator, CoefficientModule, SymPower, Twist};
use super::operators::{dihedral_operators, relation_operators};
use crate::linalg::{QuotientSpace, Result, SparseMatrix, SparseVec};

fn image_rows(module: &impl CoefficientModule, ops: &[super::RelationOperator]) -> Result<Vec<SparseVec>> {
    let mut rows = Vec::new();
    for op in ops {
        let t = collapse_operator(module, op)?;
        rows.extend(t.transpose().rows_iter().cloned());
    }
    Ok(rows)
}

/// Whether the dihedral-operator image lies in the shuffle-operator image
/// on S^{w-m} V_m, and whether the two spans are equal.
pub fn shuffle_vs_dihedral(m: usize, w: u32) -> Result<(bool, bool)> {
    let module = SymPower {
        m,
        d: (w as usize).saturating_sub(m),
        twist: Twist::None,
    };
    let n = module.dim();
    let shuffle_rows = image_rows(&module, &relation_operators(m, 1)?)?;
    let dihedral_rows = image_rows(&module, &dihedral_operators(m))?;
    let shuffle_q = QuotientSpace::new(n, &SparseMatrix::from_rows(n, shuffle_rows))?;
    let dihedral_q = QuotientSpace::new(n, &SparseMatrix::from_rows(n, dihedral_rows))?;
    let contained = dihedral_q
        .relation_rows()
        .iter()
        .all(|r| shuffle_q.in_span(r));
    let equal = contained && shuffle_q.rank() == dihedral_q.rank();
    Ok((contained, equal))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_two_spans_are_equal() {
        for w in [2u32, 4, 6, 8, 10, 12] {
            let (contained, equal) = shuffle_vs_dihedral(2, w).unwrap();
            assert!(contained && equal, "w = {w}");
        }
    }

    #[test]
    fn rank_three_dihedral_in_shuffle_span() {
        for w in [3u32, 5] {
            let (contained, _) = shuffle_vs_dihedral(3, w).unwrap();
            assert!(contained, "w = {w}");
        }
    }
}
