//! Quotients of an indexed ambient space by a sparse rational row space.
//!
//! The relation row space is kept in reduced row echelon form with pivot
//! columns leftmost-first, so quotient bases (the free columns, in order)
//! are reproducible across runs.

use super::sparse::{vec_add_scaled, vec_scale, SparseMatrix, SparseVec};
use super::{Error, Rational, Result};
use num::{One, Zero};

/// Reduced row echelon form of the row space of `m`, rows sorted by pivot.
pub fn rref(m: &SparseMatrix) -> Vec<SparseVec> {
    let mut pivots: Vec<SparseVec> = Vec::new(); // sorted by leading column
    for row in m.rows_iter() {
        insert_row(&mut pivots, row.clone());
    }
    pivots
}

fn reduce_against(pivots: &[SparseVec], mut v: SparseVec) -> SparseVec {
    // One pass suffices because pivot rows are fully reduced against each
    // other and sorted by leading column.
    let mut k = 0;
    loop {
        if v.is_empty() {
            return v;
        }
        // Find the pivot row whose leading column matches some entry of v.
        let mut hit = None;
        'scan: while k < pivots.len() {
            let lead = pivots[k][0].0;
            match v.binary_search_by_key(&lead, |e| e.0) {
                Ok(pos) => {
                    hit = Some((k, pos));
                    break 'scan;
                }
                Err(_) => {
                    if lead > v.last().unwrap().0 {
                        break 'scan;
                    }
                    k += 1;
                }
            }
        }
        match hit {
            Some((pi, pos)) => {
                let coeff = -v[pos].1.clone();
                vec_add_scaled(&mut v, &pivots[pi], &coeff);
                k = pi + 1;
            }
            None => return v,
        }
    }
}

fn insert_row(pivots: &mut Vec<SparseVec>, row: SparseVec) {
    let mut v = reduce_against(pivots, row);
    if v.is_empty() {
        return;
    }
    let lead_inv = v[0].1.clone().recip();
    vec_scale(&mut v, &lead_inv);
    let lead = v[0].0;
    // Back-substitute into existing pivot rows.
    for p in pivots.iter_mut() {
        if let Ok(pos) = p.binary_search_by_key(&lead, |e| e.0) {
            let coeff = -p[pos].1.clone();
            vec_add_scaled(p, &v, &coeff);
        }
    }
    let at = pivots.partition_point(|p| p[0].0 < lead);
    pivots.insert(at, v);
}

/// A sparse rational row space in reduced echelon form inside an indexed
/// ambient space, together with the quotient it defines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    ambient_dim: usize,
    rows: Vec<SparseVec>,
    pivot_cols: Vec<usize>,
    free_cols: Vec<usize>,
}

impl QuotientSpace {
    /// Echelonize `relations` and form the quotient of ambient dimension
    /// `ambient_dim` by its row space.
    pub fn new(ambient_dim: usize, relations: &SparseMatrix) -> Result<Self> {
        if relations.ncols() != ambient_dim && relations.nrows() > 0 {
            return Err(Error::Dimension(format!(
                "relations have {} columns, ambient dimension is {}",
                relations.ncols(),
                ambient_dim
            )));
        }
        let rows = rref(relations);
        let pivot_cols: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let mut is_pivot = vec![false; ambient_dim];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let free_cols = (0..ambient_dim).filter(|&c| !is_pivot[c]).collect();
        Ok(QuotientSpace {
            ambient_dim,
            rows,
            pivot_cols,
            free_cols,
        })
    }

    pub fn full(ambient_dim: usize) -> Self {
        QuotientSpace::new(ambient_dim, &SparseMatrix::zero(0, ambient_dim)).unwrap()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.rows.len()
    }

    /// Echelon relation rows, sorted by pivot column.
    pub fn relation_rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Ambient indices of the chosen quotient basis (the free columns).
    pub fn basis_cols(&self) -> &[usize] {
        &self.free_cols
    }

    /// Canonical representative of `v + rowspace`, supported on free columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        reduce_against(&self.rows, v.clone())
    }

    /// Is `v` in the relation row space?
    pub fn in_span(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of the class of `v` with respect to the quotient basis.
    pub fn coordinates(&self, v: &SparseVec) -> Vec<Rational> {
        let reduced = self.reduce(v);
        let mut out = vec![Rational::zero(); self.free_cols.len()];
        for (c, val) in reduced {
            let k = self
                .free_cols
                .binary_search(&c)
                .expect("reduced vector supported on free columns");
            out[k] = val;
        }
        out
    }

    /// Sparse coordinates of the class of `v` in the quotient basis.
    pub fn coordinates_sparse(&self, v: &SparseVec) -> SparseVec {
        let reduced = self.reduce(v);
        reduced
            .into_iter()
            .map(|(c, val)| (self.free_cols.binary_search(&c).unwrap(), val))
            .collect()
    }

    /// Ambient representative of the `k`-th quotient basis vector.
    pub fn basis_representative(&self, k: usize) -> SparseVec {
        vec![(self.free_cols[k], Rational::one())]
    }
}

/// The matrix of the map induced by `f` (ambient source -> ambient target)
/// on the chosen quotient bases. Fails with a witness if `f` does not carry
/// source relations into the target relation row space.
pub fn induced_map(
    f: &SparseMatrix,
    src: &QuotientSpace,
    dst: &QuotientSpace,
) -> Result<SparseMatrix> {
    if f.ncols() != src.ambient_dim() || f.nrows() != dst.ambient_dim() {
        return Err(Error::Dimension(format!(
            "map is {}x{}, expected {}x{}",
            f.nrows(),
            f.ncols(),
            dst.ambient_dim(),
            src.ambient_dim()
        )));
    }
    for (idx, rel) in src.relation_rows().iter().enumerate() {
        let image = f.apply(rel);
        if !dst.in_span(&image) {
            return Err(Error::WellDefinedness {
                witness_index: idx,
                witness: rel.clone(),
            });
        }
    }
    let mut out = SparseMatrix::zero(dst.dim(), src.dim());
    for k in 0..src.dim() {
        let image = f.apply(&src.basis_representative(k));
        for (r, val) in dst.coordinates_sparse(&image) {
            out.set(r, k, val);
        }
    }
    Ok(out)
}
