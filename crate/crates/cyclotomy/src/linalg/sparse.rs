use super::Rational;
use num::Zero;
use std::collections::BTreeMap;

/// A sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn vec_from_entries(entries: impl IntoIterator<Item = (usize, Rational)>) -> SparseVec {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (i, c) in entries {
        let slot = acc.entry(i).or_insert_with(Rational::zero);
        *slot += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn vec_add_scaled(dst: &mut SparseVec, src: &SparseVec, scale: &Rational) {
    if scale.is_zero() || src.is_empty() {
        return;
    }
    let mut out: SparseVec = Vec::with_capacity(dst.len() + src.len());
    let mut a = dst.iter().peekable();
    let mut b = src.iter().peekable();
    loop {
        match (a.peek(), b.peek()) {
            (Some((ia, _)), Some((ib, _))) => {
                if ia < ib {
                    out.push(a.next().unwrap().clone());
                } else if ib < ia {
                    let (i, c) = b.next().unwrap();
                    out.push((*i, c * scale));
                } else {
                    let (i, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = ca + cb * scale;
                    if !c.is_zero() {
                        out.push((*i, c));
                    }
                }
            }
            (Some(_), None) => out.push(a.next().unwrap().clone()),
            (None, Some(_)) => {
                let (i, c) = b.next().unwrap();
                out.push((*i, c * scale));
            }
            (None, None) => break,
        }
    }
    *dst = out;
}

pub fn vec_scale(v: &mut SparseVec, scale: &Rational) {
    if scale.is_zero() {
        v.clear();
    } else {
        for (_, c) in v.iter_mut() {
            *c *= scale;
        }
    }
}

/// Sparse rational matrix, row-major, no duplicate positions, no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, super::rat(1))]).collect();
        SparseMatrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        for r in &rows {
            debug_assert!(r.windows(2).all(|w| w[0].0 < w[1].0));
            debug_assert!(r.iter().all(|(i, c)| *i < cols && !c.is_zero()));
        }
        SparseMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i, c.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &SparseVec> {
        self.data.iter()
    }

    pub fn push_row(&mut self, row: SparseVec) {
        debug_assert!(row.iter().all(|(i, _)| *i < self.cols));
        self.data.push(row);
        self.rows += 1;
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        assert!(i < self.rows && j < self.cols);
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |e| e.0) {
            Ok(pos) => {
                if value.is_zero() {
                    row.remove(pos);
                } else {
                    row[pos].1 = value;
                }
            }
            Err(pos) => {
                if !value.is_zero() {
                    row.insert(pos, (j, value));
                }
            }
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i]
            .binary_search_by_key(&j, |e| e.0)
            .map(|pos| self.data[i][pos].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, c)| (i, *j, c)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut data = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, c) in row {
                data[*j].push((i, c.clone()));
            }
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Matrix-vector product; `v` lives in the column space.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        // Column access is awkward row-major; iterate rows instead.
        for (i, row) in self.data.iter().enumerate() {
            let mut s = Rational::zero();
            let mut ri = row.iter().peekable();
            let mut vi = v.iter().peekable();
            while let (Some((a, _)), Some((b, _))) = (ri.peek(), vi.peek()) {
                if a < b {
                    ri.next();
                } else if b < a {
                    vi.next();
                } else {
                    let (_, ca) = ri.next().unwrap();
                    let (_, cb) = vi.next().unwrap();
                    s += ca * cb;
                }
            }
            if !s.is_zero() {
                acc.insert(i, s);
            }
        }
        acc.into_iter().collect()
    }

    pub fn matmul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut data = Vec::with_capacity(self.rows);
        for row in &self.data {
            let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, c) in row {
                for (j, d) in &rhs.data[*k] {
                    let slot = acc.entry(*j).or_insert_with(Rational::zero);
                    *slot += c * d;
                }
            }
            data.push(
                acc.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .collect::<SparseVec>(),
            );
        }
        SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    #[test]
    fn apply_and_matmul_agree() {
        let m = SparseMatrix::from_dense(&[
            vec![rat(1), rat(2), rat(0)],
            vec![rat(0), rat(1), rat(-1)],
        ]);
        let v = vec![(0, rat(3)), (2, rat(5))];
        assert_eq!(m.apply(&v), vec![(0, rat(3)), (1, rat(-5))]);
        let id = SparseMatrix::identity(3);
        assert_eq!(m.matmul(&id), m);
    }

    #[test]
    fn transpose_roundtrip() {
        let m = SparseMatrix::from_dense(&[vec![rat(1), rat(2)], vec![rat(3), rat(0)]]);
        assert_eq!(m.transpose().transpose(), m);
    }
}
