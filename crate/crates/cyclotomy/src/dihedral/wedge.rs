//! Graded exterior powers of a family of bigraded pieces, with the
//! differential extended from a per-atom cobracket by the Leibniz rule.

use crate::linalg::{Rational, SparseMatrix};
use std::collections::HashMap;

/// (weight, depth) of a graded piece.
pub type PieceKey = (u32, u32);

/// An atom is one basis vector of one piece; atoms are globally numbered,
/// ordered by piece key and then by index inside the piece.
pub type AtomId = usize;

#[derive(Debug, Clone)]
pub struct WedgeSpace {
    pieces: Vec<(PieceKey, usize)>,
    offsets: Vec<usize>,
    total_atoms: usize,
}

impl WedgeSpace {
    /// Pieces of dimension zero are dropped.
    pub fn new(mut pieces: Vec<(PieceKey, usize)>) -> Self {
        pieces.retain(|(_, d)| *d > 0);
        pieces.sort();
        pieces.dedup();
        let mut offsets = Vec::with_capacity(pieces.len());
        let mut acc = 0usize;
        for (_, d) in &pieces {
            offsets.push(acc);
            acc += d;
        }
        WedgeSpace {
            pieces,
            offsets,
            total_atoms: acc,
        }
    }

    pub fn pieces(&self) -> &[(PieceKey, usize)] {
        &self.pieces
    }

    pub fn total_atoms(&self) -> usize {
        self.total_atoms
    }

    pub fn piece_index(&self, key: PieceKey) -> Option<usize> {
        self.pieces.binary_search_by_key(&key, |(k, _)| *k).ok()
    }

    pub fn atom(&self, key: PieceKey, idx: usize) -> Option<AtomId> {
        let pi = self.piece_index(key)?;
        debug_assert!(idx < self.pieces[pi].1);
        Some(self.offsets[pi] + idx)
    }

    pub fn atom_piece(&self, a: AtomId) -> (PieceKey, usize) {
        let pi = self.offsets.partition_point(|&o| o <= a) - 1;
        (self.pieces[pi].0, a - self.offsets[pi])
    }

    pub fn bidegree(&self, a: AtomId) -> PieceKey {
        self.atom_piece(a).0
    }
}

/// Sort a tuple of distinct atoms, returning the permutation sign, or None
/// if two atoms coincide.
pub fn sort_with_sign(tuple: &mut [AtomId]) -> Option<i32> {
    let mut sign = 1i32;
    // insertion sort, counting swaps
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] >= tuple[j] {
            if tuple[j - 1] == tuple[j] {
                return None;
            }
            tuple.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    Some(sign)
}

/// The basis of the (w, m)-graded piece of Lambda^k: strictly increasing
/// k-tuples of atoms whose bidegrees sum to (w, m).
#[derive(Debug, Clone)]
pub struct WedgeBasis {
    pub k: usize,
    pub total: PieceKey,
    pub tuples: Vec<Vec<AtomId>>,
    index: HashMap<Vec<AtomId>, usize>,
}

impl WedgeBasis {
    pub fn new(space: &WedgeSpace, k: usize, total: PieceKey) -> Self {
        let mut tuples = Vec::new();
        let mut cur: Vec<AtomId> = Vec::with_capacity(k);
        fn rec(
            space: &WedgeSpace,
            k: usize,
            rem: (i64, i64),
            start: AtomId,
            cur: &mut Vec<AtomId>,
            out: &mut Vec<Vec<AtomId>>,
        ) {
            if cur.len() == k {
                if rem == (0, 0) {
                    out.push(cur.clone());
                }
                return;
            }
            for a in start..space.total_atoms() {
                let (w, m) = space.bidegree(a);
                let next = (rem.0 - w as i64, rem.1 - m as i64);
                if next.0 < 0 || next.1 < 0 {
                    continue;
                }
                // remaining slots each need weight >= depth >= 1
                let slots_left = (k - cur.len() - 1) as i64;
                if next.1 < slots_left || next.0 < slots_left {
                    continue;
                }
                cur.push(a);
                rec(space, k, next, a + 1, cur, out);
                cur.pop();
            }
        }
        rec(
            space,
            k,
            (total.0 as i64, total.1 as i64),
            0,
            &mut cur,
            &mut tuples,
        );
        tuples.sort();
        let index = tuples
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        WedgeBasis {
            k,
            total,
            tuples,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.tuples.len()
    }

    pub fn index_of(&self, tuple: &[AtomId]) -> Option<usize> {
        self.index.get(tuple).copied()
    }
}

/// delta of each atom as normalized wedge pairs (a < b).
pub type DeltaTable = HashMap<AtomId, Vec<(AtomId, AtomId, Rational)>>;

/// The Leibniz extension d: Lambda^k -> Lambda^{k+1},
/// d(x_1 ^ ... ^ x_k) = sum_i (-1)^{i-1} x_1 ^ ... ^ delta(x_i) ^ ... ^ x_k.
pub fn leibniz_differential(
    deltas: &DeltaTable,
    from: &WedgeBasis,
    to: &WedgeBasis,
) -> SparseMatrix {
    let mut out = SparseMatrix::zero(to.dim(), from.dim());
    for (col, tuple) in from.tuples.iter().enumerate() {
        for (i, &atom) in tuple.iter().enumerate() {
            let Some(pairs) = deltas.get(&atom) else {
                continue;
            };
            let pos_sign = if i % 2 == 0 { 1i32 } else { -1 };
            for (a, b, c) in pairs {
                let mut new_tuple: Vec<AtomId> = Vec::with_capacity(tuple.len() + 1);
                new_tuple.extend_from_slice(&tuple[..i]);
                new_tuple.push(*a);
                new_tuple.push(*b);
                new_tuple.extend_from_slice(&tuple[i + 1..]);
                let Some(sort_sign) = sort_with_sign(&mut new_tuple) else {
                    continue;
                };
                let row = to
                    .index_of(&new_tuple)
                    .expect("image tuple must be in the target basis");
                let mut cur = out.get(row, col);
                cur += c * crate::linalg::rat((pos_sign * sort_sign) as i64);
                out.set(row, col, cur);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms_and_bidegrees() {
        let s = WedgeSpace::new(vec![((3, 1), 1), ((5, 1), 1), ((2, 2), 0)]);
        assert_eq!(s.total_atoms(), 2);
        assert_eq!(s.bidegree(0), (3, 1));
        assert_eq!(s.bidegree(1), (5, 1));
    }

    #[test]
    fn wedge_pairs() {
        // atoms: (3,1) x1, (5,1) x1, (7,1) x1 -> Lambda^2 at (8,2) has one
        // tuple {3,5}; at (10,2) has one tuple {3,7}
        let s = WedgeSpace::new(vec![((3, 1), 1), ((5, 1), 1), ((7, 1), 1)]);
        assert_eq!(WedgeBasis::new(&s, 2, (8, 2)).dim(), 1);
        assert_eq!(WedgeBasis::new(&s, 2, (10, 2)).dim(), 1);
        assert_eq!(WedgeBasis::new(&s, 2, (6, 2)).dim(), 0);
        // same piece twice needs dim >= 2
        let s = WedgeSpace::new(vec![((3, 1), 2)]);
        assert_eq!(WedgeBasis::new(&s, 2, (6, 2)).dim(), 1);
        let s = WedgeSpace::new(vec![((3, 1), 1)]);
        assert_eq!(WedgeBasis::new(&s, 2, (6, 2)).dim(), 0);
    }

    #[test]
    fn sort_sign() {
        let mut t = vec![2, 1];
        assert_eq!(sort_with_sign(&mut t), Some(-1));
        assert_eq!(t, vec![1, 2]);
        let mut t = vec![3, 1, 2];
        assert_eq!(sort_with_sign(&mut t), Some(1));
        let mut t = vec![1, 1];
        assert_eq!(sort_with_sign(&mut t), None);
    }
}
