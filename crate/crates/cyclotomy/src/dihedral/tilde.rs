//! The variants D-tilde and D-prime realized on the cyclic-word side.
//!
//! The generator I~_{n_0..n_m}(g_0:...:g_m) corresponds to the G-orbit of
//! the cyclic word X_{g_0} Y^{n_0-1} ... X_{g_m} Y^{n_m-1} (weight w+1,
//! depth m+1, pure powers excluded); D-prime divides by the image of the
//! shuffle relations C(X_e . (u sh v)).

use crate::linalg::{rank, ComputeMode, Rational, Result, SparseMatrix, SparseVec};
use crate::words::{
    coproduct_reduced, cyclic_canonical, d_s, necklaces_of_weight, orbit_sum, shuffle,
    words_of_weight, CyclicPoly, CyclicWord, GroupElt, Letter, NoncommPoly, Word,
};
use std::collections::{BTreeMap, HashMap};

/// Orbit representatives of the necklaces of weight w+1 and depth m+1 over
/// mu_N, excluding pure powers; the representative is the least translate.
pub fn orbit_basis(w: u32, m: u32, level: u32) -> Vec<CyclicWord> {
    let mut reps: Vec<CyclicWord> = necklaces_of_weight(w as usize + 1, level)
        .into_iter()
        .filter(|c| c.depth() == m as usize + 1 && !c.is_pure_power())
        .map(|c| min_translate(&c, level))
        .collect();
    reps.sort();
    reps.dedup();
    reps
}

fn min_translate(c: &CyclicWord, level: u32) -> CyclicWord {
    GroupElt::all(level)
        .map(|h| c.translate(&h))
        .min()
        .unwrap()
}

/// Index of each cyclic word's orbit in the orbit basis.
pub fn orbit_index(orbits: &[CyclicWord], level: u32) -> HashMap<CyclicWord, usize> {
    let mut map = HashMap::new();
    for (i, rep) in orbits.iter().enumerate() {
        for h in GroupElt::all(level) {
            map.insert(rep.translate(&h), i);
        }
    }
    map
}

/// Project a cyclic polynomial to orbit coordinates (coinvariants).
fn orbit_coords(
    p: &CyclicPoly,
    index: &HashMap<CyclicWord, usize>,
    ncols: usize,
) -> SparseVec {
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    for (c, v) in p.terms() {
        if c.is_pure_power() {
            continue; // killed in the C~ quotient
        }
        let i = *index
            .get(c)
            .unwrap_or_else(|| panic!("cyclic word {c} outside the orbit basis"));
        debug_assert!(i < ncols);
        let slot = acc.entry(i).or_insert_with(num::Zero::zero);
        *slot += v;
    }
    acc.into_iter()
        .filter(|(_, v)| !num::Zero::is_zero(v))
        .collect()
}

/// The shuffle relation rows of D-prime at (w, m, N) over the orbit basis:
/// the classes of C(X_e . (u sh v)) over all pairs of nonempty words with
/// |u| + |v| = w and depth(u) + depth(v) = m.
pub fn shuffle_relation_rows(
    w: u32,
    m: u32,
    level: u32,
    orbits: &[CyclicWord],
) -> Result<SparseMatrix> {
    let index = orbit_index(orbits, level);
    let xe = NoncommPoly::from_letter(Letter::X(0));
    let mut rows: Vec<SparseVec> = Vec::new();
    let mut seen: std::collections::HashSet<SparseVec> = std::collections::HashSet::new();
    for len_u in 1..w as usize {
        let len_v = w as usize - len_u;
        if len_v < len_u {
            break; // unordered pairs
        }
        for u in words_of_weight(len_u, level) {
            for v in words_of_weight(len_v, level) {
                if u.depth() + v.depth() != m as usize {
                    continue;
                }
                let sh = shuffle(&u, &v);
                let elem = &xe * &sh;
                let cyc = CyclicPoly::project(&elem);
                let row = orbit_coords(&cyc, &index, orbits.len());
                if !row.is_empty() && seen.insert(row.clone()) {
                    rows.push(row);
                }
            }
        }
    }
    Ok(SparseMatrix::from_rows(orbits.len(), rows))
}

/// Weight-graded, depth-graded dimensions of the Lie algebra of special
/// equivariant derivations of the free Lie algebra L(mu_N), computed
/// independently of the dihedral side: a G-invariant cyclic word x gives a
/// derivation of L iff D(X_e) = [D_{X_e}(x), X_e] is primitive; the depth
/// grading is read off the filtration by the number of X letters.
///
/// Returns dims indexed by the D-side depth m (words with >= m+1 X's).
pub fn der_se_graded_dims(w: u32, level: u32) -> BTreeMap<u32, usize> {
    // atoms: orbit representatives of weight w+1, any depth >= 1
    let mut atoms: Vec<CyclicWord> = necklaces_of_weight(w as usize + 1, level)
        .into_iter()
        .filter(|c| c.depth() >= 1 && !c.is_pure_power())
        .map(|c| min_translate(&c, level))
        .collect();
    atoms.sort();
    atoms.dedup();
    // deepest first so that depth-restricted column ranges are prefixes
    atoms.sort_by_key(|c| std::cmp::Reverse(c.depth()));

    // primitivity condition matrix: rows = (left, right) word pairs
    let mut pair_index: BTreeMap<(Word, Word), usize> = BTreeMap::new();
    let mut cols: Vec<Vec<(usize, Rational)>> = Vec::new();
    for atom in &atoms {
        let inv = orbit_sum(atom, level);
        let b = d_s(&inv, Letter::X(0));
        let dxe = b.commutator(&NoncommPoly::from_letter(Letter::X(0)));
        let cop = coproduct_reduced(&dxe);
        let mut col = Vec::with_capacity(cop.len());
        for (pair, c) in cop {
            let next = pair_index.len();
            let row = *pair_index.entry(pair).or_insert(next);
            col.push((row, c));
        }
        cols.push(col);
    }

    let nrows = pair_index.len();
    let mut out = BTreeMap::new();
    // nullity over the columns of depth >= m+1, for every m
    let max_depth = atoms.first().map_or(0, |c| c.depth());
    let mut prev_nullity = 0usize;
    for m in (0..max_depth as u32).rev() {
        // columns with depth >= m+1 form a prefix
        let cut = atoms.partition_point(|c| c.depth() >= (m + 1) as usize);
        let mut mat_rows: Vec<SparseVec> = vec![Vec::new(); nrows];
        for (j, col) in cols.iter().take(cut).enumerate() {
            for (row, c) in col {
                mat_rows[*row].push((j, c.clone()));
            }
        }
        for r in mat_rows.iter_mut() {
            r.sort_by_key(|e| e.0);
        }
        let mat = SparseMatrix::from_rows(cut, mat_rows);
        let nullity = cut - rank(&mat, ComputeMode::Exact);
        let graded = nullity - prev_nullity;
        if graded > 0 {
            out.insert(m, graded);
        }
        prev_nullity = nullity;
    }
    out
}

/// Consistency check used in tests: the eta image of a generator.
pub fn eta_word(exponents: &[u32], args: &[GroupElt]) -> CyclicWord {
    debug_assert_eq!(exponents.len(), args.len());
    let mut letters = Vec::new();
    for (n, g) in exponents.iter().zip(args) {
        letters.push(Letter::X(g.residue()));
        for _ in 1..*n {
            letters.push(Letter::Y);
        }
    }
    cyclic_canonical(&Word(letters)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dihedral::relations::{relation_matrix, RelationFamily};
    use crate::linalg::{rat, QuotientSpace};

    /// D'' = generators I with homogeneity, cyclic symmetry, t-shuffles and
    /// I_1(e:e) = 0; isomorphic to D-prime.
    fn dprime_via_generators(w: u32, m: u32, level: u32) -> usize {
        let full = relation_matrix(
            w,
            m,
            level,
            &[RelationFamily::ShuffleT, RelationFamily::I1ee],
        )
        .unwrap();
        let mut rows: Vec<SparseVec> = full.rows_iter().cloned().collect();
        // cyclic symmetry rows come packaged in the dihedral family; extract
        // them by building the family and keeping only the cyclic instances
        // is awkward, so regenerate: rotate the colon series by one slot.
        use crate::dihedral::basis::{arg_tuples, GeneratorBasis};
        use crate::dihedral::series_exp::{series_term, LinForm, SeriesForm};
        let basis = GeneratorBasis::new(w, m, level).unwrap();
        let mu = m as usize;
        let tv: Vec<LinForm> = (0..mu).map(|i| LinForm::var(mu, i)).collect();
        for gs in arg_tuples(m, level) {
            let mut args: Vec<GroupElt> = gs.clone();
            args.push(GroupElt::identity(level));
            let mut tf = tv.clone();
            tf.push(LinForm::zero(mu));
            let base = series_term(SeriesForm::Colon, &basis, &args, &tf).unwrap();
            let mut rot_args = args[1..].to_vec();
            rot_args.push(args[0]);
            let mut rot_t = tf[1..].to_vec();
            rot_t.push(tf[0].clone());
            let mut total = base;
            let mut term = series_term(SeriesForm::Colon, &basis, &rot_args, &rot_t).unwrap();
            term.scale(&rat(-1));
            total.add_in(&term);
            rows.extend(total.rows_of_degree((w - m) as usize));
        }
        let rel = SparseMatrix::from_rows(basis.count(), rows);
        QuotientSpace::new(basis.count(), &rel).unwrap().dim()
    }

    #[test]
    fn dprime_matches_generator_presentation() {
        for (w, m, n) in [
            (2u32, 1u32, 1u32),
            (3, 1, 1),
            (4, 1, 1),
            (3, 2, 1),
            (4, 2, 1),
            (5, 2, 1),
            (2, 1, 2),
            (3, 2, 2),
            (2, 2, 2),
        ] {
            let orbits = orbit_basis(w, m, n);
            let rel = shuffle_relation_rows(w, m, n, &orbits).unwrap();
            let dp = orbits.len() - rank(&rel, ComputeMode::Exact);
            let dpp = dprime_via_generators(w, m, n);
            assert_eq!(dp, dpp, "({w},{m},{n})");
        }
    }

    #[test]
    fn der_se_matches_dprime() {
        for n in [1u32, 2] {
            for w in 2..=5u32 {
                let graded = der_se_graded_dims(w, n);
                for m in 1..=2u32.min(w) {
                    let orbits = orbit_basis(w, m, n);
                    let rel = shuffle_relation_rows(w, m, n, &orbits).unwrap();
                    let dp = orbits.len() - rank(&rel, ComputeMode::Exact);
                    let der = graded.get(&m).copied().unwrap_or(0);
                    assert_eq!(dp, der, "w={w} m={m} N={n}");
                }
            }
        }
    }
}
