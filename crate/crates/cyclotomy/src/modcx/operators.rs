//! Relation operators and differentials of the modular complexes at the
//! reference rigid generators, encoded as formal sums of unimodular
//! matrices. In coinvariants, a relation sum_i c_i g_i . ref collapses to
//! the operator sum_i c_i rho(g_i)^{-1} on the coefficient module, whose
//! image must be divided out; left-translates of the relations are absorbed
//! by the coinvariant identification.

use super::mat::{from_cols, identity, neg, IntMat};
use crate::linalg::{rat, Error, Rational, Result};

/// A formal sum of unimodular matrices.
#[derive(Debug, Clone)]
pub struct RelationOperator {
    pub terms: Vec<(Rational, IntMat)>,
}

fn e(m: usize, i: usize) -> Vec<i64> {
    (0..m).map(|j| i64::from(j == i)).collect()
}

fn neg_sum(m: usize) -> Vec<i64> {
    vec![-1; m]
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// All (p, m-p)-shuffles as sequences of 0-based indices.
fn shuffles(p: usize, m: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    let mut out = Vec::new();
    for positions in (0..m).combinations(p) {
        let mut seq = vec![usize::MAX; m];
        for (k, &pos) in positions.iter().enumerate() {
            seq[pos] = k;
        }
        let mut next = p;
        for slot in seq.iter_mut() {
            if *slot == usize::MAX {
                *slot = next;
                next += 1;
            }
        }
        out.push(seq);
    }
    out
}

/// The reference vectors (e_1, ..., e_m, -sum).
fn reference_vectors(m: usize) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = (0..m).map(|i| e(m, i)).collect();
    v.push(neg_sum(m));
    v
}

/// The degree-1 shuffle operators: both families at the reference extended
/// basis, for every split 1 <= p <= m-1; for m = 1 the single relation
/// <v_1, v_2> = <v_2, v_1>.
fn degree_one_operators(m: usize) -> Vec<RelationOperator> {
    if m == 1 {
        return vec![RelationOperator {
            terms: vec![(rat(1), identity(1)), (rat(-1), vec![vec![-1]])],
        }];
    }
    let mut ops = Vec::new();
    // extended-basis shuffles: sum_sigma <v_{s(1)}, ..., v_{s(m)}, v_{m+1}>
    for p in 1..m {
        let mut terms = Vec::new();
        for s in shuffles(p, m) {
            let cols: Vec<Vec<i64>> = s.iter().map(|&i| e(m, i)).collect();
            terms.push((rat(1), from_cols(&cols)));
        }
        ops.push(RelationOperator { terms });
    }
    // homogeneous-affine shuffles at u = (0, e_1, e_1+e_2, ...)
    let mut us: Vec<Vec<i64>> = vec![vec![0; m]];
    for i in 0..m {
        us.push(add(&us[i], &e(m, i)));
    }
    for p in 1..m {
        let mut terms = Vec::new();
        for s in shuffles(p, m) {
            let mut seq: Vec<usize> = s.iter().map(|&i| i + 1).collect();
            seq.insert(0, 0); // slot u_1 = 0 stays first? no: u-indices
            seq.remove(0);
            // the affine tuple is (u_{s(1)+1}, ..., u_{s(m)+1}, u_{m+1});
            // shuffled indices refer to u_2..u_{m+1}? No: u_1..u_m with
            // u_{m+1} fixed; u-indices are 0-based below.
            let idx: Vec<usize> = {
                let mut v: Vec<usize> = s.to_vec();
                v.push(m);
                v
            };
            let cols: Vec<Vec<i64>> = (0..m)
                .map(|j| sub(&us[idx[j + 1]], &us[idx[j]]))
                .collect();
            terms.push((rat(1), from_cols(&cols)));
            let _ = &mut seq;
        }
        ops.push(RelationOperator { terms });
    }
    ops
}

/// Internal relations of a rank-r factor embedded in Z^m at the reference
/// position (columns `offset..offset+r`), plus the rank-1 sign relation.
fn factor_operators(m: usize, offset: usize, r: usize) -> Vec<RelationOperator> {
    let embed = |small: &IntMat| -> IntMat {
        let mut g = identity(m);
        for i in 0..r {
            for j in 0..r {
                g[offset + i][offset + j] = small[i][j];
            }
        }
        g
    };
    degree_one_operators(r)
        .into_iter()
        .map(|op| RelationOperator {
            terms: op
                .terms
                .into_iter()
                .map(|(c, g)| (c, embed(&g)))
                .collect(),
        })
        .collect()
}

/// Relation operators of M^k_(m) at the reference rigid generator of each
/// decomposition type (there is a single type per (m, k) for m <= 3).
pub fn relation_operators(m: usize, k: usize) -> Result<Vec<RelationOperator>> {
    if m > 3 {
        return Err(Error::UnsupportedVariant(
            "modular complexes are built for m <= 3".into(),
        ));
    }
    if k < 1 || k > m {
        return Err(Error::InvalidArgument(format!(
            "degree {k} out of range for m = {m}"
        )));
    }
    let ranks: Vec<usize> = match (m, k) {
        (_, 1) => vec![m],
        (2, 2) => vec![1, 1],
        (3, 2) => vec![2, 1],
        (3, 3) => vec![1, 1, 1],
        _ => unreachable!(),
    };
    let mut ops = Vec::new();
    // internal relations of each tensor factor
    let mut offset = 0usize;
    for &r in &ranks {
        ops.extend(factor_operators(m, offset, r));
        offset += r;
    }
    // transposition sign relations between equal-rank factors
    let mut offsets = Vec::new();
    {
        let mut o = 0;
        for &r in &ranks {
            offsets.push(o);
            o += r;
        }
    }
    for i in 0..ranks.len() {
        for j in i + 1..ranks.len() {
            if ranks[i] == ranks[j] && ranks[i] == 1 {
                // swap of two odd rank-1 factors: <..u_i..u_j..> = -<..u_j..u_i..>
                let mut g = identity(m);
                g[offsets[i]][offsets[i]] = 0;
                g[offsets[j]][offsets[j]] = 0;
                g[offsets[i]][offsets[j]] = 1;
                g[offsets[j]][offsets[i]] = 1;
                ops.push(RelationOperator {
                    terms: vec![(rat(1), identity(m)), (rat(1), g)],
                });
            }
        }
    }
    Ok(ops)
}

/// The dihedral symmetry relations at the reference (degree 1): cyclic,
/// negation, and the (-1)^{m+1}-signed reversal. Consequences of the
/// shuffles; used for cross-checks.
pub fn dihedral_operators(m: usize) -> Vec<RelationOperator> {
    let v = reference_vectors(m);
    let cyc = from_cols(&v[1..=m]);
    let mut rev_cols: Vec<Vec<i64>> = vec![v[m].clone()];
    for i in (1..m).rev() {
        rev_cols.push(v[i].clone());
    }
    let rev = from_cols(&rev_cols);
    let rev_sign = if (m + 1).is_multiple_of(2) { rat(1) } else { rat(-1) };
    vec![
        RelationOperator {
            terms: vec![(rat(1), identity(m)), (rat(-1), cyc)],
        },
        RelationOperator {
            terms: vec![(rat(1), identity(m)), (rat(-1), neg(&identity(m)))],
        },
        RelationOperator {
            terms: vec![(rat(1), identity(m)), (-rev_sign, rev)],
        },
    ]
}

/// The image of the reference rigid generator of M^k under the
/// differential, as a formal sum c_i h_i . (reference of the target type).
///
/// Degree 1: the wedge formula
///   d<v_1..v_{m+1}> = -Cycle_{m+1}(sum_{j=1}^{m-1} [v_1..v_j] ^ [v_{j+1}..v_m]),
/// reordered so ranks descend (odd factors anticommute). Degree 2 (m = 3):
/// Leibniz, with d vanishing on the rank-1 factor.
pub fn differential_terms(m: usize, k: usize) -> Result<Vec<(Rational, IntMat)>> {
    if m > 3 {
        return Err(Error::UnsupportedVariant(
            "modular complexes are built for m <= 3".into(),
        ));
    }
    if k >= m {
        return Ok(Vec::new()); // d = 0 out of the top degree (and for m = 1)
    }
    let v = reference_vectors(m);
    match (m, k) {
        (1, _) => Ok(Vec::new()),
        (2, 1) => {
            // -([v1]^[v2] + [v2]^[v3] + [v3]^[v1])
            let mut terms = Vec::new();
            for r in 0..3 {
                let a = &v[r % 3];
                let b = &v[(r + 1) % 3];
                terms.push((rat(-1), from_cols(&[a.clone(), b.clone()])));
            }
            Ok(terms)
        }
        (3, 1) => {
            // -Cycle_4([v1]^[v2,v3] + [v1,v2]^[v3]); ranks reorder to [2,1]
            let mut terms = Vec::new();
            for r in 0..4 {
                let a = &v[r % 4];
                let b = &v[(r + 1) % 4];
                let c = &v[(r + 2) % 4];
                // [v_a] ^ [v_b, v_c] = -[v_b, v_c] ^ [v_a]
                terms.push((rat(1), from_cols(&[b.clone(), c.clone(), a.clone()])));
                // [v_a, v_b] ^ [v_c]
                terms.push((rat(-1), from_cols(&[a.clone(), b.clone(), c.clone()])));
            }
            Ok(terms)
        }
        (3, 2) => {
            // d(<a1,a2,a3> ^ [u]) = -([a1]^[a2] + [a2]^[a3] + [a3]^[a1]) ^ [u]
            // at the reference a = (e1, e2, -e1-e2), u = e3
            let a = [e(3, 0), e(3, 1), vec![-1, -1, 0]];
            let mut terms = Vec::new();
            for r in 0..3 {
                let x = &a[r % 3];
                let y = &a[(r + 1) % 3];
                terms.push((rat(-1), from_cols(&[x.clone(), y.clone(), e(3, 2)])));
            }
            Ok(terms)
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_term_counts() {
        let ops = relation_operators(2, 1).unwrap();
        assert_eq!(ops.len(), 2);
        assert!(ops.iter().all(|o| o.terms.len() == 2));
        let ops = relation_operators(3, 1).unwrap();
        assert_eq!(ops.len(), 4);
        assert!(ops.iter().all(|o| o.terms.len() == 3));
    }

    #[test]
    fn degree_two_m2_relations() {
        // signs and the transposition
        let ops = relation_operators(2, 2).unwrap();
        assert_eq!(ops.len(), 3);
    }

    #[test]
    fn differential_matches_level_formula() {
        // m = 2: -(I + (0,-1;1,-1) + (-1,1;-1,0)) as column matrices
        let terms = differential_terms(2, 1).unwrap();
        assert_eq!(terms.len(), 3);
        assert_eq!(terms[0].1, identity(2));
        assert_eq!(terms[1].1, vec![vec![0, -1], vec![1, -1]]);
        assert_eq!(terms[2].1, vec![vec![-1, 1], vec![-1, 0]]);
    }

    #[test]
    fn top_degree_has_zero_differential() {
        assert!(differential_terms(2, 2).unwrap().is_empty());
        assert!(differential_terms(1, 1).unwrap().is_empty());
    }
}
