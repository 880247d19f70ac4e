//! The defining relations of the dihedral spaces, extracted symbolically.
//!
//! Every relation is stated as a generating-series identity; an instance is
//! expanded into a `TPolynomial` with the last slot normalized to (e | 0),
//! and one coefficient row is harvested per t-monomial of total degree
//! w - m. The dihedral-symmetry family is only used for cross-checks: by
//! the double-shuffle theorem its rows lie in the span of the others.

use super::basis::{arg_tuples, GeneratorBasis};
use super::series_exp::{series_term, LinForm, SeriesForm, TPolynomial};
use crate::linalg::{rat, rat_frac, Result, SparseMatrix, SparseVec};
use crate::words::GroupElt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationFamily {
    /// Shuffles in the t-slots (the {g : | t ,} series).
    ShuffleT,
    /// Shuffles in the g-slots (the {g , | t :} series).
    ShuffleG,
    /// Distribution relations for every divisor l > 1 of N and for l = -1
    /// (the inversion relations).
    Distribution,
    /// I_1(e:e) = 0, a single row at (w, m) = (1, 1).
    I1ee,
    /// Cyclic, reflection and inversion relations; implied by the shuffles,
    /// kept for cross-checks.
    Dihedral,
}

impl RelationFamily {
    pub fn defining() -> Vec<RelationFamily> {
        vec![
            RelationFamily::ShuffleT,
            RelationFamily::ShuffleG,
            RelationFamily::Distribution,
            RelationFamily::I1ee,
        ]
    }

    /// D-hat drops only the I_1(e:e) = 0 relation.
    pub fn defining_hat() -> Vec<RelationFamily> {
        vec![
            RelationFamily::ShuffleT,
            RelationFamily::ShuffleG,
            RelationFamily::Distribution,
        ]
    }
}

/// All (p, m-p)-shuffles as sequences of the original indices 0..m-1.
fn shuffles(p: usize, m: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    let mut out = Vec::new();
    for positions in (0..m).combinations(p) {
        let mut seq = vec![usize::MAX; m];
        for (k, &pos) in positions.iter().enumerate() {
            seq[pos] = k;
        }
        let mut next_b = p;
        for slot in seq.iter_mut() {
            if *slot == usize::MAX {
                *slot = next_b;
                next_b += 1;
            }
        }
        out.push(seq);
    }
    out
}

fn t_vars(m: usize) -> Vec<LinForm> {
    (0..m).map(|i| LinForm::var(m, i)).collect()
}

/// Relation rows for the requested families at (w, m, N).
pub fn relation_matrix(
    w: u32,
    m: u32,
    level: u32,
    families: &[RelationFamily],
) -> Result<SparseMatrix> {
    let basis = GeneratorBasis::new(w, m, level)?;
    let mut rows: Vec<SparseVec> = Vec::new();
    for family in families {
        match family {
            RelationFamily::ShuffleT => shuffle_t_rows(&basis, &mut rows)?,
            RelationFamily::ShuffleG => shuffle_g_rows(&basis, &mut rows)?,
            RelationFamily::Distribution => distribution_rows(&basis, &mut rows)?,
            RelationFamily::I1ee => {
                if w == 1 && m == 1 {
                    let e = GroupElt::identity(level);
                    rows.push(vec![(basis.index_of(&[1], &[e]), rat(1))]);
                }
            }
            RelationFamily::Dihedral => dihedral_rows(&basis, &mut rows)?,
        }
    }
    dedup_rows(&mut rows);
    Ok(SparseMatrix::from_rows(basis.count(), rows))
}

fn dedup_rows(rows: &mut Vec<SparseVec>) {
    use std::collections::HashSet;
    let mut seen: HashSet<String> = HashSet::new();
    rows.retain(|row| {
        if row.is_empty() {
            return false;
        }
        // normalize by the leading coefficient so scalar multiples collide
        let lead = row[0].1.clone();
        let key: String = row
            .iter()
            .map(|(i, c)| format!("{i}:{}", c / &lead))
            .collect::<Vec<_>>()
            .join(",");
        seen.insert(key)
    });
}

fn harvest(basis: &GeneratorBasis, t: &TPolynomial, rows: &mut Vec<SparseVec>) {
    rows.extend(t.rows_of_degree((basis.weight - basis.depth) as usize));
}

/// Shuffle relations in the t-slots (affine form), one instance per
/// 1 <= p <= m-1 and g-argument tuple with the last slot normalized to e.
fn shuffle_t_rows(basis: &GeneratorBasis, rows: &mut Vec<SparseVec>) -> Result<()> {
    let m = basis.depth as usize;
    let tv = t_vars(m);
    // u_{m+1} = -(t_1 + .. + t_m) so the affine constraint holds
    let mut last_t = LinForm::zero(m);
    for f in &tv {
        last_t = &last_t - f;
    }
    for p in 1..m {
        for gs in arg_tuples(basis.depth, basis.level) {
            let mut total = TPolynomial::new(m);
            for sigma in shuffles(p, m) {
                let mut args: Vec<GroupElt> = sigma.iter().map(|&i| gs[i]).collect();
                args.push(GroupElt::identity(basis.level));
                let mut tf: Vec<LinForm> = sigma.iter().map(|&i| tv[i].clone()).collect();
                tf.push(last_t.clone());
                total.add_in(&series_term(SeriesForm::Affine, basis, &args, &tf)?);
            }
            harvest(basis, &total, rows);
        }
    }
    Ok(())
}

/// Shuffle relations in the g-slots (power form), one instance per
/// 1 <= p <= m-1 and free h-argument tuple.
fn shuffle_g_rows(basis: &GeneratorBasis, rows: &mut Vec<SparseVec>) -> Result<()> {
    let m = basis.depth as usize;
    let tv = t_vars(m);
    for p in 1..m {
        for hs in arg_tuples(basis.depth, basis.level) {
            let mut last_h = GroupElt::identity(basis.level);
            for h in &hs {
                last_h = last_h.mul(h);
            }
            let last_h = last_h.inv();
            let mut total = TPolynomial::new(m);
            for sigma in shuffles(p, m) {
                let mut args: Vec<GroupElt> = sigma.iter().map(|&i| hs[i]).collect();
                args.push(last_h);
                let mut tf: Vec<LinForm> = sigma.iter().map(|&i| tv[i].clone()).collect();
                tf.push(LinForm::zero(m));
                total.add_in(&series_term(SeriesForm::Power, basis, &args, &tf)?);
            }
            harvest(basis, &total, rows);
        }
    }
    Ok(())
}

fn divisors_gt1(n: u32) -> Vec<u32> {
    (2..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Distribution relations: for each l > 1 dividing N, the series at l-th
/// power arguments equals the average of the series at l-th roots with
/// scaled t; l = -1 is the inversion relation. The constant coefficient is
/// exempt when m = 1 and x_1 = x_2.
fn distribution_rows(basis: &GeneratorBasis, rows: &mut Vec<SparseVec>) -> Result<()> {
    let m = basis.depth as usize;
    let n = basis.level;
    let tv = t_vars(m);
    let zero_t = LinForm::zero(m);
    let e = GroupElt::identity(n);

    // l = -1: {x | t} - {x^{-1} | -t} = 0
    for xs in arg_tuples(basis.depth, n) {
        if basis.weight == 1 && m == 1 && xs[0].is_identity() {
            continue; // the m = 1, x_1 = x_2 constant exemption
        }
        let mut args: Vec<GroupElt> = xs.clone();
        args.push(e);
        let mut tf = tv.clone();
        tf.push(zero_t.clone());
        let mut total = series_term(SeriesForm::Colon, basis, &args, &tf)?;
        let inv_args: Vec<GroupElt> = args.iter().map(|g| g.inv()).collect();
        let neg_tf: Vec<LinForm> = tf.iter().map(|f| -f).collect();
        let mut inv_term = series_term(SeriesForm::Colon, basis, &inv_args, &neg_tf)?;
        inv_term.scale(&rat(-1));
        total.add_in(&inv_term);
        harvest(basis, &total, rows);
    }

    // proper divisors l > 1
    for l in divisors_gt1(n) {
        // l-th powers and their root fibers
        let image: Vec<GroupElt> = {
            let mut v: Vec<u32> = (0..n).map(|b| (l * b) % n).collect();
            v.sort_unstable();
            v.dedup();
            v.into_iter().map(|a| GroupElt::new(a as i64, n)).collect()
        };
        let roots = |x: &GroupElt| -> Vec<GroupElt> {
            (0..n)
                .filter(|y| (l * y) % n == x.residue())
                .map(|y| GroupElt::new(y as i64, n))
                .collect()
        };
        let torsion: Vec<GroupElt> = roots(&e);
        debug_assert_eq!(torsion.len(), l as usize);

        // all m-tuples with entries in the image subgroup
        let tuples: Vec<Vec<GroupElt>> = {
            use itertools::Itertools;
            (0..m)
                .map(|_| image.iter().copied())
                .multi_cartesian_product()
                .collect()
        };

        for xs in tuples {
            if basis.weight == 1 && m == 1 && xs[0].is_identity() {
                continue; // constant exemption
            }
            let mut args: Vec<GroupElt> = xs.clone();
            args.push(e);
            let mut tf = tv.clone();
            tf.push(zero_t.clone());
            let mut total = series_term(SeriesForm::Colon, basis, &args, &tf)?;

            // -(1/l) sum over root tuples (y_1..y_m, y_{m+1}), t scaled by l
            let scaled_t: Vec<LinForm> = tf.iter().map(|f| f.scale(&rat(l as i64))).collect();
            let fibers: Vec<Vec<GroupElt>> = xs.iter().map(&roots).collect();
            let root_tuples: Vec<Vec<GroupElt>> = {
                use itertools::Itertools;
                fibers
                    .iter()
                    .map(|f| f.iter().copied())
                    .multi_cartesian_product()
                    .collect()
            };
            for ys in root_tuples {
                for ylast in &torsion {
                    let mut yargs = ys.clone();
                    yargs.push(*ylast);
                    let mut term = series_term(SeriesForm::Colon, basis, &yargs, &scaled_t)?;
                    term.scale(&rat_frac(-1, l as i64));
                    total.add_in(&term);
                }
            }
            harvest(basis, &total, rows);
        }
    }
    Ok(())
}

/// Instances of the cyclic, reflection and inversion relations.
fn dihedral_rows(basis: &GeneratorBasis, rows: &mut Vec<SparseVec>) -> Result<()> {
    let m = basis.depth as usize;
    let tv = t_vars(m);
    let zero_t = LinForm::zero(m);
    let e = GroupElt::identity(basis.level);
    for gs in arg_tuples(basis.depth, basis.level) {
        let mut args: Vec<GroupElt> = gs.clone();
        args.push(e);
        let mut tf = tv.clone();
        tf.push(zero_t.clone());
        let base = series_term(SeriesForm::Colon, basis, &args, &tf)?;

        // cyclic: slots rotated by one
        {
            let mut rot_args = args[1..].to_vec();
            rot_args.push(args[0]);
            let mut rot_t = tf[1..].to_vec();
            rot_t.push(tf[0].clone());
            let mut total = base.clone();
            let mut term = series_term(SeriesForm::Colon, basis, &rot_args, &rot_t)?;
            term.scale(&rat(-1));
            total.add_in(&term);
            harvest(basis, &total, rows);
        }

        // reflection: {g_1:...:g_{m+1}|t} = (-1)^{m+1}{g_{m+1}:...:g_1|-t_m:...:-t_1:-t_{m+1}}
        {
            let refl_args: Vec<GroupElt> = args.iter().rev().copied().collect();
            let mut refl_t: Vec<LinForm> = tf[..m].iter().rev().map(|f| -f).collect();
            refl_t.push(-&tf[m]);
            let sign = if (m + 1).is_multiple_of(2) { rat(1) } else { rat(-1) };
            let mut total = base.clone();
            let mut term = series_term(SeriesForm::Colon, basis, &refl_args, &refl_t)?;
            term.scale(&-sign);
            total.add_in(&term);
            harvest(basis, &total, rows);
        }

        // inversion: {x^{-1} | t} = {x | -t}
        {
            let inv_args: Vec<GroupElt> = args.iter().map(|g| g.inv()).collect();
            let neg_t: Vec<LinForm> = tf.iter().map(|f| -f).collect();
            let mut total = series_term(SeriesForm::Colon, basis, &inv_args, &tf)?;
            let mut term = series_term(SeriesForm::Colon, basis, &args, &neg_t)?;
            term.scale(&rat(-1));
            total.add_in(&term);
            harvest(basis, &total, rows);
        }
    }
    Ok(())
}
