//! Rank computation modulo a word-size prime.
//!
//! The relation matrices produced by the dihedral spaces carry many one- and
//! two-entry rows (inversion and homogeneity give pairwise identifications),
//! so before dense elimination we fold those away: each such row removes one
//! column and contributes one to the rank. The remainder goes through
//! incremental dense elimination, keeping only pivot rows in memory.

use super::sparse::SparseMatrix;
use num::bigint::Sign;
use num::BigInt;
use rand::Rng;

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A uniformly random 31-bit prime.
pub fn random_prime(rng: &mut impl Rng) -> u64 {
    loop {
        let candidate: u64 = rng.gen_range((1u64 << 30)..(1u64 << 31));
        if is_prime(candidate) {
            return candidate;
        }
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let (sign, m) = (n.sign(), n.magnitude() % p);
    let m: u64 = m.try_into().unwrap();
    match sign {
        Sign::Minus if m != 0 => p - m,
        _ => m,
    }
}

/// Reduce the matrix mod p. `None` if some denominator vanishes mod p.
fn reduce_rows(m: &SparseMatrix, p: u64) -> Option<Vec<Vec<(u32, u64)>>> {
    let mut rows = Vec::with_capacity(m.nrows());
    for row in m.rows_iter() {
        let mut out = Vec::with_capacity(row.len());
        for (j, c) in row {
            let den = bigint_mod(c.denom(), p);
            if den == 0 {
                return None;
            }
            let num = bigint_mod(c.numer(), p);
            let v = mul_mod(num, inv_mod(den, p), p);
            if v != 0 {
                out.push((*j as u32, v));
            }
        }
        if !out.is_empty() {
            rows.push(out);
        }
    }
    Some(rows)
}

const COL_ZERO: u32 = u32::MAX;

struct Fold {
    /// col -> None (live) or Some((target, factor)): x_col = factor * x_target,
    /// target == COL_ZERO meaning x_col = 0.
    subst: Vec<Option<(u32, u64)>>,
    p: u64,
}

impl Fold {
    fn resolve(&mut self, col: u32) -> (u32, u64) {
        match self.subst[col as usize] {
            None => (col, 1),
            Some((t, f)) => {
                if t == COL_ZERO {
                    return (COL_ZERO, 0);
                }
                let (root, g) = self.resolve(t);
                let combined = if root == COL_ZERO {
                    0
                } else {
                    mul_mod(f, g, self.p)
                };
                self.subst[col as usize] = Some((root, combined));
                (root, combined)
            }
        }
    }

    fn apply(&mut self, row: &[(u32, u64)]) -> Vec<(u32, u64)> {
        let p = self.p;
        let mut acc: std::collections::BTreeMap<u32, u64> = std::collections::BTreeMap::new();
        for &(c, v) in row {
            let (root, f) = self.resolve(c);
            if root == COL_ZERO {
                continue;
            }
            let add = mul_mod(v, f, p);
            let slot = acc.entry(root).or_insert(0);
            *slot = (*slot + add) % p;
        }
        acc.into_iter().filter(|&(_, v)| v != 0).collect()
    }
}

/// Rank of `m` over F_p, or `None` if a denominator vanishes mod p.
pub fn rank_mod(m: &SparseMatrix, p: u64) -> Option<usize> {
    let rows = reduce_rows(m, p)?;
    Some(rank_mod_rows(rows, m.ncols(), p))
}

fn rank_mod_rows(mut rows: Vec<Vec<(u32, u64)>>, ncols: usize, p: u64) -> usize {
    let mut fold = Fold {
        subst: vec![None; ncols],
        p,
    };
    let mut rank = 0usize;

    // Fold singleton and pair rows until none are left.
    loop {
        let mut progressed = false;
        let mut kept = Vec::with_capacity(rows.len());
        for row in rows.drain(..) {
            let row = fold.apply(&row);
            match row.len() {
                0 => {}
                1 => {
                    fold.subst[row[0].0 as usize] = Some((COL_ZERO, 0));
                    rank += 1;
                    progressed = true;
                }
                2 => {
                    let (a, ca) = row[0];
                    let (b, cb) = row[1];
                    // x_a = -cb/ca * x_b
                    let f = mul_mod(p - cb % p, inv_mod(ca, p), p);
                    fold.subst[a as usize] = Some((b, f));
                    rank += 1;
                    progressed = true;
                }
                _ => kept.push(row),
            }
        }
        rows = kept;
        if !progressed {
            break;
        }
    }

    // Deduplicate leading-coefficient-normalized rows.
    {
        use std::collections::HashSet;
        let mut seen = HashSet::new();
        rows.retain(|row| {
            let lead_inv = inv_mod(row[0].1, p);
            let key: Vec<(u32, u64)> =
                row.iter().map(|&(c, v)| (c, mul_mod(v, lead_inv, p))).collect();
            seen.insert(key)
        });
    }

    // Compact the live columns.
    let mut live = vec![u32::MAX; rows.iter().flatten().map(|&(c, _)| c as usize).max().map_or(0, |m| m + 1)];
    let mut n_live = 0u32;
    for row in &rows {
        for &(c, _) in row {
            if live[c as usize] == u32::MAX {
                live[c as usize] = n_live;
                n_live += 1;
            }
        }
    }
    let width = n_live as usize;

    // Incremental dense elimination: pivots[j] = row with leading column j,
    // normalized to leading coefficient 1.
    let mut pivots: Vec<Option<Vec<u64>>> = vec![None; width];
    for row in rows {
        let mut dense = vec![0u64; width];
        for &(c, v) in &row {
            dense[live[c as usize] as usize] = v;
        }
        let mut j = 0;
        while j < width {
            if dense[j] != 0 {
                if let Some(pivot) = &pivots[j] {
                    let factor = p - dense[j];
                    for (d, &pv) in dense[j..].iter_mut().zip(&pivot[j..]) {
                        if pv != 0 {
                            *d = (*d + mul_mod(factor, pv, p)) % p;
                        }
                    }
                } else {
                    let inv = inv_mod(dense[j], p);
                    for d in dense[j..].iter_mut() {
                        if *d != 0 {
                            *d = mul_mod(*d, inv, p);
                        }
                    }
                    pivots[j] = Some(dense);
                    rank += 1;
                    break;
                }
            }
            j += 1;
        }
    }
    rank
}
