//! The explicit level-p rank-2 complex of cosets, and its comparison with
//! the diagonal dihedral complex
//!   D_2(mu_p) -> Lambda^2 D-hat_1(mu_p) -> D_1(mu_p) + D_1(mu_p).

use super::coinv::{coinvariant_space, CoefficientModule};
use super::mat::IntMat;
use super::operators::{differential_terms, relation_operators};
use crate::dihedral::{cobracket, GeneratorBasis, PieceCache, Variant};
use crate::linalg::{
    induced_map, rat, Error, QuotientSpace, Rational, Result, SparseMatrix, SparseVec,
};
use crate::words::GroupElt;
use num::Zero;

/// Q[F_p^2 - 0], cosets of Gamma_1(2;p) in GL_2(Z) by the last row; the
/// left module structure is g . (row r) = r g^{-1}.
pub struct LevelModule {
    pub p: u32,
}

impl LevelModule {
    pub fn index(&self, r: [i64; 2]) -> usize {
        let p = self.p as i64;
        let (a, b) = (r[0].rem_euclid(p), r[1].rem_euclid(p));
        assert!(a != 0 || b != 0, "zero row is not a coset");
        (a * p + b - 1) as usize
    }

    pub fn row(&self, idx: usize) -> [i64; 2] {
        let p = self.p as i64;
        let v = idx as i64 + 1;
        [v / p, v % p]
    }

    pub fn rows(&self) -> impl Iterator<Item = [i64; 2]> + '_ {
        (0..self.dim()).map(|i| self.row(i))
    }
}

impl CoefficientModule for LevelModule {
    fn dim(&self) -> usize {
        (self.p * self.p - 1) as usize
    }

    fn rho(&self, g: &IntMat) -> SparseMatrix {
        let p = self.p as i64;
        let gi = super::mat::inv(g).expect("unimodular");
        let mut out = SparseMatrix::zero(self.dim(), self.dim());
        for idx in 0..self.dim() {
            let r = self.row(idx);
            let s = super::mat::vec_mat(&r, &gi);
            let s = [s[0].rem_euclid(p), s[1].rem_euclid(p)];
            out.set(self.index(s), idx, rat(1));
        }
        out
    }
}

/// The rank-2 modular complex at level p extended by cusps, in coset form.
pub struct LevelTwoComplex {
    pub p: u32,
    /// Quotients of Q[F_p^2 - 0] in degrees 1, 2, 3.
    pub spaces: [QuotientSpace; 3],
    pub d1: SparseMatrix,
    pub d2: SparseMatrix,
    /// Dimensions of the tau_{[1,2]} truncation (degree 1, kernel in 2).
    pub truncated_dims: [usize; 2],
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn level_two_complex(p: u32) -> Result<LevelTwoComplex> {
    if !is_prime(p) || p < 5 {
        return Err(Error::InvalidArgument(format!(
            "level must be a prime >= 5, got {p}"
        )));
    }
    let module = LevelModule { p };
    let deg1 = coinvariant_space(&module, &relation_operators(2, 1)?)?;
    let deg2 = coinvariant_space(&module, &relation_operators(2, 2)?)?;
    // degree 3: cosets modulo the upper-triangular +-unipotent subgroup
    let deg3 = {
        let gens: Vec<IntMat> = vec![
            vec![vec![1, 1], vec![0, 1]],
            vec![vec![-1, 0], vec![0, 1]],
            vec![vec![1, 0], vec![0, -1]],
        ];
        let p64 = p as i64;
        let mut rows: Vec<SparseVec> = Vec::new();
        for idx in 0..module.dim() {
            let r = module.row(idx);
            for g in &gens {
                let s = super::mat::vec_mat(&r, g);
                let j = module.index([s[0].rem_euclid(p64), s[1].rem_euclid(p64)]);
                if j != idx {
                    let mut row = vec![(idx, rat(1)), (j, rat(-1))];
                    row.sort_by_key(|e| e.0);
                    rows.push(row);
                }
            }
        }
        QuotientSpace::new(module.dim(), &SparseMatrix::from_rows(module.dim(), rows))?
    };

    // d1 from the modular differential at the reference
    let d1 = {
        let n = module.dim();
        let mut ambient = SparseMatrix::zero(n, n);
        for (c, h) in &differential_terms(2, 1)? {
            let hi = super::mat::inv(h)?;
            for (i, j, v) in module.rho(&hi).entries() {
                let mut cur = ambient.get(i, j);
                cur += c * v;
                ambient.set(i, j, cur);
            }
        }
        induced_map(&ambient, &deg1, &deg2)?
    };
    // d2 = projection to cusps of e_r |-> e_{r s} - e_r with s the swap
    let d2 = {
        let n = module.dim();
        let mut ambient = SparseMatrix::zero(n, n);
        let p64 = p as i64;
        for idx in 0..n {
            let r = module.row(idx);
            let s = [r[1].rem_euclid(p64), r[0].rem_euclid(p64)];
            let j = module.index(s);
            let mut cur = ambient.get(j, idx);
            cur += rat(1);
            ambient.set(j, idx, cur);
            let mut cur = ambient.get(idx, idx);
            cur -= rat(1);
            ambient.set(idx, idx, cur);
        }
        induced_map(&ambient, &deg2, &deg3)?
    };

    // composition of the induced maps must vanish
    let comp = d2.matmul(&d1);
    if !comp.is_zero() {
        return Err(Error::Complex {
            position: 1,
            position_plus_two: 3,
            witness: comp.rows_iter().find(|r| !r.is_empty()).cloned().unwrap_or_default(),
        });
    }

    let rank_d2 = crate::linalg::rank(&d2, crate::linalg::ComputeMode::Exact);
    let truncated_dims = [deg1.dim(), deg2.dim() - rank_d2];
    Ok(LevelTwoComplex {
        p,
        spaces: [deg1, deg2, deg3],
        d1,
        d2,
        truncated_dims,
    })
}

/// The dihedral side of the comparison: D_2(mu_p), Lambda^2 D-hat_1, and
/// D_1 + D_1, with the cobracket and the explicit second differential.
pub struct DihedralSide {
    pub dims: [usize; 3],
    pub delta1: SparseMatrix,
    pub delta2: SparseMatrix,
    /// coordinates in D-hat_1 of each hat basis class, position of iota
    pub hat_dim: usize,
    pub iota_pos: Option<usize>,
}

fn build_dihedral_side(p: u32) -> Result<(DihedralSide, DihedralData)> {
    let cache = PieceCache::new(p, true);
    let hat1 = cache.quotient(1, 1)?;
    let cb = cobracket(2, 2, p, Variant::DHat)?;
    let d2_space = QuotientSpace::new(
        GeneratorBasis::new(2, 2, p)?.count(),
        &crate::dihedral::relation_matrix(2, 2, p, &crate::dihedral::RelationFamily::defining())?,
    )?;
    // D_1 (with I_1(e:e) = 0): for the cusp target
    let d1_space = {
        let rel = crate::dihedral::relation_matrix(
            1,
            1,
            p,
            &crate::dihedral::RelationFamily::defining(),
        )?;
        QuotientSpace::new(p as usize, &rel)?
    };

    let hat_dim = hat1.dim();
    let iota_pos = hat1.basis_cols().iter().position(|&c| c == 0);
    let lambda2_dim = hat_dim * (hat_dim - 1) / 2;
    debug_assert_eq!(cb.target.dim(), lambda2_dim);

    // D_1-coordinates of the hat basis classes
    let b11 = GeneratorBasis::new(1, 1, p)?;
    let hat_class_in_d1: Vec<Vec<Rational>> = hat1
        .basis_cols()
        .iter()
        .map(|&c| d1_space.coordinates(&vec![(c, rat(1))]))
        .collect();
    let vp_of_hat: Vec<Rational> = hat1
        .basis_cols()
        .iter()
        .map(|&c| crate::dihedral::vp_value(1, 1, &b11, c))
        .collect();

    // pair index (i < j) -> row, matching the wedge basis order of cb
    let pair_row = |i: usize, j: usize| -> usize {
        let u = cb.space.atom((1, 1), i).unwrap();
        let v = cb.space.atom((1, 1), j).unwrap();
        cb.target.index_of(&[u.min(v), u.max(v)]).unwrap()
    };

    // delta2: Lambda^2 D-hat_1 -> D_1 + D_1 by the explicit level formula
    let d1_dim = d1_space.dim();
    let mut delta2 = SparseMatrix::zero(2 * d1_dim, lambda2_dim);
    for i in 0..hat_dim {
        for j in i + 1..hat_dim {
            let col = pair_row(i, j);
            let mut first = vec![Rational::zero(); d1_dim];
            let mut second = vec![Rational::zero(); d1_dim];
            // The formula of the explicit level complex. The pairing of
            // the two cusp summands with the coset classes is pinned by
            // requiring commutation with the coset differential:
            //   iota ^ y       -> (y, -y)
            //   x ^ y (no iota) -> (v_p(x) y - v_p(y) x, 0)
            let iota_i = iota_pos == Some(i);
            let iota_j = iota_pos == Some(j);
            if iota_i || iota_j {
                let (other, sign) = if iota_i { (j, rat(1)) } else { (i, rat(-1)) };
                for (k, c) in hat_class_in_d1[other].iter().enumerate() {
                    first[k] = c * &sign;
                    second[k] = -(c * &sign);
                }
            } else {
                for (k, c) in hat_class_in_d1[j].iter().enumerate() {
                    first[k] += c * &vp_of_hat[i];
                }
                for (k, c) in hat_class_in_d1[i].iter().enumerate() {
                    first[k] -= c * &vp_of_hat[j];
                }
            }
            for (k, c) in first.iter().enumerate() {
                if !c.is_zero() {
                    delta2.set(k, col, c.clone());
                }
            }
            for (k, c) in second.iter().enumerate() {
                if !c.is_zero() {
                    delta2.set(d1_dim + k, col, c.clone());
                }
            }
        }
    }

    let side = DihedralSide {
        dims: [d2_space.dim(), lambda2_dim, 2 * d1_dim],
        delta1: cb.matrix.clone(),
        delta2,
        hat_dim,
        iota_pos,
    };
    let data = DihedralData {
        d2_space,
        hat1: (*hat1).clone(),
        d1_space,
    };
    Ok((side, data))
}

struct DihedralData {
    d2_space: QuotientSpace,
    hat1: QuotientSpace,
    d1_space: QuotientSpace,
}

/// Report of the level-p comparison isomorphism.
#[derive(Debug, Clone, serde::Serialize)]
pub struct DihedralIsoReport {
    pub p: u32,
    pub modular_dims: [usize; 3],
    pub dihedral_dims: [usize; 3],
    pub well_defined: bool,
    pub bijective: bool,
    pub commutes: bool,
    pub truncated_dims: [usize; 2],
}

impl DihedralIsoReport {
    pub fn passed(&self) -> bool {
        self.modular_dims == self.dihedral_dims
            && self.well_defined
            && self.bijective
            && self.commutes
    }
}

/// Build the map (alpha, beta, gamma) -> {zeta^alpha, zeta^beta, zeta^gamma}
/// on bases, certify it is well defined, bijective on quotients, and
/// commutes with the differentials.
pub fn dihedral_iso_check(p: u32) -> Result<DihedralIsoReport> {
    let level = level_two_complex(p)?;
    let (side, data) = build_dihedral_side(p)?;
    let module = LevelModule { p };
    let p64 = p as i64;

    // phi_1: e_{(a,b)} -> I_{1,1}(zeta^{-a-b} : zeta^{-b} : e)
    let b22 = GeneratorBasis::new(2, 2, p)?;
    let mut phi1 = SparseMatrix::zero(b22.count(), module.dim());
    for idx in 0..module.dim() {
        let r = module.row(idx);
        let g1 = GroupElt::new(-r[0] - r[1], p);
        let g2 = GroupElt::new(-r[1], p);
        phi1.set(b22.index_of(&[1, 1], &[g1, g2]), idx, rat(1));
    }
    let phi1_bar = induced_map(&phi1, &level.spaces[0], &data.d2_space);

    // phi_2: e_{(a,b)} -> class(I_1(zeta^{-a})) ^ class(I_1(zeta^{-b}))
    let lambda2_dim = side.dims[1];
    let hat_dim = side.hat_dim;
    let pair_index = |i: usize, j: usize| -> usize {
        debug_assert!(i < j);
        // tuples sorted lexicographically: index of (i, j) among pairs
        let before: usize = (0..i).map(|k| hat_dim - k - 1).sum();
        before + (j - i - 1)
    };
    let b11 = GeneratorBasis::new(1, 1, p)?;
    let hat_coords = |a: i64| -> Vec<(usize, Rational)> {
        let e = vec![(
            b11.index_of(&[1], &[GroupElt::new(a, p)]),
            rat(1),
        )];
        data.hat1.coordinates_sparse(&e)
    };
    let mut phi2 = SparseMatrix::zero(lambda2_dim, module.dim());
    for idx in 0..module.dim() {
        let r = module.row(idx);
        let x = hat_coords(-r[0]);
        let y = hat_coords(-r[1]);
        for (i, a) in &x {
            for (j, b) in &y {
                if i == j {
                    continue;
                }
                let (row, coeff) = if i < j {
                    (pair_index(*i, *j), a * b)
                } else {
                    (pair_index(*j, *i), -(a * b))
                };
                let mut cur = phi2.get(row, idx);
                cur += coeff;
                phi2.set(row, idx, cur);
            }
        }
    }
    let lambda2_full = QuotientSpace::full(lambda2_dim);
    let phi2_bar = induced_map(&phi2, &level.spaces[1], &lambda2_full);

    // phi_3: e_{(a,b)} -> ([zeta^a]-cusp, 0) if a != 0 else (0, [zeta^b])
    let d1_dim = side.dims[2] / 2;
    let d1_coords = |a: i64| -> Vec<(usize, Rational)> {
        let e = vec![(
            b11.index_of(&[1], &[GroupElt::new(a, p)]),
            rat(1),
        )];
        data.d1_space.coordinates_sparse(&e)
    };
    let mut phi3 = SparseMatrix::zero(2 * d1_dim, module.dim());
    for idx in 0..module.dim() {
        let r = module.row(idx);
        if r[0].rem_euclid(p64) != 0 {
            for (k, c) in d1_coords(-r[0]) {
                phi3.set(k, idx, c);
            }
        } else {
            for (k, c) in d1_coords(-r[1]) {
                phi3.set(d1_dim + k, idx, c);
            }
        }
    }
    let cusp_full = QuotientSpace::full(2 * d1_dim);
    let phi3_bar = induced_map(&phi3, &level.spaces[2], &cusp_full);

    let (well_defined, phi1_bar, phi2_bar, phi3_bar) =
        match (phi1_bar, phi2_bar, phi3_bar) {
            (Ok(a), Ok(b), Ok(c)) => (true, a, b, c),
            _ => {
                return Ok(DihedralIsoReport {
                    p,
                    modular_dims: [
                        level.spaces[0].dim(),
                        level.spaces[1].dim(),
                        level.spaces[2].dim(),
                    ],
                    dihedral_dims: side.dims,
                    well_defined: false,
                    bijective: false,
                    commutes: false,
                    truncated_dims: level.truncated_dims,
                })
            }
        };

    let modular_dims = [
        level.spaces[0].dim(),
        level.spaces[1].dim(),
        level.spaces[2].dim(),
    ];
    let square = |m: &SparseMatrix| m.nrows() == m.ncols();
    let bijective = square(&phi1_bar)
        && square(&phi2_bar)
        && square(&phi3_bar)
        && crate::linalg::rank(&phi1_bar, crate::linalg::ComputeMode::Exact) == phi1_bar.nrows()
        && crate::linalg::rank(&phi2_bar, crate::linalg::ComputeMode::Exact) == phi2_bar.nrows()
        && crate::linalg::rank(&phi3_bar, crate::linalg::ComputeMode::Exact) == phi3_bar.nrows();

    // commutation with the differentials
    let lhs1 = phi2_bar.matmul(&level.d1);
    let rhs1 = side.delta1.matmul(&phi1_bar);
    let lhs2 = phi3_bar.matmul(&level.d2);
    let rhs2 = side.delta2.matmul(&phi2_bar);
    let commutes = lhs1 == rhs1 && lhs2 == rhs2;

    Ok(DihedralIsoReport {
        p,
        modular_dims,
        dihedral_dims: side.dims,
        well_defined,
        bijective,
        commutes,
        truncated_dims: level.truncated_dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_complex_small_dims() {
        let c = level_two_complex(5).unwrap();
        // tau-truncated: both terms of dimension 0 at p = 5
        assert_eq!(c.truncated_dims, [0, 0]);
        let c = level_two_complex(7).unwrap();
        assert_eq!(c.truncated_dims[0], 1); // = dim D_2(mu_7)
    }

    #[test]
    fn iso_check_small() {
        let r = dihedral_iso_check(5).unwrap();
        assert!(r.passed(), "{r:?}");
        let r = dihedral_iso_check(7).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.modular_dims[0], 1);
    }
}
