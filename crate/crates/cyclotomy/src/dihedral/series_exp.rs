//! Symbolic expansion of the generating series into coefficient rows.
//!
//! The generating series {g_1 : ... : g_{m+1} | t_1 : ... : t_{m+1}} is
//! expanded, after normalizing the last slot to (e | 0) by homogeneity and
//! translation invariance, as
//!     sum_n I_{n_1..n_m}(g')  s_1^{n_1-1} ... s_m^{n_m-1}
//! over the (w, m, N) generator basis, with s_i the normalized t-arguments
//! (linear forms in the formal variables t_1..t_m). Relation rows are
//! harvested per t-monomial of total degree w - m.

use super::basis::GeneratorBasis;
use crate::linalg::{rat, Error, Rational, Result, SparseVec};
use crate::words::GroupElt;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// A homogeneous degree-1 form in the formal variables t_1..t_m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinForm(pub Vec<Rational>);

impl LinForm {
    pub fn zero(vars: usize) -> Self {
        LinForm(vec![Rational::zero(); vars])
    }

    pub fn var(vars: usize, i: usize) -> Self {
        let mut v = vec![Rational::zero(); vars];
        v[i] = Rational::one();
        LinForm(v)
    }

    pub fn scale(&self, k: &Rational) -> LinForm {
        LinForm(self.0.iter().map(|c| c * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }
}

impl Add for &LinForm {
    type Output = LinForm;
    fn add(self, rhs: &LinForm) -> LinForm {
        LinForm(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &LinForm {
    type Output = LinForm;
    fn sub(self, rhs: &LinForm) -> LinForm {
        LinForm(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &LinForm {
    type Output = LinForm;
    fn neg(self) -> LinForm {
        LinForm(self.0.iter().map(|a| -a).collect())
    }
}

/// Commutative monomials in t_1..t_m; exponent vectors.
pub type Monomial = Vec<u16>;

/// A polynomial in t_1..t_m with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl CommPoly {
    pub fn one(vars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0u16; vars], Rational::one());
        CommPoly { terms }
    }

    pub fn from_linform(f: &LinForm) -> Self {
        let vars = f.0.len();
        let mut terms = BTreeMap::new();
        for (i, c) in f.0.iter().enumerate() {
            if !c.is_zero() {
                let mut mono = vec![0u16; vars];
                mono[i] = 1;
                terms.insert(mono, c.clone());
            }
        }
        CommPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }
}

impl Mul for &CommPoly {
    type Output = CommPoly;
    fn mul(self, rhs: &CommPoly) -> CommPoly {
        let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mono: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                let slot = out.entry(mono).or_insert_with(Rational::zero);
                *slot += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        CommPoly { terms: out }
    }
}

/// A polynomial in t_1..t_m whose coefficients are sparse vectors over a
/// generator basis. The last t-slot is eliminated (set to 0) by translation
/// invariance before anything is recorded here.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TPolynomial {
    pub vars: usize,
    terms: BTreeMap<Monomial, BTreeMap<usize, Rational>>,
}

impl TPolynomial {
    pub fn new(vars: usize) -> Self {
        TPolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, mono: Monomial, gen_index: usize, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let row = self.terms.entry(mono).or_default();
        let slot = row.entry(gen_index).or_insert_with(Rational::zero);
        *slot += coeff;
        if slot.is_zero() {
            row.remove(&gen_index);
        }
    }

    pub fn add_in(&mut self, other: &TPolynomial) {
        for (mono, row) in &other.terms {
            for (gi, c) in row {
                self.add_term(mono.clone(), *gi, c.clone());
            }
        }
    }

    pub fn scale(&mut self, k: &Rational) {
        if k.is_zero() {
            self.terms.clear();
            return;
        }
        for row in self.terms.values_mut() {
            for c in row.values_mut() {
                *c *= k;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|r| r.is_empty())
    }

    /// One sparse row per monomial of total degree exactly `degree`.
    pub fn rows_of_degree(&self, degree: usize) -> Vec<SparseVec> {
        self.terms
            .iter()
            .filter(|(mono, row)| {
                mono.iter().map(|&e| e as usize).sum::<usize>() == degree && !row.is_empty()
            })
            .map(|(_, row)| row.iter().map(|(i, c)| (*i, c.clone())).collect())
            .collect()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Monomial, &BTreeMap<usize, Rational>)> {
        self.terms.iter()
    }
}

/// Which presentation of the generating series is being expanded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesForm {
    /// {g_1 : ... : g_{m+1} | t_1 : ... : t_{m+1}} of the base definition.
    Colon,
    /// {g_1 : ... : g_{m+1} | t_1, ..., t_{m+1}}: t-arguments are the
    /// consecutive differences, sum constrained to zero.
    Affine,
    /// {g_1, ..., g_{m+1} | t_1 : ... : t_{m+1}}: g-arguments are the
    /// consecutive ratios, product constrained to one.
    Power,
}

/// Expand a generating series term, truncated to the (w, m, N) graded piece
/// of `basis`, as a `TPolynomial` with `basis.depth` formal variables.
///
/// `args` and `tforms` both have length m+1. The normalization
/// (g-translation so the last slot is e, t-translation so the last slot is
/// 0) is applied here, so callers may pass arbitrary slot data.
pub fn series_term(
    form: SeriesForm,
    basis: &GeneratorBasis,
    args: &[GroupElt],
    tforms: &[LinForm],
) -> Result<TPolynomial> {
    let m = basis.depth as usize;
    if args.len() != m + 1 || tforms.len() != m + 1 {
        return Err(Error::InvalidArgument(format!(
            "expected {} slots, got {} args and {} t-forms",
            m + 1,
            args.len(),
            tforms.len()
        )));
    }
    match form {
        SeriesForm::Colon => Ok(colon_expand(basis, args, tforms)),
        SeriesForm::Affine => {
            // sum of the t-arguments must vanish
            let mut total = LinForm::zero(m);
            for f in tforms {
                total = &total + f;
            }
            if !total.is_zero() {
                return Err(Error::InvalidArgument(
                    "affine-form t-arguments must sum to zero".into(),
                ));
            }
            // colon t-slots are the partial sums t_1, t_1+t_2, ..., with 0 last
            let mut colon_t = Vec::with_capacity(m + 1);
            let mut acc = LinForm::zero(m);
            for f in tforms.iter().take(m) {
                acc = &acc + f;
                colon_t.push(acc.clone());
            }
            colon_t.push(LinForm::zero(m));
            Ok(colon_expand(basis, args, &colon_t))
        }
        SeriesForm::Power => {
            let mut prod = GroupElt::identity(basis.level);
            for g in args {
                prod = prod.mul(g);
            }
            if !prod.is_identity() {
                return Err(Error::InvalidArgument(
                    "power-form g-arguments must multiply to one".into(),
                ));
            }
            // colon g-slots are 1, g_1, g_1 g_2, ...
            let mut colon_g = Vec::with_capacity(m + 1);
            let mut acc = GroupElt::identity(basis.level);
            colon_g.push(acc);
            for g in args.iter().take(m) {
                acc = acc.mul(g);
                colon_g.push(acc);
            }
            Ok(colon_expand(basis, &colon_g, tforms))
        }
    }
}

fn colon_expand(basis: &GeneratorBasis, args: &[GroupElt], tforms: &[LinForm]) -> TPolynomial {
    let m = basis.depth as usize;
    let shift = args[m].inv();
    let norm_args: Vec<GroupElt> = args[..m].iter().map(|g| g.mul(&shift)).collect();
    let norm_t: Vec<LinForm> = tforms[..m].iter().map(|f| f - &tforms[m]).collect();

    let top_degree = (basis.weight - basis.depth) as usize;
    // Powers of each normalized form up to the top degree.
    let mut powers: Vec<Vec<CommPoly>> = Vec::with_capacity(m);
    for f in &norm_t {
        let lin = CommPoly::from_linform(f);
        let mut ps = vec![CommPoly::one(m)];
        for k in 1..=top_degree {
            let next = &ps[k - 1] * &lin;
            ps.push(next);
        }
        powers.push(ps);
    }

    let mut out = TPolynomial::new(m);
    for comp in basis.compositions_list() {
        let gi = basis.index_of(comp, &norm_args);
        // product of s_i^{n_i - 1}, homogeneous of degree w - m
        let mut poly = CommPoly::one(m);
        let mut vanished = false;
        for (i, &n) in comp.iter().enumerate() {
            let p = &powers[i][(n - 1) as usize];
            if p.is_zero() {
                vanished = true;
                break;
            }
            poly = &poly * p;
            if poly.is_zero() {
                vanished = true;
                break;
            }
        }
        if vanished {
            continue;
        }
        for (mono, c) in poly.terms() {
            out.add_term(mono.clone(), gi, c.clone());
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= rat((n - i) as i64);
        acc /= rat((i + 1) as i64);
    }
    acc
}

/// Rewrite the extended coefficient I_{n_1..n_m, n_{m+1}}(a_1 : ... : a_{m+1})
/// as a combination of plain generators of `basis`.
///
/// Reading the coefficient of t_1^{n_1-1} ... t_{m+1}^{n_{m+1}-1} off the
/// defining series gives
///   (-1)^{n_{m+1}-1} sum_{j_1+..+j_m = n_{m+1}-1}
///       prod_k C(n_k + j_k - 1, j_k) I_{n_1+j_1, ..., n_m+j_m}(a).
/// (For n_{m+1} = 1 this recovers the plain generator.)
pub fn extended_to_plain(
    basis: &GeneratorBasis,
    exponents: &[u32],
    args: &[GroupElt],
) -> SparseVec {
    let m = basis.depth as usize;
    debug_assert_eq!(exponents.len(), m + 1);
    debug_assert_eq!(args.len(), m + 1);
    debug_assert_eq!(
        exponents.iter().sum::<u32>() - 1,
        basis.weight,
        "extended symbol weight mismatch"
    );
    let shift = args[m].inv();
    let norm_args: Vec<GroupElt> = args[..m].iter().map(|g| g.mul(&shift)).collect();

    let extra = exponents[m] - 1;
    let sign = if extra.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
    // all j-tuples with sum = extra
    for j in compositions_with_zeros(extra, m as u32) {
        let mut coeff = sign.clone();
        let mut exps = Vec::with_capacity(m);
        for k in 0..m {
            let n = exponents[k] as u64;
            let jk = j[k] as u64;
            coeff *= binomial(n + jk - 1, jk);
            exps.push(exponents[k] + j[k]);
        }
        if coeff.is_zero() {
            continue;
        }
        let gi = basis.index_of(&exps, &norm_args);
        let slot = acc.entry(gi).or_insert_with(Rational::zero);
        *slot += coeff;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Nonnegative-integer tuples of the given length summing to `total`.
pub fn compositions_with_zeros(total: u32, parts: u32) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    fn rec(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = remaining;
            out.push(cur.clone());
            return;
        }
        for v in 0..=remaining {
            cur[pos] = v;
            rec(cur, pos + 1, remaining - v, out);
        }
    }
    let mut cur = vec![0u32; parts as usize];
    rec(&mut cur, 0, total, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn e(n: u32) -> GroupElt {
        GroupElt::identity(n)
    }

    #[test]
    fn colon_form_recovers_plain_generator() {
        // {e:e|t1:0} at weight 3 has I_3 with coefficient t1^2
        let basis = GeneratorBasis::new(3, 1, 1).unwrap();
        let t = series_term(
            SeriesForm::Colon,
            &basis,
            &[e(1), e(1)],
            &[LinForm::var(1, 0), LinForm::zero(1)],
        )
        .unwrap();
        let rows = t.rows_of_degree(2);
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0], vec![(0, rat(1))]);
    }

    #[test]
    fn extended_symbol_n_last_one_is_plain() {
        let basis = GeneratorBasis::new(4, 2, 1).unwrap();
        let v = extended_to_plain(&basis, &[1, 3, 1], &[e(1), e(1), e(1)]);
        assert_eq!(v, vec![(basis.index_of(&[1, 3], &[e(1), e(1)]), rat(1))]);
    }

    #[test]
    fn extended_symbol_cyclic_consistency_weight3() {
        // I_{1,3}(e:e) = I_3 and I_{2,2}(e:e) = -2 I_3 over mu_1
        let basis = GeneratorBasis::new(3, 1, 1).unwrap();
        let i13 = extended_to_plain(&basis, &[1, 3], &[e(1), e(1)]);
        assert_eq!(i13, vec![(0, rat(1))]);
        let i22 = extended_to_plain(&basis, &[2, 2], &[e(1), e(1)]);
        assert_eq!(i22, vec![(0, rat(-2))]);
    }

    #[test]
    fn translation_invariance() {
        // shifting every t-slot by the same form leaves the expansion fixed
        let basis = GeneratorBasis::new(4, 2, 2).unwrap();
        let g = |a: i64| GroupElt::new(a, 2);
        let t1 = LinForm::var(2, 0);
        let t2 = LinForm::var(2, 1);
        let zero = LinForm::zero(2);
        let base = series_term(
            SeriesForm::Colon,
            &basis,
            &[g(1), g(0), g(1)],
            &[t1.clone(), t2.clone(), zero.clone()],
        )
        .unwrap();
        let shift = &t1 + &t2;
        let shifted = series_term(
            SeriesForm::Colon,
            &basis,
            &[g(1), g(0), g(1)],
            &[&t1 + &shift, &t2 + &shift, shift.clone()],
        )
        .unwrap();
        assert_eq!(base, shifted);
    }

    #[test]
    fn malformed_constraints_are_errors() {
        let basis = GeneratorBasis::new(3, 2, 2).unwrap();
        let g = |a: i64| GroupElt::new(a, 2);
        let tv = vec![LinForm::var(2, 0), LinForm::var(2, 1), LinForm::var(2, 0)];
        // affine form requires the t-arguments to sum to zero
        assert!(series_term(SeriesForm::Affine, &basis, &[g(0), g(1), g(1)], &tv).is_err());
        // power form requires the g-arguments to multiply to one
        assert!(series_term(SeriesForm::Power, &basis, &[g(1), g(1), g(1)], &tv).is_err());
        // slot-count mismatch
        assert!(series_term(SeriesForm::Colon, &basis, &[g(0)], &tv).is_err());
    }

    #[test]
    fn homogeneity_in_g() {
        let basis = GeneratorBasis::new(3, 2, 3).unwrap();
        let g = |a: i64| GroupElt::new(a, 3);
        let tf = vec![LinForm::var(2, 0), LinForm::var(2, 1), LinForm::zero(2)];
        let base = series_term(SeriesForm::Colon, &basis, &[g(1), g(2), g(0)], &tf).unwrap();
        let translated =
            series_term(SeriesForm::Colon, &basis, &[g(2), g(0), g(1)], &tf).unwrap();
        assert_eq!(base, translated);
    }
}
