//! Generating-function and closed-form dimension oracles.
//!
//! These are kept independent of the linear-algebra path on purpose: series
//! are expanded by the division recurrence on exact rationals, closed forms
//! are evaluated directly.

use crate::linalg::{rat, Error, Rational, Result};
use num::{One, Zero};

/// A rational power series num(x)/den(x) with integer polynomial data,
/// expanded to a fixed truncation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    /// Coefficients of the numerator, low degree first.
    pub numerator: Vec<i64>,
    /// Coefficients of the denominator, low degree first; the constant term
    /// must be nonzero.
    pub denominator: Vec<i64>,
}

impl RationalSeries {
    pub fn new(numerator: Vec<i64>, denominator: Vec<i64>) -> Result<Self> {
        if denominator.first().copied().unwrap_or(0) == 0 {
            return Err(Error::InvalidArgument(
                "denominator must have nonzero constant term".into(),
            ));
        }
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    /// x^shift / prod (1 - x^{e}) for e in `factors`.
    pub fn monomial_over_cyclotomic(shift: usize, factors: &[usize]) -> Self {
        let mut num = vec![0i64; shift + 1];
        num[shift] = 1;
        let mut den = vec![1i64];
        for &e in factors {
            let mut next = vec![0i64; den.len() + e];
            for (i, c) in den.iter().enumerate() {
                next[i] += c;
                next[i + e] -= c;
            }
            den = next;
        }
        RationalSeries {
            numerator: num,
            denominator: den,
        }
    }

    /// Exact coefficients of the expansion up to and including x^order.
    pub fn expand(&self, order: usize) -> Vec<Rational> {
        let den0 = rat(self.denominator[0]);
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = if n < self.numerator.len() {
                rat(self.numerator[n])
            } else {
                Rational::zero()
            };
            for k in 1..self.denominator.len().min(n + 1) {
                acc -= rat(self.denominator[k]) * &out[n - k];
            }
            out.push(acc / &den0);
        }
        out
    }

    /// Termwise difference as truncated series.
    pub fn expand_diff(&self, other: &RationalSeries, order: usize) -> Vec<Rational> {
        self.expand(order)
            .into_iter()
            .zip(other.expand(order))
            .map(|(a, b)| a - b)
            .collect()
    }
}

/// a_m(x) = x^{3+5+...+(2m+1)} / prod_{i=1}^m (1 - x^{2i}): the generating
/// series of dim Lambda^m of the depth-1 part over mu_1.
pub fn a_m(m: usize) -> RationalSeries {
    let shift: usize = (1..=m).map(|i| 2 * i + 1).sum();
    let factors: Vec<usize> = (1..=m).map(|i| 2 * i).collect();
    RationalSeries::monomial_over_cyclotomic(shift, &factors)
}

/// d_2(x) = x^8 / ((1-x^2)(1-x^6)).
pub fn d_2() -> RationalSeries {
    RationalSeries::monomial_over_cyclotomic(8, &[2, 6])
}

/// d_3(x) = x^11 (1 + x^2 - x^4) / ((1-x^2)(1-x^4)(1-x^6)).
pub fn d_3() -> RationalSeries {
    let base = RationalSeries::monomial_over_cyclotomic(11, &[2, 4, 6]);
    let mut num = vec![0i64; 16];
    num[11] = 1;
    num[13] = 1;
    num[15] = -1;
    RationalSeries {
        numerator: num,
        denominator: base.denominator,
    }
}

/// x^12 / ((1-x^4)(1-x^6)): the cusp-form count for SL_2(Z) by weight.
pub fn cusp_forms() -> RationalSeries {
    RationalSeries::monomial_over_cyclotomic(12, &[4, 6])
}

/// Closed-form dimension oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    /// dim D_{w,1}(mu_1): 1 for odd w >= 3, else 0. Parameter: w.
    Depth1,
    /// dim D_{w,2}(mu_1) = [(w-2)/6] for even w, 0 for odd. Parameter: w.
    Depth2,
    /// dim D_{w,3}(mu_1) = [((w-3)^2 - 1)/48] for odd w, 0 for even;
    /// [.] is the integer part (truncation toward zero). Parameter: w.
    Depth3,
    /// dim of the diagonal D_2(mu_p) = (p-1)(p-5)/12, p >= 5 prime.
    Depth2Level,
    /// dim of the diagonal D_3(mu_p) = (p-5)(p^2-2p-11)/48, p >= 5 prime.
    Depth3Level,
    /// dim H^1_cusp(Gamma_1(2;p), eps_2) = 1 + (p^2-1)/24 - (p-1)/2.
    CuspEps2,
    /// dim H^1_cusp(Gamma_1(2;p), V_2 (x) eps_2)
    ///   = 2((p^2-1)/24 - (p-1)/2) + (p-1)/2.
    CuspV2Eps2,
    /// dim of the unramified depth-1 piece: (p-3)/2.
    Unramified1,
}

pub fn closed_form(kind: ClosedForm, param: u64) -> Result<i64> {
    let p = param as i64;
    let require_prime_ge5 = |p: i64| -> Result<()> {
        let is_prime = p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0);
        if p < 5 || !is_prime {
            return Err(Error::InvalidArgument(format!(
                "parameter {p} must be a prime >= 5"
            )));
        }
        Ok(())
    };
    match kind {
        ClosedForm::Depth1 => {
            if p < 1 {
                return Err(Error::InvalidArgument("weight must be >= 1".into()));
            }
            Ok(if p >= 3 && p % 2 == 1 { 1 } else { 0 })
        }
        ClosedForm::Depth2 => {
            if p < 2 {
                return Err(Error::InvalidArgument("weight must be >= 2".into()));
            }
            Ok(if p % 2 == 0 { (p - 2) / 6 } else { 0 })
        }
        ClosedForm::Depth3 => {
            if p < 3 {
                return Err(Error::InvalidArgument("weight must be >= 3".into()));
            }
            if p % 2 == 0 {
                Ok(0)
            } else {
                // integer part: ((w-3)^2 - 1)/48 truncated toward zero,
                // which is 0 at w = 3
                let num = (p - 3) * (p - 3) - 1;
                Ok(if num <= 0 { 0 } else { num / 48 })
            }
        }
        ClosedForm::Depth2Level => {
            require_prime_ge5(p)?;
            Ok((p - 1) * (p - 5) / 12)
        }
        ClosedForm::Depth3Level => {
            require_prime_ge5(p)?;
            Ok((p - 5) * (p * p - 2 * p - 11) / 48)
        }
        ClosedForm::CuspEps2 => {
            require_prime_ge5(p)?;
            Ok(1 + (p * p - 1) / 24 - (p - 1) / 2)
        }
        ClosedForm::CuspV2Eps2 => {
            require_prime_ge5(p)?;
            Ok(2 * ((p * p - 1) / 24 - (p - 1) / 2) + (p - 1) / 2)
        }
        ClosedForm::Unramified1 => {
            require_prime_ge5(p)?;
            Ok((p - 3) / 2)
        }
    }
}

pub fn coeff_usize(c: &Rational) -> usize {
    assert!(c.is_integer() && !c.numer().sign().eq(&num::bigint::Sign::Minus));
    let v: u64 = c.numer().try_into().expect("coefficient fits in u64");
    v as usize
}

pub fn is_one(c: &Rational) -> bool {
    c.is_one()
}
