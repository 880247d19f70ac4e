//! The linear map v_p and the unramified subcoalgebra D-un of the diagonal
//! over a prime level: v_p kills every depth > 1 piece and sends
//! I_{1,1}(1 : zeta^a) to 1 for a != 0; D-un is its kernel.

use super::basis::GeneratorBasis;
use super::cobracket::vp_contraction_of_cobracket;
use super::space::{build_space, DihedralSpace, Variant};
use crate::linalg::{rat, Error, Rational, Result, SparseVec};
use num::Zero;

/// v_p on an ambient generator of the (w, m) piece.
pub fn vp_value(w: u32, m: u32, basis: &GeneratorBasis, index: usize) -> Rational {
    if (w, m) != (1, 1) {
        return Rational::zero();
    }
    let gen = basis.generator(index);
    if gen.args[0].is_identity() {
        Rational::zero()
    } else {
        rat(1)
    }
}

/// v_p evaluated on an ambient vector of the (1,1) piece.
fn vp_on_vec(basis: &GeneratorBasis, v: &SparseVec) -> Rational {
    let mut acc = Rational::zero();
    for (i, c) in v {
        acc += c * vp_value(1, 1, basis, *i);
    }
    acc
}

/// Coordinates, in the quotient basis of the diagonal D piece, of a basis
/// of Ker v_p. Fails if v_p does not descend to the quotient.
pub fn kernel_basis(space: &DihedralSpace) -> Result<Vec<Vec<Rational>>> {
    let dim = space.quotient.dim();
    if space.depth > 1 {
        // v_p vanishes identically: the kernel is everything
        return Ok((0..dim)
            .map(|i| {
                let mut v = vec![Rational::zero(); dim];
                v[i] = rat(1);
                v
            })
            .collect());
    }
    let basis = match &space.basis {
        super::space::BasisDescriptor::Generators(b) => b,
        _ => {
            return Err(Error::UnsupportedVariant(
                "v_p needs the generator basis".into(),
            ))
        }
    };
    // v_p must kill the relation row space
    for rel in space.quotient.relation_rows() {
        if !vp_on_vec(basis, rel).is_zero() {
            return Err(Error::InvalidArgument(
                "v_p is not well defined on this quotient".into(),
            ));
        }
    }
    // v_p on the quotient basis
    let vbar: Vec<Rational> = space
        .quotient
        .basis_cols()
        .iter()
        .map(|&c| vp_value(1, 1, basis, c))
        .collect();
    let pivot = vbar.iter().position(|c| !c.is_zero());
    match pivot {
        None => Ok((0..dim)
            .map(|i| {
                let mut v = vec![Rational::zero(); dim];
                v[i] = rat(1);
                v
            })
            .collect()),
        Some(j0) => {
            let mut out = Vec::with_capacity(dim - 1);
            for j in 0..dim {
                if j == j0 {
                    continue;
                }
                let mut v = vec![Rational::zero(); dim];
                v[j] = rat(1);
                v[j0] = -(&vbar[j] / &vbar[j0]);
                out.push(v);
            }
            Ok(out)
        }
    }
}

/// The functional v_p together with the unramified diagonal family
/// D-un_m(mu_p) for m = 1..m_max: the kernel of v_p in depth 1 and the full
/// diagonal pieces above (where v_p vanishes).
pub fn vp_and_unramified(p: u32, m_max: u32) -> Result<Vec<DihedralSpace>> {
    (1..=m_max)
        .map(|m| build_space(m, m, p, Variant::DUnramified))
        .collect()
}

/// dim of the depth-1 unramified piece over mu_p; equals (p-3)/2.
pub fn unramified_depth1_dim(p: u32) -> Result<usize> {
    Ok(build_space(1, 1, p, Variant::DUnramified)?.dim())
}

/// The coideal property of Prop. "sub Lie coalgebra": the composite
/// partial_{v_p} . delta vanishes on the diagonal depth-m piece.
pub fn unramified_check(m: u32, p: u32) -> Result<()> {
    if m < 2 {
        return Ok(());
    }
    let composite = vp_contraction_of_cobracket(m, p)?;
    if !composite.is_zero() {
        let witness = composite
            .rows_iter()
            .find(|r| !r.is_empty())
            .cloned()
            .unwrap_or_default();
        return Err(Error::Complex {
            position: 0,
            position_plus_two: 1,
            witness,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth1_unramified_dims() {
        assert_eq!(unramified_depth1_dim(5).unwrap(), 1);
        assert_eq!(unramified_depth1_dim(7).unwrap(), 2);
    }

    #[test]
    fn coideal_small() {
        unramified_check(2, 5).unwrap();
        unramified_check(2, 7).unwrap();
    }
}
