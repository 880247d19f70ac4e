use super::cyclic::{cyclic_canonical, CyclicPoly};
use super::letters::{Letter, Word};
use crate::linalg::{rat, rat_frac, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LevelMapKind {
    /// i''_N, induced by z -> z on X_{MN} -> X_M: kills X_zeta for
    /// zeta outside mu_M, keeps Y.
    Inclusion,
    /// m''_N = N^{-1} m_{N*}, induced by z -> z^N: X_zeta -> X_{zeta^N},
    /// Y -> N Y, scaled by 1/N.
    Power,
}

/// Level-change maps on cyclic words over mu_{MN} with values over mu_M.
///
/// Residues: zeta = zeta_{MN}^a lies in mu_M iff N | a, and then equals
/// zeta_M^{a/N}; zeta^N = zeta_M^{a mod M}.
pub fn level_maps(c: &CyclicPoly, m: u32, n: u32, kind: LevelMapKind) -> Result<CyclicPoly> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("levels must be positive".into()));
    }
    let mn = m * n;
    let mut out = CyclicPoly::zero();
    'term: for (cw, coeff) in c.terms() {
        let mut letters = Vec::with_capacity(cw.weight());
        let mut y_count = 0u32;
        for l in &cw.representative().0 {
            match (kind, l) {
                (_, Letter::Y) => {
                    y_count += 1;
                    letters.push(Letter::Y);
                }
                (LevelMapKind::Inclusion, Letter::X(a)) => {
                    debug_assert!(*a < mn);
                    if a % n != 0 {
                        continue 'term;
                    }
                    letters.push(Letter::X(a / n));
                }
                (LevelMapKind::Power, Letter::X(a)) => {
                    letters.push(Letter::X(a % m));
                }
            }
        }
        let scale = match kind {
            LevelMapKind::Inclusion => coeff.clone(),
            LevelMapKind::Power => {
                // N^{#Y} from Y -> N Y, then the overall 1/N.
                let mut s = rat_frac(1, n as i64);
                for _ in 0..y_count {
                    s *= rat(n as i64);
                }
                coeff * s
            }
        };
        out.add_term(cyclic_canonical(&Word(letters))?, scale);
    }
    Ok(out)
}
