//! Randomized structural checks on the cyclic-word Lie algebra, used by the
//! verification suites and the acceptance tests. All randomness is seeded.

use super::cyclic::{cyclic_bracket, full_alphabet, CyclicPoly};
use super::derivation::{derivation_bracket, kappa};
use super::level::{level_maps, LevelMapKind};
use super::letters::{GroupElt, Letter, Word};
use crate::linalg::{rat, Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_word(rng: &mut impl Rng, modulus: u32, weight: usize) -> Word {
    let alphabet = full_alphabet(modulus);
    Word(
        (0..weight)
            .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
            .collect(),
    )
}

/// A random reduced cyclic polynomial with small integer coefficients.
pub fn random_reduced_poly(rng: &mut impl Rng, modulus: u32, max_weight: usize) -> CyclicPoly {
    let mut out = CyclicPoly::zero();
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let weight = rng.gen_range(2..=max_weight.max(2));
        let w = random_word(rng, modulus, weight);
        if let Ok(c) = super::cyclic::cyclic_canonical(&w) {
            out.add_term(c, rat(rng.gen_range(-3..=3i64)));
        }
    }
    out.reduced()
}

/// A random G-invariant reduced cyclic polynomial (an integer combination
/// of orbit sums).
pub fn random_invariant_poly(rng: &mut impl Rng, modulus: u32, max_weight: usize) -> CyclicPoly {
    let mut out = CyclicPoly::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let weight = rng.gen_range(2..=max_weight.max(2));
        let w = random_word(rng, modulus, weight);
        if let Ok(c) = super::cyclic::cyclic_canonical(&w) {
            let orbit = super::cyclic::orbit_sum(&c, modulus);
            let scaled = orbit.scale(&rat(rng.gen_range(-2..=2i64)));
            out.add_in(&scaled);
        }
    }
    out.reduced()
}

/// kappa([c1, c2]) = [kappa(c1), kappa(c2)] on random reduced pairs.
pub fn kappa_homomorphism_check(
    modulus: u32,
    max_weight: usize,
    pairs: usize,
    seed: u64,
) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = full_alphabet(modulus);
    for i in 0..pairs {
        let c1 = random_reduced_poly(&mut rng, modulus, max_weight);
        let c2 = random_reduced_poly(&mut rng, modulus, max_weight);
        let lhs = kappa(&cyclic_bracket(&c1, &c2, &alphabet), modulus)?;
        let rhs = derivation_bracket(&kappa(&c1, modulus)?, &kappa(&c2, modulus)?)?;
        if !lhs.eq_as_derivation(&rhs) {
            return Err(Error::InvalidArgument(format!(
                "kappa is not a homomorphism on pair {i}: c1 = {c1}, c2 = {c2}"
            )));
        }
    }
    Ok(())
}

/// Jacobi identity for the cyclic-word bracket on random reduced triples.
pub fn jacobi_check(modulus: u32, max_weight: usize, triples: usize, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet = full_alphabet(modulus);
    for i in 0..triples {
        let c1 = random_reduced_poly(&mut rng, modulus, max_weight);
        let c2 = random_reduced_poly(&mut rng, modulus, max_weight);
        let c3 = random_reduced_poly(&mut rng, modulus, max_weight);
        let mut acc = cyclic_bracket(&cyclic_bracket(&c1, &c2, &alphabet), &c3, &alphabet);
        acc.add_in(&cyclic_bracket(
            &cyclic_bracket(&c2, &c3, &alphabet),
            &c1,
            &alphabet,
        ));
        acc.add_in(&cyclic_bracket(
            &cyclic_bracket(&c3, &c1, &alphabet),
            &c2,
            &alphabet,
        ));
        if !acc.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "Jacobi fails on triple {i}"
            )));
        }
    }
    Ok(())
}

/// The level-map identities of the distribution maps:
/// (i'' - m'')(Y^k) = (1 - N^{k-1}) Y^k and (i'' - m'')(sum_g X_g^k) = 0.
pub fn level_identities_check(m: u32, n: u32, k_max: usize) -> Result<()> {
    for k in 1..=k_max {
        let yk = CyclicPoly::from_cyclic(
            super::cyclic::cyclic_canonical(&Word(vec![Letter::Y; k])).unwrap(),
        );
        let i = level_maps(&yk, m, n, LevelMapKind::Inclusion)?;
        let mm = level_maps(&yk, m, n, LevelMapKind::Power)?;
        let mut diff = i;
        diff.add_in(&mm.scale(&rat(-1)));
        let expected = yk.scale(&rat(1 - (n as i64).pow(k as u32 - 1)));
        if diff != expected {
            return Err(Error::InvalidArgument(format!(
                "Y^{k} level identity fails for (M,N) = ({m},{n})"
            )));
        }

        let mut xsum = CyclicPoly::zero();
        for a in 0..m * n {
            xsum.add_term(
                super::cyclic::cyclic_canonical(&Word(vec![Letter::X(a); k])).unwrap(),
                rat(1),
            );
        }
        let i = level_maps(&xsum, m, n, LevelMapKind::Inclusion)?;
        let mm = level_maps(&xsum, m, n, LevelMapKind::Power)?;
        let mut diff = i;
        diff.add_in(&mm.scale(&rat(-1)));
        if !diff.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "sum X_g^{k} level identity fails for (M,N) = ({m},{n})"
            )));
        }
    }
    Ok(())
}

/// i'' and m'' preserve the cyclic-word bracket on G-invariant inputs.
pub fn level_bracket_preservation_check(
    m: u32,
    n: u32,
    max_weight: usize,
    trials: usize,
    seed: u64,
) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let big = full_alphabet(m * n);
    let small = full_alphabet(m);
    for i in 0..trials {
        let c1 = random_invariant_poly(&mut rng, m * n, max_weight);
        let c2 = random_invariant_poly(&mut rng, m * n, max_weight);
        let bracket = cyclic_bracket(&c1, &c2, &big);
        for kind in [LevelMapKind::Inclusion, LevelMapKind::Power] {
            let lhs = level_maps(&bracket, m, n, kind)?.reduced();
            let rhs = cyclic_bracket(
                &level_maps(&c1, m, n, kind)?.reduced(),
                &level_maps(&c2, m, n, kind)?.reduced(),
                &small,
            )
            .reduced();
            let mut diff = lhs;
            diff.add_in(&rhs.scale(&rat(-1)));
            if !diff.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "level map {kind:?} does not preserve the bracket on trial {i} for (M,N) = ({m},{n})"
                )));
            }
        }
    }
    Ok(())
}

/// The inclusion-map image of an invariant element stays invariant and the
/// orbit-sum construction is fixed by every group element.
pub fn orbit_invariance_check(modulus: u32, max_weight: usize, trials: usize, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let c = random_invariant_poly(&mut rng, modulus, max_weight);
        for h in GroupElt::all(modulus) {
            if c.translate(&h) != c {
                return Err(Error::InvalidArgument("orbit sum is not invariant".into()));
            }
        }
    }
    Ok(())
}
