//! Structural cross-checks between the modules: the kappa image dimension,
//! the depth grading of the bracket, the cyclic-shift relation, the rank-3
//! modular/dihedral comparison over the trivial group, and fast/exact
//! agreement.

use cyclotomy::dihedral::{
    cochain_complex, extended_to_plain, relation_matrix, GeneratorBasis, RelationFamily, Variant,
};
use cyclotomy::linalg::{rank, ComputeMode, QuotientSpace, SparseMatrix};
use cyclotomy::modcx::{coinvariant_complex, Twist};
use cyclotomy::words::{
    self, cyclic_bracket, cyclic_canonical, d_s, full_alphabet, x_alphabet, CyclicPoly, GroupElt,
    Letter, Word,
};

fn rat(n: i64) -> cyclotomy::Rational {
    cyclotomy::Rational::from_integer(n.into())
}

/// The weight-graded dimension of the image of kappa equals dim of the
/// reduced cyclic words (kappa is injective on the quotient).
#[test]
fn kappa_image_dimension() {
    for modulus in [1u32, 2] {
        for weight in 2..=5usize {
            let reduced: Vec<_> = words::necklaces_of_weight(weight, modulus)
                .into_iter()
                .filter(|c| !c.is_pure_power())
                .collect();
            let alphabet = full_alphabet(modulus);
            let long_words = words::words_of_weight(weight - 1, modulus);
            let windex: std::collections::BTreeMap<_, _> =
                long_words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
            let mut m = SparseMatrix::zero(alphabet.len() * long_words.len(), reduced.len());
            for (col, neck) in reduced.iter().enumerate() {
                let cp = CyclicPoly::from_cyclic(neck.clone());
                for (si, s) in alphabet.iter().enumerate() {
                    for (w, c) in d_s(&cp, *s).terms() {
                        m.set(si * long_words.len() + windex[w], col, c.clone());
                    }
                }
            }
            assert_eq!(
                rank(&m, ComputeMode::Exact),
                reduced.len(),
                "weight {weight}, N {modulus}"
            );
        }
    }
}

/// The depth-graded bracket (X letters only) is the lowest-depth part of
/// the full bracket on cyclic words.
#[test]
fn depth_graded_bracket_is_leading_term() {
    let n = 2u32;
    let mk = |ls: &[Letter]| CyclicPoly::from_cyclic(cyclic_canonical(&Word(ls.to_vec())).unwrap());
    // two-X words represent depth-1 elements on the dihedral side
    let c1 = mk(&[Letter::X(0), Letter::Y, Letter::X(1)]);
    let c2 = mk(&[Letter::X(1), Letter::Y, Letter::Y, Letter::X(0)]);
    let full = cyclic_bracket(&c1, &c2, &full_alphabet(n));
    let graded = cyclic_bracket(&c1, &c2, &x_alphabet(n));
    // depth of inputs: 2 X's each; the graded part keeps 3 X's, the Y-term
    // raises the depth to 4
    let min_depth = 3usize;
    let mut leading = CyclicPoly::zero();
    for (c, v) in full.terms() {
        if c.depth() == min_depth {
            leading.add_term(c.clone(), v.clone());
        }
    }
    assert_eq!(leading, graded);
    for (c, _) in graded.terms() {
        assert_eq!(c.depth(), min_depth);
    }
}

/// The cyclic-shift identity (extended symbols under joint slot rotation)
/// holds modulo the double-shuffle row space.
#[test]
fn cyclic_shift_modulo_double_shuffle() {
    for (w, m, n) in [(4u32, 2u32, 1u32), (5, 2, 2), (4, 3, 2)] {
        let basis = GeneratorBasis::new(w, m, n).unwrap();
        let shuffles = relation_matrix(
            w,
            m,
            n,
            &[RelationFamily::ShuffleT, RelationFamily::ShuffleG],
        )
        .unwrap();
        let q = QuotientSpace::new(basis.count(), &shuffles).unwrap();
        // take a handful of extended symbols of total weight w+? and rotate
        let mu = m as usize;
        let mut exps = vec![1u32; mu + 1];
        exps[0] = w + 1 - m; // sum = w + 1
        let args: Vec<GroupElt> = (0..=mu as i64).map(|i| GroupElt::new(i, n)).collect();
        let base = extended_to_plain(&basis, &exps, &args);
        for r in 1..=mu {
            let rot_e: Vec<u32> = (0..=mu).map(|i| exps[(i + r) % (mu + 1)]).collect();
            let rot_a: Vec<GroupElt> = (0..=mu).map(|i| args[(i + r) % (mu + 1)]).collect();
            let rotated = extended_to_plain(&basis, &rot_e, &rot_a);
            let mut diff = base.clone();
            cyclotomy::linalg::vec_add_scaled(&mut diff, &rotated, &rat(-1));
            assert!(q.in_span(&diff), "({w},{m},{n}) rotation {r}");
        }
    }
}

/// dwhn1 over the trivial group: the rank-3 coinvariant complex agrees with
/// the depth-3 part of the cochain complex of D-hat termwise and in
/// homology.
#[test]
fn rank3_modular_vs_dihedral_trivial_group() {
    for w in [3u32, 5, 7, 9, 11] {
        let modc = coinvariant_complex(3, w, Twist::None).unwrap();
        let dc = cochain_complex(w, 3, 1, Variant::DHat).unwrap();
        assert_eq!(modc.complex.dims(), dc.dims(), "dims at w = {w}");
        assert_eq!(
            modc.complex.homology_dims().unwrap(),
            dc.homology_dims().unwrap(),
            "homology at w = {w}"
        );
    }
}

/// Fast and exact ranks agree on the acceptance-suite relation matrices.
#[test]
fn fast_and_exact_modes_agree() {
    let mut matrices = Vec::new();
    for w in 2..=10u32 {
        matrices.push(relation_matrix(w, 2, 1, &RelationFamily::defining()).unwrap());
    }
    for w in [5u32, 7, 9] {
        matrices.push(relation_matrix(w, 3, 1, &RelationFamily::defining()).unwrap());
    }
    matrices.push(relation_matrix(2, 2, 7, &RelationFamily::defining()).unwrap());
    matrices.push(relation_matrix(3, 3, 5, &RelationFamily::defining()).unwrap());
    for m in &matrices {
        assert_eq!(
            rank(m, ComputeMode::Fast),
            rank(m, ComputeMode::Exact),
            "{}x{}",
            m.nrows(),
            m.ncols()
        );
    }
}

/// Euler characteristic of every accepted complex equals the alternating
/// sum of its homology.
#[test]
fn euler_characteristic_identity() {
    for (w, m) in [(8u32, 2u32), (12, 2), (11, 3), (13, 3)] {
        let c = cochain_complex(w, m, 1, Variant::D).unwrap();
        let h = c.homology_dims().unwrap();
        let chi_h: i64 = h
            .iter()
            .enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum();
        assert_eq!(c.euler_characteristic(), chi_h, "({w},{m})");
    }
}

/// Random sparse instances: rank is invariant under transposition.
#[test]
fn rank_transpose_on_relation_matrices() {
    for (w, m, n) in [(6u32, 2u32, 1u32), (5, 2, 2), (4, 3, 1)] {
        let rel = relation_matrix(w, m, n, &RelationFamily::defining()).unwrap();
        assert_eq!(
            rank(&rel, ComputeMode::Exact),
            rank(&rel.transpose(), ComputeMode::Exact)
        );
    }
}

/// Jacobi identity for the cyclic-word bracket on random reduced inputs
/// (transported from the derivation algebra).
#[test]
fn jacobi_on_random_cyclic_words() {
    words::jacobi_check(1, 5, 8, 11).unwrap();
    words::jacobi_check(2, 4, 8, 12).unwrap();
    words::jacobi_check(3, 4, 4, 13).unwrap();
}

/// Orbit sums are invariant under the whole group.
#[test]
fn orbit_sums_invariant() {
    words::orbit_invariance_check(2, 4, 5, 21).unwrap();
    words::orbit_invariance_check(3, 4, 5, 22).unwrap();
}

/// The m = 1 diagonal over mu_p has dimension (p-1)/2 (the cyclotomic-unit
/// count), by brute force.
#[test]
fn depth1_diagonal_dimension_over_primes() {
    for p in [5u32, 7, 11, 13] {
        let d = cyclotomy::dihedral::space_dim(1, 1, p, Variant::D, ComputeMode::Exact).unwrap();
        assert_eq!(d, ((p - 1) / 2) as usize, "p = {p}");
    }
}

/// The truncated level complex has degree-1 dim D_2(mu_p) and kernel
/// dimension C((p-3)/2, 2), so its Euler characteristic matches the
/// cusp-count identity.
#[test]
fn truncated_level_complex_dimensions() {
    for p in [5u32, 7, 11, 13] {
        let c = cyclotomy::modcx::level_two_complex(p).unwrap();
        let un1 = ((p - 3) / 2) as usize;
        let d2 = cyclotomy::dihedral::space_dim(2, 2, p, Variant::D, ComputeMode::Fast).unwrap();
        assert_eq!(c.truncated_dims, [d2, un1 * un1.saturating_sub(1) / 2], "p = {p}");
    }
}
