//! The acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with --nocapture). All arithmetic is exact; every check is
//! equality. Runtime bounds from the criteria are asserted where stated.

use cyclotomy::dihedral::{
    certify_lie_coalgebra, cochain_complex, relation_matrix, space_dim, unramified_check,
    unramified_depth1_dim, RelationFamily, Variant,
};
use cyclotomy::linalg::{rows_in_span, ComputeMode};
use cyclotomy::modcx::{
    coinvariant_complex, dihedral_iso_check, shuffle_vs_dihedral, Twist,
};
use cyclotomy::series::{self, closed_form, ClosedForm};
use cyclotomy::words;
use std::time::{Duration, Instant};

fn report(criterion: &str, pass: bool, elapsed: Duration) {
    println!(
        "criterion {criterion}: {} ({elapsed:.2?})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} failed");
}

fn dim_d(w: u32, m: u32, n: u32) -> usize {
    let mode = if n > 1 && m >= 3 {
        ComputeMode::Fast
    } else {
        ComputeMode::Exact
    };
    space_dim(w, m, n, Variant::D, mode).unwrap()
}

#[test]
fn criterion_01_depth1_dims() {
    let t = Instant::now();
    let mut pass = true;
    for w in 1..=21u32 {
        let expect = if w >= 3 && w % 2 == 1 { 1 } else { 0 };
        pass &= dim_d(w, 1, 1) == expect;
    }
    let elapsed = t.elapsed();
    report("01 depth-1 dims", pass && elapsed < Duration::from_secs(1), elapsed);
}

#[test]
fn criterion_02_depth2_dims() {
    let t = Instant::now();
    let mut pass = true;
    for w in 2..=20u32 {
        let expect = if w % 2 == 0 { ((w as i64) - 2) / 6 } else { 0 };
        pass &= dim_d(w, 2, 1) as i64 == expect;
    }
    let elapsed = t.elapsed();
    report("02 depth-2 dims", pass && elapsed < Duration::from_secs(60), elapsed);
}

#[test]
fn criterion_03_depth3_dims() {
    let t = Instant::now();
    let mut pass = true;
    for w in 3..=15u32 {
        let expect = if w % 2 == 1 {
            closed_form(ClosedForm::Depth3, w as u64).unwrap()
        } else {
            0
        };
        pass &= dim_d(w, 3, 1) as i64 == expect;
    }
    let elapsed = t.elapsed();
    report("03 depth-3 dims", pass && elapsed < Duration::from_secs(60), elapsed);
}

#[test]
fn criterion_04_parity_vanishing() {
    let t = Instant::now();
    let mut pass = true;
    for m in 1..=3u32 {
        let w_max = [21u32, 20, 15][m as usize - 1];
        for w in m..=w_max {
            if (w + m) % 2 == 1 {
                pass &= dim_d(w, m, 1) == 0;
            }
        }
    }
    report("04 parity vanishing", pass, t.elapsed());
}

#[test]
fn criterion_05_shuffle_implies_dihedral() {
    let t = Instant::now();
    let mut pass = true;
    for m in 2..=3u32 {
        for n in 1..=3u32 {
            for w in m..=9u32 {
                let shuffles = relation_matrix(
                    w,
                    m,
                    n,
                    &[RelationFamily::ShuffleT, RelationFamily::ShuffleG],
                )
                .unwrap();
                let dihedral = relation_matrix(w, m, n, &[RelationFamily::Dihedral]).unwrap();
                let ok = rows_in_span(&shuffles, &dihedral, ComputeMode::Fast);
                if !ok {
                    eprintln!("  dihedral not implied at w={w} m={m} N={n}");
                }
                pass &= ok;
            }
        }
    }
    // modular complexes: rank 2 span equality, rank 3 containment
    for w in [2u32, 4, 6, 8, 10, 12] {
        let (contained, equal) = shuffle_vs_dihedral(2, w).unwrap();
        pass &= contained && equal;
    }
    for w in [3u32, 5, 7] {
        let (contained, _) = shuffle_vs_dihedral(3, w).unwrap();
        pass &= contained;
    }
    report("05 shuffle implies dihedral", pass, t.elapsed());
}

#[test]
fn criterion_06_lie_coalgebra_structure() {
    let t = Instant::now();
    let mut pass = true;
    let mut certify = |w: u32, m: u32, n: u32| {
        for variant in [Variant::D, Variant::DHat] {
            if let Err(e) = certify_lie_coalgebra(w, m, n, variant) {
                eprintln!("  cobracket fails at w={w} m={m} N={n} {variant}: {e}");
                pass = false;
            }
        }
    };
    for w in 1..=21u32 {
        certify(w, 1, 1);
    }
    for w in 2..=20u32 {
        certify(w, 2, 1);
    }
    for w in 3..=15u32 {
        certify(w, 3, 1);
    }
    for p in [5u32, 7, 11, 13] {
        for m in 2..=3u32 {
            certify(m, m, p);
        }
    }
    report("06 Lie-coalgebra structure", pass, t.elapsed());
}

#[test]
fn criterion_07_diagonal_level_dims() {
    let t = Instant::now();
    let mut pass = true;
    for p in [5u32, 7, 11, 13] {
        let d2 = space_dim(2, 2, p, Variant::D, ComputeMode::Fast).unwrap() as i64;
        let e2 = closed_form(ClosedForm::Depth2Level, p as u64).unwrap();
        if d2 != e2 {
            eprintln!("  dim D_2(mu_{p}) = {d2}, expected {e2}");
            pass = false;
        }
        let d3 = space_dim(3, 3, p, Variant::D, ComputeMode::Fast).unwrap() as i64;
        let e3 = closed_form(ClosedForm::Depth3Level, p as u64).unwrap();
        if d3 != e3 {
            eprintln!("  dim D_3(mu_{p}) = {d3}, expected {e3}");
            pass = false;
        }
    }
    let elapsed = t.elapsed();
    report(
        "07 diagonal level dims",
        pass && elapsed < Duration::from_secs(600),
        elapsed,
    );
}

#[test]
fn criterion_08_depth2_cohomology() {
    let t = Instant::now();
    let mut pass = true;
    let cusp = series::cusp_forms().expand(20);
    for w in (8..=20u32).step_by(2) {
        let c = cochain_complex(w, 2, 1, Variant::D).unwrap();
        let h = c.homology_dims().unwrap();
        let expect = cusp[w as usize].to_integer();
        if h[0] != 0 || h[1] as i64 != i64::try_from(&expect).unwrap() {
            eprintln!("  w={w}: homology {h:?}, cusp oracle {expect}");
            pass = false;
        }
    }
    report("08 depth-2 cohomology", pass, t.elapsed());
}

#[test]
fn criterion_09_depth3_acyclicity() {
    let t = Instant::now();
    let mut pass = true;
    for w in (3..=13u32).step_by(2) {
        let c = cochain_complex(w, 3, 1, Variant::D).unwrap();
        let h = c.homology_dims().unwrap();
        if h.iter().any(|&x| x != 0) {
            eprintln!("  w={w}: homology {h:?}");
            pass = false;
        }
    }
    report("09 depth-3 acyclicity", pass, t.elapsed());
}

#[test]
fn criterion_10_modular_dihedral_m2() {
    let t = Instant::now();
    let mut pass = true;
    for w in (4..=20u32).step_by(2) {
        let modc = coinvariant_complex(2, w, Twist::None).unwrap();
        let dc = cochain_complex(w, 2, 1, Variant::DHat).unwrap();
        let same_dims = modc.complex.dims() == dc.dims();
        let same_hom = modc.complex.homology_dims().unwrap() == dc.homology_dims().unwrap();
        if !(same_dims && same_hom) {
            eprintln!(
                "  w={w}: modular {:?} vs dihedral {:?}",
                modc.complex.dims(),
                dc.dims()
            );
            pass = false;
        }
    }
    report("10 modular/dihedral comparison m=2", pass, t.elapsed());
}

#[test]
fn criterion_11_d_squared_zero_m3() {
    let t = Instant::now();
    let mut pass = true;
    for w in [3u32, 5, 7, 9, 11] {
        let c = coinvariant_complex(3, w, Twist::None).unwrap();
        if let Err(e) = c.complex.check_composition_zero() {
            eprintln!("  w={w}: {e}");
            pass = false;
        }
    }
    report("11 modular d^2 = 0 (m=3)", pass, t.elapsed());
}

#[test]
fn criterion_12_level_isomorphism() {
    let t = Instant::now();
    let mut pass = true;
    for p in [5u32, 7, 11, 13] {
        let r = dihedral_iso_check(p).unwrap();
        if !r.passed() {
            eprintln!("  p={p}: {r:?}");
            pass = false;
        }
    }
    report("12 level-p isomorphism", pass, t.elapsed());
}

#[test]
fn criterion_13_euler_characteristic_identities() {
    let t = Instant::now();
    let mut pass = true;
    for p in [7u32, 11, 13] {
        let pi = p as i64;
        let un1 = (pi - 3) / 2;
        let d2 = space_dim(2, 2, p, Variant::D, ComputeMode::Fast).unwrap() as i64;
        let d3 = space_dim(3, 3, p, Variant::D, ComputeMode::Fast).unwrap() as i64;
        let lhs2 = -d2 + un1 * (un1 - 1) / 2;
        let rhs2 = 1 + (pi * pi - 1) / 24 - (pi - 1) / 2;
        if lhs2 != rhs2 {
            eprintln!("  p={p} depth-2 identity: {lhs2} != {rhs2}");
            pass = false;
        }
        let lhs3 = -d3 + d2 * un1 - un1 * (un1 - 1) * (un1 - 2) / 6;
        let rhs3 = 2 * ((pi * pi - 1) / 24 - (pi - 1) / 2) + (pi - 1) / 2;
        if lhs3 != rhs3 {
            eprintln!("  p={p} depth-3 identity: {lhs3} != {rhs3}");
            pass = false;
        }
    }
    report("13 Euler-characteristic identities", pass, t.elapsed());
}

#[test]
fn criterion_14_unramified_subcoalgebra() {
    let t = Instant::now();
    let mut pass = true;
    for p in [5u32, 7, 11] {
        for m in 2..=3u32 {
            if let Err(e) = unramified_check(m, p) {
                eprintln!("  coideal fails at p={p} m={m}: {e}");
                pass = false;
            }
        }
        let d = unramified_depth1_dim(p).unwrap();
        if d != ((p - 3) / 2) as usize {
            eprintln!("  dim D-un_1(mu_{p}) = {d}");
            pass = false;
        }
    }
    report("14 unramified subcoalgebra", pass, t.elapsed());
}

#[test]
fn criterion_15_cyclic_word_algebra() {
    let t = Instant::now();
    let mut pass = true;
    // exactness of the fundamental sequence at weight <= 6, |S| <= 3
    for n in 1..=2u32 {
        for w in 1..=6usize {
            let r = words::exactness_report(w, n);
            if !r.is_exact() || !r.euler_identity_holds() {
                eprintln!("  exactness fails at weight {w}, N={n}: {r:?}");
                pass = false;
            }
        }
    }
    // kappa is a Lie homomorphism on 100 random pairs
    if let Err(e) = words::kappa_homomorphism_check(2, 5, 50, 1) {
        eprintln!("  {e}");
        pass = false;
    }
    if let Err(e) = words::kappa_homomorphism_check(3, 4, 50, 2) {
        eprintln!("  {e}");
        pass = false;
    }
    // level-map identities and bracket preservation on invariant inputs
    for (m, n) in [(1u32, 2u32), (1, 3), (2, 2), (3, 2), (2, 3)] {
        if let Err(e) = words::level_identities_check(m, n, 4) {
            eprintln!("  {e}");
            pass = false;
        }
        if let Err(e) = words::level_bracket_preservation_check(m, n, 4, 10, 3) {
            eprintln!("  {e}");
            pass = false;
        }
    }
    report("15 cyclic-word algebra", pass, t.elapsed());
}

#[test]
fn criterion_16_series_oracles() {
    let t = Instant::now();
    let mut pass = true;
    let d2 = series::d_2().expand(41);
    for w in (8..=40usize).step_by(2) {
        pass &= d2[w] == cyclotomy::Rational::from_integer((((w as i64) - 2) / 6).into());
    }
    let d3 = series::d_3().expand(41);
    for w in (11..=41usize).step_by(2) {
        let expect = ((w as i64 - 3) * (w as i64 - 3) - 1) / 48;
        pass &= d3[w] == cyclotomy::Rational::from_integer(expect.into());
    }
    // d_2 - a_2 = -x^12/((1-x^4)(1-x^6)) to order 40
    let diff = series::d_2().expand_diff(&series::a_m(2), 40);
    let target = series::RationalSeries::monomial_over_cyclotomic(12, &[4, 6]).expand(40);
    for w in 0..=40usize {
        pass &= diff[w] == -target[w].clone();
    }
    report("16 series oracles", pass, t.elapsed());
}
