//! Values fixed by hand arithmetic or by an independent SLSQP search (scipy,
//! 50 random starts per s-vertex, directly on the ACS′ formula).

use acs_core::fkm::{
    check_conditions, clifford_system, delta, fkm_multiplicities, stiefel_threshold, Certification, ExampleFamily,
    FamilyKind, Leaf,
};
use acs_core::index_bounds::{acs_index_constant, robust_index_constant, veronese_dim};
use acs_core::isoparametric::{
    acs_prime, curvature_normals, extreme_sectional, focal_acs_upper, max_acs, minimal_angle, ricci_eigenvalues,
    simple_upper_bound, volume_profile, Multiplicities, Semantics,
};
use acs_core::killing::KillingMetric;
use acs_core::lie::{
    a_n_closed, b_n_closed, estimate_a_n, explicit_even_minimizer, positive_witness, sample_min_acs, EmbeddingFamily,
};
use acs_core::matrix::Matrix;
use acs_core::sampling::{grassmann_sample_pair, Orthogonality};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

fn mult(m1: usize, m2: usize) -> Multiplicities {
    Multiplicities::new(m1, m2).unwrap()
}

fn r(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[test]
fn max_acs_matches_independent_search() {
    let frozen = [
        ((5, 5), -11.229184719798965),
        ((6, 9), -24.01167706958323),
        ((4, 11), -4.309534842664576),
        ((4, 4), -3.229184718672169),
        ((3, 3), 4.770815281332876),
        ((2, 2), 12.770815281524865),
        ((1, 1), 20.770815280500184),
    ];
    for ((m1, m2), want) in frozen {
        let got = max_acs::<f64>(mult(m1, m2)).unwrap();
        assert!((got.value - want).abs() < 1e-7, "({m1},{m2}): {} vs {want}", got.value);
        let sem = if m1 > 1 { Semantics::Exact } else { Semantics::UpperBound };
        assert_eq!(got.semantics, sem);
    }
}

#[test]
fn curvature_normal_spot_values() {
    let m = mult(5, 5);
    let sys = curvature_normals::<f64>(m);
    let xi1 = sys.xi[0][0].powi(2) + sys.xi[0][1].powi(2);
    assert!((xi1 - 6.82842712474619).abs() < 1e-12);
    let e1 = [1.0, 0.0, 0.0, 0.0];
    assert!((acs_prime(&sys, m, &e1, &e1).unwrap() + 12.686291501015239).abs() < 1e-9);
    assert!((simple_upper_bound::<f64>(m) + 5.857864376269049).abs() < 1e-9);
    assert!((simple_upper_bound::<f64>(mult(6, 9)) + 15.635083268962916).abs() < 1e-9);
    assert!((ricci_eigenvalues(&sys, m)[0] - 13.17157287525381).abs() < 1e-9);
    assert!((extreme_sectional(&sys) + 4.82842712474619).abs() < 1e-9);
    for i in 0..4 {
        let ip = sys.xi[i][0] * sys.p[0] + sys.xi[i][1] * sys.p[1];
        assert!((ip + 1.0).abs() < 1e-12);
    }
}

#[test]
fn minimal_angle_and_volume_profile() {
    assert!((volume_profile(mult(1, 1), std::f64::consts::PI / 8.0) - 0.25).abs() < 1e-15);
    assert!((minimal_angle::<f64>(mult(1, 1)) - std::f64::consts::PI / 8.0).abs() < 1e-15);
    assert!((minimal_angle::<f64>(mult(4, 5)) - 0.4205343).abs() < 1e-7);
    let m = mult(6, 9);
    let (mut best, mut arg) = (f64::NEG_INFINITY, 0.0);
    let mut th = 1e-5;
    while th < std::f64::consts::FRAC_PI_4 {
        let v = volume_profile(m, th);
        if v > best {
            best = v;
            arg = th;
        }
        th += 1e-5;
    }
    assert!((arg - minimal_angle::<f64>(m)).abs() < 1e-4);
}

#[test]
fn focal_spot_values() {
    assert_eq!(focal_acs_upper(Multiplicities { m1: 6, m2: 9 }), -8);
    assert_eq!(focal_acs_upper(Multiplicities { m1: 1, m2: 4 }), -3);
}

#[test]
fn fkm_spot_values() {
    assert_eq!(delta(4).unwrap(), 4);
    assert_eq!(delta(9).unwrap(), 16);
    assert_eq!(delta(10).unwrap(), 32);
    let f = fkm_multiplicities(4, 3).unwrap();
    assert_eq!((f.multiplicities.m1, f.multiplicities.m2, f.exceptional), (4, 7, false));
    let f = fkm_multiplicities(4, 2).unwrap();
    assert_eq!((f.multiplicities.m1, f.multiplicities.m2, f.exceptional), (3, 4, true));
    let f = fkm_multiplicities(1, 6).unwrap();
    assert_eq!((f.multiplicities.m1, f.multiplicities.m2), (1, 4));
    assert_eq!(stiefel_threshold(|k| FamilyKind::HomogeneousReal { k }, 20), Some(6));
    assert_eq!(stiefel_threshold(|k| FamilyKind::HomogeneousComplex { k }, 20), Some(4));
    assert_eq!(stiefel_threshold(|k| FamilyKind::HomogeneousQuaternionic { k }, 20), Some(3));
    assert_eq!(stiefel_threshold(|k| FamilyKind::Fkm { m: 1, k }, 20), Some(6));
    assert_eq!(clifford_system(2, 1).unwrap().dim(), 4);
    assert_eq!(clifford_system(9, 1).unwrap().dim(), 32);
    let sys = clifford_system(1, 1).unwrap();
    assert_eq!(sys.fkm_polynomial(&[1.0, 0.0]).unwrap(), 1.0);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    assert!((sys.fkm_polynomial(&[h, h]).unwrap() - 1.0).abs() < 1e-15);
}

#[test]
fn quaternionic_family_certifications() {
    let k2 = ExampleFamily::new(FamilyKind::HomogeneousQuaternionic { k: 2 }, Leaf::RegularMinimal).unwrap();
    assert_eq!(check_conditions(&k2).unwrap().m1, 3);
    for k in 3..=6 {
        let kind = FamilyKind::HomogeneousQuaternionic { k };
        let minimal = check_conditions(&ExampleFamily::new(kind, Leaf::RegularMinimal).unwrap()).unwrap();
        assert_eq!(minimal.certification, Certification::NumericThreshold, "k={k}");
        assert!(minimal.numeric);
        let focal = check_conditions(&ExampleFamily::new(kind, Leaf::FocalPlus).unwrap()).unwrap();
        assert_eq!(focal.certification, Certification::FocalBound, "k={k}");
    }
}

#[test]
fn killing_spot_value() {
    let i = Complex64::new(0.0, 0.5);
    let x = Matrix::from_diagonal(&[i, -i]);
    assert_eq!(KillingMetric::complex(2).inner(&x, &x).unwrap(), 2.0);
}

#[test]
fn grassmann_sample_constraints_for_a_line_in_h2() {
    let (x, n) = grassmann_sample_pair::<f64>(1, 2, 5, Orthogonality::RealPart).unwrap();
    assert_eq!(x.shape(), (1, 1));
    assert!((x.frobenius_sqr() - 1.0 / 24.0).abs() < 1e-14);
    assert!((n.frobenius_sqr() - 1.0 / 24.0).abs() < 1e-14);
    assert!(x.re_inner(&n).abs() < 1e-15);
}

#[test]
fn su_closed_forms() {
    assert!(a_n_closed(2).unwrap() == r(0, 1));
    assert_eq!(a_n_closed(4).unwrap(), r(-1, 16));
    assert_eq!(a_n_closed(6).unwrap(), r(-1, 12));
    assert!((explicit_even_minimizer::<f64>(6).unwrap().value + 1.0 / 12.0).abs() < 1e-12);
    assert_eq!(b_n_closed(16).unwrap(), r(1, 2048));
    assert_eq!(b_n_closed(18).unwrap(), r(0, 1));
    assert_eq!(b_n_closed(20).unwrap(), r(-1, 3200));
    assert!((positive_witness::<f64>(20).unwrap().value - 3.125e-4).abs() < 1e-9);
    assert!(estimate_a_n(2, 32, 0).unwrap().value.abs() < 1e-6);
    assert!((estimate_a_n(4, 32, 0).unwrap().value + 0.0625).abs() < 1e-6);
}

/// Odd `n` has no closed form; these come from BFGS over all of `su(n) × su(n)`
/// (40 starts), with no diagonal reduction.
#[test]
fn odd_a_n_matches_unrestricted_search() {
    assert!(estimate_a_n(3, 32, 0).unwrap().value.abs() < 1e-9);
    assert!((estimate_a_n(5, 32, 0).unwrap().value + 0.06339672844233768).abs() < 1e-8);
}

#[test]
fn a_n_estimates_are_monotone() {
    let vals: Vec<f64> = (2..=9).map(|n| estimate_a_n(n, 32, 1).unwrap().value).collect();
    for w in vals.windows(2) {
        assert!(w[0] >= w[1] - 1e-6, "{vals:?}");
    }
}

#[test]
fn embedding_sweeps() {
    let s = sample_min_acs(EmbeddingFamily::Sp { n: 3 }, 10_000, 0).unwrap();
    assert!(s.max_value <= -1.0 / 16.0 + 1e-9);
    let s = sample_min_acs(EmbeddingFamily::Su { n: 5 }, 10_000, 0).unwrap();
    assert!(s.max_value < 0.0);
    let s = sample_min_acs(EmbeddingFamily::GrassmannH { d: 1, n: 2 }, 10_000, 0).unwrap();
    assert!(s.max_value <= -0.5 + 1e-9);
}

#[test]
fn index_spot_values() {
    assert_eq!(acs_index_constant(16).unwrap(), r(1, 120));
    assert_eq!(robust_index_constant(4), r(1, 91));
    assert_eq!(robust_index_constant(2), r(1, 10));
    assert_eq!(veronese_dim(10), 65);
}
