use mirror_core::glsm::{
    basis_change, canonical_charges, complex_invariant, group_from_charges, in_charge_lattice, invariant_coordinates,
    kahler_parameter, transpose_mirror, verify_factorization, ChargeFactorization, ExponentMatrix, GlsmError,
};
use mirror_core::IntMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Products of elementary matrices with a few sign flips; always unimodular.
fn unimodular(dim: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..dim, 0..dim, -2i64..=2), 1..8).prop_map(move |ops| {
        let mut m = IntMatrix::identity(dim);
        for (i, j, c) in ops {
            let mut e = IntMatrix::identity(dim);
            if i == j {
                e.set(i, i, BigInt::from(-1));
            } else {
                e.set(i, j, BigInt::from(c));
            }
            m = e.mul(&m).unwrap();
        }
        m
    })
}

#[test]
fn displayed_factorizations_verify() {
    let p = ExponentMatrix::quintic();
    let f = ChargeFactorization::quintic();
    let report = verify_factorization(&p, &f).unwrap();
    assert!(report.valid);
    assert_eq!(report.rank, 5);
    let (p_hat, f_hat) = transpose_mirror(&p, &f).unwrap();
    assert!(verify_factorization(&p_hat, &f_hat).unwrap().valid);
}

#[test]
fn quintic_and_mirror_groups() {
    let f = ChargeFactorization::quintic();
    let g = group_from_charges(&f.t);
    assert_eq!(g.structure.torus_rank, 1);
    assert!(g.structure.torsion.is_empty());
    assert_eq!(g.torus_generators, vec![ints(&[-5, 1, 1, 1, 1, 1])]);

    let (_, f_hat) = transpose_mirror(&ExponentMatrix::quintic(), &f).unwrap();
    let g_hat = group_from_charges(&f_hat.t);
    assert_eq!(g_hat.structure.torus_rank, 1);
    assert_eq!(g_hat.structure.torsion, ints(&[5, 5, 5]));
    assert_eq!(g_hat.structure.torsion_order(), BigInt::from(125));
}

#[test]
fn mirror_invariant_is_the_fermat_ratio() {
    let p_hat = ExponentMatrix::quintic().transpose();
    assert_eq!(invariant_coordinates(&p_hat), vec![ints(&[-5, 1, 1, 1, 1, 1])]);
}

#[test]
fn mismatches_are_listed() {
    let p = ExponentMatrix::quintic();
    let mut f = ChargeFactorization::quintic();
    f.s.set(0, 0, BigInt::from(2));
    let report = verify_factorization(&p, &f).unwrap();
    assert!(!report.valid);
    assert!(!report.mismatches.is_empty());
    assert!(matches!(transpose_mirror(&p, &f), Err(GlsmError::FactorizationFailed(_))));
}

#[test]
fn general_quintic_has_rank_five() {
    let p = ExponentMatrix::general_quintic();
    assert_eq!((p.nrows(), p.ncols()), (126, 6));
    assert_eq!(p.rank(), 5);
}

#[test]
fn kahler_parameter_of_the_quintic() {
    let g = group_from_charges(&ChargeFactorization::quintic().t);
    let chi = g.characters();
    // |c_0| = e^{2 pi}, others 1: r = -(1/2 pi) * 2 pi * (-5) = 5.
    let mut magnitudes = vec![1.0; 6];
    magnitudes[0] = (2.0 * std::f64::consts::PI).exp();
    let r = kahler_parameter(&magnitudes, &chi).unwrap();
    assert!((r[0] - 5.0).abs() < 1e-12);
    assert!(in_charge_lattice(&r, &chi, 1e-9));
    assert!(!in_charge_lattice(&[0.5], &chi, 1e-9));
    let coefficients: Vec<Complex64> = magnitudes.iter().map(|&m| Complex64::new(m, 0.0)).collect();
    let t = complex_invariant(&coefficients, &[0; 6], &chi).unwrap();
    assert!((t[0].im - r[0]).abs() < 1e-12);
    assert!(matches!(
        kahler_parameter(&[1.0, 0.0, 1.0, 1.0, 1.0, 1.0], &chi),
        Err(GlsmError::NonPositiveMagnitude { index: 1 })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn basis_changes_preserve_everything(l in unimodular(5)) {
        let p = ExponentMatrix::quintic();
        let f = ChargeFactorization::quintic();
        let g = basis_change(&f, &l).unwrap();
        prop_assert!(verify_factorization(&p, &g).unwrap().valid);

        let before = group_from_charges(&f.t);
        let after = group_from_charges(&g.t);
        prop_assert_eq!(&before.structure, &after.structure);
        prop_assert_eq!(canonical_charges(before.torus_generators), canonical_charges(after.torus_generators));

        let (p_hat, g_hat) = transpose_mirror(&p, &g).unwrap();
        prop_assert!(verify_factorization(&p_hat, &g_hat).unwrap().valid);
        prop_assert_eq!(group_from_charges(&g_hat.t).structure.torsion, ints(&[5, 5, 5]));
    }
}

#[test]
fn non_unimodular_change_is_rejected() {
    let mut l = IntMatrix::identity(5);
    l.set(0, 0, BigInt::from(2));
    assert_eq!(basis_change(&ChargeFactorization::quintic(), &l), Err(GlsmError::NotUnimodular));
}
