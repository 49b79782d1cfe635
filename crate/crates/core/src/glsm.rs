//! Exponent matrices of invariant polynomials, their charge factorizations
//! `P = S T`, the abelian group cut out by `T`, and the transpose mirror.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::exactnum::{integer_serde, Rational};
use crate::linalg::{hermite_reduce, integer_kernel, smith_normal_form, IntMatrix};
use crate::quintic;
use crate::toric::lattice_points;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GlsmError {
    #[error("exponent matrix entry ({row}, {col}) is negative")]
    NegativeExponent { row: usize, col: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("factorization does not reproduce P ({0} mismatched entries)")]
    FactorizationFailed(usize),
    #[error("basis change matrix is not unimodular")]
    NotUnimodular,
    #[error("magnitude |c_{index}| must be positive")]
    NonPositiveMagnitude { index: usize },
    #[error("{values} magnitudes for {charges} charge vectors")]
    LengthMismatch { values: usize, charges: usize },
}

/// Exponents of the monomials of an invariant polynomial: row `j` lists the
/// exponents of monomial `j` in each variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "IntMatrix", into = "IntMatrix")]
pub struct ExponentMatrix {
    entries: IntMatrix,
}

impl TryFrom<IntMatrix> for ExponentMatrix {
    type Error = GlsmError;

    fn try_from(m: IntMatrix) -> Result<Self, GlsmError> {
        ExponentMatrix::new(m)
    }
}

impl From<ExponentMatrix> for IntMatrix {
    fn from(p: ExponentMatrix) -> Self {
        p.entries
    }
}

impl ExponentMatrix {
    pub fn new(entries: IntMatrix) -> Result<Self, GlsmError> {
        for i in 0..entries.nrows() {
            for j in 0..entries.ncols() {
                if entries.get(i, j).is_negative() {
                    return Err(GlsmError::NegativeExponent { row: i, col: j });
                }
            }
        }
        Ok(ExponentMatrix { entries })
    }

    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn nrows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.entries.ncols()
    }

    pub fn rank(&self) -> usize {
        self.entries.rank()
    }

    pub fn transpose(&self) -> Self {
        ExponentMatrix { entries: self.entries.transpose() }
    }

    /// `x_0 x_1 ... x_5`-deformed Fermat quintic, columns `x_0, ..., x_5`.
    pub fn quintic() -> Self {
        ExponentMatrix::new(quintic::exponent_matrix()).expect("non-negative constant")
    }

    /// All 126 quintic monomials in `x_1..x_5` together with the extra
    /// variable `x_0` of charge `-5`, one row per lattice point of the Newton polytope.
    pub fn general_quintic() -> Self {
        let rows: Vec<Vec<BigInt>> = lattice_points(&quintic::newton_polytope())
            .into_iter()
            .map(|u| {
                // Undo the shift by (1,1,1,1,1): the fifth exponent is fixed by the degree.
                let mut row = vec![BigInt::one()];
                let head: Vec<BigInt> = u.coordinates.iter().map(|c| c + 1).collect();
                let last = BigInt::from(5) - head.iter().sum::<BigInt>();
                row.extend(head);
                row.push(last);
                row
            })
            .collect();
        ExponentMatrix::new(IntMatrix::from_rows(rows).expect("rectangular")).expect("non-negative exponents")
    }
}

/// `P = S T` with `S` of shape `m x d` and `T` of shape `d x n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChargeFactorization {
    pub s: IntMatrix,
    pub t: IntMatrix,
}

impl ChargeFactorization {
    pub fn quintic() -> Self {
        ChargeFactorization { s: quintic::left_factor(), t: quintic::right_factor() }
    }

    pub fn inner_dim(&self) -> usize {
        self.t.nrows()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    #[serde(with = "integer_serde::scalar")]
    pub expected: BigInt,
    #[serde(with = "integer_serde::scalar")]
    pub found: BigInt,
}

/// Outcome of [`verify_factorization`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationReport {
    pub valid: bool,
    pub rank: usize,
    pub inner_dim: usize,
    pub mismatches: Vec<EntryMismatch>,
}

/// Checks `P = S T` entry-wise and `rank P = d`.
pub fn verify_factorization(p: &ExponentMatrix, f: &ChargeFactorization) -> Result<FactorizationReport, GlsmError> {
    let (m, n, d) = (p.nrows(), p.ncols(), f.inner_dim());
    if f.s.nrows() != m || f.s.ncols() != d || f.t.ncols() != n {
        return Err(GlsmError::ShapeMismatch(format!(
            "P is {m}x{n}, S is {}x{}, T is {}x{}",
            f.s.nrows(),
            f.s.ncols(),
            f.t.nrows(),
            f.t.ncols()
        )));
    }
    let product = f.s.mul(&f.t).expect("shapes checked");
    let mut mismatches = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if product.get(i, j) != p.entries().get(i, j) {
                mismatches.push(EntryMismatch {
                    row: i,
                    col: j,
                    expected: p.entries().get(i, j).clone(),
                    found: product.get(i, j).clone(),
                });
            }
        }
    }
    let rank = p.rank();
    Ok(FactorizationReport { valid: mismatches.is_empty() && rank == d, rank, inner_dim: d, mismatches })
}

/// `U(1)^r x Z/d_1 x ... x Z/d_k` with `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroupStructure {
    pub torus_rank: usize,
    #[serde(with = "integer_serde::vector")]
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupStructure {
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.torus_rank == 0 && self.torsion.is_empty()
    }
}

/// The kernel of `U(1)^n -> U(1)^d` induced by `T`, with explicit generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupData {
    pub structure: AbelianGroupStructure,
    /// Integer charge vectors of the torus factor, Hermite-reduced with
    /// positive last nonzero entry.
    #[serde(with = "integer_serde::rows")]
    pub torus_generators: Vec<Vec<BigInt>>,
    /// Angles in `[0, 1)^n`, in units of a full turn, generating the finite part.
    pub torsion_generators: Vec<Vec<Rational>>,
}

impl GroupData {
    /// Character of the torus factor on variable `k`: entry `k` of every torus generator.
    pub fn characters(&self) -> Vec<Vec<i64>> {
        let n = self.torus_generators.first().map_or(0, Vec::len);
        (0..n).map(|k| self.torus_generators.iter().map(|g| g[k].to_i64().expect("small charge")).collect()).collect()
    }
}

fn fractional_part(x: &Rational) -> Rational {
    let floor = x.numer().div_floor(x.denom());
    x - Rational::from(floor)
}

pub fn group_from_charges(t: &IntMatrix) -> GroupData {
    let snf = smith_normal_form(t);
    let n = t.ncols();
    let r = snf.rank();
    let torus_generators = integer_kernel(t);
    debug_assert_eq!(torus_generators.len(), n - r);
    let mut torsion = Vec::new();
    let mut torsion_generators = Vec::new();
    for (i, d) in snf.diagonal.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        torsion.push(d.clone());
        let column = snf.right.column(i);
        torsion_generators.push(column.iter().map(|c| fractional_part(&Rational::new(c.clone(), d.clone()))).collect());
    }
    GroupData { structure: AbelianGroupStructure { torus_rank: n - r, torsion }, torus_generators, torsion_generators }
}

/// `(P, S, T) -> (P^t, T^t, S^t)`, re-verified.
pub fn transpose_mirror(
    p: &ExponentMatrix,
    f: &ChargeFactorization,
) -> Result<(ExponentMatrix, ChargeFactorization), GlsmError> {
    let p_hat = p.transpose();
    let f_hat = ChargeFactorization { s: f.t.transpose(), t: f.s.transpose() };
    let report = verify_factorization(&p_hat, &f_hat)?;
    if !report.valid {
        return Err(GlsmError::FactorizationFailed(report.mismatches.len()));
    }
    Ok((p_hat, f_hat))
}

/// `(S, T) -> (S L^{-1}, L T)` for unimodular `L`.
pub fn basis_change(f: &ChargeFactorization, l: &IntMatrix) -> Result<ChargeFactorization, GlsmError> {
    let d = f.inner_dim();
    if l.nrows() != d || l.ncols() != d {
        return Err(GlsmError::ShapeMismatch(format!("L must be {d}x{d}")));
    }
    let inverse = l.unimodular_inverse().ok_or(GlsmError::NotUnimodular)?;
    Ok(ChargeFactorization { s: f.s.mul(&inverse).expect("shapes checked"), t: l.mul(&f.t).expect("shapes checked") })
}

/// Integer kernel of `P^t`: each vector `m` encodes the invariant Laurent
/// monomial `prod c_j^{m_j}` in the coefficients of the polynomial.
pub fn invariant_coordinates(p: &ExponentMatrix) -> Vec<Vec<BigInt>> {
    integer_kernel(&p.entries().transpose())
}

fn check_lengths(values: usize, charges: &[Vec<i64>]) -> Result<(), GlsmError> {
    if values != charges.len() {
        return Err(GlsmError::LengthMismatch { values, charges: charges.len() });
    }
    Ok(())
}

fn rank_of(charges: &[Vec<i64>]) -> usize {
    charges.first().map_or(0, Vec::len)
}

/// `r = -(1/2 pi) sum_k log|c_k| chi_k`.
pub fn kahler_parameter(magnitudes: &[f64], charges: &[Vec<i64>]) -> Result<Vec<f64>, GlsmError> {
    check_lengths(magnitudes.len(), charges)?;
    if let Some(index) = magnitudes.iter().position(|&c| c.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater)) {
        return Err(GlsmError::NonPositiveMagnitude { index });
    }
    let mut r = vec![0.0; rank_of(charges)];
    for (c, chi) in magnitudes.iter().zip(charges) {
        for (ri, &x) in r.iter_mut().zip(chi) {
            *ri -= c.ln() * x as f64 / (2.0 * PI);
        }
    }
    Ok(r)
}

/// `(1/2 pi i) sum_k (log c_k + 2 pi i m_k) chi_k`, with `branches` giving the `m_k`.
/// Its imaginary part is the Kähler parameter.
pub fn complex_invariant(
    coefficients: &[Complex64],
    branches: &[i64],
    charges: &[Vec<i64>],
) -> Result<Vec<Complex64>, GlsmError> {
    check_lengths(coefficients.len(), charges)?;
    check_lengths(branches.len(), charges)?;
    if let Some(index) = coefficients.iter().position(|c| c.norm() == 0.0) {
        return Err(GlsmError::NonPositiveMagnitude { index });
    }
    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    let mut out = vec![Complex64::zero(); rank_of(charges)];
    for ((c, &m), chi) in coefficients.iter().zip(branches).zip(charges) {
        let log = c.ln() + two_pi_i * m as f64;
        for (o, &x) in out.iter_mut().zip(chi) {
            *o += log / two_pi_i * x as f64;
        }
    }
    Ok(out)
}

/// Whether `v` lies within `tol` of the lattice spanned by the characters,
/// decided through the Smith form of the character matrix.
pub fn in_charge_lattice(v: &[f64], charges: &[Vec<i64>], tol: f64) -> bool {
    let s = rank_of(charges);
    if v.len() != s {
        return false;
    }
    if s == 0 {
        return true;
    }
    let rows: Vec<Vec<BigInt>> = (0..s).map(|i| charges.iter().map(|chi| BigInt::from(chi[i])).collect()).collect();
    let x = IntMatrix::from_rows(rows).expect("rectangular");
    let snf = smith_normal_form(&x);
    let w: Vec<f64> =
        (0..s).map(|i| (0..s).map(|j| snf.left.get(i, j).to_f64().expect("small") * v[j]).sum()).collect();
    w.iter().enumerate().all(|(i, &wi)| match snf.diagonal.get(i) {
        Some(d) => {
            let q = wi / d.to_f64().expect("small");
            (q - q.round()).abs() <= tol
        }
        None => wi.abs() <= tol,
    })
}

/// Hermite-canonical form of a list of charge vectors, for comparing generator sets.
pub fn canonical_charges(vectors: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    hermite_reduce(vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn quintic_factorization_verifies() {
        let r = verify_factorization(&ExponentMatrix::quintic(), &ChargeFactorization::quintic()).unwrap();
        assert!(r.valid, "{r:?}");
        assert_eq!(r.rank, 5);
    }

    #[test]
    fn perturbed_factor_reports_entries() {
        let mut f = ChargeFactorization::quintic();
        let v = f.s.get(2, 1) + 1;
        f.s.set(2, 1, v);
        let r = verify_factorization(&ExponentMatrix::quintic(), &f).unwrap();
        assert!(!r.valid);
        assert!(r.mismatches.iter().all(|m| m.row == 2));
        assert!(!r.mismatches.is_empty());
    }

    #[test]
    fn shape_mismatch() {
        let f = ChargeFactorization { s: IntMatrix::identity(2), t: IntMatrix::identity(2) };
        assert!(matches!(verify_factorization(&ExponentMatrix::quintic(), &f), Err(GlsmError::ShapeMismatch(_))));
    }

    #[test]
    fn quintic_group_is_circle() {
        let g = group_from_charges(&quintic::right_factor());
        assert_eq!(g.structure, AbelianGroupStructure { torus_rank: 1, torsion: vec![] });
        assert_eq!(g.torus_generators, vec![ints(&[-5, 1, 1, 1, 1, 1])]);
        assert_eq!(g.characters(), vec![vec![-5], vec![1], vec![1], vec![1], vec![1], vec![1]]);
    }

    #[test]
    fn identity_charges_give_trivial_group() {
        assert!(group_from_charges(&IntMatrix::identity(3)).structure.is_trivial());
    }

    #[test]
    fn cyclic_group_generator() {
        let g = group_from_charges(&IntMatrix::from_i64_rows(&[&[3]]));
        assert_eq!(g.structure.torsion, ints(&[3]));
        assert_eq!(g.torsion_generators[0].len(), 1);
        assert_ne!(g.torsion_generators[0][0], Rational::zero());
    }

    #[test]
    fn transpose_is_an_involution() {
        let p = ExponentMatrix::quintic();
        let f = ChargeFactorization::quintic();
        let (p1, f1) = transpose_mirror(&p, &f).unwrap();
        let (p2, f2) = transpose_mirror(&p1, &f1).unwrap();
        assert_eq!((p2, f2), (p, f));
    }

    #[test]
    fn basis_change_checks_unimodularity() {
        let f = ChargeFactorization::quintic();
        assert_eq!(basis_change(&f, &IntMatrix::identity(5)).unwrap(), f);
        let mut l = IntMatrix::identity(5);
        l.set(0, 0, BigInt::from(2));
        assert_eq!(basis_change(&f, &l), Err(GlsmError::NotUnimodular));
    }

    #[test]
    fn invariant_coordinates_small_cases() {
        let one_row = ExponentMatrix::new(IntMatrix::from_i64_rows(&[&[1, 1]])).unwrap();
        // Kernel of the 2x1 transpose: m_0 (1,1)... only one monomial, so a single coefficient.
        assert!(invariant_coordinates(&one_row).is_empty());
        let two_monomials = ExponentMatrix::new(IntMatrix::from_i64_rows(&[&[1], &[1]])).unwrap();
        assert_eq!(invariant_coordinates(&two_monomials), vec![ints(&[-1, 1])]);
        let square = ExponentMatrix::new(IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]])).unwrap();
        assert!(invariant_coordinates(&square).is_empty());
    }

    #[test]
    fn negative_exponent_rejected() {
        assert_eq!(
            ExponentMatrix::new(IntMatrix::from_i64_rows(&[&[1, -1]])),
            Err(GlsmError::NegativeExponent { row: 0, col: 1 })
        );
    }

    #[test]
    fn kahler_values() {
        let chi = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(kahler_parameter(&[1.0, 1.0], &chi).unwrap(), vec![0.0, 0.0]);
        let r = kahler_parameter(&[(-2.0 * PI).exp(), 1.0], &chi).unwrap();
        assert!((r[0] - 1.0).abs() < 1e-12 && r[1].abs() < 1e-12);
        assert_eq!(kahler_parameter(&[0.0, 1.0], &chi), Err(GlsmError::NonPositiveMagnitude { index: 0 }));
        assert!(matches!(kahler_parameter(&[1.0], &chi), Err(GlsmError::LengthMismatch { .. })));
    }

    #[test]
    fn complex_invariant_imaginary_part_is_kahler() {
        let chi = vec![vec![-5], vec![1], vec![1], vec![1], vec![1], vec![1]];
        let c: Vec<Complex64> = (1..=6).map(|k| Complex64::from_polar(k as f64 * 0.7, k as f64)).collect();
        let inv = complex_invariant(&c, &[0; 6], &chi).unwrap();
        let r = kahler_parameter(&c.iter().map(|z| z.norm()).collect::<Vec<_>>(), &chi).unwrap();
        assert!((inv[0].im - r[0]).abs() < 1e-12);
        let shifted = complex_invariant(&c, &[1, 0, -2, 0, 3, 0], &chi).unwrap();
        assert!(in_charge_lattice(&[shifted[0].re - inv[0].re], &chi, 1e-9));
    }

    #[test]
    fn lattice_membership() {
        let chi = vec![vec![2, 0], vec![0, 3]];
        assert!(in_charge_lattice(&[4.0, -3.0], &chi, 1e-9));
        assert!(!in_charge_lattice(&[1.0, 0.0], &chi, 1e-9));
        assert!(!in_charge_lattice(&[0.0, 1.5], &chi, 1e-9));
    }

    #[test]
    fn general_quintic_shape() {
        let p = ExponentMatrix::general_quintic();
        assert_eq!((p.nrows(), p.ncols()), (126, 6));
        assert_eq!(p.rank(), 5);
    }
}
