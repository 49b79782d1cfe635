//! Lattice polytopes: hulls, polar duality, lattice points, faces, and the
//! Gorenstein conditions on exponent matrices.

mod faces;
mod polytope;

pub use faces::{
    dual_face_vertices, dual_vertex, edge_length, face_pairing, faces, faces_of_dim, normalized_area, Face, FacePairing,
};
pub use polytope::{
    is_reflexive, lattice_length, lattice_points, polar_dual, polar_dual_vertices, Facet, HullEquation, LatticePoint,
    LatticePolytope, ReflexivityCertificate,
};

use serde::{Deserialize, Serialize};

use crate::exactnum::{Rational, Ring};
use crate::glsm::ExponentMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ToricError {
    #[error("polytope needs at least one point")]
    Empty,
    #[error("point of dimension {found} in a polytope of dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("dual vertex {0:?} is not a lattice point")]
    NonIntegralDual(Vec<Rational>),
    #[error("polytope is not reflexive")]
    NotReflexive,
    #[error("expected a full-dimensional polytope in Z^4, got dimension {0}")]
    NotFourDimensional(usize),
    #[error("expected a polygon, got a point set of dimension {0}")]
    NotPolygon(usize),
    #[error("moduli dimension {0} is not positive")]
    EmptyModuli(i64),
    #[error("no rational mu with P mu = (1,...,1)")]
    InfeasibleMu,
    #[error("no rational nu with nu^t P = (1,...,1)")]
    InfeasibleNu,
    #[error("witness does not satisfy the Gorenstein equations")]
    InvalidWitness,
    #[error("dimension {0} is not an integer")]
    NonIntegralDimension(Rational),
}

/// `num_monomials - group_dimension`, the dimension of a family of
/// hypersurfaces modulo a symmetry group.
pub fn moduli_dimension(num_monomials: i64, group_dimension: i64) -> Result<i64, ToricError> {
    let d = num_monomials - group_dimension;
    if d <= 0 {
        return Err(ToricError::EmptyModuli(d));
    }
    Ok(d)
}

/// Rational vectors with `P mu = (1,...,1)` and `nu^t P = (1,...,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinWitness {
    pub mu: Vec<Rational>,
    pub nu: Vec<Rational>,
    /// `nu^t P mu`, which equals both `sum mu` and `sum nu`.
    pub pairing: Rational,
}

impl GorensteinWitness {
    pub fn verify(&self, p: &ExponentMatrix) -> bool {
        let m = p.entries().to_rational();
        let (rows, cols) = (m.nrows(), m.ncols());
        if self.mu.len() != cols || self.nu.len() != rows {
            return false;
        }
        let ones_mu = (0..rows).all(|i| (0..cols).map(|j| m.get(i, j) * &self.mu[j]).sum::<Rational>().is_one());
        let ones_nu = (0..cols).all(|j| (0..rows).map(|i| &self.nu[i] * m.get(i, j)).sum::<Rational>().is_one());
        ones_mu && ones_nu && self.pairing == self.mu.iter().cloned().sum::<Rational>()
    }
}

/// Solves the two Gorenstein systems. When a system is underdetermined the
/// solution with free coordinates set to zero is returned.
pub fn gorenstein_check(p: &ExponentMatrix) -> Result<GorensteinWitness, ToricError> {
    let m = p.entries().to_rational();
    let mu = m.solve(&vec![Rational::one(); m.nrows()]).ok_or(ToricError::InfeasibleMu)?;
    let nu = m.transpose().solve(&vec![Rational::one(); m.ncols()]).ok_or(ToricError::InfeasibleNu)?;
    let pairing = mu.iter().cloned().sum();
    Ok(GorensteinWitness { mu, nu, pairing })
}

/// `d - 2 nu^t P mu`.
pub fn cy_dimension(p: &ExponentMatrix, witness: &GorensteinWitness, d: i64) -> Result<i64, ToricError> {
    if !witness.verify(p) {
        return Err(ToricError::InvalidWitness);
    }
    let value = Rational::from(d) - Rational::from(2) * &witness.pairing;
    let as_int = value.to_integer().ok_or_else(|| ToricError::NonIntegralDimension(value.clone()))?;
    i64::try_from(as_int).map_err(|_| ToricError::NonIntegralDimension(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::IntMatrix;

    fn exponents(rows: &[&[i64]]) -> ExponentMatrix {
        ExponentMatrix::new(IntMatrix::from_i64_rows(rows)).unwrap()
    }

    #[test]
    fn moduli_counts() {
        assert_eq!(moduli_dimension(126, 25), Ok(101));
        assert_eq!(moduli_dimension(6, 5), Ok(1));
        assert_eq!(moduli_dimension(7, 7), Err(ToricError::EmptyModuli(0)));
    }

    #[test]
    fn identity_witness() {
        let p = exponents(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let w = gorenstein_check(&p).unwrap();
        assert_eq!(w.mu, vec![Rational::one(); 3]);
        assert_eq!(w.nu, vec![Rational::one(); 3]);
        assert_eq!(w.pairing, Rational::from(3));
        assert!(w.verify(&p));
    }

    #[test]
    fn zero_row_is_infeasible() {
        let p = exponents(&[&[1, 1], &[0, 0]]);
        assert_eq!(gorenstein_check(&p), Err(ToricError::InfeasibleMu));
    }

    #[test]
    fn dimension_formula() {
        let p = exponents(&[&[2, 0], &[0, 2]]);
        let w = gorenstein_check(&p).unwrap();
        assert_eq!(w.pairing, Rational::one());
        assert_eq!(cy_dimension(&p, &w, 4), Ok(2));
        assert_eq!(cy_dimension(&p, &w, 2), Ok(0));
        let q = exponents(&[&[4]]);
        let wq = gorenstein_check(&q).unwrap();
        assert!(matches!(cy_dimension(&q, &wq, 1), Err(ToricError::NonIntegralDimension(_))));
        let mut bad = w.clone();
        bad.mu[0] = Rational::zero();
        assert_eq!(cy_dimension(&p, &bad, 4), Err(ToricError::InvalidWitness));
    }
}
