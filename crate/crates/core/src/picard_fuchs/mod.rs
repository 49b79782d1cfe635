//! The quintic Picard-Fuchs operator, its Frobenius solutions at `z = 0` and
//! `z = infinity`, and the monodromy around both points.
//!
//! Monodromy around `z = -5^{-5}` is not continued analytically here; see
//! [`crate::kontsevich::spherical_matrix`].

mod frobenius;
mod monodromy;
mod operator;

pub use frobenius::{
    frobenius_at_zero, frobenius_at_zero_in, indicial_at_infinity, solutions_at_infinity, FrobeniusSolutionBundle,
    InfinitySolution, SolutionDocument, DOCUMENT_VERSION,
};
pub use monodromy::{
    fermat_base_change, monodromy_at_infinity, monodromy_at_infinity_power_basis, monodromy_at_zero, BasisTag,
    MonodromyMatrix,
};
pub use operator::{apply_operator, OperatorTerm, PFOperator, ThetaPolynomial};

use crate::exactnum::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PfError {
    #[error("truncation order must be at least 1, got {0}")]
    InvalidOrder(usize),
    #[error("nilpotent ring degree must be at least 1")]
    InvalidModulusDegree,
    #[error("indicial polynomial is not a unit at shift + {n}")]
    Resonance { n: usize },
    #[error("zero denominator in recurrence for exponent {exponent} at m = {m}")]
    DivisionByZero { exponent: Rational, m: usize },
}
