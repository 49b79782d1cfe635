use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use super::Rational;

/// Identifies the coefficient ring a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "ring", rename_all = "snake_case")]
pub enum RingTag {
    Rational,
    /// `Q[alpha]/(alpha^degree)`.
    Nilpotent {
        degree: usize,
    },
    /// `Q(zeta_5)`.
    Cyclotomic5,
}

/// A commutative ring with unit, exact arithmetic, and an embedding of the rationals.
///
/// Some rings carry runtime parameters (the truncation degree of a nilpotent
/// ring). Those live in `Params`, so constants like zero and one need them.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + 'static {
    type Params: Clone + PartialEq + Debug + Send + Sync;

    fn params(&self) -> Self::Params;
    fn tag(params: &Self::Params) -> RingTag;

    fn zero(params: &Self::Params) -> Self;
    fn one(params: &Self::Params) -> Self;
    fn from_rational(value: &Rational, params: &Self::Params) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// Multiplicative inverse, if `self` is a unit.
    fn inv(&self) -> Option<Self>;

    fn is_unit(&self) -> bool {
        self.inv().is_some()
    }

    fn is_one(&self) -> bool {
        *self == Self::one(&self.params())
    }

    fn scale(&self, factor: &Rational) -> Self {
        self.mul(&Self::from_rational(factor, &self.params()))
    }

    fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.params());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// Rings in which every nonzero element is a unit.
pub trait Field: Ring {}
