use std::fmt;

use serde::{Deserialize, Serialize};

use super::ring::{Field, Ring, RingTag};
use super::Rational;

/// Element of `Q(zeta)` for a primitive fifth root of unity `zeta`, stored in the
/// power basis `1, zeta, zeta^2, zeta^3` of `Q[x]/(x^4 + x^3 + x^2 + x + 1)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclotomicElement {
    coefficients: [Rational; 4],
}

impl CyclotomicElement {
    pub fn new(coefficients: [Rational; 4]) -> Self {
        CyclotomicElement { coefficients }
    }

    pub fn rational(value: Rational) -> Self {
        CyclotomicElement { coefficients: [value, Rational::zero(), Rational::zero(), Rational::zero()] }
    }

    /// `zeta^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let mut dense = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        dense[k.rem_euclid(5) as usize] = Rational::one();
        Self::reduce_dense(&dense)
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    pub fn coefficients(&self) -> &[Rational; 4] {
        &self.coefficients
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        self.coefficients[1..].iter().all(Rational::is_zero).then(|| self.coefficients[0].clone())
    }

    /// Reduces coefficients of `1, x, ..., x^4` modulo `x^4 = -(1 + x + x^2 + x^3)`.
    fn reduce_dense(dense: &[Rational; 5]) -> Self {
        let top = &dense[4];
        CyclotomicElement { coefficients: [&dense[0] - top, &dense[1] - top, &dense[2] - top, &dense[3] - top] }
    }

    /// Galois automorphism `zeta -> zeta^k` for `k` coprime to 5.
    pub fn galois(&self, k: i64) -> Self {
        assert!(k.rem_euclid(5) != 0, "zeta -> zeta^{k} is not an automorphism");
        let mut dense = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for (i, c) in self.coefficients.iter().enumerate() {
            dense[(i as i64 * k).rem_euclid(5) as usize] += c;
        }
        Self::reduce_dense(&dense)
    }

    /// Field norm down to `Q`: the product of all four Galois conjugates.
    pub fn norm(&self) -> Rational {
        let n = self.mul(&self.galois(2)).mul(&self.galois(3)).mul(&self.galois(4));
        n.as_rational().expect("norm lies in Q")
    }
}

impl fmt::Debug for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "z", "z^2", "z^3"];
        let mut first = true;
        for (c, name) in self.coefficients.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if name.is_empty() {
                write!(f, "{c:?}")?;
            } else {
                write!(f, "({c:?}){name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Ring for CyclotomicElement {
    type Params = ();

    fn params(&self) {}

    fn tag(_: &()) -> RingTag {
        RingTag::Cyclotomic5
    }

    fn zero(_: &()) -> Self {
        CyclotomicElement::rational(Rational::zero())
    }

    fn one(_: &()) -> Self {
        CyclotomicElement::rational(Rational::one())
    }

    fn from_rational(value: &Rational, _: &()) -> Self {
        CyclotomicElement::rational(value.clone())
    }

    fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Rational::is_zero)
    }

    fn add(&self, other: &Self) -> Self {
        CyclotomicElement { coefficients: std::array::from_fn(|i| &self.coefficients[i] + &other.coefficients[i]) }
    }

    fn sub(&self, other: &Self) -> Self {
        CyclotomicElement { coefficients: std::array::from_fn(|i| &self.coefficients[i] - &other.coefficients[i]) }
    }

    fn mul(&self, other: &Self) -> Self {
        // x^5 = 1 folds the product into five slots before the final reduction.
        let mut dense = [Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero(), Rational::zero()];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                if !b.is_zero() {
                    dense[(i + j) % 5] += &(a * b);
                }
            }
        }
        Self::reduce_dense(&dense)
    }

    fn neg(&self) -> Self {
        CyclotomicElement { coefficients: std::array::from_fn(|i| -&self.coefficients[i]) }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let conj = self.galois(2).mul(&self.galois(3)).mul(&self.galois(4));
        let norm = self.mul(&conj).as_rational().expect("norm lies in Q");
        Some(conj.scale(&norm.recip()?))
    }

    fn scale(&self, factor: &Rational) -> Self {
        CyclotomicElement { coefficients: std::array::from_fn(|i| &self.coefficients[i] * factor) }
    }
}

impl Field for CyclotomicElement {}
