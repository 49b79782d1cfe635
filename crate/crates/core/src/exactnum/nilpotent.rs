use std::fmt;

use serde::{Deserialize, Serialize};

use super::ring::{Ring, RingTag};
use super::{ExactError, Rational};

/// Default nilpotency degree: `alpha^4 = 0`.
pub const DEFAULT_NILPOTENT_DEGREE: usize = 4;

/// Element `c_0 + c_1 a + ... + c_{N-1} a^{N-1}` of `Q[a]/(a^N)`.
///
/// Serializes as the array of its `N` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct NilpotentElement {
    coefficients: Vec<Rational>,
}

impl NilpotentElement {
    /// Builds an element from coefficients, padding with zeros up to `degree`.
    pub fn from_coefficients(mut coefficients: Vec<Rational>, degree: usize) -> Result<Self, ExactError> {
        if degree == 0 {
            return Err(ExactError::ZeroModulusDegree);
        }
        if coefficients.len() > degree {
            if coefficients[degree..].iter().any(|c| !c.is_zero()) {
                return Err(ExactError::DegreeOverflow { degree, len: coefficients.len() });
            }
            coefficients.truncate(degree);
        }
        coefficients.resize(degree, Rational::zero());
        Ok(NilpotentElement { coefficients })
    }

    pub fn constant(value: Rational, degree: usize) -> Self {
        let mut coefficients = vec![Rational::zero(); degree.max(1)];
        coefficients[0] = value;
        NilpotentElement { coefficients }
    }

    /// The generator `a` itself (zero when `degree == 1`).
    pub fn generator(degree: usize) -> Self {
        let mut coefficients = vec![Rational::zero(); degree.max(1)];
        if degree > 1 {
            coefficients[1] = Rational::one();
        }
        NilpotentElement { coefficients }
    }

    /// `scale * a + offset`, the linear polynomials that appear in Frobenius products.
    pub fn linear(scale: Rational, offset: Rational, degree: usize) -> Self {
        let mut e = NilpotentElement::constant(offset, degree);
        if degree > 1 {
            e.coefficients[1] = scale;
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `exp(x)` for `x` with zero constant term; the sum terminates because `x^N = 0`.
    pub fn exp_nilpotent(&self) -> Option<Self> {
        if !self.coefficients[0].is_zero() {
            return None;
        }
        let degree = self.degree();
        let mut acc = NilpotentElement::constant(Rational::one(), degree);
        let mut term = acc.clone();
        for k in 1..degree {
            term = term.mul(self).scale(&Rational::new(1, k as i64));
            acc = acc.add(&term);
        }
        Some(acc)
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.degree(),
            other.degree(),
            "nilpotent elements from different rings Q[a]/(a^{}) and Q[a]/(a^{})",
            self.degree(),
            other.degree()
        );
    }
}

impl TryFrom<Vec<Rational>> for NilpotentElement {
    type Error = ExactError;

    fn try_from(value: Vec<Rational>) -> Result<Self, Self::Error> {
        let degree = value.len();
        NilpotentElement::from_coefficients(value, degree)
    }
}

impl From<NilpotentElement> for Vec<Rational> {
    fn from(value: NilpotentElement) -> Self {
        value.coefficients
    }
}

impl fmt::Debug for NilpotentElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c:?}")?,
                1 => write!(f, "({c:?})a")?,
                _ => write!(f, "({c:?})a^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Ring for NilpotentElement {
    type Params = usize;

    fn params(&self) -> usize {
        self.degree()
    }

    fn tag(degree: &usize) -> RingTag {
        RingTag::Nilpotent { degree: *degree }
    }

    fn zero(degree: &usize) -> Self {
        NilpotentElement::constant(Rational::zero(), *degree)
    }

    fn one(degree: &usize) -> Self {
        NilpotentElement::constant(Rational::one(), *degree)
    }

    fn from_rational(value: &Rational, degree: &usize) -> Self {
        NilpotentElement::constant(value.clone(), *degree)
    }

    fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Rational::is_zero)
    }

    fn add(&self, other: &Self) -> Self {
        self.check(other);
        let coefficients = self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect();
        NilpotentElement { coefficients }
    }

    fn sub(&self, other: &Self) -> Self {
        self.check(other);
        let coefficients = self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a - b).collect();
        NilpotentElement { coefficients }
    }

    fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.degree();
        let mut coefficients = vec![Rational::zero(); n];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    coefficients[i + j] += &(a * b);
                }
            }
        }
        NilpotentElement { coefficients }
    }

    fn neg(&self) -> Self {
        NilpotentElement { coefficients: self.coefficients.iter().map(|c| -c).collect() }
    }

    fn inv(&self) -> Option<Self> {
        let c0_inv = self.coefficients[0].recip()?;
        let n = self.degree();
        let mut out: Vec<Rational> = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for k in 1..n {
            let s: Rational = (1..=k).map(|j| &self.coefficients[j] * &out[k - j]).sum();
            out.push(-(s * &c0_inv));
        }
        Some(NilpotentElement { coefficients: out })
    }

    fn scale(&self, factor: &Rational) -> Self {
        NilpotentElement { coefficients: self.coefficients.iter().map(|c| c * factor).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(cs: &[i64]) -> NilpotentElement {
        NilpotentElement::from_coefficients(cs.iter().map(|&c| Rational::from(c)).collect(), cs.len()).unwrap()
    }

    #[test]
    fn truncates_at_degree() {
        let a = NilpotentElement::generator(4);
        assert!(a.pow(4).is_zero());
        assert!(!a.pow(3).is_zero());
    }

    #[test]
    fn unit_iff_constant_nonzero() {
        assert!(el(&[2, 1, 0, 3]).is_unit());
        assert!(!el(&[0, 1, 0, 0]).is_unit());
        let u = el(&[3, -1, 4, 1]);
        assert!(u.mul(&u.inv().unwrap()).is_one());
    }

    #[test]
    fn exp_of_generator() {
        let e = NilpotentElement::generator(4).exp_nilpotent().unwrap();
        assert_eq!(e.coefficients(), &[Rational::one(), Rational::one(), Rational::new(1, 2), Rational::new(1, 6)]);
        assert!(el(&[1, 0, 0, 0]).exp_nilpotent().is_none());
    }

    #[test]
    fn rejects_overflowing_coefficients() {
        let cs = vec![Rational::one(), Rational::one(), Rational::one()];
        assert!(NilpotentElement::from_coefficients(cs, 2).is_err());
    }
}
