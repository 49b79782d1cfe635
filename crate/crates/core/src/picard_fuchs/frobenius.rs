use serde::Serialize;

use crate::exactnum::{NilpotentElement, Rational, Ring, RingTag, TruncatedSeries, DEFAULT_NILPOTENT_DEGREE};

use super::PfError;

/// The formal solution `Phi_a(z) = z^a sum_n a_n(a) z^n` over `Q[a]/(a^N)`,
/// together with its `a`-graded holomorphic parts.
///
/// With `z^a = exp(a log z)` kept symbolic, the coefficient of `a^k` in
/// `Phi_a` is `sum_{i+j=k} (log z)^i / i! * components[j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusSolutionBundle {
    phi: TruncatedSeries<NilpotentElement>,
    components: Vec<TruncatedSeries<Rational>>,
}

impl FrobeniusSolutionBundle {
    fn from_phi(phi: TruncatedSeries<NilpotentElement>) -> Self {
        let degree = *phi.params();
        let order = phi.order();
        let components = (0..degree)
            .map(|k| TruncatedSeries::new(phi.coefficients().iter().map(|c| c.coefficient(k)).collect(), order, ()))
            .collect();
        FrobeniusSolutionBundle { phi, components }
    }

    /// `Phi_a` with its symbolic `z^a` shift attached.
    pub fn phi(&self) -> &TruncatedSeries<NilpotentElement> {
        &self.phi
    }

    pub fn modulus_degree(&self) -> usize {
        *self.phi.params()
    }

    pub fn order(&self) -> usize {
        self.phi.order()
    }

    /// Holomorphic part of the `a^k` coefficient.
    pub fn component(&self, k: usize) -> &TruncatedSeries<Rational> {
        &self.components[k]
    }

    pub fn components(&self) -> &[TruncatedSeries<Rational>] {
        &self.components
    }

    /// The `a^k` coefficient of `Phi_a` as a polynomial in `log z`: entry `i`
    /// is the series multiplying `(log z)^i`.
    pub fn log_expansion(&self, k: usize) -> Vec<TruncatedSeries<Rational>> {
        let mut factorial = Rational::one();
        (0..=k)
            .map(|i| {
                if i > 0 {
                    factorial *= &Rational::from(i as i64);
                }
                self.components[k - i].scale_rational(&factorial.recip().expect("nonzero"))
            })
            .collect()
    }

    pub fn document(&self) -> SolutionDocument {
        SolutionDocument {
            version: DOCUMENT_VERSION,
            ring: self.phi.ring_tag(),
            order: self.order(),
            exponent: "alpha",
            components: self.components.iter().map(|c| c.coefficients().to_vec()).collect(),
        }
    }
}

pub const DOCUMENT_VERSION: u32 = 1;

/// Serialized form of a solution bundle.
#[derive(Clone, Debug, Serialize)]
pub struct SolutionDocument {
    pub version: u32,
    pub ring: RingTag,
    pub order: usize,
    pub exponent: &'static str,
    pub components: Vec<Vec<Rational>>,
}

/// Closed-form coefficient `(5a+1)...(5a+5n) / [(a+1)...(a+n)]^5` for every `n <= order`.
fn closed_form_coefficients(order: usize, degree: usize) -> Vec<NilpotentElement> {
    let mut out = Vec::with_capacity(order + 1);
    let mut numer = NilpotentElement::one(&degree);
    let mut denom = NilpotentElement::one(&degree);
    out.push(numer.clone());
    for n in 1..=order {
        for j in 5 * n - 4..=5 * n {
            numer = numer.mul(&NilpotentElement::linear(Rational::from(5), Rational::from(j as i64), degree));
        }
        denom = denom.mul(&NilpotentElement::linear(Rational::one(), Rational::from(n as i64), degree));
        // (a+n)^5 has constant term n^5 != 0, so this never fails.
        let inv = denom.pow(5).inv().expect("(a+1)...(a+n) is a unit");
        out.push(numer.mul(&inv));
    }
    out
}

/// Frobenius solution at `z = 0` over `Q[a]/(a^4)`.
pub fn frobenius_at_zero(order: usize) -> Result<FrobeniusSolutionBundle, PfError> {
    frobenius_at_zero_in(order, DEFAULT_NILPOTENT_DEGREE)
}

/// Frobenius solution at `z = 0` over `Q[a]/(a^degree)`.
pub fn frobenius_at_zero_in(order: usize, degree: usize) -> Result<FrobeniusSolutionBundle, PfError> {
    if order == 0 {
        return Err(PfError::InvalidOrder(order));
    }
    if degree == 0 {
        return Err(PfError::InvalidModulusDegree);
    }
    let coefficients = closed_form_coefficients(order, degree);
    let phi = TruncatedSeries::new(coefficients, order, degree).with_shift(NilpotentElement::generator(degree));
    Ok(FrobeniusSolutionBundle::from_phi(phi))
}

/// `(5a-1)(5a-2)(5a-3)(5a-4)`, whose roots are the local exponents at `z = infinity`.
pub fn indicial_at_infinity(alpha: &Rational) -> Rational {
    (1..=4).map(|j| Rational::from(5) * alpha - Rational::from(j)).product()
}

/// A solution `sum_m c_m z^{-a-m}` near `z = infinity`, stored as a series in
/// `w = 1/z` with shift `a`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InfinitySolution {
    pub exponent: Rational,
    pub series: TruncatedSeries<Rational>,
}

/// The four solutions at `z = infinity`, for `a = 1/5, 2/5, 3/5, 4/5`, with
/// `c_m = [a(a+1)...(a+m-1)]^5 / [(5a)(5a+1)...(5a+5m-1)]`.
pub fn solutions_at_infinity(order: usize) -> Result<Vec<InfinitySolution>, PfError> {
    if order == 0 {
        return Err(PfError::InvalidOrder(order));
    }
    (1..=4)
        .map(|k| {
            let alpha = Rational::new(k, 5);
            debug_assert!(indicial_at_infinity(&alpha).is_zero());
            let mut coefficients = vec![Rational::one()];
            let mut numer = Rational::one();
            let mut denom = Rational::one();
            for m in 1..=order {
                numer *= &(&alpha + Rational::from((m - 1) as i64)).pow(5);
                for j in 5 * (m - 1)..5 * m {
                    let factor = Rational::from(5) * &alpha + Rational::from(j as i64);
                    if factor.is_zero() {
                        return Err(PfError::DivisionByZero { exponent: alpha.clone(), m });
                    }
                    denom *= &factor;
                }
                coefficients.push(&numer / &denom);
            }
            let series = TruncatedSeries::new(coefficients, order, ()).with_shift(alpha.clone());
            Ok(InfinitySolution { exponent: alpha, series })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_zero_rejected() {
        assert_eq!(frobenius_at_zero(0).unwrap_err(), PfError::InvalidOrder(0));
        assert!(solutions_at_infinity(0).is_err());
    }

    #[test]
    fn indicial_values() {
        assert!(indicial_at_infinity(&Rational::new(1, 5)).is_zero());
        assert_eq!(indicial_at_infinity(&Rational::one()), Rational::from(24));
    }

    #[test]
    fn log_expansion_structure() {
        let b = frobenius_at_zero(3).unwrap();
        let e = b.log_expansion(2);
        assert_eq!(e.len(), 3);
        assert_eq!(&e[0], b.component(2));
        assert_eq!(e[2], b.component(0).scale_rational(&Rational::new(1, 2)));
    }
}
