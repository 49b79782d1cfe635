use serde::{Deserialize, Serialize};

use crate::exactnum::{Rational, Ring, TruncatedSeries};

use super::PfError;

/// Polynomial in `theta = z d/dz` with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ThetaPolynomial {
    coefficients: Vec<Rational>,
}

impl ThetaPolynomial {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.len() > 1 && coefficients.last().is_some_and(Rational::is_zero) {
            coefficients.pop();
        }
        ThetaPolynomial { coefficients }
    }

    pub fn constant(c: Rational) -> Self {
        ThetaPolynomial::new(vec![c])
    }

    /// `theta^k`.
    pub fn theta_power(k: usize) -> Self {
        let mut cs = vec![Rational::zero(); k + 1];
        cs[k] = Rational::one();
        ThetaPolynomial::new(cs)
    }

    /// `lead * prod (a_i theta + b_i)` for the given `(a_i, b_i)` pairs.
    pub fn from_linear_factors(lead: Rational, factors: &[(Rational, Rational)]) -> Self {
        factors.iter().fold(ThetaPolynomial::constant(lead), |acc, (a, b)| {
            acc.mul(&ThetaPolynomial::new(vec![b.clone(), a.clone()]))
        })
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Rational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        ThetaPolynomial::new(out)
    }

    /// Horner evaluation at a ring element.
    pub fn evaluate<R: Ring>(&self, x: &R) -> R {
        let params = x.params();
        self.coefficients.iter().rev().fold(R::zero(&params), |acc, c| acc.mul(x).add(&R::from_rational(c, &params)))
    }
}

/// One summand `z^{z_power} p(theta)` of an operator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorTerm {
    pub z_power: usize,
    pub theta_polynomial: ThetaPolynomial,
}

/// Differential operator `sum_j z^j p_j(theta)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PFOperator {
    terms: Vec<OperatorTerm>,
}

impl PFOperator {
    pub fn new(mut terms: Vec<OperatorTerm>) -> Self {
        terms.sort_by_key(|t| t.z_power);
        PFOperator { terms }
    }

    /// The mirror quintic operator `theta^4 - 5z(5theta+1)(5theta+2)(5theta+3)(5theta+4)`.
    pub fn quintic() -> Self {
        let factors: Vec<_> = (1..=4).map(|j| (Rational::from(5), Rational::from(j))).collect();
        PFOperator::new(vec![
            OperatorTerm { z_power: 0, theta_polynomial: ThetaPolynomial::theta_power(4) },
            OperatorTerm {
                z_power: 1,
                theta_polynomial: ThetaPolynomial::from_linear_factors(Rational::from(-5), &factors),
            },
        ])
    }

    /// The quintic operator rewritten in `w = 1/z` and multiplied on the left by `w`:
    /// `-5(1-5theta)(2-5theta)(3-5theta)(4-5theta) + w theta^4`, with `theta = w d/dw`.
    pub fn quintic_at_infinity() -> Self {
        let factors: Vec<_> = (1..=4).map(|j| (Rational::from(-5), Rational::from(j))).collect();
        PFOperator::new(vec![
            OperatorTerm {
                z_power: 0,
                theta_polynomial: ThetaPolynomial::from_linear_factors(Rational::from(-5), &factors),
            },
            OperatorTerm { z_power: 1, theta_polynomial: ThetaPolynomial::theta_power(4) },
        ])
    }

    pub fn terms(&self) -> &[OperatorTerm] {
        &self.terms
    }

    /// The `z^0` part, whose roots are the local exponents at the origin.
    pub fn indicial_polynomial(&self) -> ThetaPolynomial {
        self.terms
            .iter()
            .find(|t| t.z_power == 0)
            .map(|t| t.theta_polynomial.clone())
            .unwrap_or_else(|| ThetaPolynomial::constant(Rational::zero()))
    }

    /// Coefficients of the solution `z^shift sum a_n z^n` with `a_0 = 1`,
    /// generated term by term from the operator's recurrence.
    pub fn frobenius_recurrence<R: Ring>(&self, shift: &R, order: usize) -> Result<TruncatedSeries<R>, PfError> {
        let params = shift.params();
        let leading = self.indicial_polynomial();
        let mut a: Vec<R> = vec![R::one(&params)];
        for n in 1..=order {
            let mut rhs = R::zero(&params);
            for term in self.terms.iter().filter(|t| t.z_power >= 1 && t.z_power <= n) {
                let at = shift.add(&R::from_rational(&Rational::from((n - term.z_power) as i64), &params));
                rhs = rhs.add(&term.theta_polynomial.evaluate(&at).mul(&a[n - term.z_power]));
            }
            let at = shift.add(&R::from_rational(&Rational::from(n as i64), &params));
            let inv = leading.evaluate(&at).inv().ok_or(PfError::Resonance { n })?;
            a.push(rhs.neg().mul(&inv));
        }
        Ok(TruncatedSeries::new(a, order, params).with_shift(shift.clone()))
    }
}

/// Applies `op` to `z^s sum a_n z^n` and returns the residual series with the same shift.
///
/// Coefficient `n` of the residual is `sum_j p_j(s + n - j) a_{n-j}`; terms
/// beyond the input's order are dropped.
pub fn apply_operator<R: Ring>(op: &PFOperator, series: &TruncatedSeries<R>) -> TruncatedSeries<R> {
    let params = series.params().clone();
    let shift = series.exponent_shift().cloned().unwrap_or_else(|| R::zero(&params));
    let coefficients = (0..=series.order())
        .map(|n| {
            op.terms.iter().filter(|t| t.z_power <= n).fold(R::zero(&params), |acc, term| {
                let m = n - term.z_power;
                let at = shift.add(&R::from_rational(&Rational::from(m as i64), &params));
                acc.add(&term.theta_polynomial.evaluate(&at).mul(&series.coefficient(m)))
            })
        })
        .collect();
    let out = TruncatedSeries::new(coefficients, series.order(), params);
    match series.exponent_shift() {
        Some(s) => out.with_shift(s.clone()),
        None => out,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quintic_shape() {
        let op = PFOperator::quintic();
        assert_eq!(op.terms().len(), 2);
        let p1 = &op.terms()[1].theta_polynomial;
        assert_eq!(p1.degree(), 4);
        // p1(0) = -5 * 1 * 2 * 3 * 4
        assert_eq!(p1.evaluate(&Rational::zero()), Rational::from(-120));
        // leading coefficient -5 * 5^4
        assert_eq!(p1.coefficients()[4], Rational::from(-3125));
    }

    #[test]
    fn constant_series_residual() {
        let one = TruncatedSeries::<Rational>::one(3, ());
        let r = apply_operator(&PFOperator::quintic(), &one);
        assert_eq!(r.coefficients(), &[Rational::zero(), Rational::from(-120), Rational::zero(), Rational::zero()]);
    }

    #[test]
    fn operator_serializes() {
        let json = serde_json::to_value(PFOperator::quintic()).unwrap();
        assert_eq!(json["terms"][0]["theta_polynomial"], serde_json::json!(["0/1", "0/1", "0/1", "0/1", "1/1"]));
        let back: PFOperator = serde_json::from_value(json).unwrap();
        assert_eq!(back, PFOperator::quintic());
    }
}
