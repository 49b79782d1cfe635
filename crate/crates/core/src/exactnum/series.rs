use serde::{Deserialize, Serialize};

use super::ring::{Ring, RingTag};
use super::{ExactError, Rational};

/// Power series `z^s (a_0 + a_1 z + ... + a_N z^N + O(z^{N+1}))` over a ring `R`.
///
/// `order` is the highest retained power `N`, so there are `N + 1` stored
/// coefficients. The optional shift `s` is a symbolic prefactor and is never
/// expanded; series-level calculus (log, exp, composition) only applies to
/// unshifted series.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<R: Ring> {
    params: R::Params,
    order: usize,
    coefficients: Vec<R>,
    exponent_shift: Option<R>,
}

/// Arithmetic operations accepted by [`series_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Formal logarithm or exponential, for [`series_log_exp`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LogExp {
    Log,
    Exp,
}

pub fn series_arith<R: Ring>(
    a: &TruncatedSeries<R>,
    b: &TruncatedSeries<R>,
    op: SeriesOp,
) -> Result<TruncatedSeries<R>, ExactError> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Div => a.div(b),
    }
}

pub fn series_log_exp<R: Ring>(a: &TruncatedSeries<R>, op: LogExp) -> Result<TruncatedSeries<R>, ExactError> {
    match op {
        LogExp::Log => a.log(),
        LogExp::Exp => a.exp(),
    }
}

pub fn series_reversion<R: Ring>(a: &TruncatedSeries<R>) -> Result<TruncatedSeries<R>, ExactError> {
    a.reversion()
}

impl<R: Ring> TruncatedSeries<R> {
    /// Builds a series from leading coefficients; missing ones are zero and
    /// anything past `order` is dropped.
    pub fn new(mut coefficients: Vec<R>, order: usize, params: R::Params) -> Self {
        coefficients.truncate(order + 1);
        coefficients.resize(order + 1, R::zero(&params));
        debug_assert!(coefficients.iter().all(|c| c.params() == params));
        TruncatedSeries { params, order, coefficients, exponent_shift: None }
    }

    pub fn zero(order: usize, params: R::Params) -> Self {
        Self::new(Vec::new(), order, params)
    }

    pub fn constant(value: R, order: usize) -> Self {
        let params = value.params();
        Self::new(vec![value], order, params)
    }

    pub fn one(order: usize, params: R::Params) -> Self {
        let one = R::one(&params);
        Self::new(vec![one], order, params)
    }

    /// The series variable `z` itself.
    pub fn variable(order: usize, params: R::Params) -> Self {
        let coefficients = vec![R::zero(&params), R::one(&params)];
        Self::new(coefficients, order, params)
    }

    /// `z^power` (zero when `power` exceeds the order).
    pub fn monomial(coefficient: R, power: usize, order: usize) -> Self {
        let params = coefficient.params();
        let mut s = Self::zero(order, params);
        if power <= order {
            s.coefficients[power] = coefficient;
        }
        s
    }

    pub fn with_shift(mut self, shift: R) -> Self {
        self.exponent_shift = Some(shift);
        self
    }

    pub fn params(&self) -> &R::Params {
        &self.params
    }

    pub fn ring_tag(&self) -> RingTag {
        R::tag(&self.params)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[R] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<R> {
        self.coefficients
    }

    pub fn coefficient(&self, n: usize) -> R {
        self.coefficients.get(n).cloned().unwrap_or_else(|| R::zero(&self.params))
    }

    pub fn exponent_shift(&self) -> Option<&R> {
        self.exponent_shift.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Ring::is_zero)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coefficients.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            params: self.params.clone(),
            order,
            coefficients: self.coefficients[..=order].to_vec(),
            exponent_shift: self.exponent_shift.clone(),
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&R) -> R) -> Self {
        TruncatedSeries {
            params: self.params.clone(),
            order: self.order,
            coefficients: self.coefficients.iter().map(f).collect(),
            exponent_shift: self.exponent_shift.clone(),
        }
    }

    fn check_ring(&self, other: &Self) -> Result<(), ExactError> {
        if self.params != other.params {
            return Err(ExactError::RingMismatch { left: self.ring_tag(), right: other.ring_tag() });
        }
        Ok(())
    }

    fn check_unshifted(&self) -> Result<(), ExactError> {
        match &self.exponent_shift {
            Some(s) if !s.is_zero() => Err(ExactError::ShiftedSeries),
            _ => Ok(()),
        }
    }

    fn shift_or_zero(&self) -> R {
        self.exponent_shift.clone().unwrap_or_else(|| R::zero(&self.params))
    }

    fn combine_shift(a: &Option<R>, b: &Option<R>, f: impl Fn(&R, &R) -> R) -> Option<R> {
        match (a, b) {
            (None, None) => None,
            (Some(x), None) => Some(x.clone()),
            (None, Some(y)) => Some(f(&R::zero(&y.params()), y)),
            (Some(x), Some(y)) => Some(f(x, y)),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_ring(other)?;
        if self.shift_or_zero() != other.shift_or_zero() {
            return Err(ExactError::ShiftMismatch);
        }
        let order = self.order.min(other.order);
        let coefficients = (0..=order).map(|n| self.coefficients[n].add(&other.coefficients[n])).collect();
        Ok(TruncatedSeries {
            params: self.params.clone(),
            order,
            coefficients,
            exponent_shift: self.exponent_shift.clone().or_else(|| other.exponent_shift.clone()),
        })
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(Ring::neg)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ExactError> {
        self.add(&other.neg())
    }

    /// Cauchy product; shifts add.
    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_ring(other)?;
        let order = self.order.min(other.order);
        let mut coefficients = vec![R::zero(&self.params); order + 1];
        for (i, a) in self.coefficients[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coefficients[i + j] = coefficients[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(TruncatedSeries {
            params: self.params.clone(),
            order,
            coefficients,
            exponent_shift: Self::combine_shift(&self.exponent_shift, &other.exponent_shift, R::add),
        })
    }

    pub fn scale(&self, factor: &R) -> Self {
        self.map_coefficients(|c| c.mul(factor))
    }

    pub fn scale_rational(&self, factor: &Rational) -> Self {
        self.map_coefficients(|c| c.scale(factor))
    }

    /// Multiplicative inverse; requires a unit constant term. Shift is negated.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let c0_inv = self.coefficients[0].inv().ok_or(ExactError::NonUnitConstantTerm)?;
        let mut out: Vec<R> = Vec::with_capacity(self.order + 1);
        out.push(c0_inv.clone());
        for n in 1..=self.order {
            let mut s = R::zero(&self.params);
            for k in 1..=n {
                if !self.coefficients[k].is_zero() {
                    s = s.add(&self.coefficients[k].mul(&out[n - k]));
                }
            }
            out.push(s.mul(&c0_inv).neg());
        }
        Ok(TruncatedSeries {
            params: self.params.clone(),
            order: self.order,
            coefficients: out,
            exponent_shift: self.exponent_shift.as_ref().map(Ring::neg),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_ring(other)?;
        self.mul(&other.inverse()?)
    }

    pub fn pow(&self, exp: u32) -> Result<Self, ExactError> {
        let mut acc = Self::one(self.order, self.params.clone());
        for _ in 0..exp {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Term-wise `d/dz`; the result keeps the same order with a zero top coefficient.
    pub fn derivative(&self) -> Result<Self, ExactError> {
        self.check_unshifted()?;
        let mut coefficients: Vec<R> =
            (1..=self.order).map(|n| self.coefficients[n].scale(&Rational::from(n as i64))).collect();
        coefficients.push(R::zero(&self.params));
        Ok(TruncatedSeries { params: self.params.clone(), order: self.order, coefficients, exponent_shift: None })
    }

    /// `z d/dz`, which acts on `z^{s+n}` as multiplication by `s + n`.
    pub fn theta(&self) -> Self {
        let shift = self.shift_or_zero();
        let coefficients = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(n, c)| c.mul(&shift.add(&R::from_rational(&Rational::from(n as i64), &self.params))))
            .collect();
        TruncatedSeries {
            params: self.params.clone(),
            order: self.order,
            coefficients,
            exponent_shift: self.exponent_shift.clone(),
        }
    }

    /// Formal antiderivative with zero constant; the top coefficient is dropped.
    fn integral(&self) -> Self {
        let mut coefficients = vec![R::zero(&self.params)];
        for n in 1..=self.order {
            coefficients.push(self.coefficients[n - 1].scale(&Rational::new(1, n as i64)));
        }
        TruncatedSeries { params: self.params.clone(), order: self.order, coefficients, exponent_shift: None }
    }

    /// Formal logarithm of a series with constant term one.
    pub fn log(&self) -> Result<Self, ExactError> {
        self.check_unshifted()?;
        if !self.coefficients[0].is_one() {
            return Err(ExactError::LogRequiresUnitConstant);
        }
        Ok(self.derivative()?.div(self)?.integral())
    }

    /// Formal exponential of a series with constant term zero.
    pub fn exp(&self) -> Result<Self, ExactError> {
        self.check_unshifted()?;
        if !self.coefficients[0].is_zero() {
            return Err(ExactError::ExpRequiresZeroConstant);
        }
        // b = exp(a) solves n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
        let mut out: Vec<R> = Vec::with_capacity(self.order + 1);
        out.push(R::one(&self.params));
        for n in 1..=self.order {
            let mut s = R::zero(&self.params);
            for k in 1..=n {
                if !self.coefficients[k].is_zero() {
                    s = s.add(&self.coefficients[k].scale(&Rational::from(k as i64)).mul(&out[n - k]));
                }
            }
            out.push(s.scale(&Rational::new(1, n as i64)));
        }
        Ok(TruncatedSeries { params: self.params.clone(), order: self.order, coefficients: out, exponent_shift: None })
    }

    /// `self(inner(z))` by Horner evaluation; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, ExactError> {
        self.check_ring(inner)?;
        self.check_unshifted()?;
        inner.check_unshifted()?;
        if !inner.coefficients[0].is_zero() {
            return Err(ExactError::NonZeroConstantTerm);
        }
        let order = self.order.min(inner.order);
        let mut acc = Self::zero(order, self.params.clone());
        for c in self.coefficients[..=order].iter().rev() {
            acc = acc.mul(inner)?;
            acc.coefficients[0] = acc.coefficients[0].add(c);
        }
        Ok(acc)
    }

    /// Compositional inverse: `b` with `self(b(q)) = q` to the truncation order.
    pub fn reversion(&self) -> Result<Self, ExactError> {
        self.check_unshifted()?;
        if !self.coefficients[0].is_zero() {
            return Err(ExactError::NonZeroConstantTerm);
        }
        let order = self.order;
        if order == 0 {
            return Ok(Self::zero(0, self.params.clone()));
        }
        let lead_inv = self.coefficients[1].inv().ok_or(ExactError::NonUnitLinearTerm)?;
        let mut b = Self::monomial(lead_inv.clone(), 1, order);
        // Each pass fixes one more coefficient: the residual's lowest term
        // r_n q^n is cancelled by b_n = -r_n / a_1.
        for n in 2..=order {
            let residual = self.compose(&b)?;
            let r = residual.coefficient(n);
            if !r.is_zero() {
                b.coefficients[n] = r.mul(&lead_inv).neg();
            }
        }
        Ok(b)
    }
}

impl<R: Ring + Serialize> Serialize for TruncatedSeries<R> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("TruncatedSeries", 4)?;
        st.serialize_field("ring", &self.ring_tag())?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("exponent_shift", &self.exponent_shift)?;
        st.serialize_field("coefficients", &self.coefficients)?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(bound = "R: Deserialize<'de>")]
struct SeriesRepr<R> {
    order: usize,
    #[serde(default)]
    exponent_shift: Option<R>,
    coefficients: Vec<R>,
}

impl<'de, R> Deserialize<'de> for TruncatedSeries<R>
where
    R: Ring + Deserialize<'de>,
    R::Params: Default,
{
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::<R>::deserialize(deserializer)?;
        let params = repr.coefficients.first().map(Ring::params).unwrap_or_default();
        if repr.coefficients.iter().any(|c| c.params() != params) {
            return Err(serde::de::Error::custom("series coefficients from different rings"));
        }
        let mut s = TruncatedSeries::new(repr.coefficients, repr.order, params);
        s.exponent_shift = repr.exponent_shift;
        Ok(s)
    }
}
