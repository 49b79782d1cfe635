//! Mirror map, normalized Yukawa coupling, instanton numbers and the small
//! quantum cohomology ring of the quintic.
//!
//! Pipeline: Frobenius periods at `z = 0` give `q = z exp(Phi1/Phi0)`; the
//! coupling `Y(z) = 5 / (1 - 5^5 z)` is pulled back to `q` and normalized by
//! `Phi0^2` and the Jacobian; the instanton numbers are then peeled off
//! `kappa(q) = 5 + sum n_d d^3 q^d / (1 - q^d)` by an exact triangular solve.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::exactnum::{integer_serde, ExactError, Rational, TruncatedSeries};
use crate::picard_fuchs::{frobenius_at_zero, PfError};

/// Triple self-intersection of the hyperplane class, `int lambda^3 = 5`.
pub const CLASSICAL_TRIPLE_INTERSECTION: i64 = 5;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EnumerativeError {
    #[error("truncation order {order} too small (need at least {needed})")]
    InsufficientOrder { order: usize, needed: usize },
    #[error("constant term of the coupling is {0}, expected 5")]
    ClassicalTermMismatch(Rational),
    #[error("instanton number n_{degree} = {value} is not an integer")]
    NonIntegral { degree: u32, value: Rational },
    #[error("quantum ring violates {0}")]
    RingIdentity(&'static str),
    #[error(transparent)]
    Series(#[from] ExactError),
    #[error(transparent)]
    Periods(#[from] PfError),
}

/// `q(z)` and its compositional inverse `z(q)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MirrorMap {
    pub q_of_z: TruncatedSeries<Rational>,
    pub z_of_q: TruncatedSeries<Rational>,
}

impl MirrorMap {
    pub fn order(&self) -> usize {
        self.q_of_z.order()
    }
}

/// Multiplies a series by `z`, keeping the order.
fn times_variable(s: &TruncatedSeries<Rational>) -> TruncatedSeries<Rational> {
    let mut cs = vec![Rational::zero()];
    cs.extend_from_slice(&s.coefficients()[..s.order()]);
    TruncatedSeries::new(cs, s.order(), ())
}

/// Divides a series with zero constant term by `z`; the top coefficient becomes unknown and is dropped.
fn divide_by_variable(s: &TruncatedSeries<Rational>) -> TruncatedSeries<Rational> {
    debug_assert!(s.coefficient(0).is_zero());
    TruncatedSeries::new(s.coefficients()[1..].to_vec(), s.order() - 1, ())
}

pub fn build_mirror_map(order: usize) -> Result<MirrorMap, EnumerativeError> {
    if order < 2 {
        return Err(EnumerativeError::InsufficientOrder { order, needed: 2 });
    }
    let periods = frobenius_at_zero(order)?;
    let ratio = periods.component(1).div(periods.component(0))?;
    let q_of_z = times_variable(&ratio.exp()?);
    let z_of_q = q_of_z.reversion()?;
    Ok(MirrorMap { q_of_z, z_of_q })
}

/// Unnormalized coupling `numerator / (1 + discriminant * z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YukawaCoupling {
    pub numerator: Rational,
    pub discriminant: Rational,
}

impl YukawaCoupling {
    /// `5 / (1 - 5^5 z)`: the conifold factor vanishes where the holomorphic
    /// period `sum (5n)!/(n!)^5 z^n` stops converging.
    pub fn quintic() -> Self {
        YukawaCoupling { numerator: Rational::from(5), discriminant: Rational::from(-3125) }
    }

    fn series(&self, order: usize) -> Result<TruncatedSeries<Rational>, ExactError> {
        let denom = TruncatedSeries::new(vec![Rational::one(), self.discriminant.clone()], order, ());
        TruncatedSeries::constant(self.numerator.clone(), order).div(&denom)
    }
}

/// `kappa(q)` through `q^order` for the quintic coupling.
pub fn yukawa_normalized(order: usize) -> Result<TruncatedSeries<Rational>, EnumerativeError> {
    yukawa_normalized_with(order, &YukawaCoupling::quintic())
}

/// `kappa(q) = Y(z(q)) (q z'(q) / z)^3 / Phi0(z(q))^2`.
pub fn yukawa_normalized_with(
    order: usize,
    coupling: &YukawaCoupling,
) -> Result<TruncatedSeries<Rational>, EnumerativeError> {
    if order < 1 {
        return Err(EnumerativeError::InsufficientOrder { order, needed: 1 });
    }
    // One extra order: the Jacobian loses a term to the division by z.
    let work = order + 1;
    let map = build_mirror_map(work)?;
    let periods = frobenius_at_zero(work)?;
    let phi0 = periods.component(0);
    let in_z = coupling.series(work)?.div(&phi0.mul(phi0)?)?;
    let in_q = in_z.compose(&map.z_of_q)?;

    // z(q) = q u(q), so q z'/z = 1 + q u'/u.
    let u = divide_by_variable(&map.z_of_q);
    let log_derivative = times_variable(&u.derivative()?.div(&u)?);
    let jacobian = TruncatedSeries::one(log_derivative.order(), ()).add(&log_derivative)?;
    let kappa = in_q.truncate(order).mul(&jacobian.pow(3)?.truncate(order))?;
    Ok(kappa)
}

/// Instanton numbers `n_d` keyed by degree. Serializes as a list of
/// `{"degree": d, "n": n_d}` entries in increasing degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<InstantonEntry>", into = "Vec<InstantonEntry>")]
pub struct InstantonTable {
    pub n: BTreeMap<u32, BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstantonEntry {
    pub degree: u32,
    #[serde(with = "integer_serde::scalar")]
    pub n: BigInt,
}

impl From<Vec<InstantonEntry>> for InstantonTable {
    fn from(entries: Vec<InstantonEntry>) -> Self {
        InstantonTable { n: entries.into_iter().map(|e| (e.degree, e.n)).collect() }
    }
}

impl From<InstantonTable> for Vec<InstantonEntry> {
    fn from(t: InstantonTable) -> Self {
        t.n.into_iter().map(|(degree, n)| InstantonEntry { degree, n }).collect()
    }
}

impl InstantonTable {
    pub fn get(&self, degree: u32) -> Option<&BigInt> {
        self.n.get(&degree)
    }

    pub fn max_degree(&self) -> u32 {
        self.n.keys().next_back().copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.n.len()
    }

    pub fn is_empty(&self) -> bool {
        self.n.is_empty()
    }

    /// `5 + sum_d n_d d^3 q^d / (1 - q^d)` through `q^order`.
    pub fn kappa(&self, order: usize) -> TruncatedSeries<Rational> {
        let mut cs = vec![Rational::zero(); order + 1];
        cs[0] = Rational::from(CLASSICAL_TRIPLE_INTERSECTION);
        for (&d, n) in &self.n {
            let d = d as usize;
            let weight = Rational::from(n.clone()) * Rational::from((d * d * d) as i64);
            for k in (d..=order).step_by(d) {
                cs[k] += &weight;
            }
        }
        TruncatedSeries::new(cs, order, ())
    }
}

/// Solves `kappa = 5 + sum n_d d^3 q^d/(1-q^d)` for `n_1..n_{d_max}`.
pub fn extract_instantons(kappa: &TruncatedSeries<Rational>, d_max: u32) -> Result<InstantonTable, EnumerativeError> {
    if kappa.order() < d_max as usize {
        return Err(EnumerativeError::InsufficientOrder { order: kappa.order(), needed: d_max as usize });
    }
    let classical = kappa.coefficient(0);
    if classical != Rational::from(CLASSICAL_TRIPLE_INTERSECTION) {
        return Err(EnumerativeError::ClassicalTermMismatch(classical));
    }
    let mut table = InstantonTable::default();
    for k in 1..=d_max {
        let mut rest = kappa.coefficient(k as usize);
        for d in (1..k).filter(|d| k % d == 0) {
            let cube = Rational::from(i64::from(d).pow(3));
            rest -= &(Rational::from(table.n[&d].clone()) * cube);
        }
        let value = rest / Rational::from(i64::from(k).pow(3));
        let n = value.to_integer().ok_or(EnumerativeError::NonIntegral { degree: k, value: value.clone() })?;
        table.n.insert(k, n);
    }
    Ok(table)
}

/// Runs periods, mirror map and coupling at `order`, then extracts `n_1..n_{d_max}`.
pub fn instanton_numbers(order: usize, d_max: u32) -> Result<InstantonTable, EnumerativeError> {
    if d_max == 0 {
        return Ok(InstantonTable::default());
    }
    let kappa = yukawa_normalized(order)?;
    extract_instantons(&kappa, d_max)
}

/// Series-valued element of `H^{even}`, coordinates in `1, l, l^2, l^3`.
pub type QuantumElement = [TruncatedSeries<Rational>; 4];

/// Small quantum cohomology of the quintic, built from the three-point
/// functions: `<l^a, l^b, l^c> = 5` when `a + b + c = 3`, except
/// `<l, l, l> = kappa(q)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuantumRing {
    pub instantons: InstantonTable,
    pub kappa: TruncatedSeries<Rational>,
}

impl QuantumRing {
    pub fn from_instantons(instantons: InstantonTable, order: usize) -> Self {
        let kappa = instantons.kappa(order);
        QuantumRing { instantons, kappa }
    }

    /// The undeformed ring `Q[l]/(l^4)` with `int l^3 = 5`.
    pub fn classical() -> Self {
        Self::from_instantons(InstantonTable::default(), 0)
    }

    pub fn order(&self) -> usize {
        self.kappa.order()
    }

    fn constant(&self, c: i64) -> TruncatedSeries<Rational> {
        TruncatedSeries::constant(Rational::from(c), self.order())
    }

    pub fn three_point(&self, a: usize, b: usize, c: usize) -> TruncatedSeries<Rational> {
        match (a, b, c) {
            (1, 1, 1) => self.kappa.clone(),
            _ if a + b + c == 3 => self.constant(CLASSICAL_TRIPLE_INTERSECTION),
            _ => self.constant(0),
        }
    }

    /// Basis element `l^k` as a quantum element.
    pub fn basis(&self, k: usize) -> QuantumElement {
        std::array::from_fn(|i| self.constant(i64::from(i == k)))
    }

    /// `l^a * l^b = sum_c <l^a, l^b, l^c> / 5 * l^{3-c}`, inverting the Poincare pairing.
    pub fn basis_product(&self, a: usize, b: usize) -> QuantumElement {
        let inv_pairing = Rational::new(1, CLASSICAL_TRIPLE_INTERSECTION);
        std::array::from_fn(|i| self.three_point(a, b, 3 - i).scale_rational(&inv_pairing))
    }

    pub fn multiply(&self, x: &QuantumElement, y: &QuantumElement) -> Result<QuantumElement, ExactError> {
        let mut out: QuantumElement = std::array::from_fn(|_| self.constant(0));
        for (a, xa) in x.iter().enumerate() {
            for (b, yb) in y.iter().enumerate() {
                let coeff = xa.mul(yb)?;
                if coeff.is_zero() {
                    continue;
                }
                let prod = self.basis_product(a, b);
                for (o, p) in out.iter_mut().zip(&prod) {
                    *o = o.add(&coeff.mul(p)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Poincare pairing `int x y = 5 sum_i x_i y_{3-i}`.
    pub fn pairing(&self, x: &QuantumElement, y: &QuantumElement) -> Result<TruncatedSeries<Rational>, ExactError> {
        let mut acc = self.constant(0);
        for i in 0..4 {
            acc = acc.add(&x[i].mul(&y[3 - i])?)?;
        }
        Ok(acc.scale_rational(&Rational::from(CLASSICAL_TRIPLE_INTERSECTION)))
    }

    /// `<l^a * l^b, l^c>` computed through the product and the pairing.
    pub fn structure_constant(&self, a: usize, b: usize, c: usize) -> Result<TruncatedSeries<Rational>, ExactError> {
        self.pairing(&self.basis_product(a, b), &self.basis(c))
    }

    /// `<x * y, w> = <x, y * w>` on all basis triples.
    pub fn check_frobenius(&self) -> Result<(), EnumerativeError> {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let left = self.pairing(&self.basis_product(a, b), &self.basis(c))?;
                    let right = self.pairing(&self.basis(a), &self.basis_product(b, c))?;
                    if left != right {
                        return Err(EnumerativeError::RingIdentity("Frobenius compatibility"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_associativity(&self) -> Result<(), EnumerativeError> {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let ab = self.multiply(&self.basis(a), &self.basis(b))?;
                    let bc = self.multiply(&self.basis(b), &self.basis(c))?;
                    if self.multiply(&ab, &self.basis(c))? != self.multiply(&self.basis(a), &bc)? {
                        return Err(EnumerativeError::RingIdentity("associativity"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_unit(&self) -> Result<(), EnumerativeError> {
        for k in 0..4 {
            if self.basis_product(0, k) != self.basis(k) {
                return Err(EnumerativeError::RingIdentity("unit element"));
            }
        }
        Ok(())
    }

    /// Structure constants at `q = 0`: entry `[a][b][c]` is `<l^a * l^b, l^c>`.
    pub fn classical_limit(&self) -> Result<[[[Rational; 4]; 4]; 4], ExactError> {
        let mut out: [[[Rational; 4]; 4]; 4] = Default::default();
        for (a, plane) in out.iter_mut().enumerate() {
            for (b, row) in plane.iter_mut().enumerate() {
                for (c, entry) in row.iter_mut().enumerate() {
                    *entry = self.structure_constant(a, b, c)?.coefficient(0);
                }
            }
        }
        Ok(out)
    }

    fn check_classical_limit(&self) -> Result<(), EnumerativeError> {
        let limit = self.classical_limit()?;
        for (a, plane) in limit.iter().enumerate() {
            for (b, row) in plane.iter().enumerate() {
                for (c, entry) in row.iter().enumerate() {
                    let expected = if a + b + c == 3 { CLASSICAL_TRIPLE_INTERSECTION } else { 0 };
                    if *entry != Rational::from(expected) {
                        return Err(EnumerativeError::RingIdentity("classical limit"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn verify(&self) -> Result<(), EnumerativeError> {
        self.check_unit()?;
        self.check_frobenius()?;
        self.check_associativity()?;
        self.check_classical_limit()
    }
}

/// Quantum ring with instanton corrections through degree `d_max`; `d_max = 0`
/// gives the classical ring.
pub fn quantum_ring(d_max: u32) -> Result<QuantumRing, EnumerativeError> {
    let ring = if d_max == 0 {
        QuantumRing::classical()
    } else {
        let order = d_max as usize;
        let kappa = yukawa_normalized(order)?;
        let table = extract_instantons(&kappa, d_max)?;
        let ring = QuantumRing::from_instantons(table, order);
        if ring.kappa != kappa {
            return Err(EnumerativeError::RingIdentity("<l*l, l> = kappa"));
        }
        ring
    };
    ring.verify()?;
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_map_needs_order_two() {
        assert!(matches!(build_mirror_map(1), Err(EnumerativeError::InsufficientOrder { .. })));
    }

    #[test]
    fn leading_behaviour() {
        let m = build_mirror_map(6).unwrap();
        assert!(m.q_of_z.coefficient(0).is_zero());
        assert_eq!(m.q_of_z.coefficient(1), Rational::one());
        assert_eq!(m.q_of_z.compose(&m.z_of_q).unwrap(), TruncatedSeries::variable(6, ()));
    }

    #[test]
    fn kappa_constant_and_first_correction() {
        let k = yukawa_normalized(3).unwrap();
        assert_eq!(k.coefficient(0), Rational::from(5));
        assert_eq!(k.coefficient(1), Rational::from(2875));
    }

    #[test]
    fn extraction_rejects_bad_input() {
        let short = TruncatedSeries::constant(Rational::from(5), 2);
        assert!(matches!(extract_instantons(&short, 3), Err(EnumerativeError::InsufficientOrder { .. })));
        let wrong = TruncatedSeries::constant(Rational::from(4), 3);
        assert!(matches!(extract_instantons(&wrong, 1), Err(EnumerativeError::ClassicalTermMismatch(_))));
        let frac = TruncatedSeries::new(vec![Rational::from(5), Rational::new(1, 2)], 1, ());
        assert!(matches!(extract_instantons(&frac, 1), Err(EnumerativeError::NonIntegral { degree: 1, .. })));
    }

    #[test]
    fn table_round_trips_through_kappa() {
        let mut t = InstantonTable::default();
        t.n.insert(1, BigInt::from(7));
        t.n.insert(2, BigInt::from(-3));
        t.n.insert(3, BigInt::from(11));
        let k = t.kappa(4);
        // q^4 picks up d = 1 and d = 2 only.
        assert_eq!(k.coefficient(4), Rational::from(7 - 3 * 8));
        let mut back = extract_instantons(&k, 3).unwrap();
        assert_eq!(back, t);
        back = extract_instantons(&k, 4).unwrap();
        assert_eq!(back.get(4), Some(&BigInt::from(0)));
    }

    #[test]
    fn opposite_conifold_sign_breaks_integrality() {
        let c = YukawaCoupling { numerator: Rational::from(5), discriminant: Rational::from(3125) };
        let k = yukawa_normalized_with(3, &c).unwrap();
        assert!(matches!(extract_instantons(&k, 3), Err(EnumerativeError::NonIntegral { degree: 2, .. })));
    }

    #[test]
    fn classical_ring() {
        let r = quantum_ring(0).unwrap();
        assert!(r.instantons.is_empty());
        let limit = r.classical_limit().unwrap();
        assert_eq!(limit[1][1][1], Rational::from(5));
        assert_eq!(limit[2][1][0], Rational::from(5));
        assert_eq!(limit[2][2][0], Rational::zero());
        // l * l = l^2 classically
        assert_eq!(r.basis_product(1, 1), r.basis(2));
    }
}
