use mirror_core::enumerative::{
    build_mirror_map, extract_instantons, instanton_numbers, quantum_ring, yukawa_normalized, yukawa_normalized_with,
    EnumerativeError, InstantonTable, YukawaCoupling,
};
use mirror_core::exactnum::Rational;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Plain truncated power series over `Q`, written independently of the library.
mod oracle {
    use super::*;

    pub type Series = Vec<BigRational>;

    pub fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    pub fn mul(a: &Series, b: &Series) -> Series {
        let n = a.len();
        let mut out = vec![BigRational::zero(); n];
        for i in 0..n {
            for j in 0..n - i {
                out[i + j] += &a[i] * &b[j];
            }
        }
        out
    }

    pub fn inv(a: &Series) -> Series {
        let n = a.len();
        let mut out = vec![BigRational::zero(); n];
        out[0] = a[0].recip();
        for k in 1..n {
            let s: BigRational = (1..=k).map(|j| &a[j] * &out[k - j]).sum();
            out[k] = -s * &out[0];
        }
        out
    }

    /// `exp(a)` for `a` without constant term, via `f' = a' f`.
    pub fn exp(a: &Series) -> Series {
        let n = a.len();
        let mut out = vec![BigRational::zero(); n];
        out[0] = BigRational::one();
        for k in 1..n {
            let s: BigRational = (1..=k).map(|j| int(j as i64) * &a[j] * &out[k - j]).sum();
            out[k] = s / int(k as i64);
        }
        out
    }

    pub fn compose(f: &Series, g: &Series) -> Series {
        let n = f.len();
        let mut out = vec![BigRational::zero(); n];
        let mut power = vec![BigRational::zero(); n];
        power[0] = BigRational::one();
        for c in f {
            for (o, p) in out.iter_mut().zip(&power) {
                *o += c * p;
            }
            power = mul(&power, g);
        }
        out
    }

    /// Instanton numbers up to `d_max`. Dividing by `z` costs one order, so the
    /// series carry `d_max + 2` terms.
    pub fn instantons(d_max: usize) -> Vec<BigInt> {
        let n = d_max + 2;
        let mut a = vec![BigRational::zero(); n];
        let mut b = vec![BigRational::zero(); n];
        let mut fact = vec![BigInt::one()];
        for k in 1..=5 * n as u64 {
            let next = fact.last().unwrap() * BigInt::from(k);
            fact.push(next);
        }
        let harmonic = |m: usize| -> BigRational { (1..=m as i64).map(|k| BigRational::new(1.into(), k.into())).sum() };
        for k in 0..n {
            let ak = BigRational::from_integer(&fact[5 * k] / fact[k].pow(5));
            b[k] = &ak * int(5) * (harmonic(5 * k) - harmonic(k));
            a[k] = ak;
        }
        // q(z) = z exp(t(z)), t = b / a.
        let t = mul(&b, &inv(&a));
        let e = exp(&t);
        let mut q = vec![BigRational::zero(); n];
        q[1..].clone_from_slice(&e[..n - 1]);
        // z(q) by fixed point iteration z = q exp(-t(z)).
        let mut z = vec![BigRational::zero(); n];
        z[1] = BigRational::one();
        for _ in 0..n {
            let et = inv(&compose(&e, &z));
            let mut next = vec![BigRational::zero(); n];
            next[1..].clone_from_slice(&et[..n - 1]);
            z = next;
        }
        // theta_q log z = q z'(q) / z(q).
        let mut dz = vec![BigRational::zero(); n];
        for k in 1..n {
            dz[k] = int(k as i64) * &z[k];
        }
        let shifted = |s: &Series| -> Series {
            let mut out = s[1..].to_vec();
            out.push(BigRational::zero());
            out
        };
        let dlog = mul(&shifted(&dz), &inv(&shifted(&z)));
        let a_of_q = compose(&a, &z);
        let mut disc = vec![BigRational::zero(); n];
        disc[0] = BigRational::one();
        disc[1] = int(-3125);
        let disc_of_q = compose(&disc, &z);
        let mut kappa = vec![BigRational::zero(); n];
        kappa[0] = int(5);
        let denom = mul(&mul(&disc_of_q, &mul(&a_of_q, &a_of_q)), &inv(&mul(&dlog, &mul(&dlog, &dlog))));
        kappa = mul(&kappa, &inv(&denom));
        let mut out: Vec<BigInt> = vec![BigInt::zero(); d_max + 1];
        for d in 1..=d_max {
            let mut c = kappa[d].clone();
            for (e, n) in out.iter().enumerate().take(d).skip(1) {
                if d % e == 0 {
                    c -= BigRational::from_integer(n * BigInt::from(e).pow(3));
                }
            }
            let v = c / BigRational::from_integer(BigInt::from(d).pow(3));
            assert!(v.is_integer(), "oracle non-integral at degree {d}");
            out[d] = v.to_integer();
        }
        out
    }
}

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

#[test]
fn first_three_counts() {
    let table = instanton_numbers(12, 3).unwrap();
    assert_eq!(table.get(1), Some(&big(2875)));
    assert_eq!(table.get(2), Some(&big(609250)));
    assert_eq!(table.get(3), Some(&big(317206375)));
}

#[test]
fn counts_match_independent_oracle() {
    let expected = oracle::instantons(7);
    let table = instanton_numbers(12, 7).unwrap();
    for d in 1..=7u32 {
        assert_eq!(table.get(d), Some(&expected[d as usize]), "degree {d}");
    }
}

#[test]
fn integral_through_degree_ten() {
    let table = instanton_numbers(12, 10).unwrap();
    assert_eq!(table.len(), 10);
    assert_eq!(table.max_degree(), 10);
}

#[test]
fn mirror_map_opening_terms() {
    let map = build_mirror_map(6).unwrap();
    // q = z + 770 z^2 + ...
    assert_eq!(map.q_of_z.coefficient(0), Rational::zero());
    assert_eq!(map.q_of_z.coefficient(1), Rational::one());
    assert_eq!(map.q_of_z.coefficient(2), Rational::from(770));
    assert_eq!(map.q_of_z.compose(&map.z_of_q).unwrap().coefficient(1), Rational::one());
    assert!(build_mirror_map(1).is_err());
}

#[test]
fn kappa_round_trips_through_the_table() {
    let kappa = yukawa_normalized(9).unwrap();
    assert_eq!(kappa.coefficient(0), Rational::from(5));
    let table = extract_instantons(&kappa, 9).unwrap();
    assert_eq!(table.kappa(9), kappa);
}

#[test]
fn wrong_discriminant_sign_breaks_integrality() {
    let flipped = YukawaCoupling { numerator: Rational::from(5), discriminant: Rational::from(3125) };
    let kappa = yukawa_normalized_with(6, &flipped).unwrap();
    match extract_instantons(&kappa, 6) {
        Err(EnumerativeError::NonIntegral { degree, .. }) => assert_eq!(degree, 2),
        other => panic!("expected a non-integral count, got {other:?}"),
    }
}

#[test]
fn insufficient_order_is_reported() {
    let kappa = yukawa_normalized(3).unwrap();
    assert!(matches!(extract_instantons(&kappa, 5), Err(EnumerativeError::InsufficientOrder { .. })));
}

#[test]
fn quantum_ring_is_a_frobenius_algebra() {
    let ring = quantum_ring(5).unwrap();
    ring.verify().unwrap();
    let classical = ring.classical_limit().unwrap();
    assert_eq!(classical[1][1][1], Rational::from(5));
    assert_eq!(ring.structure_constant(1, 1, 1).unwrap(), ring.three_point(1, 1, 1));
    assert!(ring.structure_constant(1, 1, 2).unwrap().is_zero());
}

#[test]
fn table_serializes_as_entries() {
    let table: InstantonTable = instanton_numbers(8, 6).unwrap();
    let json = serde_json::to_value(&table).unwrap();
    assert_eq!(json[0]["degree"], 1);
    assert_eq!(json[0]["n"], 2875);
    let back: InstantonTable = serde_json::from_value(json).unwrap();
    assert_eq!(back, table);
    assert_eq!(back.get(6).unwrap().to_u64(), Some(248249742118022000));
}
