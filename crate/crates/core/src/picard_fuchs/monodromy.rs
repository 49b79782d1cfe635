use serde::{Deserialize, Serialize};

use crate::exactnum::{CyclotomicElement, Field, NilpotentElement, Rational, Ring};
use crate::linalg::ExactMatrix;

/// Which basis of the solution space a monodromy matrix is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisTag {
    /// `1, l, l^2, l^3` with `l = 2 pi i a`.
    LambdaPower,
    /// `1, a, a^2, a^3`.
    AlphaPower,
    /// Idempotents of `Q(zeta_5)[a]/((5a-1)(5a-2)(5a-3)(5a-4))`, one per root `a = k/5`.
    Idempotent,
}

/// Monodromy acting on row vectors of basis coordinates (`v -> v M`).
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(bound(serialize = "R: Serialize"))]
pub struct MonodromyMatrix<R: Ring> {
    pub basis: BasisTag,
    pub entries: ExactMatrix<R>,
}

impl<R: Field> MonodromyMatrix<R> {
    pub fn determinant(&self) -> R {
        self.entries.determinant()
    }
}

/// Monodromy around `z = 0`: multiplication by `e^{2 pi i a} = e^l` on
/// `Q[l]/(l^4)`. Row `i` holds the coordinates of `l^i e^l`.
pub fn monodromy_at_zero() -> MonodromyMatrix<Rational> {
    let degree = 4;
    let exp_lambda = NilpotentElement::generator(degree).exp_nilpotent().expect("generator is nilpotent");
    let mut basis_element = NilpotentElement::one(&degree);
    let mut rows = Vec::with_capacity(degree);
    for _ in 0..degree {
        rows.push(basis_element.mul(&exp_lambda).coefficients().to_vec());
        basis_element = basis_element.mul(&NilpotentElement::generator(degree));
    }
    MonodromyMatrix { basis: BasisTag::LambdaPower, entries: ExactMatrix::from_rows(rows, ()) }
}

/// Roots `k/5`, `k = 1..4`, of the indicial polynomial at infinity.
fn fermat_roots() -> Vec<Rational> {
    (1..=4).map(|k| Rational::new(k, 5)).collect()
}

/// Lagrange idempotent for root index `k`, in the power basis `1, a, a^2, a^3`.
fn idempotent(k: usize) -> Vec<Rational> {
    let roots = fermat_roots();
    let mut poly = vec![Rational::one()];
    for (j, r) in roots.iter().enumerate() {
        if j == k {
            continue;
        }
        let scale = (&roots[k] - r).recip().expect("distinct roots");
        // poly *= (a - r) * scale
        let mut next = vec![Rational::zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] += &(c * &scale);
            next[i] -= &(c * r * &scale);
        }
        poly = next;
    }
    poly
}

/// Rows are the idempotents `e_1..e_4` written in the power basis; converts
/// idempotent coordinates to power coordinates (`w = v B`).
pub fn fermat_base_change() -> ExactMatrix<CyclotomicElement> {
    let rows = (0..4).map(|k| idempotent(k).into_iter().map(CyclotomicElement::rational).collect()).collect();
    ExactMatrix::from_rows(rows, ())
}

/// Monodromy around `z = infinity` in the idempotent basis: `e^{2 pi i a}` acts on
/// the summand for `a = k/5` by `zeta^k`.
pub fn monodromy_at_infinity() -> MonodromyMatrix<CyclotomicElement> {
    let diagonal = (1..=4).map(CyclotomicElement::zeta_pow).collect();
    MonodromyMatrix { basis: BasisTag::Idempotent, entries: ExactMatrix::diagonal(diagonal, ()) }
}

/// The same monodromy in the power basis, computed directly: row `i` is
/// `a^i * f(a) mod (5a-1)(5a-2)(5a-3)(5a-4)` where `f = sum_k zeta^k e_k`.
pub fn monodromy_at_infinity_power_basis() -> MonodromyMatrix<CyclotomicElement> {
    let f: Vec<CyclotomicElement> = (0..4)
        .map(|i| {
            (0..4).fold(CyclotomicElement::zero(&()), |acc, k| {
                acc.add(&CyclotomicElement::zeta_pow(k as i64 + 1).scale(&idempotent(k)[i]))
            })
        })
        .collect();
    // Monic modulus prod (a - k/5), lowest degree first.
    let mut modulus = vec![Rational::one()];
    for r in fermat_roots() {
        let mut next = vec![Rational::zero(); modulus.len() + 1];
        for (i, c) in modulus.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= &(c * &r);
        }
        modulus = next;
    }
    let mut rows = Vec::with_capacity(4);
    let mut current = f;
    for _ in 0..4 {
        rows.push(current.clone());
        // multiply by a and reduce a^4 = -(m_0 + m_1 a + m_2 a^2 + m_3 a^3)
        let top = current[3].clone();
        let mut next = vec![CyclotomicElement::zero(&()); 4];
        for i in (1..4).rev() {
            next[i] = current[i - 1].clone();
        }
        for (i, m) in modulus[..4].iter().enumerate() {
            next[i] = next[i].sub(&top.scale(m));
        }
        current = next;
    }
    MonodromyMatrix { basis: BasisTag::AlphaPower, entries: ExactMatrix::from_rows(rows, ()) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_monodromy_rows() {
        let m = monodromy_at_zero().entries;
        let expected = ExactMatrix::from_rows(
            vec![
                vec![Rational::one(), Rational::one(), Rational::new(1, 2), Rational::new(1, 6)],
                vec![Rational::zero(), Rational::one(), Rational::one(), Rational::new(1, 2)],
                vec![Rational::zero(), Rational::zero(), Rational::one(), Rational::one()],
                vec![Rational::zero(), Rational::zero(), Rational::zero(), Rational::one()],
            ],
            (),
        );
        assert_eq!(m, expected);
    }

    #[test]
    fn idempotents_partition_unity() {
        let b = fermat_base_change();
        let sums: Vec<CyclotomicElement> =
            (0..4).map(|i| (0..4).fold(CyclotomicElement::zero(&()), |acc, k| acc.add(b.get(k, i)))).collect();
        assert!(sums[0].is_one());
        assert!(sums[1..].iter().all(Ring::is_zero));
    }

    #[test]
    fn power_basis_conjugates_to_diagonal() {
        let b = fermat_base_change();
        let power = monodromy_at_infinity_power_basis().entries;
        let diag = b.mul(&power).mul(&b.inverse().unwrap());
        assert_eq!(diag, monodromy_at_infinity().entries);
    }
}
