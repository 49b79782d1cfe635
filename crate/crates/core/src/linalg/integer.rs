use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ExactMatrix;
use crate::exactnum::{integer_serde, Rational};

/// Dense integer matrix with arbitrary-precision entries.
///
/// Serializes as an array of integer row arrays.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, RaggedRows> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(RaggedRows);
        }
        Ok(IntMatrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    /// Shape of an empty `rows x 0` matrix is preserved; panics on ragged input.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix rows");
        IntMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.iter().flat_map(|r| r.iter().map(|&x| BigInt::from(x))).collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> BigInt) -> Self {
        IntMatrix { rows, cols, data: (0..rows * cols).map(|k| f(k / cols, k % cols)).collect() }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Option<Self> {
        if self.cols != other.rows {
            return None;
        }
        Some(Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        }))
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn to_rational(&self) -> ExactMatrix<Rational> {
        ExactMatrix::from_fn(self.rows, self.cols, (), |i, j| Rational::from(self.get(i, j).clone()))
    }

    pub fn rank(&self) -> usize {
        self.to_rational().rank()
    }

    pub fn determinant(&self) -> Option<BigInt> {
        (self.rows == self.cols)
            .then(|| self.to_rational().determinant().to_integer().expect("integer matrix has integer determinant"))
    }

    /// Exact inverse when the matrix is unimodular.
    pub fn unimodular_inverse(&self) -> Option<Self> {
        let det = self.determinant()?;
        if det.abs() != BigInt::one() {
            return None;
        }
        let inv = self.to_rational().inverse()?;
        Some(Self::from_fn(self.rows, self.cols, |i, j| {
            inv.get(i, j).to_integer().expect("unimodular inverse is integral")
        }))
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigInt> {
        self.data.iter()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(source, j) * factor;
            self.data[target * self.cols + j] += v;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, source) * factor;
            self.data[i * self.cols + target] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.data[idx] = -&self.data[idx];
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("ragged matrix rows")]
pub struct RaggedRows;

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        integer_serde::rows::serialize(&self.to_rows(), serializer)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = integer_serde::rows::deserialize(deserializer)?;
        IntMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<Vec<BigInt>>> for IntMatrix {
    type Error = RaggedRows;

    fn try_from(rows: Vec<Vec<BigInt>>) -> Result<Self, RaggedRows> {
        IntMatrix::from_rows(rows)
    }
}

impl From<IntMatrix> for Vec<Vec<BigInt>> {
    fn from(m: IntMatrix) -> Self {
        m.to_rows()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

/// Smith normal form `left * A * right = diag(d_1, ..., d_r, 0, ...)` with
/// `d_i | d_{i+1}`, all `d_i > 0`, and `left`, `right` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub right_inverse: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);
    let mut right_inv = IntMatrix::identity(n);

    let col_add = |d: &mut IntMatrix, r: &mut IntMatrix, ri: &mut IntMatrix, t: usize, s: usize, f: &BigInt| {
        d.add_col(t, s, f);
        r.add_col(t, s, f);
        ri.add_row(s, t, &-f);
    };

    let mut t = 0;
    while t < m.min(n) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let pivot = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !d.get(i, j).is_zero())
            .min_by_key(|&(i, j)| d.get(i, j).abs());
        let Some((pi, pj)) = pivot else { break };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);
        right_inv.swap_rows(t, pj);

        let mut clean = true;
        for i in t + 1..m {
            let q = d.get(i, t).div_floor(d.get(t, t));
            if !q.is_zero() {
                d.add_row(i, t, &-&q);
                left.add_row(i, t, &-&q);
            }
            if !d.get(i, t).is_zero() {
                clean = false;
            }
        }
        for j in t + 1..n {
            let q = d.get(t, j).div_floor(d.get(t, t));
            if !q.is_zero() {
                col_add(&mut d, &mut right, &mut right_inv, j, t, &-&q);
            }
            if !d.get(t, j).is_zero() {
                clean = false;
            }
        }
        if !clean {
            continue;
        }
        // Divisibility: fold any offending row into row t and retry.
        let offender = (t + 1..m)
            .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !d.get(i, j).is_multiple_of(d.get(t, t)));
        if let Some((i, _)) = offender {
            d.add_row(t, i, &BigInt::one());
            left.add_row(t, i, &BigInt::one());
            continue;
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }
    let rank = (0..m.min(n)).take_while(|&i| !d.get(i, i).is_zero()).count();
    let diagonal = (0..rank).map(|i| d.get(i, i).clone()).collect();
    SmithForm { diagonal, left, right, right_inverse: right_inv }
}

/// Basis of the integer kernel `{x in Z^n : A x = 0}`. The basis is saturated
/// (it spans every integer solution) and is returned in Hermite-reduced form
/// with the last nonzero entry of each vector positive.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    let basis: Vec<Vec<BigInt>> = (snf.rank()..a.cols).map(|j| snf.right.column(j)).collect();
    hermite_reduce(basis)
}

/// A canonical basis of the lattice spanned by `vectors`: row-style Hermite
/// form computed from the right, so the pivot is each vector's last nonzero entry.
pub fn hermite_reduce(vectors: Vec<Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let Some(n) = vectors.first().map(Vec::len) else {
        return vectors;
    };
    let mut rows = vectors;
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    let mut col = n;
    while col > 0 && !rows.is_empty() {
        col -= 1;
        // Euclid on column `col` among the remaining rows.
        loop {
            rows.retain(|r| r.iter().any(|x| !x.is_zero()));
            let nonzero: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            for &i in &nonzero {
                if i != p {
                    let q = rows[i][col].div_floor(&rows[p][col]);
                    let pivot_row = rows[p].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                        *x -= &q * y;
                    }
                }
            }
        }
        if let Some(p) = rows.iter().position(|r| !r[col].is_zero()) {
            let mut pivot_row = rows.remove(p);
            if pivot_row[col].is_negative() {
                pivot_row.iter_mut().for_each(|x| *x = -&*x);
            }
            out.push(pivot_row);
        }
    }
    // Reduce entries above each pivot into [0, pivot).
    for k in 0..out.len() {
        let pc = out[k].iter().rposition(|x| !x.is_zero()).unwrap();
        let pv = out[k][pc].clone();
        for i in 0..k {
            let q = out[i][pc].div_floor(&pv);
            if !q.is_zero() {
                let pivot_row = out[k].clone();
                for (x, y) in out[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
    }
    out.reverse();
    out
}

/// Basis of `span_Q(rows) ∩ Z^n`, the saturation of the row lattice.
pub fn saturated_row_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(a);
    (0..snf.rank()).map(|i| snf.right_inverse.row(i).to_vec()).collect()
}
