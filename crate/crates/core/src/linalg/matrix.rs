use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactnum::{Field, Rational, Ring};

/// Dense matrix over an exact ring, stored row-major.
///
/// Monodromy matrices in this crate act on row vectors from the right
/// (`v -> v M`), so row `i` of a monodromy is the image of basis vector `i`.
#[derive(Clone, PartialEq)]
pub struct ExactMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    params: R::Params,
    data: Vec<R>,
}

impl<R: Ring> ExactMatrix<R> {
    pub fn zeros(rows: usize, cols: usize, params: R::Params) -> Self {
        let data = vec![R::zero(&params); rows * cols];
        ExactMatrix { rows, cols, params, data }
    }

    pub fn identity(n: usize, params: R::Params) -> Self {
        let mut m = Self::zeros(n, n, params);
        for i in 0..n {
            m.data[i * n + i] = R::one(&m.params);
        }
        m
    }

    pub fn diagonal(entries: Vec<R>, params: R::Params) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n, params);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<R>>, params: R::Params) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix rows");
        ExactMatrix { rows: nrows, cols: ncols, params, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, params: R::Params, f: impl Fn(usize, usize) -> R) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        ExactMatrix { rows, cols, params, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn params(&self) -> &R::Params {
        &self.params
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, self.params.clone(), |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Ring>(&self, params: S::Params, f: impl Fn(&R) -> S) -> ExactMatrix<S> {
        ExactMatrix { rows: self.rows, cols: self.cols, params, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, params: self.params.clone(), data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, params: self.params.clone(), data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, other.cols, self.params.clone());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        (0..self.cols)
            .map(|j| v.iter().enumerate().fold(R::zero(&self.params), |acc, (i, x)| acc.add(&x.mul(self.get(i, j)))))
            .collect()
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        assert!(self.is_square(), "power of non-square matrix");
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows, self.params.clone());
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

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows, self.params.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn scale(&self, factor: &R) -> Self {
        let data = self.data.iter().map(|x| x.mul(factor)).collect();
        ExactMatrix { rows: self.rows, cols: self.cols, params: self.params.clone(), data }
    }
}

impl<R: Ring> ExactMatrix<R> {
    /// Rows stacked vertically; all blocks must share a column count.
    pub fn vstack(blocks: &[Self]) -> Self {
        let first = blocks.first().expect("vstack of nothing");
        let cols = first.cols;
        assert!(blocks.iter().all(|b| b.cols == cols), "vstack column mismatch");
        let data: Vec<R> = blocks.iter().flat_map(|b| b.data.iter().cloned()).collect();
        ExactMatrix { rows: blocks.iter().map(|b| b.rows).sum(), cols, params: first.params.clone(), data }
    }
}

/// Result of row reduction: the reduced echelon form and its pivot columns.
struct Echelon<F: Field> {
    reduced: ExactMatrix<F>,
    pivots: Vec<usize>,
    det_factor: F,
}

impl<F: Field> ExactMatrix<F> {
    fn echelon(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut det_factor = F::one(&self.params);
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, row * m.cols + j);
                }
                det_factor = det_factor.neg();
            }
            let pivot = m.get(row, col).clone();
            det_factor = det_factor.mul(&pivot);
            let inv = pivot.inv().expect("nonzero field element is invertible");
            for j in 0..m.cols {
                let v = m.get(row, j).mul(&inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(r, j).sub(&factor.mul(m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { reduced: m, pivots, det_factor }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of non-square matrix");
        let e = self.echelon();
        if e.pivots.len() < self.rows {
            F::zero(&self.params)
        } else {
            e.det_factor
        }
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let augmented = Self::from_fn(n, 2 * n, self.params.clone(), |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                F::one(&self.params)
            } else {
                F::zero(&self.params)
            }
        });
        let e = augmented.echelon();
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, self.params.clone(), |i, j| e.reduced.get(i, n + j).clone()))
    }

    /// Basis of `{x : self * x = 0}` (column convention), one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let e = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(&self.params); self.cols];
                v[f] = F::one(&self.params);
                for (r, &p) in e.pivots.iter().enumerate() {
                    v[p] = e.reduced.get(r, f).neg();
                }
                v
            })
            .collect()
    }

    /// A particular solution of `self * x = rhs` with free variables set to zero.
    pub fn solve(&self, rhs: &[F]) -> Option<Vec<F>> {
        assert_eq!(rhs.len(), self.rows, "right-hand side length mismatch");
        let augmented = Self::from_fn(self.rows, self.cols + 1, self.params.clone(), |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs[i].clone()
            }
        });
        let e = augmented.echelon();
        if e.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(&self.params); self.cols];
        for (r, &p) in e.pivots.iter().enumerate() {
            x[p] = e.reduced.get(r, self.cols).clone();
        }
        Some(x)
    }
}

impl ExactMatrix<Rational> {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| Rational::from(x)).collect()).collect();
        Self::from_rows(rows, ())
    }
}

impl<R: Ring> fmt::Debug for ExactMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl<R: Ring + Serialize> Serialize for ExactMatrix<R> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(serializer)
    }
}

impl<'de, R> Deserialize<'de> for ExactMatrix<R>
where
    R: Ring + Deserialize<'de>,
    R::Params: Default,
{
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<R>>::deserialize(deserializer)?;
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        let params = rows.iter().flatten().next().map(Ring::params).unwrap_or_default();
        Ok(ExactMatrix::from_rows(rows, params))
    }
}
