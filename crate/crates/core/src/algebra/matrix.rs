use std::ops::{Index, IndexMut};

use super::{AlgebraError, ExactDiv, Field, Rational, Ring};

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch(
                "ragged rows in matrix literal".into(),
            ));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product `[a_ij · other]`.
    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (other.rows, other.cols);
        Self::from_fn(self.rows * p, self.cols * q, |i, j| {
            let a = &self[(i / p, j / q)];
            if a.is_zero() {
                T::zero()
            } else {
                a.mul(&other[(i % p, j % q)])
            }
        })
    }

    /// Block-diagonal matrix from square blocks.
    pub fn block_diagonal(blocks: &[Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Submatrix on the given row and column index lists, in that order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    /// Deletes one row and one column.
    pub fn minor_matrix(&self, row: usize, col: usize) -> Self {
        let rows: Vec<usize> = (0..self.rows).filter(|&i| i != row).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&j| j != col).collect();
        self.select(&rows, &cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    fn same_shape(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Every division is exact in the coefficient ring; a failed exact division
/// means the ring implementation is broken, so it panics. The empty matrix
/// has determinant 1.
pub fn bareiss_det<T: ExactDiv>(m: &Matrix<T>) -> Result<T, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::DimensionMismatch(format!(
            "determinant of non-square {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(T::one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(T::zero());
            };
            a.swap_rows(k, p);
            negate = !negate;
        }
        let pivot = a[(k, k)].clone();
        for i in k + 1..n {
            let aik = a[(i, k)].clone();
            for j in k + 1..n {
                let lhs = a[(i, j)].mul(&pivot);
                let num = if aik.is_zero() || a[(k, j)].is_zero() {
                    lhs
                } else {
                    lhs.sub(&aik.mul(&a[(k, j)]))
                };
                a[(i, j)] = if prev.is_one() || num.is_zero() {
                    num
                } else {
                    num.exact_div(&prev)
                        .expect("Bareiss step must divide exactly")
                };
            }
            a[(i, k)] = T::zero();
        }
        prev = pivot;
    }
    let det = a[(n - 1, n - 1)].clone();
    Ok(if negate { det.neg() } else { det })
}

impl<T: Field> Matrix<T> {
    /// Gauss-Jordan inverse over a field.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if !self.is_square() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "inverse of non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let p = (k..n)
                .find(|&i| !a[(i, k)].is_zero())
                .ok_or(AlgebraError::Singular)?;
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            let s = a[(k, k)].inv().expect("nonzero pivot");
            for j in 0..n {
                a[(k, j)] = a[(k, j)].mul(&s);
                inv[(k, j)] = inv[(k, j)].mul(&s);
            }
            for i in 0..n {
                if i == k || a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone();
                for j in 0..n {
                    if !a[(k, j)].is_zero() {
                        a[(i, j)] = a[(i, j)].sub(&f.mul(&a[(k, j)]));
                    }
                    if !inv[(k, j)].is_zero() {
                        inv[(i, j)] = inv[(i, j)].sub(&f.mul(&inv[(k, j)]));
                    }
                }
            }
        }
        Ok(inv)
    }
}

/// Exact inverse of a rational matrix; `Singular` when the determinant is 0.
pub fn mat_inverse_rational(m: &Matrix<Rational>) -> Result<Matrix<Rational>, AlgebraError> {
    m.inverse()
}
