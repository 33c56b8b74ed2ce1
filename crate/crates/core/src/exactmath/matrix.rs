//! Dense matrices over a single field with exact Gaussian elimination.

use std::fmt;

use super::field::{Field, Scalar};
use super::MathError;

#[derive(Clone)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: &'static Field,
    data: Vec<Scalar>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.descriptor())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &'static Field, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &'static Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from rows; every entry must lie in `field`.
    pub fn from_rows(field: &'static Field, rows: Vec<Vec<Scalar>>) -> Result<Self, MathError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(MathError::Shape(format!("ragged rows: expected {c}, got {}", row.len())));
            }
            for x in row {
                if x.descriptor() != field.descriptor() {
                    return Err(MathError::DescriptorMismatch(x.descriptor(), field.descriptor()));
                }
                data.push(x);
            }
        }
        Ok(Matrix { rows: r, cols: c, field, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: &'static Field, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        debug_assert_eq!(x.descriptor(), self.field.descriptor());
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, MathError> {
        if self.cols != other.rows {
            return Err(MathError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field.descriptor() != other.field.descriptor() {
            return Err(MathError::DescriptorMismatch(self.field.descriptor(), other.field.descriptor()));
        }
        let mut m = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) + &(a * b);
                    m.set(i, j, v);
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * s).collect();
        Matrix { rows: self.rows, cols: self.cols, field: self.field, data }
    }

    /// Stack rows of `other` under `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    /// Gauss–Jordan elimination, pivoting on the first nonzero entry.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pj = m.get(r, j);
                    if pj.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &(&f * pj);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of {x : self·x = 0}, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -matrix.get(row, free);
            }
            out.push(v);
        }
        out
    }

    /// One solution X of self·X = rhs.
    pub fn solve(&self, rhs: &Matrix) -> Result<Matrix, MathError> {
        if rhs.rows != self.rows {
            return Err(MathError::Shape(format!("rhs has {} rows, expected {}", rhs.rows, self.rows)));
        }
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                aug.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return Err(MathError::Inconsistent);
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, matrix.get(row, self.cols + j).clone());
            }
        }
        Ok(x)
    }

    /// Solve self·x = b for a single vector.
    pub fn solve_vec(&self, b: &[Scalar]) -> Result<Vec<Scalar>, MathError> {
        let rhs = Matrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        Ok(self.solve(&rhs)?.column(0))
    }

    pub fn inverse(&self) -> Result<Matrix, MathError> {
        if self.rows != self.cols {
            return Err(MathError::Shape("inverse of a non-square matrix".into()));
        }
        if self.rank() != self.rows {
            return Err(MathError::DivisionByZero);
        }
        self.solve(&Matrix::identity(self.field, self.rows))
    }
}

/// Column-space helper: reduce a list of vectors to a basis of their span.
pub fn span_basis(field: &'static Field, dim: usize, vecs: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if vecs.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Vec<Scalar>> = vecs.to_vec();
    let m = Matrix::from_rows(field, rows).expect("uniform vectors");
    let Rref { matrix, pivots } = m.rref();
    debug_assert_eq!(matrix.cols(), dim);
    (0..pivots.len()).map(|r| matrix.row(r).to_vec()).collect()
}
