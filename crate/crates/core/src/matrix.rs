//! Dense matrices over a [`FieldSpec`].

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: Vec<Vec<Scalar>>,
    cols: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix {
            field,
            rows: vec![vec![Scalar::zero(field); cols]; rows],
            cols,
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.rows[i][i] = Scalar::one(field);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, field: FieldSpec) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        for r in &rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            if r.iter().any(|x| x.field() != field) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Matrix { field, rows, cols })
    }

    pub fn from_i64(rows: &[&[i64]], field: FieldSpec) -> Self {
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_i64(x, field)).collect())
            .collect();
        Self::from_rows(rows, field).expect("rectangular")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.rows[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Adds one zero row and one zero column.
    pub fn grow(&mut self) {
        for r in &mut self.rows {
            r.push(Scalar::zero(self.field));
        }
        self.cols += 1;
        self.rows.push(vec![Scalar::zero(self.field); self.cols]);
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.nrows() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.nrows(),
            });
        }
        let mut out = Matrix::zeros(self.nrows(), other.cols, self.field);
        for i in 0..self.nrows() {
            for k in 0..self.cols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = out.rows[i][j].checked_add(&a.checked_mul(b)?)?;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .try_fold(Scalar::zero(self.field), |acc, (a, b)| acc.checked_add(&a.checked_mul(b)?))
            })
            .collect()
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if self.nrows() != other.nrows() || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.nrows(),
                found: other.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.checked_sub(y)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            field: self.field,
            rows,
            cols: self.cols,
        })
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.nrows(), self.field);
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                out.rows[j][i] = x.clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
    }

    /// Top-left `k x k` block.
    pub fn leading_minor(&self, k: usize) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows[..k].iter().map(|r| r[..k].to_vec()).collect(),
            cols: k,
        }
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.nrows();
        if n != self.cols {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.cols,
            });
        }
        let mut a = self.rows.clone();
        let mut inv = Matrix::identity(n, self.field).rows;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::SingularPivot)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].inv()?;
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                *x = &*x * &p;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    let (pa, pi) = (a[col].clone(), inv[col].clone());
                    for (x, y) in a[r].iter_mut().zip(&pa) {
                        *x = &*x - &(&f * y);
                    }
                    for (x, y) in inv[r].iter_mut().zip(&pi) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        Ok(Matrix {
            field: self.field,
            rows: inv,
            cols: n,
        })
    }

    /// Entries rendered as strings, row-major.
    pub fn to_strings(&self) -> Vec<Vec<alloc::string::String>> {
        self.rows.iter().map(|r| r.iter().map(Scalar::render).collect()).collect()
    }
}
