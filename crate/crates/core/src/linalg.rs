//! Dense matrices over the rationals with exact Gaussian elimination.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    BigRational::from_integer(BigInt::from(v))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.as_ref().len(), c, "ragged rows");
            for (j, &v) in row.as_ref().iter().enumerate() {
                m[(i, j)] = q(v);
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given integer vectors.
    pub fn from_columns<C: AsRef<[i64]>>(n_rows: usize, cols: &[C]) -> Self {
        let mut m = Self::zeros(n_rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.as_ref().len(), n_rows);
            for (i, &v) in col.as_ref().iter().enumerate() {
                m[(i, j)] = q(v);
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

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
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
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[&Matrix], cols: usize) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            for i in 0..b.rows {
                for j in 0..cols {
                    out[(r0 + i, j)] = b[(i, j)].clone();
                }
            }
            r0 += b.rows;
        }
        out
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(blocks: &[&Matrix], rows: usize) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            for i in 0..rows {
                for j in 0..b.cols {
                    out[(i, c0 + j)] = b[(i, j)].clone();
                }
            }
            c0 += b.cols;
        }
        out
    }

    pub fn column_block(&self, start: usize, width: usize) -> Matrix {
        let mut out = Self::zeros(self.rows, width);
        for i in 0..self.rows {
            for j in 0..width {
                out[(i, j)] = self[(i, start + j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let d = &f * &self[(r, j)];
                    if !d.is_zero() {
                        self[(i, j)] -= d;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut red = self.clone();
        let pivots = red.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -red[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Basis of the left null space `{y : y A = 0}` as the rows of a matrix.
    pub fn left_nullspace(&self) -> Matrix {
        let basis = self.transpose().nullspace();
        let mut out = Matrix::zeros(basis.len(), self.rows);
        for (i, v) in basis.into_iter().enumerate() {
            for (j, x) in v.into_iter().enumerate() {
                out[(i, j)] = x;
            }
        }
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::hstack(&[self, &Matrix::identity(n)], n);
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(aug.column_block(n, n))
    }

    /// Solves `A x = b` when the solution exists and is unique.
    pub fn solve_unique(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let col = {
            let mut m = Matrix::zeros(self.rows, 1);
            for (i, v) in b.iter().enumerate() {
                m[(i, 0)] = v.clone();
            }
            m
        };
        let mut aug = Matrix::hstack(&[self, &col], self.rows);
        let pivots = aug.rref();
        if pivots.contains(&self.cols) || pivots.len() != self.cols {
            return None;
        }
        Some((0..self.cols).map(|i| aug[(i, self.cols)].clone()).collect())
    }

    pub fn to_integers(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| rational_to_i64(&self[(i, j)])).collect())
            .collect()
    }
}

pub fn rational_to_i64(v: &Q) -> Option<i64> {
    if !v.is_integer() {
        return None;
    }
    i64::try_from(v.to_integer()).ok()
}

/// Rank of the span of a list of integer vectors.
pub fn integer_rank<V: AsRef<[i64]>>(vectors: &[V], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_columns(dim, vectors).rank()
}

/// Coefficients expressing `target` in the integer span of `basis`, if it
/// lies there. `basis` must be linearly independent.
pub fn integer_coordinates<V: AsRef<[i64]>>(basis: &[V], target: &[i64]) -> Option<Vec<i64>> {
    if basis.is_empty() {
        return target.iter().all(|&x| x == 0).then(Vec::new);
    }
    let a = Matrix::from_columns(target.len(), basis);
    let b: Vec<Q> = target.iter().map(|&x| q(x)).collect();
    a.solve_unique(&b)?.iter().map(rational_to_i64).collect()
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                let v = &self[(i, j)];
                if v.is_negative() || !v.is_integer() {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{}", v.to_integer())?;
                }
            }
        }
        write!(f, "]")
    }
}
