//! Dense exact matrices over the Gaussian rationals.

use crate::gint;
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>, // row-major
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Integer literal grid, mostly for tests and unit builders.
    pub fn from_i64(grid: &[&[i64]]) -> Self {
        let rows = grid.len();
        let cols = if rows == 0 { 0 } else { grid[0].len() };
        Self::from_fn(rows, cols, |i, j| Scalar::from_int(grid[i][j]))
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Elementary matrix E_{ij} (1-based indices are not used anywhere).
    pub fn elem(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = Scalar::one();
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Flat row-major view; also the vectorization used for matrix subspaces.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Scalar> {
        self.data
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows x cols");
        Matrix { rows, cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn conj(&self) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        if c.is_one() {
            return self.clone();
        }
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|v| if v.is_zero() { Scalar::zero() } else { v.mul(c) })
                .collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += &self[(i, i)];
        }
        t
    }

    /// Matrix product with zero-skipping; the generators this crate works
    /// with are sparse and the skip matters.
    pub fn mul_mat(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    out[(i, j)] += &prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() || v[k].is_zero() {
                    continue;
                }
                let prod = a.mul(&v[k]);
                out[i] += &prod;
            }
        }
        out
    }

    /// Lie bracket [A, B] = AB - BA.
    pub fn comm(&self, rhs: &Matrix) -> Matrix {
        (&self.mul_mat(rhs)).sub(&rhs.mul_mat(self))
    }

    /// Kronecker product (row-major convention: index (i,j) of the result
    /// blocks is a_{ij} * B).
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        let b = &rhs[(k, l)];
                        if !b.is_zero() {
                            out[(i * rhs.rows + k, j * rhs.cols + l)] = a.mul(b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    if !b[(i, j)].is_zero() {
                        out[(ro + i, co + j)] = b[(i, j)].clone();
                    }
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    /// Extracts the submatrix on the given row/column index sets.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Matrix {
        Matrix::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self[(row_idx[i], col_idx[j])].clone()
        })
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        gint::rank(&rows, self.cols)
    }

    /// Rank and exact kernel `{v : M v = 0}`.
    pub fn rank_nullspace(&self) -> (usize, Subspace) {
        let rows: Vec<Vec<Scalar>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let k = gint::kernel(&rows, self.cols);
        let rank = self.cols - k.len();
        (rank, Subspace::from_echelon(self.cols, k))
    }

    /// Change of basis g M g^{-1} where `ginv` is supplied by the caller.
    pub fn conjugate(&self, g: &Matrix, ginv: &Matrix) -> Matrix {
        g.mul_mat(self).mul_mat(ginv)
    }

    /// Exact inverse via RREF of [M | I]; None when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = self.row(i).to_vec();
            row.extend((0..n).map(|j| {
                if i == j {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            }));
            rows.push(row);
        }
        let (basis, pivots) = gint::rref(&rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| basis[i][n + j].clone()))
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl<'a> Add for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

impl<'a> Sub for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }
}

impl<'a> Neg for &'a Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.neg()).collect(),
        }
    }
}

impl<'a> Mul for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.mul_mat(rhs)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_nullspace_spec_examples() {
        // 2x2 identity -> (2, zero subspace)
        let (r, k) = Matrix::identity(2).rank_nullspace();
        assert_eq!(r, 2);
        assert!(k.is_zero());

        // 1x2 [1, 1] -> (1, span{(1,-1)})
        let m = Matrix::from_i64(&[&[1, 1]]);
        let (r, k) = m.rank_nullspace();
        assert_eq!(r, 1);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[Scalar::from_int(1), Scalar::from_int(-1)]));

        // 3x3 all-ones -> rank 1, kernel dim 2 (hand elimination)
        let m = Matrix::from_i64(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        let (r, k) = m.rank_nullspace();
        assert_eq!((r, k.dim()), (1, 2));
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let m = Matrix::from_i64(&[&[2, 4, 1], &[0, 0, 3]]);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(&[&[1, 2], &[3, 5]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), Matrix::identity(2));
        let sing = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(sing.inverse().is_none());
    }

    #[test]
    fn kron_shapes() {
        let a = Matrix::from_i64(&[&[1, 2]]);
        let b = Matrix::from_i64(&[&[3], &[4]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 2));
        assert_eq!(k[(0, 0)], Scalar::from_int(3));
        assert_eq!(k[(1, 1)], Scalar::from_int(8));
    }
}
