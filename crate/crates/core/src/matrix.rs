//! Dense square matrices.

use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<T>,
}

/// Integer matrix used for adjacency, Laplacian and block-determinant inputs.
pub type IntMatrix = Matrix<i64>;

impl<T: Clone> Matrix<T> {
    pub fn filled(dim: usize, value: T) -> Self {
        Matrix { dim, data: vec![value; dim * dim] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Matrix { dim, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument("matrix rows must all have length equal to the row count".into()));
        }
        Ok(Matrix { dim, data: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { dim: self.dim, data: self.data.iter().map(f).collect() }
    }

    /// Principal submatrix on the given (sorted or unsorted) index set.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), |i, j| self[(idx[i], idx[j])].clone())
    }
}

impl<T: Clone + PartialEq> Matrix<T> {
    /// First asymmetric position, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetry().is_none()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.dim + j]
    }
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix::filled(dim, 0)
    }

    pub fn identity(dim: usize) -> Self {
        Matrix::from_fn(dim, |i, j| i64::from(i == j))
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        self.map(|&v| v as f64)
    }

    /// Assembles a block matrix from a square grid of equally sized blocks.
    pub fn from_blocks(blocks: &[Vec<IntMatrix>]) -> Result<Self> {
        let k = blocks.len();
        if k == 0 {
            return Ok(IntMatrix::zeros(0));
        }
        let b = blocks[0][0].dim();
        for row in blocks {
            if row.len() != k || row.iter().any(|m| m.dim() != b) {
                return Err(Error::InvalidArgument("block grid must be square with equal block sizes".into()));
            }
        }
        Ok(Matrix::from_fn(k * b, |i, j| blocks[i / b][j / b][(i % b, j % b)]))
    }

    /// `s·self + t·other + diag·I`.
    pub fn combine(&self, s: i64, other: &IntMatrix, t: i64, diag: i64) -> IntMatrix {
        assert_eq!(self.dim, other.dim);
        Matrix::from_fn(self.dim, |i, j| {
            self[(i, j)] * s + other[(i, j)] * t + if i == j { diag } else { 0 }
        })
    }

    pub fn scaled(&self, s: i64) -> IntMatrix {
        self.map(|&v| v * s)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        bareiss_det(self.map(|&v| BigInt::from(v)))
    }
}

/// Bareiss elimination on a big-integer matrix.
pub fn bareiss_det(mut m: Matrix<BigInt>) -> BigInt {
    let n = m.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                m.data.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = v;
            }
        }
        prev = m[(k, k)].clone();
    }
    let d = m[(n - 1, n - 1)].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Euclidean row norms, used for coefficient bounds.
pub fn row_norms(m: &IntMatrix) -> Vec<f64> {
    (0..m.dim())
        .map(|i| m.row(i).iter().map(|&v| (v as f64) * (v as f64)).sum::<f64>().sqrt())
        .collect()
}

/// Maximum absolute row sum (an upper bound on every eigenvalue modulus).
pub fn max_abs_row_sum(m: &IntMatrix) -> i64 {
    (0..m.dim()).map(|i| m.row(i).iter().map(|v| v.abs()).sum::<i64>()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_small() {
        let m = IntMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(m.det(), BigInt::from(-2));
        let z = IntMatrix::from_rows(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]]).unwrap();
        assert_eq!(z.det(), BigInt::from(-5));
        assert_eq!(IntMatrix::zeros(0).det(), BigInt::one());
        let singular = IntMatrix::from_rows(vec![vec![1, 2], vec![2, 4]]).unwrap();
        assert!(singular.det().is_zero());
    }

    #[test]
    fn blocks_assemble() {
        let a = IntMatrix::identity(2);
        let z = IntMatrix::zeros(2);
        let m = IntMatrix::from_blocks(&[vec![a.clone(), z.clone()], vec![z, a.scaled(3)]]).unwrap();
        assert_eq!(m.dim(), 4);
        assert_eq!(m[(3, 3)], 3);
        assert_eq!(m.det(), BigInt::from(9));
    }
}
