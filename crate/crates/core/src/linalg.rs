//! Dense exact matrices over a [`Scalar`] field: rank, reduced echelon form,
//! kernel bases and linear solving.
//!
//! The elimination strategy is chosen by the scalar type: prime fields use
//! plain Gauss-Jordan, the rationals go through the fraction-free Bareiss
//! pass in [`crate::bareiss`]. Kernel bases are canonical: free columns are
//! taken in increasing order with the free coordinate set to one, so a kernel
//! witness is reproducible across runs and platforms.

use crate::error::LinalgError;
use crate::field::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<K: Scalar> {
    field: K::Field,
    rows: usize,
    cols: usize,
    entries: Vec<K>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<K: Scalar> {
    pub matrix: Matrix<K>,
    pub pivots: Vec<usize>,
}

impl<K: Scalar> Matrix<K> {
    pub fn new(field: K::Field, rows: usize, cols: usize, entries: Vec<K>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Matrix { field, rows, cols, entries })
    }

    pub fn from_rows(field: K::Field, rows: Vec<Vec<K>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.into_iter().flatten().collect();
        Matrix::new(field, nrows, ncols, entries)
    }

    pub fn zero(field: K::Field, rows: usize, cols: usize) -> Self {
        let entries = vec![K::zero(&field); rows * cols];
        Matrix { field, rows, cols, entries }
    }

    pub fn identity(field: K::Field, n: usize) -> Self {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            *m.get_mut(i, i) = K::one(&field);
        }
        m
    }

    pub fn field(&self) -> &K::Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K {
        &self.entries[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut K {
        &mut self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<K>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Matrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = K::zero(&self.field);
                for l in 0..self.cols {
                    acc = acc.add(&self.get(i, l).mul(rhs.get(l, j)));
                }
                *out.get_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `M v`.
    pub fn mul_vec(&self, v: &[K]) -> Result<Vec<K>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "matrix has {} columns, vector has {} entries",
                self.cols,
                v.len()
            )));
        }
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut acc = K::zero(&self.field);
            for j in 0..self.cols {
                acc = acc.add(&self.get(i, j).mul(&v[j]));
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Reduced row echelon form; idempotent, row space preserving.
    pub fn rref(&self) -> Rref<K> {
        let mut rows = self.row_vecs();
        let pivots = K::rref_in_place(&mut rows);
        let matrix = Matrix::from_rows(self.field, rows).expect("shape preserved");
        Rref { matrix, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Canonical basis of the right null space, read off the reduced echelon
    /// form: one vector per free column, taken in increasing column order,
    /// with the free coordinate set to one.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let Rref { matrix, pivots } = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(r);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![K::zero(&self.field); self.cols];
            v[free] = K::one(&self.field);
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = matrix.get(r, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of `M x = b` if the system is consistent: free
    /// variables are set to zero, so the answer is canonical.
    pub fn solve(&self, b: &[K]) -> Result<Option<Vec<K>>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "matrix has {} rows, right-hand side has {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Matrix::zero(self.field, self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *aug.get_mut(i, j) = self.get(i, j).clone();
            }
            *aug.get_mut(i, self.cols) = b[i].clone();
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None); // pivot in the augmented column: inconsistent
        }
        let mut x = vec![K::zero(&self.field); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = matrix.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Result<Self, LinalgError> {
        if self.rows != self.cols {
            return Err(LinalgError::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zero(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.get_mut(i, j) = self.get(i, j).clone();
            }
            *aug.get_mut(i, n + i) = K::one(&self.field);
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(r, &c)| r != c) {
            return Err(LinalgError::Singular);
        }
        let mut out = Matrix::zero(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                *out.get_mut(i, j) = matrix.get(i, n + j).clone();
            }
        }
        Ok(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, PrimeField};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn qmat(rows: Vec<Vec<i64>>) -> Matrix<BigRational> {
        let rs = rows.into_iter().map(|r| r.into_iter().map(q).collect()).collect();
        Matrix::from_rows(crate::field::RationalField, rs).unwrap()
    }

    fn fmat(p: u64, rows: Vec<Vec<i64>>) -> Matrix<Fp> {
        let f = PrimeField::new(p).unwrap();
        let rs = rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| f.element(v)).collect())
            .collect();
        Matrix::from_rows(f, rs).unwrap()
    }

    #[test]
    fn rank_basics() {
        assert_eq!(qmat(vec![vec![1, 0], vec![0, 1]]).rank(), 2);
        assert_eq!(qmat(vec![vec![0; 4]; 3]).rank(), 0);
        assert_eq!(qmat(vec![vec![1, 2], vec![2, 4]]).rank(), 1);
    }

    #[test]
    fn rref_examples() {
        let m = qmat(vec![vec![2, 4], vec![1, 3]]);
        let r = m.rref();
        assert_eq!(r.matrix, qmat(vec![vec![1, 0], vec![0, 1]]));

        let m = qmat(vec![vec![1, 2], vec![2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, qmat(vec![vec![1, 2], vec![0, 0]]));

        // Idempotence.
        let m = qmat(vec![vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]]);
        let once = m.rref().matrix;
        let twice = once.rref().matrix;
        assert_eq!(once, twice);
    }

    #[test]
    fn kernel_canonical_form() {
        let id = fmat(5, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(id.kernel_basis().is_empty());

        let m = fmat(5, vec![vec![1, 1, 0]]);
        let basis = m.kernel_basis();
        let f = PrimeField::new(5).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0], vec![f.element(-1), f.element(1), f.element(0)]);
        assert_eq!(basis[1], vec![f.element(0), f.element(0), f.element(1)]);
        for v in &basis {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_paths() {
        let id = qmat(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(id.solve(&[q(3), q(7)]).unwrap(), Some(vec![q(3), q(7)]));

        // Inconsistent: x + y = 1 and x + y = 2.
        let m = qmat(vec![vec![1, 1], vec![1, 1]]);
        assert_eq!(m.solve(&[q(1), q(2)]).unwrap(), None);

        let m = fmat(7, vec![vec![2, 3, 1], vec![1, 0, 4], vec![5, 1, 1]]);
        let f = PrimeField::new(7).unwrap();
        let b = vec![f.element(1), f.element(2), f.element(3)];
        let x = m.solve(&b).unwrap().expect("consistent");
        assert_eq!(m.mul_vec(&x).unwrap(), b);

        assert!(m.solve(&[f.element(1)]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = fmat(11, vec![vec![1, 2, 0], vec![0, 1, 5], vec![3, 0, 1]]);
        let inv = m.inverse().unwrap();
        let prod = m.mul(&inv).unwrap();
        assert_eq!(prod, Matrix::identity(*m.field(), 3));

        let singular = qmat(vec![vec![1, 2], vec![2, 4]]);
        assert!(matches!(singular.inverse(), Err(LinalgError::Singular)));
    }

    #[test]
    fn empty_matrix_is_harmless() {
        let m: Matrix<BigRational> = Matrix::zero(crate::field::RationalField, 0, 4);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().len(), 4);
    }
}
