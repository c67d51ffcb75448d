//! Dense and column-sparse matrices. Arithmetic takes the ring explicitly,
//! since prime-field elements do not carry their modulus.

use alloc::vec;
use alloc::vec::Vec;

use super::ring::CoefficientRing;
use crate::Error;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, v: T) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![v; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self, Error> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            data.extend(r);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds from columns, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self
    where
        T: Default,
    {
        let cols = columns.len();
        let mut m = Matrix::filled(rows, cols, T::default());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length");
            for (i, v) in c.iter().enumerate() {
                m.data[i * cols + j] = v.clone();
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Self) -> Result<Self, Error> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts".into()));
        }
        Ok(Matrix::from_fn(
            self.rows,
            self.cols + other.cols,
            |i, j| {
                if j < self.cols {
                    self.get(i, j).clone()
                } else {
                    other.get(i, j - self.cols).clone()
                }
            },
        ))
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Result<Self, Error> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn entries(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn zeros<R: CoefficientRing<Elem = T>>(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, ring.zero())
    }

    pub fn identity<R: CoefficientRing<Elem = T>>(ring: &R, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn is_zero_in<R: CoefficientRing<Elem = T>>(&self, ring: &R) -> bool {
        self.data.iter().all(|v| ring.is_zero(v))
    }

    pub fn mul_in<R: CoefficientRing<Elem = T>>(
        &self,
        ring: &R,
        other: &Self,
    ) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch("matrix product".into()));
        }
        let mut out = Matrix::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let v = ring.add_mul(out.get(i, j), a, b);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec_in<R: CoefficientRing<Elem = T>>(&self, ring: &R, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !ring.is_zero(a) && !ring.is_zero(b) {
                        acc = ring.add_mul(&acc, a, b);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Column-sparse matrix; each column lists `(row, value)` with increasing
/// row indices and no explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    rows: usize,
    columns: Vec<Vec<(usize, T)>>,
}

impl<T: Clone> SparseMatrix<T> {
    pub fn new(rows: usize, columns: Vec<Vec<(usize, T)>>) -> Self {
        for c in &columns {
            debug_assert!(c.windows(2).all(|w| w[0].0 < w[1].0), "sorted rows");
            debug_assert!(c.iter().all(|(r, _)| *r < rows), "row in range");
        }
        SparseMatrix { rows, columns }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, T)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<(usize, T)>] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self, zero: T) -> Matrix<T> {
        let mut m = Matrix::filled(self.rows, self.cols(), zero);
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    /// Keeps the given rows (in order) and columns (in order), renumbered.
    pub fn submatrix(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Self {
        let columns = self.columns[cols]
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|(i, _)| rows.contains(i))
                    .map(|(i, v)| (i - rows.start, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: rows.end - rows.start,
            columns,
        }
    }
}

impl SparseMatrix<i64> {
    pub fn from_dense_i64(m: &Matrix<i64>) -> Self {
        let columns = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| *m.get(i, j) != 0)
                    .map(|i| (i, *m.get(i, j)))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: m.rows(),
            columns,
        }
    }

    pub fn to_ring<R: CoefficientRing>(&self, ring: &R) -> SparseMatrix<R::Elem> {
        let columns = self
            .columns
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(i, v)| (*i, ring.from_i64(*v)))
                    .filter(|(_, v)| !ring.is_zero(v))
                    .collect()
            })
            .collect();
        SparseMatrix {
            rows: self.rows,
            columns,
        }
    }
}

impl<T: Clone> SparseMatrix<T> {
    /// `self · other` in the given ring.
    pub fn mul_in<R: CoefficientRing<Elem = T>>(
        &self,
        ring: &R,
        other: &Self,
    ) -> Result<Self, Error> {
        if self.cols() != other.rows {
            return Err(Error::DimensionMismatch("sparse product".into()));
        }
        let mut columns = Vec::with_capacity(other.cols());
        let mut acc: Vec<Option<T>> = vec![None; self.rows];
        let mut touched: Vec<usize> = Vec::new();
        for c in &other.columns {
            for (k, b) in c {
                for (i, a) in &self.columns[*k] {
                    let prod = ring.mul(a, b);
                    match &mut acc[*i] {
                        Some(v) => *v = ring.add(v, &prod),
                        slot @ None => {
                            *slot = Some(prod);
                            touched.push(*i);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut col = Vec::new();
            for &i in &touched {
                if let Some(v) = acc[i].take() {
                    if !ring.is_zero(&v) {
                        col.push((i, v));
                    }
                }
            }
            touched.clear();
            columns.push(col);
        }
        Ok(SparseMatrix {
            rows: self.rows,
            columns,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::{Int, Integers};

    #[test]
    fn dense_product_and_stack() {
        let z = Integers;
        let a = Matrix::from_rows(
            vec![
                vec![Int::from(1), Int::from(2)],
                vec![Int::from(3), Int::from(4)],
            ],
            2,
        )
        .unwrap();
        let i = Matrix::identity(&z, 2);
        assert_eq!(a.mul_in(&z, &i).unwrap(), a);
        let p = a.mul_in(&z, &a).unwrap();
        assert_eq!(*p.get(1, 1), Int::from(22));
        assert_eq!(a.hstack(&i).unwrap().cols(), 4);
        assert_eq!(a.vstack(&i).unwrap().rows(), 4);
    }

    #[test]
    fn sparse_product_cancels() {
        let z = Integers;
        // boundary of a 2-simplex composed with boundary of its edges
        let d1 = SparseMatrix::new(
            3,
            vec![
                vec![(0, -1), (1, 1)],
                vec![(0, -1), (2, 1)],
                vec![(1, -1), (2, 1)],
            ],
        )
        .to_ring(&z);
        let d2 = SparseMatrix::new(3, vec![vec![(0, 1), (1, -1), (2, 1)]]).to_ring(&z);
        assert!(d1.mul_in(&z, &d2).unwrap().is_zero());
    }
}
