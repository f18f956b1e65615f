//! Dense exact linear algebra.
//!
//! Every subspace handed out by this module is in a canonical form: its basis
//! columns are the transposed rows of a reduced row echelon form, pivots chosen
//! left to right. Two runs on the same input therefore produce the same bits.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::Field;

/// A dense row-major matrix over `F`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: &F,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> F::Elem,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &F, rows: &[Vec<F::Elem>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: &F, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: entries.iter().map(|&n| field.from_i64(n)).collect(),
        }
    }

    pub fn column_vector(field: &F, entries: Vec<F::Elem>) -> Self {
        Matrix {
            field: field.clone(),
            rows: entries.len(),
            cols: 1,
            data: entries,
        }
    }

    pub fn random<R: Rng + ?Sized>(field: &F, rows: usize, cols: usize, rng: &mut R) -> Self {
        let data = (0..rows * cols).map(|_| field.random(rng)).collect();
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> &F {
        &self.field
    }
    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }
    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols,
            other.rows,
            "matrix product shape {:?} * {:?}",
            self.shape(),
            other.shape()
        );
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(orow) {
                    if !f.is_zero(b) {
                        f.mul_add_assign(d, a, b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| self.field.neg(a)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let data = self.data.iter().map(|a| self.field.mul(a, c)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Rows `r0..r0+nr`, columns `c0..c0+nc`.
    pub fn block(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Self {
        Matrix::from_fn(&self.field, nr, nc, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn column(&self, j: usize) -> Self {
        self.block(0, self.rows, j, 1)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(&self.field, self.rows, cols.len(), |i, j| {
            self.get(i, cols[j]).clone()
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Matrix::from_fn(&self.field, rows.len(), self.cols, |i, j| {
            self.get(rows[i], j).clone()
        })
    }

    /// Horizontal concatenation. All parts need the same row count `rows`.
    pub fn hstack(field: &F, rows: usize, parts: &[&Self]) -> Self {
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let mut c = 0;
        for p in parts {
            assert_eq!(p.rows, rows);
            out.set_block(0, c, p);
            c += p.cols;
        }
        out
    }

    /// Vertical concatenation. All parts need the same column count `cols`.
    pub fn vstack(field: &F, cols: usize, parts: &[&Self]) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for p in parts {
            assert_eq!(p.cols, cols);
            data.extend_from_slice(&p.data);
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn block_diag(field: &F, parts: &[&Self]) -> Self {
        let rows = parts.iter().map(|p| p.rows).sum();
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r, mut c) = (0, 0);
        for p in parts {
            out.set_block(r, c, p);
            r += p.rows;
            c += p.cols;
        }
        out
    }

    /// Kronecker product, row index `(i, k) -> i * other.rows + k`.
    pub fn kron(&self, other: &Self) -> Self {
        let f = &self.field;
        Matrix::from_fn(f, self.rows * other.rows, self.cols * other.cols, |r, c| {
            let (i, k) = (r / other.rows, r % other.rows);
            let (j, l) = (c / other.cols, c % other.cols);
            f.mul(self.get(i, j), other.get(k, l))
        })
    }

    /// Reduced row echelon form.
    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            let pivot_row: Vec<F::Elem> = m.row(r)[c..].to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let base = i * m.cols + c;
                for (k, pv) in pivot_row.iter().enumerate() {
                    if !f.is_zero(pv) {
                        let t = f.mul(&factor, pv);
                        m.data[base + k] = f.sub(&m.data[base + k], &t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().pivots.len()
    }

    /// Columns spanning the kernel, in canonical column echelon form.
    pub fn kernel_basis(&self) -> Self {
        self.kernel().basis
    }

    pub fn kernel(&self) -> Subspace<F> {
        let f = &self.field;
        let n = self.cols;
        let Rref { matrix: r, pivots } = self.rref();
        let mut is_pivot = vec![false; n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Self::zeros(f, n, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, f.one());
            for (i, &p) in pivots.iter().enumerate() {
                basis.set(p, k, f.neg(r.get(i, fc)));
            }
        }
        Subspace::span(&basis)
    }

    /// Canonical solution of `self * x = b`, free variables set to zero.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>> {
        if self.rows != b.rows {
            return Err(Error::Dimension(format!(
                "solve: {} rows vs {} rows",
                self.rows, b.rows
            )));
        }
        let f = &self.field;
        let n = self.cols;
        let aug = Self::hstack(f, self.rows, &[self, b]);
        let Rref { matrix: r, pivots } = aug.rref();
        let k = pivots.iter().take_while(|&&p| p < n).count();
        if k < pivots.len() {
            return Ok(None);
        }
        let mut x = Self::zeros(f, n, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(p, c, r.get(i, n + c).clone());
            }
        }
        Ok(Some(x))
    }

    /// Square matrix inverse, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let id = Self::identity(&self.field, self.rows);
        match self.solve(&id) {
            Ok(Some(x)) if self.rank() == self.rows => Some(x),
            _ => None,
        }
    }

    /// Flatten row-major into a column vector.
    pub fn vectorize(&self) -> Self {
        Matrix {
            field: self.field.clone(),
            rows: self.rows * self.cols,
            cols: 1,
            data: self.data.clone(),
        }
    }

    /// Inverse of [`Matrix::vectorize`].
    pub fn unvectorize(v: &Self, rows: usize, cols: usize) -> Self {
        assert_eq!(v.rows * v.cols, rows * cols);
        Matrix {
            field: v.field.clone(),
            rows,
            cols,
            data: v.data.clone(),
        }
    }
}

/// A subspace of `F^n` with canonical basis.
///
/// `basis` is `n x k`; its transpose is in reduced row echelon form with pivot
/// columns `pivots`. Coordinates of a member vector are read off at the pivots.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    pub basis: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// Canonical span of the columns of `vectors`.
    pub fn span(vectors: &Matrix<F>) -> Self {
        let f = vectors.field();
        let n = vectors.rows();
        let Rref { matrix, pivots } = vectors.transpose().rref();
        let k = pivots.len();
        let basis = Matrix::from_fn(f, n, k, |i, j| matrix.get(j, i).clone());
        Subspace { basis, pivots }
    }

    pub fn zero(field: &F, n: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, n, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, n: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, n),
            pivots: (0..n).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    /// Coordinates of the columns of `v`, assumed to lie in the subspace.
    pub fn coords(&self, v: &Matrix<F>) -> Matrix<F> {
        v.select_rows(&self.pivots)
    }

    pub fn contains(&self, v: &Matrix<F>) -> bool {
        self.basis.mul(&self.coords(v)) == *v
    }
}

/// Quotient of `F^n` by the column span of `subspace`.
///
/// Returns `(projection, section)`: the projection is `(n - r) x n` and kills
/// the subspace, the section is `n x (n - r)` with `projection * section = 1`.
/// Quotient coordinates are the non-pivot coordinates of the echelon form.
pub fn quotient<F: Field>(field: &F, n: usize, subspace: &Matrix<F>) -> (Matrix<F>, Matrix<F>) {
    assert_eq!(
        subspace.rows(),
        n,
        "subspace lives in F^{}",
        subspace.rows()
    );
    let Rref { matrix: r, pivots } = subspace.transpose().rref();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let rest: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut proj = Matrix::zeros(field, rest.len(), n);
    let mut sec = Matrix::zeros(field, n, rest.len());
    for (k, &q) in rest.iter().enumerate() {
        proj.set(k, q, field.one());
        sec.set(q, k, field.one());
        for (i, &p) in pivots.iter().enumerate() {
            proj.set(k, p, field.neg(r.get(i, q)));
        }
    }
    (proj, sec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};

    fn f2() -> Fp {
        Fp::new(2).unwrap()
    }
    fn f3() -> Fp {
        Fp::new(3).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(&f3(), 0, 0).rank(), 0);
        assert_eq!(Matrix::identity(&f3(), 3).rank(), 3);
        assert_eq!(Matrix::from_i64(&Q, 2, 2, &[1, 2, 2, 4]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(&f3(), 2).kernel_basis().cols(), 0);
        let k = Matrix::zeros(&f3(), 2, 2).kernel_basis();
        assert_eq!(k, Matrix::identity(&f3(), 2));
        let k = Matrix::from_i64(&f2(), 1, 2, &[1, 1]).kernel_basis();
        assert_eq!(k, Matrix::from_i64(&f2(), 2, 1, &[1, 1]));
    }

    #[test]
    fn solve_examples() {
        let f = f3();
        let b = Matrix::from_i64(&f, 2, 2, &[1, 2, 0, 1]);
        assert_eq!(Matrix::identity(&f, 2).solve(&b).unwrap(), Some(b.clone()));
        let x = Matrix::from_i64(&f2(), 1, 2, &[1, 1])
            .solve(&Matrix::zeros(&f2(), 1, 1))
            .unwrap();
        assert_eq!(x, Some(Matrix::zeros(&f2(), 2, 1)));
        let none = Matrix::zeros(&f, 1, 1)
            .solve(&Matrix::from_i64(&f, 1, 1, &[1]))
            .unwrap();
        assert_eq!(none, None);
        assert!(Matrix::zeros(&f, 1, 1)
            .solve(&Matrix::zeros(&f, 2, 1))
            .is_err());
    }

    #[test]
    fn quotient_examples() {
        let f = f3();
        let (p, _) = quotient(&f, 2, &Matrix::identity(&f, 2));
        assert_eq!(p.rows(), 0);
        let (p, s) = quotient(&f, 2, &Matrix::zeros(&f, 2, 0));
        assert!(p.is_identity() && s.is_identity());
        let sub = Matrix::from_i64(&f, 2, 1, &[1, 1]);
        let (p, s) = quotient(&f, 2, &sub);
        assert_eq!(p.shape(), (1, 2));
        assert!(p.mul(&sub).is_zero());
        assert!(p.mul(&s).is_identity());
        // hand reduction: pivot at coordinate 0, quotient coordinate 1, x - y kept
        assert_eq!(p, Matrix::from_i64(&f, 1, 2, &[2, 1]));
    }

    #[test]
    fn rational_rref_and_inverse() {
        let m = Matrix::from_i64(&Q, 2, 2, &[2, 1, 1, 1]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_i64(&Q, 2, 2, &[1, 2, 2, 4])
            .inverse()
            .is_none());
    }

    #[test]
    fn subspace_coordinates() {
        let f = f3();
        let v = Matrix::from_i64(&f, 3, 2, &[1, 0, 2, 1, 0, 1]);
        let s = Subspace::span(&v);
        assert_eq!(s.dim(), 2);
        let c = s.coords(&v);
        assert_eq!(s.basis.mul(&c), v);
        assert!(!s.contains(&Matrix::from_i64(&f, 3, 1, &[1, 0, 0])));
    }

    #[test]
    fn kron_shape() {
        let f = f3();
        let a = Matrix::from_i64(&f, 1, 2, &[1, 2]);
        let b = Matrix::identity(&f, 2);
        let k = a.kron(&b);
        assert_eq!(k, Matrix::from_i64(&f, 2, 4, &[1, 0, 2, 0, 0, 1, 0, 2]));
    }
}
