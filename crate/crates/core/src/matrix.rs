//! Matrix storage abstraction and the dense column-major implementation.
//!
//! All elimination code operates through [`MatrixStore`], so the packed GF(2)
//! representation and the dense representation run the same algorithms with
//! identical observable behavior.

use std::fmt::Debug;

use crate::field::Field;

/// Column-oriented matrix storage over a field `F`. Columns are the primary
/// axis because the canonical subspace form used throughout is the reduced
/// *column* echelon form.
pub trait MatrixStore<F: Field>: Clone + PartialEq + Eq + Debug + Send + Sync + Sized {
    fn zeros(field: &F, rows: usize, cols: usize) -> Self;
    fn identity(field: &F, n: usize) -> Self;
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;
    fn get(&self, field: &F, r: usize, c: usize) -> F::Elem;
    fn set(&mut self, field: &F, r: usize, c: usize, v: F::Elem);

    fn col(&self, field: &F, c: usize) -> Vec<F::Elem> {
        (0..self.rows()).map(|r| self.get(field, r, c)).collect()
    }

    fn push_col(&mut self, field: &F, col: &[F::Elem]);
    fn col_swap(&mut self, i: usize, j: usize);
    /// `col[c] *= k`
    fn col_scale(&mut self, field: &F, c: usize, k: &F::Elem);
    /// `col[dst] += k * col[src]`
    fn col_addmul(&mut self, field: &F, dst: usize, src: usize, k: &F::Elem);

    fn from_cols(field: &F, rows: usize, cols: &[Vec<F::Elem>]) -> Self {
        let mut m = Self::zeros(field, rows, 0);
        for c in cols {
            m.push_col(field, c);
        }
        m
    }

    fn first_nonzero_in_row(&self, field: &F, r: usize, from_col: usize) -> Option<usize> {
        (from_col..self.cols()).find(|&c| !field.is_zero(&self.get(field, r, c)))
    }

    fn is_zero_col(&self, field: &F, c: usize) -> bool {
        (0..self.rows()).all(|r| field.is_zero(&self.get(field, r, c)))
    }

    fn is_zero(&self, field: &F) -> bool {
        (0..self.cols()).all(|c| self.is_zero_col(field, c))
    }

    fn mul(&self, field: &F, rhs: &Self) -> Self {
        assert_eq!(self.cols(), rhs.rows(), "matrix product shape mismatch");
        let mut out = Self::zeros(field, self.rows(), rhs.cols());
        for c in 0..rhs.cols() {
            for k in 0..self.cols() {
                let e = rhs.get(field, k, c);
                if field.is_zero(&e) {
                    continue;
                }
                for r in 0..self.rows() {
                    let a = self.get(field, r, k);
                    if field.is_zero(&a) {
                        continue;
                    }
                    let v = field.add(&out.get(field, r, c), &field.mul(&a, &e));
                    out.set(field, r, c, v);
                }
            }
        }
        out
    }

    fn mul_vec(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols(), v.len(), "matrix-vector shape mismatch");
        let mut out = vec![field.zero(); self.rows()];
        for (c, e) in v.iter().enumerate() {
            if field.is_zero(e) {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                let a = self.get(field, r, c);
                if !field.is_zero(&a) {
                    *slot = field.add(slot, &field.mul(&a, e));
                }
            }
        }
        out
    }

    fn take_cols(&self, field: &F, idx: &[usize]) -> Self {
        let mut m = Self::zeros(field, self.rows(), 0);
        for &c in idx {
            m.push_col(field, &self.col(field, c));
        }
        m
    }

    fn hstack(&self, field: &F, rhs: &Self) -> Self {
        assert_eq!(self.rows(), rhs.rows(), "hstack row mismatch");
        let mut m = self.clone();
        for c in 0..rhs.cols() {
            m.push_col(field, &rhs.col(field, c));
        }
        m
    }
}

/// Dense column-major storage; the workhorse for GF(p) and the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>, // data[c * rows + r]
}

// inherent copies of the shape accessors so calls on a concrete matrix do not
// need a field type annotation
impl<E> DenseMatrix<E> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

impl<F, E> MatrixStore<F> for DenseMatrix<E>
where
    F: Field<Elem = E>,
    E: Clone + PartialEq + Eq + Debug + Send + Sync + 'static,
{
    fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    fn identity(field: &F, n: usize) -> Self {
        let mut m = <Self as MatrixStore<F>>::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    fn rows(&self) -> usize {
        DenseMatrix::rows(self)
    }
    fn cols(&self) -> usize {
        DenseMatrix::cols(self)
    }

    fn get(&self, _field: &F, r: usize, c: usize) -> E {
        self.data[c * self.rows + r].clone()
    }

    fn set(&mut self, _field: &F, r: usize, c: usize, v: E) {
        self.data[c * self.rows + r] = v;
    }

    fn push_col(&mut self, _field: &F, col: &[E]) {
        assert_eq!(col.len(), self.rows, "pushed column has wrong length");
        self.data.extend_from_slice(col);
        self.cols += 1;
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let (lo, hi) = (i.min(j), i.max(j));
        let (a, b) = self.data.split_at_mut(hi * self.rows);
        a[lo * self.rows..(lo + 1) * self.rows].swap_with_slice(&mut b[..self.rows]);
    }

    fn col_scale(&mut self, field: &F, c: usize, k: &E) {
        for r in 0..self.rows {
            let idx = c * self.rows + r;
            self.data[idx] = field.mul(&self.data[idx], k);
        }
    }

    fn col_addmul(&mut self, field: &F, dst: usize, src: usize, k: &E) {
        assert_ne!(dst, src);
        for r in 0..self.rows {
            let s = self.data[src * self.rows + r].clone();
            if field.is_zero(&s) {
                continue;
            }
            let idx = dst * self.rows + r;
            self.data[idx] = field.add(&self.data[idx], &field.mul(&s, k));
        }
    }
}
