//! Canonical linear algebra over an exact field: reduced column echelon
//! forms, kernels, images, and subspace lattice operations.
//!
//! The reduced column echelon form is unique for a given column span, which
//! turns subspace equality into structural equality of matrices.

use crate::field::Field;
use crate::matrix::MatrixStore;

/// Brings `m` into reduced column echelon form in place and returns the pivot
/// row of each pivot column. After the call, columns `0..pivots.len()` are the
/// pivot columns (with strictly increasing pivot rows, pivot entries 1, and
/// zeros in the pivot row of every other column) and all remaining columns are
/// zero.
pub fn echelonize_in_place<F: Field>(field: &F, m: &mut F::Matrix) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    for r in 0..rows {
        let np = pivots.len();
        if np == cols {
            break;
        }
        let Some(c) = m.first_nonzero_in_row(field, r, np) else {
            continue;
        };
        m.col_swap(np, c);
        let pv = m.get(field, r, np);
        if !field.is_one(&pv) {
            m.col_scale(field, np, &field.inv(&pv));
        }
        for c2 in 0..cols {
            if c2 == np {
                continue;
            }
            let e = m.get(field, r, c2);
            if !field.is_zero(&e) {
                m.col_addmul(field, c2, np, &field.neg(&e));
            }
        }
        pivots.push(r);
    }
    pivots
}

/// Reduced column echelon form, pivot rows, and rank. The returned matrix has
/// the same shape as the input; non-pivot columns are zero.
pub fn echelonize<F: Field>(field: &F, m: &F::Matrix) -> (F::Matrix, Vec<usize>, usize) {
    let mut reduced = m.clone();
    let pivots = echelonize_in_place(field, &mut reduced);
    let rank = pivots.len();
    (reduced, pivots, rank)
}

/// A subspace of `F^dim` in canonical form: `basis` holds exactly `rank`
/// reduced-echelon columns, `pivots` their pivot rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F: Field> {
    pub ambient_dim: usize,
    pub basis: F::Matrix,
    pub pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: F::Matrix::zeros(field, ambient_dim, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: F::Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonicalizes the column span of `m`.
    pub fn from_span(field: &F, m: &F::Matrix) -> Self {
        let (reduced, pivots, rank) = echelonize(field, m);
        let basis = reduced.take_cols(field, &(0..rank).collect::<Vec<_>>());
        Subspace {
            ambient_dim: m.rows(),
            basis,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, field: &F, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "member: vector length mismatch");
        let mut w = v.to_vec();
        for (k, &r) in self.pivots.iter().enumerate() {
            let coef = w[r].clone();
            if field.is_zero(&coef) {
                continue;
            }
            for (row, slot) in w.iter_mut().enumerate() {
                let b = self.basis.get(field, row, k);
                if !field.is_zero(&b) {
                    *slot = field.sub(slot, &field.mul(&coef, &b));
                }
            }
        }
        w.iter().all(|e| field.is_zero(e))
    }

    pub fn sum(&self, field: &F, other: &Self) -> Self {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "subspace sum: ambient mismatch"
        );
        Self::from_span(field, &self.basis.hstack(field, &other.basis))
    }

    /// Intersection via the kernel of `[A | B]`: a kernel vector `(x, y)`
    /// satisfies `A x = -B y`, and those products span the intersection.
    pub fn intersect(&self, field: &F, other: &Self) -> Self {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "subspace intersect: ambient mismatch"
        );
        let stacked = self.basis.hstack(field, &other.basis);
        let ker = kernel(field, &stacked);
        let a_cols = self.basis.cols();
        let mut gens: Vec<Vec<F::Elem>> = Vec::new();
        for c in 0..ker.cols() {
            let x: Vec<F::Elem> = (0..a_cols).map(|r| ker.get(field, r, c)).collect();
            gens.push(self.basis.mul_vec(field, &x));
        }
        let m = F::Matrix::from_cols(field, self.ambient_dim, &gens);
        Self::from_span(field, &m)
    }
}

/// Canonical basis of the column space.
pub fn image<F: Field>(field: &F, m: &F::Matrix) -> Subspace<F> {
    Subspace::from_span(field, m)
}

/// Canonical basis of the null space `{ v : m v = 0 }`.
///
/// Column-reduces `m` while applying the same operations to an identity
/// companion; the companion columns under the zero columns of the reduced
/// matrix span the kernel.
pub fn kernel<F: Field>(field: &F, m: &F::Matrix) -> F::Matrix {
    let (rows, cols) = (m.rows(), m.cols());
    let mut work = m.clone();
    let mut companion = F::Matrix::identity(field, cols);
    let mut np = 0usize;
    for r in 0..rows {
        if np == cols {
            break;
        }
        let Some(c) = work.first_nonzero_in_row(field, r, np) else {
            continue;
        };
        work.col_swap(np, c);
        companion.col_swap(np, c);
        let pv = work.get(field, r, np);
        if !field.is_one(&pv) {
            let k = field.inv(&pv);
            work.col_scale(field, np, &k);
            companion.col_scale(field, np, &k);
        }
        for c2 in 0..cols {
            if c2 == np {
                continue;
            }
            let e = work.get(field, r, c2);
            if !field.is_zero(&e) {
                let k = field.neg(&e);
                work.col_addmul(field, c2, np, &k);
                companion.col_addmul(field, c2, np, &k);
            }
        }
        np += 1;
    }
    let zero_cols: Vec<usize> = (np..cols).collect();
    debug_assert!(zero_cols.iter().all(|&c| work.is_zero_col(field, c)));
    let raw = companion.take_cols(field, &zero_cols);
    let sub = Subspace::from_span(field, &raw);
    sub.basis
}

/// An incrementally built basis kept fully reduced (Gauss–Jordan), for rank
/// extension and fast membership during accumulation loops.
#[derive(Clone, Debug)]
pub struct OnlineBasis<F: Field> {
    ambient_dim: usize,
    pivots: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> OnlineBasis<F> {
    pub fn new(ambient_dim: usize) -> Self {
        OnlineBasis {
            ambient_dim,
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    fn reduce(&self, field: &F, v: &mut [F::Elem]) {
        for (r, p) in &self.pivots {
            let coef = v[*r].clone();
            if field.is_zero(&coef) {
                continue;
            }
            for (slot, b) in v.iter_mut().zip(p) {
                if !field.is_zero(b) {
                    *slot = field.sub(slot, &field.mul(&coef, b));
                }
            }
        }
    }

    pub fn contains(&self, field: &F, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        w.iter().all(|e| field.is_zero(e))
    }

    /// Inserts `v` if independent; returns whether the rank grew.
    pub fn insert(&mut self, field: &F, v: &[F::Elem]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut w = v.to_vec();
        self.reduce(field, &mut w);
        let Some(r) = w.iter().position(|e| !field.is_zero(e)) else {
            return false;
        };
        let inv = field.inv(&w[r]);
        for e in w.iter_mut() {
            *e = field.mul(e, &inv);
        }
        for (_, p) in self.pivots.iter_mut() {
            let coef = p[r].clone();
            if field.is_zero(&coef) {
                continue;
            }
            for (slot, b) in p.iter_mut().zip(&w) {
                if !field.is_zero(b) {
                    *slot = field.sub(slot, &field.mul(&coef, b));
                }
            }
        }
        self.pivots.push((r, w));
        true
    }

    pub fn to_subspace(&self, field: &F) -> Subspace<F> {
        let cols: Vec<Vec<F::Elem>> = self.pivots.iter().map(|(_, p)| p.clone()).collect();
        let m = F::Matrix::from_cols(field, self.ambient_dim, &cols);
        Subspace::from_span(field, &m)
    }
}

/// Inverse of a square invertible matrix; `None` if singular.
pub fn inverse<F: Field>(field: &F, m: &F::Matrix) -> Option<F::Matrix> {
    let n = m.rows();
    if m.cols() != n {
        return None;
    }
    let mut work = m.clone();
    let mut companion = F::Matrix::identity(field, n);
    for r in 0..n {
        let c = work.first_nonzero_in_row(field, r, r)?;
        work.col_swap(r, c);
        companion.col_swap(r, c);
        let pv = work.get(field, r, r);
        if !field.is_one(&pv) {
            let k = field.inv(&pv);
            work.col_scale(field, r, &k);
            companion.col_scale(field, r, &k);
        }
        for c2 in 0..n {
            if c2 == r {
                continue;
            }
            let e = work.get(field, r, c2);
            if !field.is_zero(&e) {
                let k = field.neg(&e);
                work.col_addmul(field, c2, r, &k);
                companion.col_addmul(field, c2, r, &k);
            }
        }
    }
    Some(companion)
}
