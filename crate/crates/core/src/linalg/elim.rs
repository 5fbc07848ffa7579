//! Exact elimination: rank, kernel bases, cokernel projections and incremental spans.
//!
//! Every routine reduces columns left to right against a pivot table keyed by the
//! leading (smallest) row index of each reduced column. The first column whose leading
//! row is unclaimed becomes that row's pivot, so outputs are reproducible bit for bit.

use super::field::Field;
use super::mat::{axpy, scale_vec, Mat, SpVec};

/// An incrementally built echelon basis of a subspace of `F^dim`.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    pivot_of_row: Vec<Option<u32>>,
    vectors: Vec<SpVec<F::Elem>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, dim: usize) -> Self {
        Echelon { field: field.clone(), dim, pivot_of_row: vec![None; dim], vectors: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_full(&self) -> bool {
        self.vectors.len() == self.dim
    }

    /// Reduces `v` against the stored pivots; the result is zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: SpVec<F::Elem>) -> SpVec<F::Elem> {
        while let Some((lead, x)) = v.first() {
            match self.pivot_of_row[*lead as usize] {
                Some(k) => {
                    let s = self.field.neg(x);
                    v = axpy(&self.field, &v, &s, &self.vectors[k as usize]);
                }
                None => break,
            }
        }
        v
    }

    pub fn contains(&self, v: &SpVec<F::Elem>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span; returns `true` if it was independent.
    pub fn insert(&mut self, v: SpVec<F::Elem>) -> bool {
        if self.is_full() {
            return false;
        }
        let v = self.reduce(v);
        match v.first() {
            None => false,
            Some((lead, x)) => {
                let lead = *lead as usize;
                let inv = self.field.inv(x).expect("nonzero lead");
                let v = scale_vec(&self.field, &inv, &v);
                self.pivot_of_row[lead] = Some(self.vectors.len() as u32);
                self.vectors.push(v);
                true
            }
        }
    }

    pub fn pivot_rows(&self) -> Vec<usize> {
        (0..self.dim).filter(|&r| self.pivot_of_row[r].is_some()).collect()
    }

    /// The stored basis vectors, each with leading coefficient one.
    pub fn basis(&self) -> &[SpVec<F::Elem>] {
        &self.vectors
    }
}

pub fn rank<F: Field>(m: &Mat<F>) -> usize {
    let mut ech = Echelon::new(m.field(), m.rows());
    for c in m.columns() {
        ech.insert(c.clone());
        if ech.is_full() {
            break;
        }
    }
    ech.rank()
}

/// A basis of the kernel of `m`, as the columns of a `cols(m) × nullity` matrix.
pub fn kernel_basis<F: Field>(m: &Mat<F>) -> Mat<F> {
    let field = m.field();
    let mut pivot_of_row: Vec<Option<u32>> = vec![None; m.rows()];
    // (reduced column, combination of source columns producing it)
    let mut pivots: Vec<(SpVec<F::Elem>, SpVec<F::Elem>)> = Vec::new();
    let mut kernel = Vec::new();
    for (j, c) in m.columns().iter().enumerate() {
        let mut v = c.clone();
        let mut combo: SpVec<F::Elem> = vec![(j as u32, field.one())];
        while let Some((lead, x)) = v.first() {
            match pivot_of_row[*lead as usize] {
                Some(k) => {
                    let s = field.neg(x);
                    let (pv, pc) = &pivots[k as usize];
                    v = axpy(field, &v, &s, pv);
                    combo = axpy(field, &combo, &s, pc);
                }
                None => break,
            }
        }
        match v.first() {
            None => kernel.push(combo),
            Some((lead, x)) => {
                let inv = field.inv(x).expect("nonzero lead");
                pivot_of_row[*lead as usize] = Some(pivots.len() as u32);
                pivots.push((scale_vec(field, &inv, &v), scale_vec(field, &inv, &combo)));
            }
        }
    }
    Mat::from_columns(field, m.cols(), kernel)
}

/// Dimension of the cokernel of `m` and a full-row-rank projection `P` with `P · m = 0`.
///
/// The cokernel basis is indexed by the non-pivot rows of `m` in increasing order; `P`
/// restricted to those rows is the identity.
pub fn cokernel_data<F: Field>(m: &Mat<F>) -> (usize, Mat<F>) {
    let c = cokernel(m);
    (c.dim, c.projection)
}

/// Cokernel of a matrix with a chosen set of representatives.
#[derive(Clone, Debug)]
pub struct Cokernel<F: Field> {
    pub dim: usize,
    /// `dim × rows(m)` projection with `projection · m = 0`
    pub projection: Mat<F>,
    /// the non-pivot rows; `e_{representatives[i]}` projects to the `i`-th basis vector
    pub representatives: Vec<usize>,
}

pub fn cokernel<F: Field>(m: &Mat<F>) -> Cokernel<F> {
    let field = m.field();
    let mut ech = Echelon::new(field, m.rows());
    for c in m.columns() {
        ech.insert(c.clone());
        if ech.is_full() {
            break;
        }
    }
    let rows = m.rows();
    let mut position: Vec<Option<u32>> = vec![None; rows];
    let mut dim = 0u32;
    for (r, slot) in position.iter_mut().enumerate() {
        if ech.pivot_of_row[r].is_none() {
            *slot = Some(dim);
            dim += 1;
        }
    }
    let mut proj_cols: Vec<SpVec<F::Elem>> = vec![Vec::new(); rows];
    for r in (0..rows).rev() {
        match (position[r], ech.pivot_of_row[r]) {
            (Some(p), _) => proj_cols[r] = vec![(p, field.one())],
            (None, Some(k)) => {
                // e_r ≡ -(v - e_r) modulo the image, where v has lead r with coefficient 1.
                let v = &ech.vectors[k as usize];
                let mut acc: SpVec<F::Elem> = Vec::new();
                for (s, x) in v.iter().skip(1) {
                    let neg = field.neg(x);
                    acc = axpy(field, &acc, &neg, &proj_cols[*s as usize]);
                }
                proj_cols[r] = acc;
            }
            (None, None) => unreachable!(),
        }
    }
    let representatives = (0..rows).filter(|&r| position[r].is_some()).collect();
    Cokernel { dim: dim as usize, projection: Mat::from_columns(field, dim as usize, proj_cols), representatives }
}

/// Solves `m x = b` for one particular solution, if any.
pub fn solve<F: Field>(m: &Mat<F>, b: &SpVec<F::Elem>) -> Option<SpVec<F::Elem>> {
    let field = m.field();
    let mut pivot_of_row: Vec<Option<u32>> = vec![None; m.rows()];
    let mut pivots: Vec<(SpVec<F::Elem>, SpVec<F::Elem>)> = Vec::new();
    for (j, c) in m.columns().iter().enumerate() {
        let mut v = c.clone();
        let mut combo: SpVec<F::Elem> = vec![(j as u32, field.one())];
        while let Some((lead, x)) = v.first() {
            match pivot_of_row[*lead as usize] {
                Some(k) => {
                    let s = field.neg(x);
                    let (pv, pc) = &pivots[k as usize];
                    v = axpy(field, &v, &s, pv);
                    combo = axpy(field, &combo, &s, pc);
                }
                None => break,
            }
        }
        if let Some((lead, x)) = v.first() {
            let inv = field.inv(x).expect("nonzero lead");
            pivot_of_row[*lead as usize] = Some(pivots.len() as u32);
            pivots.push((scale_vec(field, &inv, &v), scale_vec(field, &inv, &combo)));
        }
    }
    let mut v = b.clone();
    let mut x: SpVec<F::Elem> = Vec::new();
    while let Some((lead, c)) = v.first() {
        {
            let k = pivot_of_row[*lead as usize]?;
            let s = c.clone();
            let (pv, pc) = &pivots[k as usize];
            v = axpy(field, &v, &field.neg(&s), pv);
            x = axpy(field, &x, &s, pc);
        }
    }
    Some(x)
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse<F: Field>(m: &Mat<F>) -> Option<Mat<F>> {
    if m.rows() != m.cols() {
        return None;
    }
    let n = m.rows();
    let mut cols = Vec::with_capacity(n);
    for i in 0..n {
        let e = vec![(i as u32, m.field().one())];
        cols.push(solve(m, &e)?);
    }
    if rank(m) != n {
        return None;
    }
    Some(Mat::from_columns(m.field(), n, cols))
}
