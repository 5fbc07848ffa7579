use super::field::{Field, Scalar};

/// A sparse vector: `(index, value)` pairs sorted by index with no stored zeros.
pub type SpVec<E> = Vec<(u32, E)>;

/// `a + s * b` for sparse vectors.
pub fn axpy<F: Field>(field: &F, a: &SpVec<F::Elem>, s: &F::Elem, b: &SpVec<F::Elem>) -> SpVec<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = field.mul(s, &b[j].1);
            if !field.is_zero(&v) {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.mul(s, &b[j].1));
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale_vec<F: Field>(field: &F, s: &F::Elem, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
    if field.is_zero(s) {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, field.mul(s, x))).collect()
}

/// Builds a canonical sparse vector from unsorted, possibly repeated entries.
pub fn collect_vec<F: Field>(field: &F, mut entries: Vec<(u32, F::Elem)>) -> SpVec<F::Elem> {
    entries.sort_by_key(|e| e.0);
    let mut out: SpVec<F::Elem> = Vec::with_capacity(entries.len());
    for (i, x) in entries {
        match out.last_mut() {
            Some(last) if last.0 == i => last.1 = field.add(&last.1, &x),
            _ => out.push((i, x)),
        }
    }
    out.retain(|(_, x)| !field.is_zero(x));
    out
}

/// An exact matrix over `F`, stored column by column in sparse form.
///
/// Column `j` is the image of the `j`-th source basis vector, so a matrix is literally
/// a linear map written in the target basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat<F: Field> {
    field: F,
    rows: usize,
    cols: Vec<SpVec<F::Elem>>,
}

impl<F: Field> Mat<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Mat { field: field.clone(), rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let cols = (0..n).map(|i| vec![(i as u32, field.one())]).collect();
        Mat { field: field.clone(), rows: n, cols }
    }

    /// Columns must be canonical sparse vectors with indices below `rows`.
    pub fn from_columns(field: &F, rows: usize, cols: Vec<SpVec<F::Elem>>) -> Self {
        debug_assert!(cols
            .iter()
            .all(|c| c.windows(2).all(|w| w[0].0 < w[1].0) && c.iter().all(|(i, x)| (*i as usize) < rows && !field.is_zero(x))));
        Mat { field: field.clone(), rows, cols }
    }

    /// Row-major integer entries.
    pub fn from_rows_i64(field: &F, rows: &[Vec<i64>]) -> Self {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut cols = vec![Vec::new(); n_cols];
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n_cols, "ragged matrix");
            for (c, &v) in row.iter().enumerate() {
                let x = field.from_i64(v);
                if !field.is_zero(&x) {
                    cols[c].push((r as u32, x));
                }
            }
        }
        Mat { field: field.clone(), rows: n_rows, cols }
    }

    pub fn from_rows(field: &F, n_cols: usize, rows: &[Vec<F::Elem>]) -> Self {
        let mut cols = vec![Vec::new(); n_cols];
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n_cols, "ragged matrix");
            for (c, v) in row.iter().enumerate() {
                if !field.is_zero(v) {
                    cols[c].push((r as u32, v.clone()));
                }
            }
        }
        Mat { field: field.clone(), rows: rows.len(), cols }
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols.len()
    }
    pub fn col(&self, j: usize) -> &SpVec<F::Elem> {
        &self.cols[j]
    }
    pub fn columns(&self) -> &[SpVec<F::Elem>] {
        &self.cols
    }
    pub fn into_columns(self) -> Vec<SpVec<F::Elem>> {
        self.cols
    }
    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn get(&self, r: usize, c: usize) -> F::Elem {
        match self.cols[c].binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(k) => self.cols[c][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn get_scalar(&self, r: usize, c: usize) -> Scalar {
        self.field.to_scalar(&self.get(r, c))
    }

    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        let col = &mut self.cols[c];
        match col.binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(k) => {
                if self.field.is_zero(&v) {
                    col.remove(k);
                } else {
                    col[k].1 = v;
                }
            }
            Err(k) => {
                if !self.field.is_zero(&v) {
                    col.insert(k, (r as u32, v));
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols.len()
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 as usize == j && self.field.is_one(&c[0].1))
    }

    /// `self * v` for a sparse vector indexed by columns.
    pub fn apply(&self, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        let mut acc: SpVec<F::Elem> = Vec::new();
        for (j, x) in v {
            acc = axpy(&self.field, &acc, x, &self.cols[*j as usize]);
        }
        acc
    }

    /// `self * other`.
    pub fn mul(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols.len(), other.rows, "dimension mismatch in product");
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols }
    }

    pub fn add(&self, other: &Mat<F>) -> Mat<F> {
        self.lin_comb(&self.field.one(), other)
    }

    pub fn sub(&self, other: &Mat<F>) -> Mat<F> {
        self.lin_comb(&self.field.neg(&self.field.one()), other)
    }

    fn lin_comb(&self, s: &F::Elem, other: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols.len()), (other.rows, other.cols.len()));
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| axpy(&self.field, a, s, b))
            .collect();
        Mat { field: self.field.clone(), rows: self.rows, cols }
    }

    pub fn scale(&self, s: &F::Elem) -> Mat<F> {
        let cols = self.cols.iter().map(|c| scale_vec(&self.field, s, c)).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols }
    }

    pub fn transpose(&self) -> Mat<F> {
        let mut cols: Vec<SpVec<F::Elem>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                cols[*i as usize].push((j as u32, x.clone()));
            }
        }
        Mat { field: self.field.clone(), rows: self.cols.len(), cols }
    }

    /// Selects the given columns, in order.
    pub fn select_columns(&self, idx: &[usize]) -> Mat<F> {
        let cols = idx.iter().map(|&j| self.cols[j].clone()).collect();
        Mat { field: self.field.clone(), rows: self.rows, cols }
    }

    /// Concatenates columns of matrices with equal row counts.
    pub fn hstack(field: &F, rows: usize, parts: &[Mat<F>]) -> Mat<F> {
        let mut cols = Vec::new();
        for p in parts {
            assert_eq!(p.rows, rows);
            cols.extend(p.cols.iter().cloned());
        }
        Mat { field: field.clone(), rows, cols }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: &F, cols: usize, parts: &[Mat<F>]) -> Mat<F> {
        let mut out = vec![Vec::new(); cols];
        let mut offset = 0u32;
        for p in parts {
            assert_eq!(p.cols.len(), cols);
            for (j, c) in p.cols.iter().enumerate() {
                out[j].extend(c.iter().map(|(i, x)| (i + offset, x.clone())));
            }
            offset += p.rows as u32;
        }
        Mat { field: field.clone(), rows: offset as usize, cols: out }
    }

    pub fn block_diag(field: &F, parts: &[Mat<F>]) -> Mat<F> {
        let rows: usize = parts.iter().map(|p| p.rows).sum();
        let mut cols = Vec::new();
        let mut offset = 0u32;
        for p in parts {
            for c in &p.cols {
                cols.push(c.iter().map(|(i, x)| (i + offset, x.clone())).collect());
            }
            offset += p.rows as u32;
        }
        Mat { field: field.clone(), rows, cols }
    }

    /// Kronecker product `self ⊗ other`, basis ordered with `other`'s index varying fastest.
    pub fn kron(&self, other: &Mat<F>) -> Mat<F> {
        let rows = self.rows * other.rows;
        let mut cols = Vec::with_capacity(self.cols.len() * other.cols.len());
        for a in &self.cols {
            for b in &other.cols {
                let mut c = Vec::with_capacity(a.len() * b.len());
                for (i, x) in a {
                    for (k, y) in b {
                        c.push((i * other.rows as u32 + k, self.field.mul(x, y)));
                    }
                }
                cols.push(c);
            }
        }
        Mat { field: self.field.clone(), rows, cols }
    }

    /// Dense row-major view, for reports and small tests.
    pub fn to_rows(&self) -> Vec<Vec<F::Elem>> {
        let mut out = vec![vec![self.field.zero(); self.cols.len()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                out[*i as usize][j] = x.clone();
            }
        }
        out
    }

    pub fn to_scalar_rows(&self) -> Vec<Vec<Scalar>> {
        self.to_rows()
            .into_iter()
            .map(|r| r.iter().map(|x| self.field.to_scalar(x)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::Rationals;

    #[test]
    fn product_and_transpose() {
        let f = Rationals;
        let a = Mat::from_rows_i64(&f, &[vec![1, 2], vec![0, 1], vec![3, 0]]);
        let b = Mat::from_rows_i64(&f, &[vec![1, 0, 1], vec![1, 1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, Mat::from_rows_i64(&f, &[vec![3, 2, 1], vec![1, 1, 0], vec![3, 0, 3]]));
        assert_eq!(ab.transpose(), b.transpose().mul(&a.transpose()));
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let f = Rationals;
        let k = Mat::identity(&f, 2).kron(&Mat::identity(&f, 3));
        assert!(k.is_identity());
    }

    #[test]
    fn set_and_get_keep_canonical_form() {
        let f = Rationals;
        let mut m = Mat::zeros(&f, 2, 2);
        m.set(1, 0, f.from_i64(4));
        m.set(0, 0, f.from_i64(2));
        assert_eq!(m.col(0).iter().map(|e| e.0).collect::<Vec<_>>(), vec![0, 1]);
        m.set(1, 0, f.zero());
        assert_eq!(m.nnz(), 1);
    }
}
