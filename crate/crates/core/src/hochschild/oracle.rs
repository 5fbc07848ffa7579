use super::algebra::{AlgebraData, BimoduleData};
use crate::error::{Error, Result};
use crate::linalg::{cokernel, rank, ChainComplex, Field, FieldTag, Mat};

/// Dense tensors over mixed radices, first factor slowest.
struct Radix {
    sizes: Vec<usize>,
}

impl Radix {
    fn len(&self) -> usize {
        self.sizes.iter().product()
    }

    fn split(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.sizes.len()];
        for (slot, size) in out.iter_mut().zip(&self.sizes).rev() {
            *slot = index % size;
            index /= size;
        }
        out
    }

    /// Adds `coeff · v_0 ⊗ … ⊗ v_k` into `out`.
    fn add_product<F: Field>(&self, field: &F, out: &mut [F::Elem], coeff: F::Elem, factors: &[Vec<F::Elem>]) {
        fn go<F: Field>(field: &F, out: &mut [F::Elem], factors: &[Vec<F::Elem>], index: usize, acc: F::Elem) {
            match factors.split_first() {
                None => out[index] = field.add(&out[index], &acc),
                Some((first, rest)) => {
                    for (i, c) in first.iter().enumerate() {
                        if !field.is_zero(c) {
                            go(field, out, rest, index * first.len() + i, field.mul(&acc, c));
                        }
                    }
                }
            }
        }
        go(field, out, factors, 0, coeff);
    }
}

fn unit_vector<F: Field>(field: &F, dim: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}

fn dense<F: Field>(field: &F, dim: usize, sparse: &[(u32, F::Elem)]) -> Vec<F::Elem> {
    let mut v = vec![field.zero(); dim];
    for (i, c) in sparse {
        v[*i as usize] = c.clone();
    }
    v
}

fn sign<F: Field>(field: &F, i: usize) -> F::Elem {
    if i.is_multiple_of(2) { field.one() } else { field.neg(&field.one()) }
}

/// The matrix of a linear map given on basis tensors, returned as sums of signed products.
fn matrix_from<F: Field>(
    field: &F,
    source: &Radix,
    target: &Radix,
    terms: impl Fn(&[usize]) -> Vec<(F::Elem, Vec<Vec<F::Elem>>)>,
) -> Mat<F> {
    let cols = (0..source.len())
        .map(|j| {
            let mut out = vec![field.zero(); target.len()];
            for (coeff, factors) in terms(&source.split(j)) {
                target.add_product(field, &mut out, coeff, &factors);
            }
            out.into_iter().enumerate().filter(|(_, c)| !field.is_zero(c)).map(|(i, c)| (i as u32, c)).collect()
        })
        .collect();
    Mat::from_columns(field, target.len(), cols)
}

struct Ops<'a, F: Field> {
    field: &'a F,
    algebra: &'a AlgebraData<F>,
}

impl<F: Field> Ops<'_, F> {
    fn product(&self, i: usize, j: usize) -> Vec<F::Elem> {
        let d = self.algebra.dim();
        dense(self.field, d, &self.algebra.mul(&self.algebra.basis(i), &self.algebra.basis(j)))
    }

    fn e(&self, i: usize) -> Vec<F::Elem> {
        unit_vector(self.field, self.algebra.dim(), i)
    }

    fn radix(&self, factors: usize) -> Radix {
        Radix { sizes: vec![self.algebra.dim(); factors] }
    }

    /// `Σ_{i<last} (−1)^i d_i` on `A^{⊗(q+1)}`, where `d_i` multiplies factors `i, i+1` and
    /// `d_q` multiplies the last factor into the first.
    fn boundary(&self, q: usize, with_last: bool) -> Mat<F> {
        matrix_from(self.field, &self.radix(q + 1), &self.radix(q), |x| {
            let mut terms = Vec::new();
            for i in 0..q {
                let mut factors: Vec<_> = x[..i].iter().map(|&k| self.e(k)).collect();
                factors.push(self.product(x[i], x[i + 1]));
                factors.extend(x[i + 2..].iter().map(|&k| self.e(k)));
                terms.push((sign(self.field, i), factors));
            }
            if with_last && q > 0 {
                let mut factors = vec![self.product(x[q], x[0])];
                factors.extend(x[1..q].iter().map(|&k| self.e(k)));
                terms.push((sign(self.field, q), factors));
            }
            terms
        })
    }

    /// `t(a_0 ⊗ … ⊗ a_q) = (−1)^q a_q ⊗ a_0 ⊗ … ⊗ a_{q−1}`.
    fn signed_rotation(&self, q: usize) -> Mat<F> {
        matrix_from(self.field, &self.radix(q + 1), &self.radix(q + 1), |x| {
            let mut factors = vec![self.e(x[q])];
            factors.extend(x[..q].iter().map(|&k| self.e(k)));
            vec![(sign(self.field, q), factors)]
        })
    }

    fn norm(&self, q: usize) -> Mat<F> {
        let t = self.signed_rotation(q);
        let mut power = Mat::identity(self.field, t.rows());
        let mut sum = power.clone();
        for _ in 0..q {
            power = t.mul(&power);
            sum = sum.add(&power);
        }
        sum
    }
}

/// `HH_n(A, M)` for `n = 0..=max_degree` from the Hochschild complex `M ⊗ A^{⊗n}` with
/// `b = Σ (−1)^i d_i`.
pub fn hochschild_oracle<F: Field>(a: &AlgebraData<F>, m: &BimoduleData<F>, max_degree: usize) -> Result<Vec<usize>> {
    let field = a.field();
    let da = a.dim();
    let shape = |n: usize| {
        let mut sizes = vec![m.dim()];
        sizes.extend(std::iter::repeat_n(da, n));
        Radix { sizes }
    };
    let ops = Ops { field, algebra: a };
    let diffs = (1..=max_degree + 1)
        .map(|n| {
            matrix_from(field, &shape(n), &shape(n - 1), |x| {
                let e_m = dense(field, m.dim(), &[(x[0] as u32, field.one())]);
                let mut terms = Vec::with_capacity(n + 1);
                let mut first = vec![dense(field, m.dim(), &m.right(x[1]).apply(&vec![(x[0] as u32, field.one())]))];
                first.extend(x[2..].iter().map(|&k| ops.e(k)));
                terms.push((field.one(), first));
                for i in 1..n {
                    let mut factors = vec![e_m.clone()];
                    factors.extend(x[1..i].iter().map(|&k| ops.e(k)));
                    factors.push(ops.product(x[i], x[i + 1]));
                    factors.extend(x[i + 2..].iter().map(|&k| ops.e(k)));
                    terms.push((sign(field, i), factors));
                }
                let mut last = vec![dense(field, m.dim(), &m.left(x[n]).apply(&vec![(x[0] as u32, field.one())]))];
                last.extend(x[1..n].iter().map(|&k| ops.e(k)));
                terms.push((sign(field, n), last));
                terms
            })
        })
        .collect();
    let spaces = (0..=max_degree + 1).map(|n| shape(n).len()).collect();
    ChainComplex::new(field, spaces, diffs)?.homology_dims(0..=max_degree)
}

/// `block` placed at `(row, col)` inside a `rows × cols` zero matrix.
fn embed<F: Field>(field: &F, block: &Mat<F>, row: usize, col: usize, rows: usize, cols: usize) -> Mat<F> {
    let mut columns = vec![Vec::new(); cols];
    for (j, c) in block.columns().iter().enumerate() {
        columns[col + j] = c.iter().map(|(r, v)| (r + row as u32, v.clone())).collect();
    }
    Mat::from_columns(field, rows, columns)
}

/// `HC_n(A)` for `n = 0..=max_degree` from the total complex of the cyclic bicomplex with
/// columns `b, −b', b, −b', …` joined by `1 − t` and `N`. Valid in every characteristic.
/// The window of columns and rows `0..=max_degree + 1` contains every cell of total degree
/// at most `max_degree + 1`, so no truncation error arises.
pub fn cyclic_oracle<F: Field>(a: &AlgebraData<F>, max_degree: usize) -> Result<Vec<usize>> {
    let field = a.field();
    let ops = Ops { field, algebra: a };
    let cell = |q: usize| ops.radix(q + 1).len();
    // Tot_n = ⊕_{p=0}^{n} CC_{p, n−p}, blocks in increasing p
    let offsets = |n: usize| {
        let mut out = vec![0];
        for p in 0..=n {
            out.push(out[p] + cell(n - p));
        }
        out
    };
    let mut diffs = Vec::new();
    for n in 1..=max_degree + 1 {
        let (src, dst) = (offsets(n), offsets(n - 1));
        let mut total = Mat::zeros(field, dst[n], src[n + 1]);
        for p in 0..=n {
            let q = n - p;
            let mut place = |block: Mat<F>, row_block: usize| {
                total = total.add(&embed(field, &block, dst[row_block], src[p], dst[n], src[n + 1]));
            };
            if q >= 1 {
                let vertical = if p % 2 == 0 { ops.boundary(q, true) } else { ops.boundary(q, false).scale(&field.neg(&field.one())) };
                place(vertical, p);
            }
            if p >= 1 {
                let size = cell(q);
                let horizontal = if p % 2 == 1 {
                    Mat::identity(field, size).sub(&ops.signed_rotation(q))
                } else {
                    ops.norm(q)
                };
                place(horizontal, p - 1);
            }
        }
        diffs.push(total);
    }
    let spaces = (0..=max_degree + 1).map(|n| offsets(n)[n + 1]).collect();
    ChainComplex::new(field, spaces, diffs)?.homology_dims(0..=max_degree)
}

/// `HC_n(A)` from Connes' quotient complex `A^{⊗(n+1)} / (1 − t)` with the induced `b`.
/// Only valid over a field of characteristic zero.
pub fn connes_oracle<F: Field>(a: &AlgebraData<F>, max_degree: usize) -> Result<Vec<usize>> {
    let field = a.field();
    if let FieldTag::Prime(p) = field.tag() {
        return Err(Error::UnsupportedCharacteristic(format!("Connes' complex needs characteristic 0, not {p}")));
    }
    let ops = Ops { field, algebra: a };
    let quotients: Vec<_> = (0..=max_degree + 1)
        .map(|q| {
            let rot = ops.signed_rotation(q);
            cokernel(&Mat::identity(field, rot.rows()).sub(&rot))
        })
        .collect();
    let diffs = (1..=max_degree + 1)
        .map(|n| {
            let reps = &quotients[n].representatives;
            let lifted = Mat::from_columns(
                field,
                ops.radix(n + 1).len(),
                reps.iter().map(|&r| vec![(r as u32, field.one())]).collect(),
            );
            quotients[n - 1].projection.mul(&ops.boundary(n, true)).mul(&lifted)
        })
        .collect();
    let spaces = quotients.iter().map(|c| c.dim).collect();
    ChainComplex::new(field, spaces, diffs)?.homology_dims(0..=max_degree)
}

/// `dim M / [A, M]`, the span of the commutators `e_i m − m e_i` removed.
pub fn commutator_quotient_dim<F: Field>(a: &AlgebraData<F>, m: &BimoduleData<F>) -> usize {
    let parts: Vec<_> = (0..a.dim()).map(|i| m.left(i).sub(m.right(i))).collect();
    let span = Mat::hstack(a.field(), m.dim(), &parts);
    m.dim() - rank(&span)
}
