use serde::Serialize;

use crate::catmod::{CatModule, Variance};
use crate::error::{Error, Result};
use crate::fincat::Morph;
use crate::linalg::{cokernel, kernel_basis, rank, Field, Mat};

/// `M ⊗_B N` for a contravariant `M` and a covariant `N`.
#[derive(Clone, Debug)]
pub struct TensorProduct<F: Field> {
    pub dim: usize,
    /// projection `⊕_X M(X) ⊗ N(X) → M ⊗_B N`
    pub projection: Mat<F>,
    /// coordinates in the direct sum whose classes form the basis of the tensor product
    pub representatives: Vec<usize>,
    /// offset of the block of each object in the direct sum; the basis of `M(X) ⊗ N(X)`
    /// is ordered with the `N` index fastest
    pub offsets: Vec<usize>,
}

fn same_base<F: Field>(m: &CatModule<F>, n: &CatModule<F>) -> Result<()> {
    if !m.base().same_as(n.base()) {
        return Err(Error::BaseMismatch(format!("{} vs {}", m.base().name(), n.base().name())));
    }
    Ok(())
}

/// Which morphisms to impose relations for: a generating set suffices, because the
/// relation for a composite follows from the relations for its factors.
fn relation_morphisms<F: Field>(m: &CatModule<F>) -> Vec<Morph> {
    m.base().generating_morphisms()
}

/// The cokernel of `⊕_{Φ : X → Y} M(Y) ⊗ N(X) → ⊕_X M(X) ⊗ N(X)`,
/// `a ⊗ b ↦ M(Φ)a ⊗ b − a ⊗ N(Φ)b`.
pub fn tensor_over_category<F: Field>(m: &CatModule<F>, n: &CatModule<F>) -> Result<TensorProduct<F>> {
    same_base(m, n)?;
    if m.variance() != Variance::Contravariant || n.variance() != Variance::Covariant {
        return Err(Error::BaseMismatch("tensor product needs a contravariant and a covariant module".into()));
    }
    let field = m.field();
    let objects = m.base().n_objects();
    let mut offsets = vec![0];
    for x in 0..objects {
        offsets.push(offsets[x] + m.dim(x) * n.dim(x));
    }
    let total = offsets[objects];
    let mut cols = Vec::new();
    for phi in relation_morphisms(m) {
        let (x, y) = (phi.dom(), phi.cod());
        let (my, nx) = (m.dim(y), n.dim(x));
        if my * nx == 0 {
            continue;
        }
        let left = m.action(phi).kron(&Mat::identity(field, nx));
        let right = Mat::identity(field, my).kron(&n.action(phi));
        for j in 0..my * nx {
            let mut col: Vec<_> =
                left.col(j).iter().map(|(r, v)| (r + offsets[x] as u32, v.clone())).collect();
            col.extend(right.col(j).iter().map(|(r, v)| (r + offsets[y] as u32, field.neg(v))));
            cols.push(crate::linalg::mat::collect_vec(field, col));
        }
    }
    let relations = Mat::from_columns(field, total, cols);
    let c = cokernel(&relations);
    offsets.pop();
    Ok(TensorProduct { dim: c.dim, projection: c.projection, representatives: c.representatives, offsets })
}

/// Natural transformations `M → N` between modules of the same variance.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub dim: usize,
    /// basis vectors in the coordinates described by `offsets`: the component at `X` is
    /// stored column-major as a `dim N(X) × dim M(X)` matrix
    pub basis: Mat<F>,
    pub offsets: Vec<usize>,
}

impl<F: Field> HomSpace<F> {
    /// Components of the `i`-th basis transformation.
    pub fn components(&self, m: &CatModule<F>, n: &CatModule<F>, i: usize) -> Vec<Mat<F>> {
        let field = m.field();
        let col = self.basis.col(i);
        (0..m.base().n_objects())
            .map(|x| {
                let (rows, cols) = (n.dim(x), m.dim(x));
                let mut mat = Mat::zeros(field, rows, cols);
                for (r, v) in col {
                    let r = *r as usize;
                    if r >= self.offsets[x] && r < self.offsets[x] + rows * cols {
                        let k = r - self.offsets[x];
                        mat.set(k % rows, k / rows, v.clone());
                    }
                }
                mat
            })
            .collect()
    }

    /// Components of `Σ_i c_i η_i` for coefficients `c` against the basis.
    pub fn combination(&self, m: &CatModule<F>, n: &CatModule<F>, coeffs: &[F::Elem]) -> Vec<Mat<F>> {
        let field = m.field();
        let mut acc: Vec<Mat<F>> =
            (0..m.base().n_objects()).map(|x| Mat::zeros(field, n.dim(x), m.dim(x))).collect();
        for (i, c) in coeffs.iter().enumerate().take(self.dim) {
            for (slot, comp) in acc.iter_mut().zip(self.components(m, n, i)) {
                *slot = slot.add(&comp.scale(c));
            }
        }
        acc
    }
}

/// The naturality system whose kernel is `Hom(M, N)`, with the unknown layout.
fn naturality_system<F: Field>(m: &CatModule<F>, n: &CatModule<F>) -> (Mat<F>, Vec<usize>) {
    let field = m.field();
    let objects = m.base().n_objects();
    let mut offsets = vec![0];
    for x in 0..objects {
        offsets.push(offsets[x] + n.dim(x) * m.dim(x));
    }
    let unknowns = offsets[objects];
    // rows: one block per relation morphism; assemble transposed (constraints as columns)
    let mut constraint_rows: Vec<Vec<(u32, F::Elem)>> = Vec::new();
    for phi in relation_morphisms(m) {
        let (x, y) = (phi.dom(), phi.cod());
        let (mp, np) = (m.action(phi), n.action(phi));
        // covariant: η_Y M(Φ) − N(Φ) η_X ; contravariant: η_X M(Φ) − N(Φ) η_Y
        let (a, b) = match m.variance() {
            Variance::Covariant => (y, x),
            Variance::Contravariant => (x, y),
        };
        let first = mp.transpose().kron(&Mat::identity(field, n.dim(a)));
        let second = Mat::identity(field, m.dim(b)).kron(&np);
        let block_rows = first.rows();
        let mut rows: Vec<Vec<(u32, F::Elem)>> = vec![Vec::new(); block_rows];
        for (c, col) in first.columns().iter().enumerate() {
            for (r, v) in col {
                rows[*r as usize].push(((offsets[a] + c) as u32, v.clone()));
            }
        }
        for (c, col) in second.columns().iter().enumerate() {
            for (r, v) in col {
                rows[*r as usize].push(((offsets[b] + c) as u32, field.neg(v)));
            }
        }
        constraint_rows.extend(rows.into_iter().map(|r| crate::linalg::mat::collect_vec(field, r)));
    }
    let system = Mat::from_columns(field, unknowns, constraint_rows).transpose();
    offsets.pop();
    (system, offsets)
}

pub fn hom_over_category<F: Field>(m: &CatModule<F>, n: &CatModule<F>) -> Result<HomSpace<F>> {
    same_base(m, n)?;
    if m.variance() != n.variance() {
        return Err(Error::BaseMismatch("Hom needs modules of the same variance".into()));
    }
    let (system, offsets) = naturality_system(m, n);
    let basis = kernel_basis(&system);
    Ok(HomSpace { dim: basis.cols(), basis, offsets })
}

/// `Hom_K(M, K^v)` as a module of the opposite variance: the value at `X` has basis
/// `m_c^* ⊗ e_a` at index `c·v + a`, and `Φ` acts by `M(Φ)^T ⊗ I_v`.
pub fn hom_into_constant<F: Field>(m: &CatModule<F>, v: usize) -> CatModule<F> {
    let field = m.field().clone();
    let dims = m.dims().iter().map(|d| d * v).collect();
    let inner = m.clone();
    CatModule::from_fn(m.field(), m.base(), m.variance().flip(), dims, move |phi| {
        inner.action(phi).transpose().kron(&Mat::identity(&field, v))
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityReport {
    pub tensor_dim: usize,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub map_rank: usize,
    pub images_natural: bool,
    pub holds: bool,
}

/// `Hom_K(N ⊗_C M, V) ≅ Hom_{C^op}(N, Hom_K(M, V))` for `V = K^v`, through the explicit
/// map `φ ↦ φ̃`, `φ̃_X(n)(m) = φ([n ⊗ m])`.
pub fn check_hom_tensor_duality<F: Field>(n: &CatModule<F>, m: &CatModule<F>, v: usize) -> Result<DualityReport> {
    let field = m.field();
    let t = tensor_over_category(n, m)?;
    let target = hom_into_constant(m, v);
    let (system, offsets) = naturality_system(n, &target);
    let rhs_dim = system.cols() - rank(&system);
    // φ = e_a ∘ π_j ; φ̃ at X has entry ((c, a), b) = π_j(n_b ⊗ m_c)
    let rows_of_projection = t.projection.transpose();
    let mut images = Vec::new();
    for j in 0..t.dim {
        let pj = rows_of_projection.col(j);
        for a in 0..v {
            let mut entries = Vec::new();
            for (idx, val) in pj {
                let idx = *idx as usize;
                let x = t.offsets.partition_point(|&o| o <= idx) - 1;
                let local = idx - t.offsets[x];
                let (b, c) = (local / m.dim(x), local % m.dim(x));
                let rows = m.dim(x) * v;
                let row = c * v + a;
                entries.push(((offsets[x] + b * rows + row) as u32, val.clone()));
            }
            images.push(crate::linalg::mat::collect_vec(field, entries));
        }
    }
    let image_mat = Mat::from_columns(field, system.cols(), images);
    let images_natural = system.mul(&image_mat).is_zero();
    let map_rank = rank(&image_mat);
    let lhs_dim = t.dim * v;
    Ok(DualityReport {
        tensor_dim: t.dim,
        lhs_dim,
        rhs_dim,
        map_rank,
        images_natural,
        holds: images_natural && map_rank == lhs_dim && lhs_dim == rhs_dim,
    })
}
