use serde::Serialize;

use super::pseudo_free::{forget_to_c, pseudo_free, pseudo_free_layout, pseudo_free_map};
use crate::catmod::{dual, CatModule};
use crate::crossed::CrossedCategory;
use crate::error::Result;
use crate::linalg::mat::collect_vec;
use crate::linalg::{rank, Field, Mat, SpVec};
use crate::tor::{hom_over_category, tensor_over_category, TensorProduct};

/// The explicit isomorphism `L_D(M) ⊗_B N → M ⊗_C O(N)`, `(m ⊗ g) ⊗ n ↦ m ⊗ g·n`.
#[derive(Clone, Debug)]
pub struct PseudoAdjunctionIso<F: Field> {
    pub left: TensorProduct<F>,
    pub right: TensorProduct<F>,
    /// matrix on the tensor bases
    pub iso: Mat<F>,
    pub report: IsoReport,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IsoReport {
    pub left_dim: usize,
    pub right_dim: usize,
    /// the map on representatives is compatible with the relations
    pub well_defined: bool,
    pub invertible: bool,
}

impl IsoReport {
    pub fn holds(&self) -> bool {
        self.well_defined && self.invertible
    }
}

/// The map on direct sums `⊕_X L_D(M)(X) ⊗ N(X) → ⊕_A M(A) ⊗ N(A)`, one column per
/// requested coordinate of the source.
fn sum_map_columns<F: Field>(
    x: &CrossedCategory,
    m: &CatModule<F>,
    n: &CatModule<F>,
    left: &TensorProduct<F>,
    right: &TensorProduct<F>,
    coords: impl Iterator<Item = usize>,
) -> Vec<SpVec<F::Elem>> {
    let field = m.field();
    let layout = pseudo_free_layout(x, m);
    coords
        .map(|k| {
            let obj = left.offsets.partition_point(|&o| o <= k) - 1;
            let local = k - left.offsets[obj];
            let (l_index, j) = (local / n.dim(obj), local % n.dim(obj));
            let (a, g, off) = layout
                .blocks(obj)
                .filter(|&(a, _, _)| m.dim(a) > 0)
                .take_while(|&(_, _, off)| off <= l_index)
                .last()
                .expect("coordinate inside a block");
            let i = l_index - off;
            let g_base = x.to_base(crate::crossed::Part::D, g);
            let image = n.apply(g_base, &vec![(j as u32, field.one())]);
            let entries = image
                .into_iter()
                .map(|(r, v)| ((right.offsets[a] + i * n.dim(a) + r as usize) as u32, v))
                .collect();
            collect_vec(field, entries)
        })
        .collect()
}

pub fn pseudo_adjunction_iso<F: Field>(
    x: &CrossedCategory,
    m: &CatModule<F>,
    n: &CatModule<F>,
) -> Result<PseudoAdjunctionIso<F>> {
    let lm = pseudo_free(x, m)?;
    let on = forget_to_c(x, n)?;
    let left = tensor_over_category(&lm, n)?;
    let right = tensor_over_category(m, &on)?;
    let (left_total, right_total) = (left.projection.cols(), right.projection.cols());
    let field = m.field();
    let all = sum_map_columns(x, m, n, &left, &right, 0..left_total);
    let sum_map = Mat::from_columns(field, right_total, all);
    let through_right = right.projection.mul(&sum_map);
    let iso = through_right.select_columns(&left.representatives);
    let well_defined = iso.mul(&left.projection) == through_right;
    let invertible = left.dim == right.dim && rank(&iso) == left.dim;
    let report = IsoReport { left_dim: left.dim, right_dim: right.dim, well_defined, invertible };
    Ok(PseudoAdjunctionIso { left, right, iso, report })
}

/// Induced map `T ⊗ T' → S ⊗ S'` on tensor products from objectwise components, given as
/// `kron(α_X, β_X)` on the direct sums.
fn induced_on_tensor<F: Field>(
    field: &F,
    source: &TensorProduct<F>,
    target: &TensorProduct<F>,
    alpha: &[Mat<F>],
    beta: &[Mat<F>],
) -> Mat<F> {
    let objects = alpha.len();
    let blocks: Vec<Mat<F>> = (0..objects).map(|o| alpha[o].kron(&beta[o])).collect();
    let sum = Mat::block_diag(field, &blocks);
    target.projection.mul(&sum).select_columns(&source.representatives)
}

/// The naturality square of the iso for maps `α : M → M'` of `C`-modules and
/// `β : N → N'` of `B`-modules, given by their components.
pub fn iso_is_natural<F: Field>(
    x: &CrossedCategory,
    (m, m2, alpha): (&CatModule<F>, &CatModule<F>, &[Mat<F>]),
    (n, n2, beta): (&CatModule<F>, &CatModule<F>, &[Mat<F>]),
) -> Result<bool> {
    let field = m.field();
    let first = pseudo_adjunction_iso(x, m, n)?;
    let second = pseudo_adjunction_iso(x, m2, n2)?;
    let l_alpha = pseudo_free_map(x, m, m2, alpha);
    let left_map = induced_on_tensor(field, &first.left, &second.left, &l_alpha, beta);
    let right_map = induced_on_tensor(field, &first.right, &second.right, alpha, beta);
    Ok(second.iso.mul(&left_map) == right_map.mul(&first.iso))
}

/// `R̄ = ∗ ∘ O ∘ ∗` on a contravariant base module.
pub fn overline_right<F: Field>(x: &CrossedCategory, m: &CatModule<F>) -> Result<CatModule<F>> {
    Ok(dual(&forget_to_c(x, &dual(m))?))
}

/// Dimensions along the chain
/// `Hom_{B^op}(L(N), M) ≅ (L(N) ⊗_B M^*)^* ≅ (N ⊗_C O(M^*))^* ≅ Hom_{C^op}(N, R̄(M))`.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub hom_left: usize,
    pub tensor_left: usize,
    pub tensor_right: usize,
    pub hom_right: usize,
    pub holds: bool,
}

pub fn adjunction_check<F: Field>(x: &CrossedCategory, n: &CatModule<F>, m: &CatModule<F>) -> Result<AdjunctionReport> {
    let ln = pseudo_free(x, n)?;
    let m_dual = dual(m);
    let hom_left = hom_over_category(&ln, m)?.dim;
    let tensor_left = tensor_over_category(&ln, &m_dual)?.dim;
    let tensor_right = tensor_over_category(n, &forget_to_c(x, &m_dual)?)?.dim;
    let hom_right = hom_over_category(n, &overline_right(x, m)?)?.dim;
    let holds = hom_left == tensor_left && tensor_left == tensor_right && tensor_right == hom_right;
    Ok(AdjunctionReport { hom_left, tensor_left, tensor_right, hom_right, holds })
}
