use std::sync::Arc;

use crate::catmod::{Action, CatModule, Variance};
use crate::crossed::{CrossedCategory, Part};
use crate::error::{Error, Result};
use crate::fincat::Morph;
use crate::linalg::{Field, Mat, SpVec};

/// Basis bookkeeping of `L_D(M)(X) = ⊕_A M(A) ⊗ K[Hom_D(X, A)]`: blocks `(A, g)` in order
/// of `A` then `g`, each holding a copy of `M(A)`.
#[derive(Clone, Debug)]
pub struct PseudoFreeLayout {
    /// per object `X`: `(A, index of g in Hom_D(X, A), offset)`
    blocks: Vec<Vec<(usize, usize, usize)>>,
    dims: Vec<usize>,
}

impl PseudoFreeLayout {
    fn new<F: Field>(x: &CrossedCategory, m: &CatModule<F>) -> Self {
        let d = x.part(Part::D);
        let n = x.n_objects();
        let mut blocks = Vec::with_capacity(n);
        let mut dims = Vec::with_capacity(n);
        for obj in 0..n {
            let mut list = Vec::new();
            let mut offset = 0;
            for a in 0..n {
                for g in 0..d.hom_len(obj, a) {
                    list.push((a, g, offset));
                    offset += m.dim(a);
                }
            }
            blocks.push(list);
            dims.push(offset);
        }
        PseudoFreeLayout { blocks, dims }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Blocks at `X` as `(A, g : X → A in D, offset)`.
    pub fn blocks(&self, x: usize) -> impl Iterator<Item = (usize, Morph, usize)> + '_ {
        self.blocks[x].iter().map(move |&(a, g, off)| (a, Morph::new(x, a, g), off))
    }

    /// Offset of block `(A, g)` at `X`, where `g` is a morphism of `D`.
    pub fn offset(&self, g: Morph) -> usize {
        let list = &self.blocks[g.dom()];
        let pos = list.partition_point(|&(a, i, _)| (a, i) < (g.cod(), g.idx as usize));
        list[pos].2
    }
}

struct PseudoFreeAction<F: Field> {
    field: F,
    crossed: CrossedCategory,
    module: CatModule<F>,
    layout: Arc<PseudoFreeLayout>,
}

impl<F: Field> PseudoFreeAction<F> {
    /// `(m ⊗ g)·Φ = M(Ψ)m ⊗ f` where `g ∘ Φ = Ψ ∘ f`.
    fn image_of_block(&self, phi: Morph, g: Morph) -> (Mat<F>, usize) {
        let g_base = self.crossed.to_base(Part::D, g);
        let composite = self.crossed.base().compose(g_base, phi);
        let (psi, f) = self.crossed.factorize(composite);
        let psi_c = self.crossed.from_base(Part::C, psi).expect("factor lies in C");
        let f_d = self.crossed.from_base(Part::D, f).expect("factor lies in D");
        (self.module.action(psi_c), self.layout.offset(f_d))
    }
}

impl<F: Field> Action<F> for PseudoFreeAction<F> {
    fn matrix(&self, phi: Morph) -> Mat<F> {
        let (y, x) = (phi.dom(), phi.cod());
        let mut cols = Vec::with_capacity(self.layout.dims[x]);
        for (a, g, _) in self.layout.blocks(x) {
            let (mat, offset) = self.image_of_block(phi, g);
            for j in 0..self.module.dim(a) {
                cols.push(mat.col(j).iter().map(|(r, v)| (r + offset as u32, v.clone())).collect());
            }
        }
        Mat::from_columns(&self.field, self.layout.dims[y], cols)
    }

    fn apply(&self, phi: Morph, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        self.matrix(phi).apply(v)
    }
}

/// The pseudo-free module `L_D(M)` of a contravariant module over the `C` part.
pub fn pseudo_free<F: Field>(x: &CrossedCategory, m: &CatModule<F>) -> Result<CatModule<F>> {
    if !m.base().same_as(x.part(Part::C)) {
        return Err(Error::BaseMismatch(format!("module over {}, expected {}", m.base().name(), x.part(Part::C).name())));
    }
    if m.variance() != Variance::Contravariant {
        return Err(Error::BaseMismatch("L_D takes a contravariant module".into()));
    }
    let layout = Arc::new(PseudoFreeLayout::new(x, m));
    let action = PseudoFreeAction { field: m.field().clone(), crossed: x.clone(), module: m.clone(), layout: layout.clone() };
    Ok(CatModule::from_action(m.field(), x.base(), Variance::Contravariant, layout.dims.clone(), Arc::new(action)))
}

/// Block layout of [`pseudo_free`] for the same inputs.
pub fn pseudo_free_layout<F: Field>(x: &CrossedCategory, m: &CatModule<F>) -> PseudoFreeLayout {
    PseudoFreeLayout::new(x, m)
}

/// `L_D(α)`: the block-diagonal map induced by a map of `C`-modules given by its components.
pub fn pseudo_free_map<F: Field>(
    x: &CrossedCategory,
    source: &CatModule<F>,
    target: &CatModule<F>,
    components: &[Mat<F>],
) -> Vec<Mat<F>> {
    let field = source.field();
    let (ls, lt) = (PseudoFreeLayout::new(x, source), PseudoFreeLayout::new(x, target));
    (0..x.n_objects())
        .map(|obj| {
            let mut cols = Vec::with_capacity(ls.dims[obj]);
            for ((a, _, _), (_, _, t_off)) in ls.blocks(obj).zip(lt.blocks(obj)) {
                for j in 0..source.dim(a) {
                    cols.push(components[a].col(j).iter().map(|(r, v)| (r + t_off as u32, v.clone())).collect());
                }
            }
            Mat::from_columns(field, lt.dims[obj], cols)
        })
        .collect()
}

/// The forgetful functor: a module over the base seen over the `C` part.
pub fn forget_to_c<F: Field>(x: &CrossedCategory, n: &CatModule<F>) -> Result<CatModule<F>> {
    if !n.base().same_as(x.base()) {
        return Err(Error::BaseMismatch(format!("module over {}, expected {}", n.base().name(), x.base().name())));
    }
    let (inner, crossed) = (n.clone(), x.clone());
    Ok(CatModule::from_fn(n.field(), x.part(Part::C), n.variance(), n.dims().to_vec(), move |m| {
        inner.action(crossed.to_base(Part::C, m))
    }))
}
