use std::sync::Arc;

use crate::catmod::{Action, CatModule, Variance};
use crate::fincat::{FinCategory, Morph};
use crate::linalg::mat::collect_vec;
use crate::linalg::{Field, Mat, SpVec};

/// The covariant free module `⊕_g K[Hom(A_g, −)]` on generators placed at objects `A_g`.
///
/// The basis of the value at `X` lists, generator by generator, the morphisms
/// `A_g → X` in hom-set order.
#[derive(Clone, Debug)]
pub struct FreeModule {
    base: FinCategory,
    generators: Vec<usize>,
}

impl FreeModule {
    pub fn new(base: &FinCategory, generators: Vec<usize>) -> Self {
        FreeModule { base: base.clone(), generators }
    }

    pub fn base(&self) -> &FinCategory {
        &self.base
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn dim(&self, x: usize) -> usize {
        self.generators.iter().map(|&a| self.base.hom_len(a, x)).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..self.base.n_objects()).map(|x| self.dim(x)).collect()
    }

    /// Offset of generator `g`'s block in the value at `x`.
    pub fn offset(&self, g: usize, x: usize) -> usize {
        self.generators[..g].iter().map(|&a| self.base.hom_len(a, x)).sum()
    }

    /// Offsets of every generator block at `x`, plus the total as last entry.
    pub fn offsets(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.generators.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &a in &self.generators {
            acc += self.base.hom_len(a, x);
            out.push(acc);
        }
        out
    }

    /// Basis element `(g, h)` for `h : A_g → x`.
    pub fn locate(&self, offsets: &[usize], index: usize) -> (usize, usize) {
        let g = offsets.partition_point(|&o| o <= index) - 1;
        (g, index - offsets[g])
    }

    /// Image of a vector at `dom(h)` under `h`.
    pub fn act<F: Field>(&self, field: &F, h: Morph, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        let (src, dst) = (self.offsets(h.dom()), self.offsets(h.cod()));
        self.act_with(field, h, v, &src, &dst)
    }

    pub fn act_with<F: Field>(
        &self,
        field: &F,
        h: Morph,
        v: &SpVec<F::Elem>,
        src: &[usize],
        dst: &[usize],
    ) -> SpVec<F::Elem> {
        let entries = v
            .iter()
            .map(|(i, c)| {
                let (g, k) = self.locate(src, *i as usize);
                let basis = Morph::new(self.generators[g], h.dom(), k);
                let image = self.base.compose(h, basis);
                ((dst[g] + image.idx as usize) as u32, c.clone())
            })
            .collect();
        collect_vec(field, entries)
    }

    /// The vector at `A_g` given by the identity of generator `g`.
    pub fn generator_vector<F: Field>(&self, field: &F, g: usize) -> SpVec<F::Elem> {
        let a = self.generators[g];
        let id = self.base.identity(a);
        vec![((self.offset(g, a) + id.idx as usize) as u32, field.one())]
    }

    /// The same free module as a [`CatModule`].
    pub fn to_module<F: Field>(&self, field: &F) -> CatModule<F> {
        let action = FreeAction { field: field.clone(), free: self.clone() };
        CatModule::from_action(field, &self.base, Variance::Covariant, self.dims(), Arc::new(action))
    }
}

struct FreeAction<F: Field> {
    field: F,
    free: FreeModule,
}

impl<F: Field> Action<F> for FreeAction<F> {
    fn matrix(&self, m: Morph) -> Mat<F> {
        let (src, dst) = (self.free.offsets(m.dom()), self.free.offsets(m.cod()));
        let one = self.field.one();
        let cols = (0..*src.last().unwrap())
            .map(|i| self.free.act_with(&self.field, m, &vec![(i as u32, one.clone())], &src, &dst))
            .collect();
        Mat::from_columns(&self.field, *dst.last().unwrap(), cols)
    }

    fn apply(&self, m: Morph, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        self.free.act(&self.field, m, v)
    }
}
