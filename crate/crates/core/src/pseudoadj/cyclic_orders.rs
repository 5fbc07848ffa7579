use std::sync::Arc;

use serde::Serialize;

use super::pseudo_free::{pseudo_free, pseudo_free_layout};
use crate::catmod::{make_trivial, Action, CatModule, Variance};
use crate::crossed::{cyclic_operator, sigma, CrossedCategory, FiberOrderedMap, Part};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Morph};
use crate::linalg::{cokernel, inverse, Cokernel, Field, Mat, SpVec};

/// The module `b` (over F(as)) or `b̄` (over Γ(as)): the cokernel of
/// `K[Hom(−, [1])] → K[Hom(−, [0])]`, `Φ ↦ (d_0 − d_1) ∘ Φ`, with `d_0 = σ_0` and
/// `d_1 = σ_0 ∘ t_1`.
pub fn build_b_module<F: Field>(field: &F, base: &FinCategory) -> Result<CatModule<F>> {
    Ok(cyclic_orders(field, base)?.module)
}

/// [`build_b_module`] together with the objectwise quotient maps.
#[derive(Clone, Debug)]
pub struct CyclicOrders<F: Field> {
    pub module: CatModule<F>,
    cokernels: Arc<Vec<Cokernel<F>>>,
}

impl<F: Field> CyclicOrders<F> {
    /// The quotient map `K[Hom(X, [0])] → b(X)`.
    pub fn projection(&self, x: usize) -> &Mat<F> {
        &self.cokernels[x].projection
    }
}

pub fn cyclic_orders<F: Field>(field: &F, base: &FinCategory) -> Result<CyclicOrders<F>> {
    if base.n_objects() < 2 {
        return Err(Error::Input("b needs the objects [0] and [1]".into()));
    }
    let find = |f: &FiberOrderedMap| {
        base.find(f.dom(), f.cod(), &f.to_payload())
            .ok_or_else(|| Error::Input(format!("{} has no morphism {:?}", base.name(), f.to_payload())))
    };
    let d0 = find(&sigma(0, 0))?;
    let d1 = find(&sigma(0, 0).compose(&cyclic_operator(1)))?;
    let cokernels: Vec<Cokernel<F>> = (0..base.n_objects())
        .map(|x| {
            let rows = base.hom_len(x, 0);
            let cols = base
                .homs(x, 1)
                .map(|phi| {
                    let (a, b) = (base.compose(d0, phi).idx, base.compose(d1, phi).idx);
                    let mut v = vec![(a, field.one()), (b, field.neg(&field.one()))];
                    v.sort_by_key(|e| e.0);
                    if a == b { Vec::new() } else { v }
                })
                .collect();
            cokernel(&Mat::from_columns(field, rows, cols))
        })
        .collect();
    let dims = cokernels.iter().map(|c| c.dim).collect();
    let cokernels = Arc::new(cokernels);
    let action = QuotientAction { field: field.clone(), base: base.clone(), cokernels: cokernels.clone() };
    let module = CatModule::from_action(field, base, Variance::Contravariant, dims, Arc::new(action));
    Ok(CyclicOrders { module, cokernels })
}

struct QuotientAction<F: Field> {
    field: F,
    base: FinCategory,
    cokernels: Arc<Vec<Cokernel<F>>>,
}

impl<F: Field> Action<F> for QuotientAction<F> {
    fn matrix(&self, phi: Morph) -> Mat<F> {
        let (y, x) = (phi.dom(), phi.cod());
        let target = &self.cokernels[y];
        let cols = self.cokernels[x]
            .representatives
            .iter()
            .map(|&r| {
                let image = self.base.compose(Morph::new(x, 0, r), phi);
                target.projection.col(image.idx as usize).clone()
            })
            .collect();
        Mat::from_columns(&self.field, target.dim, cols)
    }

    fn apply(&self, phi: Morph, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        self.matrix(phi).apply(v)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CyclicOrderReport {
    pub dims_b: Vec<usize>,
    pub dims_free: Vec<usize>,
    /// the comparison map is invertible at every object
    pub invertible: bool,
    /// morphisms on which the comparison map fails to intertwine the actions
    pub failures: Vec<String>,
    pub morphisms_checked: usize,
    pub holds: bool,
}

/// `b ≅ L_{Σ_•}(K)` through `(g : X → A) ↦ [ε_A ∘ g]`, `ε_A : A → [0]` the map with the
/// natural order on its fiber, checked on every morphism of the base.
pub fn check_cyclic_order_representables<F: Field>(field: &F, x: &CrossedCategory) -> Result<CyclicOrderReport> {
    let base = x.base();
    let orders = cyclic_orders(field, base)?;
    let b = &orders.module;
    let k = make_trivial(field, x.part(Part::C), Variance::Contravariant);
    let free = pseudo_free(x, &k)?;
    let layout = pseudo_free_layout(x, &k);
    let mut comparison = Vec::with_capacity(x.n_objects());
    let mut invertible = true;
    for obj in 0..x.n_objects() {
        let cols = layout
            .blocks(obj)
            .map(|(a, g, _)| {
                let eps = base
                    .find(a, 0, &FiberOrderedMap::monotone(&vec![0; a + 1], 0).to_payload())
                    .expect("the natural map to [0]");
                let image = base.compose(eps, x.to_base(Part::D, g));
                orders.projection(obj).col(image.idx as usize).clone()
            })
            .collect();
        let mat = Mat::from_columns(field, b.dim(obj), cols);
        invertible &= mat.rows() == mat.cols() && inverse(&mat).is_some();
        comparison.push(mat);
    }
    let mut failures = Vec::new();
    let mut checked = 0;
    for phi in base.all_morphisms() {
        checked += 1;
        let (y, o) = (phi.dom(), phi.cod());
        if b.action(phi).mul(&comparison[o]) != comparison[y].mul(&free.action(phi)) {
            failures.push(phi.to_string());
        }
    }
    Ok(CyclicOrderReport {
        dims_b: b.dims().to_vec(),
        dims_free: free.dims().to_vec(),
        holds: invertible && failures.is_empty(),
        invertible,
        failures,
        morphisms_checked: checked,
    })
}
