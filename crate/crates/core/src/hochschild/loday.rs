use super::algebra::{AlgebraData, BimoduleData};
use crate::catmod::{CatModule, Variance};
use crate::crossed::{cyclic_operator, delta, family_category, sigma, FiberOrderedMap, Family};
use crate::error::{Error, Result};
use crate::fincat::{build_delta_truncated, delta_delta, delta_sigma, FinCategory, Morph};
use crate::linalg::mat::collect_vec;
use crate::linalg::{ChainComplex, Field, Mat, SpVec};

/// Index arithmetic for `M ⊗ A^{⊗n}`: factor 0 has dimension `dim M`, the others `dim A`,
/// and the last factor varies fastest.
#[derive(Clone, Copy, Debug)]
struct TensorShape {
    head: usize,
    tail: usize,
}

impl TensorShape {
    fn dim(&self, n: usize) -> usize {
        self.head * self.tail.pow(n as u32)
    }

    fn digits(&self, n: usize, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; n + 1];
        for slot in out[1..].iter_mut().rev() {
            *slot = index % self.tail;
            index /= self.tail;
        }
        out[0] = index;
        out
    }
}

/// The tensor product of the given factor vectors as a vector of `M ⊗ A^{⊗(k−1)}`.
fn kron_factors<F: Field>(field: &F, shape: TensorShape, factors: &[SpVec<F::Elem>]) -> SpVec<F::Elem> {
    let mut acc: SpVec<F::Elem> = factors[0].clone();
    for f in &factors[1..] {
        let mut next = Vec::with_capacity(acc.len() * f.len());
        for (i, a) in &acc {
            for (j, b) in f {
                next.push((i * shape.tail as u32 + j, field.mul(a, b)));
            }
        }
        acc = next;
    }
    collect_vec(field, acc)
}

fn combine<F: Field>(field: &F, mats: impl Fn(usize) -> Mat<F>, u: &SpVec<F::Elem>, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
    let mut entries = Vec::new();
    for (i, c) in u {
        for (r, x) in mats(*i as usize).apply(v) {
            entries.push((r, field.mul(c, &x)));
        }
    }
    collect_vec(field, entries)
}

/// The matrix `M ⊗ A^{⊗n} → M ⊗ A^{⊗k}` sending each basis tensor through `image`.
fn tensor_matrix<F: Field>(
    field: &F,
    shape: TensorShape,
    n: usize,
    k: usize,
    image: impl Fn(&[usize]) -> Vec<SpVec<F::Elem>>,
) -> Mat<F> {
    let cols = (0..shape.dim(n)).map(|idx| kron_factors(field, shape, &image(&shape.digits(n, idx)))).collect();
    Mat::from_columns(field, shape.dim(k), cols)
}

/// Simplicial structure maps of `L(A, M)`.
struct Simplicial<'a, F: Field> {
    a: &'a AlgebraData<F>,
    m: &'a BimoduleData<F>,
    shape: TensorShape,
}

impl<F: Field> Simplicial<'_, F> {
    fn new<'a>(a: &'a AlgebraData<F>, m: &'a BimoduleData<F>) -> Simplicial<'a, F> {
        Simplicial { a, m, shape: TensorShape { head: m.dim(), tail: a.dim() } }
    }

    fn face(&self, n: usize, i: usize) -> Mat<F> {
        let field = self.a.field();
        tensor_matrix(field, self.shape, n, n - 1, |x| {
            let e = |k: usize| vec![(x[k] as u32, field.one())];
            let mut out = Vec::with_capacity(n);
            if i == 0 {
                out.push(self.m.right(x[1]).apply(&e(0)));
                out.extend((2..=n).map(e));
            } else if i < n {
                out.extend((0..i).map(e));
                out.push(self.a.mul(&e(i), &e(i + 1)));
                out.extend((i + 2..=n).map(e));
            } else {
                out.push(self.m.left(x[n]).apply(&e(0)));
                out.extend((1..n).map(e));
            }
            out
        })
    }

    fn degeneracy(&self, n: usize, i: usize) -> Mat<F> {
        let field = self.a.field();
        tensor_matrix(field, self.shape, n, n + 1, |x| {
            let mut out: Vec<SpVec<F::Elem>> = x.iter().map(|&d| vec![(d as u32, field.one())]).collect();
            out.insert(i + 1, self.a.unit().clone());
            out
        })
    }

    /// `(a_0, …, a_n) ↦ (a_1, …, a_n, a_0)`, only when `M = A`.
    fn rotate_forward(&self, n: usize) -> Mat<F> {
        let field = self.a.field();
        tensor_matrix(field, self.shape, n, n, |x| {
            (0..=n).map(|k| vec![(x[(k + 1) % (n + 1)] as u32, field.one())]).collect()
        })
    }
}

/// `L(A, M)` as a covariant module over the given `Δ^op_{≤N}` (the opposite of a truncated
/// simplex category), built from faces and degeneracies and verified functorial.
pub fn loday_functor_over<F: Field>(a: &AlgebraData<F>, m: &BimoduleData<F>, dop: &FinCategory) -> Result<CatModule<F>> {
    let simplex = dop.opposite_of().ok_or_else(|| Error::Input("expected the opposite of Δ".into()))?.clone();
    let top = dop.n_objects() - 1;
    let s = Simplicial::new(a, m);
    let mut gens = Vec::new();
    for n in 1..=top {
        for i in 0..=n {
            gens.push((crate::fincat::FinCategory::op_morph(delta_delta(&simplex, n, i)), s.face(n, i)));
        }
    }
    for n in 0..top {
        for i in 0..=n {
            gens.push((crate::fincat::FinCategory::op_morph(delta_sigma(&simplex, n, i)), s.degeneracy(n, i)));
        }
    }
    let dims = (0..=top).map(|n| s.shape.dim(n)).collect();
    CatModule::from_generators(a.field(), dop, Variance::Covariant, dims, &gens)
}

/// `L(A, M) : Δ^op_{≤N} → K-Mod`, `[n] ↦ M ⊗ A^{⊗n}`.
pub fn loday_functor<F: Field>(a: &AlgebraData<F>, m: &BimoduleData<F>, top: usize) -> Result<CatModule<F>> {
    loday_functor_over(a, m, &build_delta_truncated(top).opposite())
}

/// `L(A, A)` as a covariant module over the given `ΔC^op_{≤N}`. Faces and degeneracies act
/// as on `L(A, A)`, and the cyclic generator `t_n⁻¹` of `ΔC^op` acts by
/// `t_n : a_0 ⊗ … ⊗ a_n ↦ a_n ⊗ a_0 ⊗ … ⊗ a_{n−1}`.
pub fn cyclic_structure_over<F: Field>(a: &AlgebraData<F>, dcop: &FinCategory) -> Result<CatModule<F>> {
    let regular = a.regular_bimodule();
    let s = Simplicial::new(a, &regular);
    let top = dcop.n_objects() - 1;
    let mut gens = Vec::new();
    for g in dcop.generating_morphisms() {
        let p = dcop.payload(g);
        // g : [n] → [k] in ΔC^op is the opposite of a map [k] → [n] in ΔC
        let (n, k) = (g.dom(), g.cod());
        let is = |f: &FiberOrderedMap| f.dom() == k && f.cod() == n && &f.to_payload() == p;
        let mat = if k + 1 == n && (0..=n).any(|i| is(&delta(n, i))) {
            s.face(n, (0..=n).find(|&i| is(&delta(n, i))).unwrap())
        } else if n + 1 == k && (0..=n).any(|i| is(&sigma(n, i))) {
            s.degeneracy(n, (0..=n).find(|&i| is(&sigma(n, i))).unwrap())
        } else if n == k && is(&cyclic_operator(n)) {
            s.rotate_forward(n)
        } else {
            return Err(Error::Input(format!("unexpected generator {g} of {}", dcop.name())));
        };
        gens.push((g, mat));
    }
    let dims = (0..=top).map(|n| s.shape.dim(n)).collect();
    CatModule::from_generators(a.field(), dcop, Variance::Covariant, dims, &gens)
}

pub fn cyclic_structure<F: Field>(a: &AlgebraData<F>, top: usize) -> Result<CatModule<F>> {
    cyclic_structure_over(a, &crate::crossed::delta_c_category(top).opposite())
}

/// Target of [`factor_through`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorTarget {
    GammaAs,
    FAs,
}

/// `L(A, M)` over Γ(as), or `L(A, A)` over F(as): a fiber-ordered map `f : [n] → [k]` sends
/// `x_0 ⊗ … ⊗ x_n` to the tensor whose `j`-th factor is the product of the `x_i` with
/// `f(i) = j` in the order of the fiber (the unit for an empty fiber). Over Γ(as) the fiber of
/// `0` contains `0`; the factors before it act on `x_0 ∈ M` from the left, those after it
/// from the right.
pub fn factor_through_over<F: Field>(
    a: &AlgebraData<F>,
    m: &BimoduleData<F>,
    base: &FinCategory,
    target: FactorTarget,
) -> Result<CatModule<F>> {
    let field = a.field().clone();
    let shape = TensorShape { head: m.dim(), tail: a.dim() };
    if target == FactorTarget::FAs && m.dim() != a.dim() {
        return Err(Error::BimoduleNotAlgebra);
    }
    if target == FactorTarget::FAs {
        let regular = a.regular_bimodule();
        let same = (0..a.dim()).all(|i| regular.left(i) == m.left(i) && regular.right(i) == m.right(i));
        if !same {
            return Err(Error::BimoduleNotAlgebra);
        }
    }
    let dims = (0..base.n_objects()).map(|n| shape.dim(n)).collect();
    let (a, m, cat) = (a.clone(), m.clone(), base.clone());
    Ok(CatModule::from_fn(&field.clone(), base, Variance::Covariant, dims, move |phi: Morph| {
        let f = FiberOrderedMap::from_payload(cat.payload(phi), phi.cod());
        let product = |fiber: &[u16], x: &[usize]| -> SpVec<F::Elem> {
            fiber.iter().fold(a.unit().clone(), |acc, &i| a.mul(&acc, &a.basis(x[i as usize])))
        };
        tensor_matrix(&field, shape, phi.dom(), phi.cod(), |x| {
            (0..=phi.cod())
                .map(|j| {
                    let fiber = f.fiber(j);
                    match target {
                        FactorTarget::GammaAs if j == 0 => {
                            let pos = fiber.iter().position(|&i| i == 0).expect("pointed map");
                            let (before, after) = (&fiber[..pos], &fiber[pos + 1..]);
                            let start = vec![(x[0] as u32, field.one())];
                            let right = combine(&field, |i| m.right(i).clone(), &product(after, x), &start);
                            combine(&field, |i| m.left(i).clone(), &product(before, x), &right)
                        }
                        _ => product(fiber, x),
                    }
                })
                .collect()
        })
    }))
}

pub fn factor_through<F: Field>(
    a: &AlgebraData<F>,
    m: &BimoduleData<F>,
    top: usize,
    target: FactorTarget,
) -> Result<CatModule<F>> {
    let family = match target {
        FactorTarget::GammaAs => Family::Pointed,
        FactorTarget::FAs => Family::All,
    };
    factor_through_over(a, m, &family_category(family, top), target)
}

/// Homology of the Moore complex `Σ (−1)^i d_i` of a covariant module over `Δ^op_{≤N}`,
/// in degrees `0..=max_degree` (requires `max_degree < N`).
pub fn moore_homology<F: Field>(module: &CatModule<F>, max_degree: usize) -> Result<Vec<usize>> {
    let dop = module.base();
    let simplex = dop.opposite_of().ok_or_else(|| Error::Input("expected a module over Δ^op".into()))?;
    let top = dop.n_objects() - 1;
    if max_degree >= top {
        return Err(Error::MarginViolation { max_degree, truncation: top });
    }
    let field = module.field();
    let diffs = (1..=max_degree + 1)
        .map(|n| {
            (0..=n).fold(Mat::zeros(field, module.dim(n - 1), module.dim(n)), |acc, i| {
                let face = module.action(crate::fincat::FinCategory::op_morph(delta_delta(simplex, n, i)));
                if i % 2 == 0 { acc.add(&face) } else { acc.sub(&face) }
            })
        })
        .collect();
    let spaces = (0..=max_degree + 1).map(|n| module.dim(n)).collect();
    ChainComplex::new(field, spaces, diffs)?.homology_dims(0..=max_degree)
}
