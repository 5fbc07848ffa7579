use serde::{Deserialize, Serialize};

use super::free::FreeModule;
use crate::catmod::{CatModule, ModuleMap, Variance};
use crate::error::{Error, Result};
use crate::fincat::FinCategory;
use crate::linalg::mat::axpy;
use crate::linalg::{kernel_basis, rank, Echelon, Field, Mat, SpVec};

/// How generators of each free term are chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverStrategy {
    /// A basis of the module to be covered at every object.
    Canonical,
    /// Objects in increasing order; new generators only where the images of the existing
    /// ones do not already span.
    #[default]
    Greedy,
}

/// Endomorphism monoids up to this size are swept when a generator is added, which keeps
/// greedy covers small without enumerating huge monoids.
const ORBIT_SWEEP_LIMIT: usize = 50_000;

/// One free term `Q_k` with the images of its generators in `Q_{k−1}` (in the resolved
/// module for `k = 0`).
#[derive(Clone, Debug)]
pub struct Level<F: Field> {
    pub free: FreeModule,
    pub images: Vec<SpVec<F::Elem>>,
}

/// A free resolution `… → Q_1 → Q_0 → M → 0` of a covariant module, exact at every object.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    field: F,
    module: CatModule<F>,
    levels: Vec<Level<F>>,
    /// dimension at each object of the kernel of the last differential
    kernel_dims: Vec<usize>,
}

/// Space being covered: the module itself or the kernel of the previous differential.
enum Target<'a, F: Field> {
    Module(&'a CatModule<F>),
    Kernel { previous: &'a Level<F>, before: Option<&'a Level<F>>, module: &'a CatModule<F> },
}

impl<F: Field> Target<'_, F> {
    fn ambient_dim(&self, x: usize) -> usize {
        match self {
            Target::Module(m) => m.dim(x),
            Target::Kernel { previous, .. } => previous.free.dim(x),
        }
    }

    fn act(&self, field: &F, h: crate::fincat::Morph, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        match self {
            Target::Module(m) => m.apply(h, v),
            Target::Kernel { previous, .. } => previous.free.act(field, h, v),
        }
    }

    fn basis(&self, field: &F, x: usize) -> Vec<SpVec<F::Elem>> {
        match self {
            Target::Module(m) => (0..m.dim(x)).map(|i| vec![(i as u32, field.one())]).collect(),
            Target::Kernel { previous, before, module } => {
                let d = differential_at(field, previous, *before, module, x);
                kernel_basis(&d).into_columns()
            }
        }
    }
}

/// Matrix at `x` of the map `Q_k → Q_{k−1}` (or `Q_0 → M`) defined by `level`.
fn differential_at<F: Field>(
    field: &F,
    level: &Level<F>,
    before: Option<&Level<F>>,
    module: &CatModule<F>,
    x: usize,
) -> Mat<F> {
    let free = &level.free;
    let base = free.base();
    let mut cols = Vec::with_capacity(free.dim(x));
    let (rows, dst) = match before {
        Some(b) => (b.free.dim(x), Some(b.free.offsets(x))),
        None => (module.dim(x), None),
    };
    for (g, &a) in free.generators().iter().enumerate() {
        let src = before.map(|b| b.free.offsets(a));
        for h in base.homs(a, x) {
            let v = &level.images[g];
            cols.push(match (before, &src, &dst) {
                (Some(b), Some(s), Some(d)) => b.free.act_with(field, h, v, s, d),
                _ => module.apply(h, v),
            });
        }
    }
    Mat::from_columns(field, rows, cols)
}

fn cover<F: Field>(
    field: &F,
    base: &FinCategory,
    target: &Target<'_, F>,
    needed: &[usize],
    strategy: CoverStrategy,
) -> Vec<(usize, SpVec<F::Elem>)> {
    let mut gens: Vec<(usize, SpVec<F::Elem>)> = Vec::new();
    for x in 0..base.n_objects() {
        if needed[x] == 0 {
            continue;
        }
        if strategy == CoverStrategy::Canonical {
            gens.extend(target.basis(field, x).into_iter().map(|b| (x, b)));
            continue;
        }
        let mut span = Echelon::new(field, target.ambient_dim(x));
        'sweep: for (a, v) in &gens {
            for h in base.homs(*a, x) {
                span.insert(target.act(field, h, v));
                if span.rank() == needed[x] {
                    break 'sweep;
                }
            }
        }
        if span.rank() == needed[x] {
            continue;
        }
        let sweep_orbit = base.hom_len(x, x) <= ORBIT_SWEEP_LIMIT;
        for b in target.basis(field, x) {
            if span.rank() == needed[x] {
                break;
            }
            if span.insert(b.clone()) {
                if sweep_orbit {
                    for h in base.homs(x, x) {
                        span.insert(target.act(field, h, &b));
                        if span.rank() == needed[x] {
                            break;
                        }
                    }
                }
                gens.push((x, b));
            }
        }
    }
    gens
}

impl<F: Field> Resolution<F> {
    /// Resolves a covariant module by free modules `Q_0, …, Q_length`. A contravariant module
    /// is resolved as a covariant module over the opposite category.
    pub fn new(field: &F, module: &CatModule<F>, length: usize, strategy: CoverStrategy) -> Self {
        let module = match module.variance() {
            Variance::Covariant => module.clone(),
            Variance::Contravariant => module.as_opposite(),
        };
        let base = module.base().clone();
        let mut levels: Vec<Level<F>> = Vec::new();
        let mut needed = module.dims().to_vec();
        for k in 0..=length {
            let target = match k {
                0 => Target::Module(&module),
                _ => Target::Kernel {
                    previous: &levels[k - 1],
                    before: if k >= 2 { Some(&levels[k - 2]) } else { None },
                    module: &module,
                },
            };
            let gens = cover(field, &base, &target, &needed, strategy);
            let free = FreeModule::new(&base, gens.iter().map(|(a, _)| *a).collect());
            needed = (0..base.n_objects()).map(|x| free.dim(x) - needed[x]).collect();
            levels.push(Level { free, images: gens.into_iter().map(|(_, v)| v).collect() });
        }
        Resolution { field: field.clone(), module, levels, kernel_dims: needed }
    }

    pub fn base(&self) -> &FinCategory {
        self.module.base()
    }

    pub fn module(&self) -> &CatModule<F> {
        &self.module
    }

    pub fn levels(&self) -> &[Level<F>] {
        &self.levels
    }

    pub fn length(&self) -> usize {
        self.levels.len() - 1
    }

    /// Generator objects of each term.
    pub fn generator_objects(&self) -> Vec<Vec<usize>> {
        self.levels.iter().map(|l| l.free.generators().to_vec()).collect()
    }

    /// Dimensions of the kernel of the last differential.
    pub fn kernel_dims(&self) -> &[usize] {
        &self.kernel_dims
    }

    /// Matrix at `x` of `d_k : Q_k → Q_{k−1}`, or of the augmentation `Q_0 → M` for `k = 0`.
    pub fn differential_at(&self, k: usize, x: usize) -> Mat<F> {
        let before = if k >= 1 { Some(&self.levels[k - 1]) } else { None };
        differential_at(&self.field, &self.levels[k], before, &self.module, x)
    }

    /// `d_{k−1} ∘ d_k = 0` (with `d_{−1}` the augmentation), checked on generators, which
    /// suffices because both sides are module maps out of a free module.
    pub fn check_square_zero(&self) -> Result<()> {
        for k in 1..self.levels.len() {
            let prev = &self.levels[k - 1];
            let before = if k >= 2 { Some(&self.levels[k - 2]) } else { None };
            for (g, &a) in self.levels[k].free.generators().iter().enumerate() {
                let image = &self.levels[k].images[g];
                let offsets = prev.free.offsets(a);
                let mut acc: SpVec<F::Elem> = Vec::new();
                for (i, c) in image {
                    let (g2, idx) = prev.free.locate(&offsets, *i as usize);
                    let h = crate::fincat::Morph::new(prev.free.generators()[g2], a, idx);
                    let pushed = match before {
                        Some(b) => b.free.act(&self.field, h, &prev.images[g2]),
                        None => self.module.apply(h, &prev.images[g2]),
                    };
                    acc = axpy(&self.field, &acc, c, &pushed);
                }
                if !acc.is_empty() {
                    return Err(Error::NotAComplex { degree: k - 1 });
                }
            }
        }
        Ok(())
    }

    /// Exactness at every object by explicit ranks: the augmentation is onto and
    /// `rank d_k + rank d_{k+1} = dim Q_k`. Expensive on large categories.
    pub fn check_exact(&self) -> Result<()> {
        self.check_square_zero()?;
        for x in 0..self.base().n_objects() {
            let mut previous_rank = 0;
            for k in 0..self.levels.len() {
                let r = rank(&self.differential_at(k, x));
                let expected =
                    if k == 0 { self.module.dim(x) } else { self.levels[k - 1].free.dim(x) - previous_rank };
                if r != expected {
                    return Err(Error::RelationViolation(format!("resolution not exact at degree {k}, object [{x}]")));
                }
                previous_rank = r;
            }
        }
        Ok(())
    }
}

/// The canonical cover `⊕_A K[Hom(A, −)] ⊗ M(A) → M` (covariant) or
/// `⊕_A K[Hom(−, A)] ⊗ M(A) → M` (contravariant), as a module map.
pub fn free_cover<F: Field>(field: &F, m: &CatModule<F>) -> Result<(CatModule<F>, ModuleMap<F>)> {
    let res = Resolution::new(field, m, 0, CoverStrategy::Canonical);
    let free = res.levels[0].free.to_module(field);
    let comps: Vec<Mat<F>> = (0..m.base().n_objects()).map(|x| res.differential_at(0, x)).collect();
    let free = match m.variance() {
        Variance::Covariant => free,
        Variance::Contravariant => free.as_opposite(),
    };
    let epi = ModuleMap::new(&free, m, comps)?;
    Ok((free, epi))
}
