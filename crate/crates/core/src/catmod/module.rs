use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Functor, Morph};
use crate::linalg::{Field, Mat, SpVec};

/// Whether a module is a functor `B → Vect` or `B^op → Vect`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variance {
    #[serde(rename = "co")]
    Covariant,
    #[serde(rename = "contra")]
    Contravariant,
}

impl Variance {
    pub fn flip(self) -> Self {
        match self {
            Variance::Covariant => Variance::Contravariant,
            Variance::Contravariant => Variance::Covariant,
        }
    }
}

/// Lazily evaluated action of morphisms.
///
/// For `Φ : X → Y` the matrix is `dims(X) → dims(Y)` for covariant modules and
/// `dims(Y) → dims(X)` for contravariant ones.
pub trait Action<F: Field>: Send + Sync {
    fn matrix(&self, m: Morph) -> Mat<F>;

    /// Image of a single vector; override when cheaper than building the matrix.
    fn apply(&self, m: Morph, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        self.matrix(m).apply(v)
    }
}

struct TableAction<F: Field>(HashMap<Morph, Mat<F>>);

impl<F: Field> Action<F> for TableAction<F> {
    fn matrix(&self, m: Morph) -> Mat<F> {
        self.0[&m].clone()
    }
}

struct FnAction<F: Field>(Box<dyn Fn(Morph) -> Mat<F> + Send + Sync>);

impl<F: Field> Action<F> for FnAction<F> {
    fn matrix(&self, m: Morph) -> Mat<F> {
        (self.0)(m)
    }
}

/// A finite-dimensional module over a finite category.
#[derive(Clone)]
pub struct CatModule<F: Field> {
    field: F,
    base: FinCategory,
    variance: Variance,
    dims: Vec<usize>,
    action: Arc<dyn Action<F>>,
}

impl<F: Field> fmt::Debug for CatModule<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CatModule({:?} over {}, dims {:?})", self.variance, self.base.name(), self.dims)
    }
}

impl<F: Field> CatModule<F> {
    pub fn from_action(
        field: &F,
        base: &FinCategory,
        variance: Variance,
        dims: Vec<usize>,
        action: Arc<dyn Action<F>>,
    ) -> Self {
        assert_eq!(dims.len(), base.n_objects());
        CatModule { field: field.clone(), base: base.clone(), variance, dims, action }
    }

    pub fn from_fn(
        field: &F,
        base: &FinCategory,
        variance: Variance,
        dims: Vec<usize>,
        action: impl Fn(Morph) -> Mat<F> + Send + Sync + 'static,
    ) -> Self {
        Self::from_action(field, base, variance, dims, Arc::new(FnAction(Box::new(action))))
    }

    /// A module from the matrices of a generating set, extended to every morphism by
    /// composition. Fails with `RelationViolation` when two words for the same morphism
    /// give different matrices, so success proves functoriality.
    pub fn from_generators(
        field: &F,
        base: &FinCategory,
        variance: Variance,
        dims: Vec<usize>,
        generators: &[(Morph, Mat<F>)],
    ) -> Result<Self> {
        if dims.len() != base.n_objects() {
            return Err(Error::Input(format!("{} dimensions for {} objects", dims.len(), base.n_objects())));
        }
        for (g, mat) in generators {
            let (r, c) = shape(variance, &dims, *g);
            if (mat.rows(), mat.cols()) != (r, c) {
                return Err(Error::Input(format!(
                    "matrix of {g} is {}x{}, expected {r}x{c}",
                    mat.rows(),
                    mat.cols()
                )));
            }
        }
        let mut table: HashMap<Morph, Mat<F>> = HashMap::new();
        let mut frontier = Vec::new();
        for x in 0..base.n_objects() {
            let id = base.identity(x);
            table.insert(id, Mat::identity(field, dims[x]));
            frontier.push(id);
        }
        for (g, mat) in generators {
            if base.is_identity(*g) && !mat.is_identity() {
                return Err(Error::RelationViolation(format!("identity {g} acts by a non-identity matrix")));
            }
        }
        while let Some(h) = frontier.pop() {
            for (g, mg) in generators.iter().filter(|(g, _)| g.dom == h.cod) {
                let gh = base.compose(*g, h);
                let value = match variance {
                    Variance::Covariant => mg.mul(&table[&h]),
                    Variance::Contravariant => table[&h].mul(mg),
                };
                match table.get(&gh) {
                    Some(old) if *old != value => {
                        return Err(Error::RelationViolation(format!("{g} ∘ {h} = {gh} acts in two ways")))
                    }
                    Some(_) => {}
                    None => {
                        table.insert(gh, value);
                        frontier.push(gh);
                    }
                }
            }
        }
        if table.len() != base.total_morphisms() {
            return Err(Error::RelationViolation("given morphisms do not generate the category".into()));
        }
        Ok(Self::from_action(field, base, variance, dims, Arc::new(TableAction(table))))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn base(&self) -> &FinCategory {
        &self.base
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn action(&self, m: Morph) -> Mat<F> {
        self.action.matrix(m)
    }

    pub fn apply(&self, m: Morph, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        self.action.apply(m, v)
    }

    /// The same data seen as a covariant module over the opposite category, or back.
    pub fn as_opposite(&self) -> Self {
        let inner = self.action.clone();
        let base = self.base.opposite();
        CatModule {
            field: self.field.clone(),
            base,
            variance: self.variance.flip(),
            dims: self.dims.clone(),
            action: Arc::new(Reindexed { inner }),
        }
    }

    /// Every action matrix, for serialization of small modules.
    pub fn action_table(&self) -> Vec<(Morph, Mat<F>)> {
        self.base.all_morphisms().into_iter().map(|m| (m, self.action(m))).collect()
    }

    /// Replaces the action of one morphism; used to build deliberately broken fixtures.
    pub fn with_action_override(&self, m: Morph, mat: Mat<F>) -> Self {
        let inner = self.action.clone();
        let mut copy = self.clone();
        copy.action = Arc::new(FnAction(Box::new(move |n| if n == m { mat.clone() } else { inner.matrix(n) })));
        copy
    }
}

struct Reindexed<F: Field> {
    inner: Arc<dyn Action<F>>,
}

impl<F: Field> Action<F> for Reindexed<F> {
    fn matrix(&self, m: Morph) -> Mat<F> {
        self.inner.matrix(FinCategory::op_morph(m))
    }
    fn apply(&self, m: Morph, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        self.inner.apply(FinCategory::op_morph(m), v)
    }
}

fn shape(variance: Variance, dims: &[usize], m: Morph) -> (usize, usize) {
    match variance {
        Variance::Covariant => (dims[m.cod()], dims[m.dom()]),
        Variance::Contravariant => (dims[m.dom()], dims[m.cod()]),
    }
}

struct RepresentableAction<F: Field> {
    field: F,
    base: FinCategory,
    variance: Variance,
    vertex: u32,
}

impl<F: Field> RepresentableAction<F> {
    fn image(&self, m: Morph, g: u32) -> u32 {
        match self.variance {
            Variance::Covariant => self.base.compose(m, Morph { dom: self.vertex, cod: m.dom, idx: g }).idx,
            Variance::Contravariant => self.base.compose(Morph { dom: m.cod, cod: self.vertex, idx: g }, m).idx,
        }
    }
    fn source_len(&self, m: Morph) -> usize {
        let v = self.vertex as usize;
        match self.variance {
            Variance::Covariant => self.base.hom_len(v, m.dom()),
            Variance::Contravariant => self.base.hom_len(m.cod(), v),
        }
    }
    fn target_len(&self, m: Morph) -> usize {
        let v = self.vertex as usize;
        match self.variance {
            Variance::Covariant => self.base.hom_len(v, m.cod()),
            Variance::Contravariant => self.base.hom_len(m.dom(), v),
        }
    }
}

impl<F: Field> Action<F> for RepresentableAction<F> {
    fn matrix(&self, m: Morph) -> Mat<F> {
        let cols = (0..self.source_len(m) as u32)
            .map(|g| vec![(self.image(m, g), self.field.one())])
            .collect();
        Mat::from_columns(&self.field, self.target_len(m), cols)
    }

    fn apply(&self, m: Morph, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        let entries = v.iter().map(|(g, c)| (self.image(m, *g), c.clone())).collect();
        crate::linalg::mat::collect_vec(&self.field, entries)
    }
}

/// `K[Hom(a, −)]` (covariant) or `K[Hom(−, a)]` (contravariant) on the canonical hom bases.
pub fn make_representable<F: Field>(field: &F, c: &FinCategory, a: usize, variance: Variance) -> CatModule<F> {
    let dims = (0..c.n_objects())
        .map(|x| match variance {
            Variance::Covariant => c.hom_len(a, x),
            Variance::Contravariant => c.hom_len(x, a),
        })
        .collect();
    let action = RepresentableAction { field: field.clone(), base: c.clone(), variance, vertex: a as u32 };
    CatModule::from_action(field, c, variance, dims, Arc::new(action))
}

/// The constant module `K` with identity actions.
pub fn make_trivial<F: Field>(field: &F, c: &FinCategory, variance: Variance) -> CatModule<F> {
    let f = field.clone();
    CatModule::from_fn(field, c, variance, vec![1; c.n_objects()], move |_| Mat::identity(&f, 1))
}

/// `M^* = Hom_K(M, K)`: same dimensions, transposed matrices, opposite variance.
pub fn dual<F: Field>(m: &CatModule<F>) -> CatModule<F> {
    let inner = m.action.clone();
    CatModule::from_fn(&m.field, &m.base, m.variance.flip(), m.dims.clone(), move |x| inner.matrix(x).transpose())
}

/// The composite `M ∘ F` along a functor into the base of `M`.
pub fn restrict<F: Field>(m: &CatModule<F>, along: &Functor) -> Result<CatModule<F>> {
    if !along.target().same_as(&m.base) {
        return Err(Error::NotASubcategory(format!(
            "functor lands in {}, module lives over {}",
            along.target().name(),
            m.base.name()
        )));
    }
    let src = along.source();
    let dims = (0..src.n_objects()).map(|x| m.dims[along.object(x)]).collect();
    let functor = along.clone();
    let inner = m.action.clone();
    Ok(CatModule::from_action(
        &m.field,
        src,
        m.variance,
        dims,
        Arc::new(Restricted { functor, inner }),
    ))
}

struct Restricted<F: Field> {
    functor: Functor,
    inner: Arc<dyn Action<F>>,
}

impl<F: Field> Action<F> for Restricted<F> {
    fn matrix(&self, m: Morph) -> Mat<F> {
        self.inner.matrix(self.functor.map(m).expect("restriction along a total functor"))
    }
    fn apply(&self, m: Morph, v: &SpVec<F::Elem>) -> SpVec<F::Elem> {
        self.inner.apply(self.functor.map(m).expect("restriction along a total functor"), v)
    }
}

/// One failed functoriality condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ModuleViolation {
    Shape { morphism: String },
    Identity { object: usize },
    Composition { g: String, f: String },
}

fn check_pairs<F: Field>(m: &CatModule<F>, pairs: impl Iterator<Item = (Morph, Morph)>) -> Vec<ModuleViolation> {
    let mut out = Vec::new();
    let b = &m.base;
    for x in 0..b.n_objects() {
        if !m.action(b.identity(x)).is_identity() || m.action(b.identity(x)).rows() != m.dims[x] {
            out.push(ModuleViolation::Identity { object: x });
        }
    }
    for (g, f) in pairs {
        let (mg, mf) = (m.action(g), m.action(f));
        let gf = m.action(b.compose(g, f));
        let prod = match m.variance {
            Variance::Covariant => mg.mul(&mf),
            Variance::Contravariant => mf.mul(&mg),
        };
        if prod != gf {
            out.push(ModuleViolation::Composition { g: g.to_string(), f: f.to_string() });
        }
    }
    out
}

/// Exhaustive check of identities and of every composable pair. Empty on success.
pub fn validate_functoriality<F: Field>(m: &CatModule<F>) -> Vec<ModuleViolation> {
    let b = m.base.clone();
    let mut out: Vec<ModuleViolation> = b
        .all_morphisms()
        .into_iter()
        .filter(|&x| {
            let a = m.action(x);
            (a.rows(), a.cols()) != shape(m.variance, &m.dims, x)
        })
        .map(|x| ModuleViolation::Shape { morphism: x.to_string() })
        .collect();
    if !out.is_empty() {
        return out;
    }
    let n = b.n_objects();
    let bb = b.clone();
    let pairs = (0..n * n * n).flat_map(move |k| {
        let (x, y, z) = (k / (n * n), (k / n) % n, k % n);
        let b2 = bb.clone();
        bb.homs(x, y).flat_map(move |f| b2.homs(y, z).map(move |g| (g, f)))
    });
    out.extend(check_pairs(m, pairs));
    out
}

/// Checks `M(g ∘ h) = M(g) M(h)` for the generating morphisms `g` and every `h`, which
/// is equivalent to functoriality but touches far fewer pairs.
pub fn validate_on_generators<F: Field>(m: &CatModule<F>) -> Vec<ModuleViolation> {
    let b = m.base.clone();
    let gens = b.generating_morphisms();
    let all = b.all_morphisms();
    let pairs = gens.iter().flat_map(|&g| all.iter().filter(move |h| h.cod == g.dom).map(move |&h| (g, h)));
    check_pairs(m, pairs.collect::<Vec<_>>().into_iter())
}

/// A natural transformation between modules of the same variance over the same base.
#[derive(Clone, Debug)]
pub struct ModuleMap<F: Field> {
    source: CatModule<F>,
    target: CatModule<F>,
    components: Vec<Mat<F>>,
}

impl<F: Field> ModuleMap<F> {
    /// Accepts the components only if every naturality square commutes; squares are
    /// checked on a generating set, which implies all of them.
    pub fn new(source: &CatModule<F>, target: &CatModule<F>, components: Vec<Mat<F>>) -> Result<Self> {
        if !source.base.same_as(&target.base) || source.variance != target.variance {
            return Err(Error::BaseMismatch(format!("{source:?} vs {target:?}")));
        }
        for (x, c) in components.iter().enumerate() {
            if (c.rows(), c.cols()) != (target.dims[x], source.dims[x]) {
                return Err(Error::Input(format!("component at [{x}] has the wrong shape")));
            }
        }
        let map = ModuleMap { source: source.clone(), target: target.clone(), components };
        if let Some(m) = map.first_failing_square(&source.base.generating_morphisms()) {
            return Err(Error::RelationViolation(format!("naturality square of {m} does not commute")));
        }
        Ok(map)
    }

    fn first_failing_square(&self, morphisms: &[Morph]) -> Option<Morph> {
        morphisms.iter().copied().find(|&m| !self.square_commutes(m))
    }

    pub fn square_commutes(&self, m: Morph) -> bool {
        let (x, y) = (m.dom(), m.cod());
        let (s, t) = (self.source.action(m), self.target.action(m));
        match self.source.variance {
            Variance::Covariant => self.components[y].mul(&s) == t.mul(&self.components[x]),
            Variance::Contravariant => self.components[x].mul(&s) == t.mul(&self.components[y]),
        }
    }

    pub fn source(&self) -> &CatModule<F> {
        &self.source
    }

    pub fn target(&self) -> &CatModule<F> {
        &self.target
    }

    pub fn component(&self, x: usize) -> &Mat<F> {
        &self.components[x]
    }

    pub fn components(&self) -> &[Mat<F>] {
        &self.components
    }
}
