use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, Weak};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};

/// Canonical concrete description of a morphism. Hom-sets are sorted lexicographically
/// by payload, which fixes every basis built from them.
pub type Payload = Vec<u16>;

/// A morphism `dom → cod`, identified by its position in the sorted hom-list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morph {
    pub dom: u32,
    pub cod: u32,
    pub idx: u32,
}

impl Morph {
    pub fn new(dom: usize, cod: usize, idx: usize) -> Self {
        Morph { dom: dom as u32, cod: cod as u32, idx: idx as u32 }
    }
    pub fn dom(&self) -> usize {
        self.dom as usize
    }
    pub fn cod(&self) -> usize {
        self.cod as usize
    }
}

impl fmt::Display for Morph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]->[{}]#{}", self.dom, self.cod, self.idx)
    }
}

/// Source of hom-sets and composition for a programmatically described category.
///
/// Implementations only need to produce payloads; ordering, indexing and lookup are
/// handled by [`FinCategory`].
pub trait Generator: Send + Sync {
    fn name(&self) -> String;
    fn n_objects(&self) -> usize;
    /// All payloads `x → y`, in any order and without repetition.
    fn enumerate(&self, x: usize, y: usize) -> Vec<Payload>;
    /// Payload of `g ∘ f` for `f : x → y`, `g : y → z`.
    fn compose(&self, g: &Payload, f: &Payload, x: usize, y: usize, z: usize) -> Payload;
    fn identity(&self, x: usize) -> Payload;
    /// A generating set of morphisms `(dom, cod, payload)`, when one is known.
    fn generating_set(&self) -> Option<Vec<(usize, usize, Payload)>> {
        None
    }
    /// `|Hom(x, y)|` without enumerating, when a closed form is known.
    fn hom_len_hint(&self, _x: usize, _y: usize) -> Option<usize> {
        None
    }
}

pub(crate) struct HomSet {
    pub(crate) payloads: Vec<Payload>,
    index: FxHashMap<Payload, u32>,
}

impl HomSet {
    fn new(mut payloads: Vec<Payload>) -> Self {
        payloads.sort();
        payloads.dedup();
        let index = payloads.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();
        HomSet { payloads, index }
    }
}

/// Explicit composition data for user-supplied categories.
pub(crate) struct TableData {
    pub(crate) homs: Vec<Vec<Payload>>,
    /// keyed by (x, y, z): entry `g * |Hom(x,y)| + f` holds the index of `g ∘ f` in Hom(x, z)
    pub(crate) compose: HashMap<(u32, u32, u32), Vec<u32>>,
    /// index of the identity in Hom(x, x)
    pub(crate) identities: Vec<u32>,
}

enum Source {
    Generated(Arc<dyn Generator>),
    Opposite(FinCategory),
    Table(TableData),
}

struct Inner {
    name: String,
    n_objects: usize,
    source: Source,
    homs: Vec<OnceLock<HomSet>>,
    opposite: Mutex<Weak<Inner>>,
}

/// A finite small category with objects `0..n` and lazily enumerated hom-sets.
///
/// Cloning is cheap; clones share hom-set caches.
#[derive(Clone)]
pub struct FinCategory(Arc<Inner>);

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinCategory({}, {} objects)", self.0.name, self.0.n_objects)
    }
}

impl PartialEq for FinCategory {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl FinCategory {
    pub fn from_generator(gen: Arc<dyn Generator>) -> Self {
        let n = gen.n_objects();
        let name = gen.name();
        Self::build(name, n, Source::Generated(gen))
    }

    pub(crate) fn from_table(name: String, n_objects: usize, table: TableData) -> Self {
        Self::build(name, n_objects, Source::Table(table))
    }

    fn build(name: String, n_objects: usize, source: Source) -> Self {
        let homs = (0..n_objects * n_objects).map(|_| OnceLock::new()).collect();
        FinCategory(Arc::new(Inner { name, n_objects, source, homs, opposite: Mutex::new(Weak::new()) }))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn n_objects(&self) -> usize {
        self.0.n_objects
    }

    /// Identity of the underlying description: clones and double opposites compare equal.
    pub fn same_as(&self, other: &FinCategory) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn is_table(&self) -> bool {
        matches!(self.0.source, Source::Table(_))
    }

    pub(crate) fn hom_set(&self, x: usize, y: usize) -> &HomSet {
        let n = self.0.n_objects;
        assert!(x < n && y < n, "object out of range");
        self.0.homs[x * n + y].get_or_init(|| match &self.0.source {
            Source::Generated(g) => HomSet::new(g.enumerate(x, y)),
            Source::Opposite(base) => HomSet::new(base.hom_set(y, x).payloads.clone()),
            Source::Table(t) => HomSet::new(t.homs[x * n + y].clone()),
        })
    }

    pub fn hom_len(&self, x: usize, y: usize) -> usize {
        if let Source::Generated(g) = &self.0.source {
            if self.0.homs[x * self.0.n_objects + y].get().is_none() {
                if let Some(k) = g.hom_len_hint(x, y) {
                    return k;
                }
            }
        }
        if let Source::Opposite(base) = &self.0.source {
            return base.hom_len(y, x);
        }
        self.hom_set(x, y).payloads.len()
    }

    pub fn homs(&self, x: usize, y: usize) -> impl Iterator<Item = Morph> {
        (0..self.hom_len(x, y)).map(move |i| Morph::new(x, y, i))
    }

    pub fn payload(&self, m: Morph) -> &Payload {
        &self.hom_set(m.dom(), m.cod()).payloads[m.idx as usize]
    }

    pub fn find(&self, x: usize, y: usize, p: &[u16]) -> Option<Morph> {
        self.hom_set(x, y).index.get(p).map(|&i| Morph::new(x, y, i as usize))
    }

    pub fn identity(&self, x: usize) -> Morph {
        match &self.0.source {
            Source::Generated(g) => self.find(x, x, &g.identity(x)).expect("identity enumerated"),
            Source::Opposite(base) => {
                let id = base.identity(x);
                Morph::new(x, x, id.idx as usize)
            }
            Source::Table(t) => Morph::new(x, x, t.identities[x] as usize),
        }
    }

    pub fn is_identity(&self, m: Morph) -> bool {
        m.dom == m.cod && self.identity(m.dom()) == m
    }

    /// `g ∘ f`. Panics unless `cod(f) = dom(g)`.
    pub fn compose(&self, g: Morph, f: Morph) -> Morph {
        assert_eq!(f.cod, g.dom, "composing non-composable morphisms {g} ∘ {f}");
        let (x, y, z) = (f.dom(), f.cod(), g.cod());
        match &self.0.source {
            Source::Generated(gen) => {
                let p = gen.compose(self.payload(g), self.payload(f), x, y, z);
                self.find(x, z, &p)
                    .unwrap_or_else(|| panic!("composite {p:?} missing from Hom({x},{z}) in {}", self.name()))
            }
            Source::Opposite(base) => {
                let gb = Morph { dom: g.cod, cod: g.dom, idx: g.idx };
                let fb = Morph { dom: f.cod, cod: f.dom, idx: f.idx };
                let c = base.compose(fb, gb);
                Morph { dom: c.cod, cod: c.dom, idx: c.idx }
            }
            Source::Table(t) => {
                let len_f = self.hom_len(x, y);
                let tab = &t.compose[&(x as u32, y as u32, z as u32)];
                Morph::new(x, z, tab[g.idx as usize * len_f + f.idx as usize] as usize)
            }
        }
    }

    pub fn try_compose(&self, g: Morph, f: Morph) -> Result<Morph> {
        if f.cod != g.dom {
            return Err(Error::NotComposable(format!("{g} ∘ {f}")));
        }
        Ok(self.compose(g, f))
    }

    /// Every morphism, grouped by (dom, cod) in row-major order.
    pub fn all_morphisms(&self) -> Vec<Morph> {
        let n = self.n_objects();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                out.extend(self.homs(x, y));
            }
        }
        out
    }

    pub fn total_morphisms(&self) -> usize {
        let n = self.n_objects();
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| self.hom_len(x, y)).sum()
    }

    /// Global numbering used by the JSON formats: row-major over (dom, cod), then index.
    pub fn global_id(&self, m: Morph) -> usize {
        let n = self.n_objects();
        let mut off = 0;
        for x in 0..n {
            for y in 0..n {
                if (x, y) == (m.dom(), m.cod()) {
                    return off + m.idx as usize;
                }
                off += self.hom_len(x, y);
            }
        }
        unreachable!("morphism outside category")
    }

    pub fn from_global_id(&self, id: usize) -> Option<Morph> {
        let n = self.n_objects();
        let mut off = 0;
        for x in 0..n {
            for y in 0..n {
                let len = self.hom_len(x, y);
                if id < off + len {
                    return Some(Morph::new(x, y, id - off));
                }
                off += len;
            }
        }
        None
    }

    /// The opposite category. Taking it twice returns the original handle, and repeated
    /// calls share one handle while it is alive.
    pub fn opposite(&self) -> FinCategory {
        if let Source::Opposite(base) = &self.0.source {
            return base.clone();
        }
        let mut cached = self.0.opposite.lock().expect("opposite cache");
        if let Some(inner) = cached.upgrade() {
            return FinCategory(inner);
        }
        let name = format!("{}^op", self.0.name);
        let op = Self::build(name, self.0.n_objects, Source::Opposite(self.clone()));
        *cached = Arc::downgrade(&op.0);
        op
    }

    /// The underlying category if this is an opposite.
    pub fn opposite_of(&self) -> Option<&FinCategory> {
        match &self.0.source {
            Source::Opposite(b) => Some(b),
            _ => None,
        }
    }

    /// A generating set of morphisms: a known small one for built-ins, else all non-identities.
    pub fn generating_morphisms(&self) -> Vec<Morph> {
        let known = match &self.0.source {
            Source::Generated(g) => g.generating_set().map(|gens| {
                gens.into_iter()
                    .map(|(x, y, p)| self.find(x, y, &p).expect("generator in category"))
                    .collect::<Vec<_>>()
            }),
            Source::Opposite(base) => {
                let gens = base.generating_morphisms();
                Some(gens.into_iter().map(|m| Morph { dom: m.cod, cod: m.dom, idx: m.idx }).collect())
            }
            Source::Table(_) => None,
        };
        known.unwrap_or_else(|| {
            self.all_morphisms().into_iter().filter(|&m| !self.is_identity(m)).collect()
        })
    }

    /// Maps a morphism of `self.opposite()` to the same arrow in `self`, reversed.
    pub fn op_morph(m: Morph) -> Morph {
        Morph { dom: m.cod, cod: m.dom, idx: m.idx }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two objects and a single arrow 0 → 1.
    struct Arrow;

    impl Generator for Arrow {
        fn name(&self) -> String {
            "arrow".into()
        }
        fn n_objects(&self) -> usize {
            2
        }
        fn enumerate(&self, x: usize, y: usize) -> Vec<Payload> {
            if x <= y {
                vec![vec![x as u16, y as u16]]
            } else {
                vec![]
            }
        }
        fn compose(&self, _g: &Payload, f: &Payload, _x: usize, _y: usize, z: usize) -> Payload {
            vec![f[0], z as u16]
        }
        fn identity(&self, x: usize) -> Payload {
            vec![x as u16, x as u16]
        }
    }

    #[test]
    fn opposite_reverses_and_is_involutive() {
        let c = FinCategory::from_generator(Arc::new(Arrow));
        let op = c.opposite();
        assert_eq!(op.hom_len(1, 0), 1);
        assert_eq!(op.hom_len(0, 1), 0);
        assert!(op.opposite().same_as(&c));
        let f = op.homs(1, 0).next().unwrap();
        assert_eq!(op.compose(f, op.identity(1)), f);
        assert_eq!(op.compose(op.identity(0), f), f);
    }

    #[test]
    fn global_ids_round_trip() {
        let c = FinCategory::from_generator(Arc::new(Arrow));
        for m in c.all_morphisms() {
            assert_eq!(c.from_global_id(c.global_id(m)), Some(m));
        }
        assert_eq!(c.total_morphisms(), 3);
    }
}
