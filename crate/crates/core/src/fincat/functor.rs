use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::category::{FinCategory, Morph};
use crate::error::{Error, Result};

type MorphMap = dyn Fn(Morph) -> Option<Morph> + Send + Sync;

/// A functor between finite categories, given on objects and morphisms.
#[derive(Clone)]
pub struct Functor {
    source: FinCategory,
    target: FinCategory,
    objects: Vec<usize>,
    map: Arc<MorphMap>,
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Functor({} -> {})", self.source.name(), self.target.name())
    }
}

impl Functor {
    pub fn new(
        source: FinCategory,
        target: FinCategory,
        objects: Vec<usize>,
        map: impl Fn(Morph) -> Option<Morph> + Send + Sync + 'static,
    ) -> Self {
        assert_eq!(objects.len(), source.n_objects());
        Functor { source, target, objects, map: Arc::new(map) }
    }

    pub fn identity(c: &FinCategory) -> Self {
        Functor::new(c.clone(), c.clone(), (0..c.n_objects()).collect(), Some)
    }

    /// The inclusion of a subcategory sharing payload conventions and objects with its parent.
    pub fn inclusion(sub: &FinCategory, parent: &FinCategory) -> Result<Self> {
        if sub.n_objects() != parent.n_objects() {
            return Err(Error::NotASubcategory(format!(
                "{} has {} objects, {} has {}",
                sub.name(),
                sub.n_objects(),
                parent.name(),
                parent.n_objects()
            )));
        }
        if sub.same_as(parent) {
            return Ok(Functor::identity(parent));
        }
        let (s, p) = (sub.clone(), parent.clone());
        Ok(Functor::new(sub.clone(), parent.clone(), (0..sub.n_objects()).collect(), move |m| {
            p.find(m.dom(), m.cod(), s.payload(m))
        }))
    }

    /// Extends images of a generating set to a functor and verifies functoriality:
    /// `F(g ∘ h) = F(g) ∘ F(h)` is checked for every generator `g` and every morphism `h`,
    /// which determines `F` on words and proves it well defined.
    pub fn from_generators(
        source: &FinCategory,
        target: &FinCategory,
        objects: Vec<usize>,
        images: &[(Morph, Morph)],
    ) -> Result<Self> {
        let mut table: HashMap<Morph, Morph> = HashMap::new();
        let mut frontier = Vec::new();
        for x in 0..source.n_objects() {
            table.insert(source.identity(x), target.identity(objects[x]));
            frontier.push(source.identity(x));
        }
        for &(g, img) in images {
            if img.dom() != objects[g.dom()] || img.cod() != objects[g.cod()] {
                return Err(Error::RelationViolation(format!("image of generator {g} has wrong endpoints")));
            }
        }
        while let Some(h) = frontier.pop() {
            let fh = table[&h];
            for &(g, img) in images.iter().filter(|(g, _)| g.dom == h.cod) {
                let gh = source.compose(g, h);
                let value = target.compose(img, fh);
                match table.get(&gh) {
                    Some(&old) if old != value => {
                        return Err(Error::RelationViolation(format!(
                            "{g} ∘ {h} = {gh} has images {old} and {value}"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        table.insert(gh, value);
                        frontier.push(gh);
                    }
                }
            }
        }
        if table.len() != source.total_morphisms() {
            return Err(Error::RelationViolation("generators do not generate the source".into()));
        }
        Ok(Functor::new(source.clone(), target.clone(), objects, move |m| table.get(&m).copied()))
    }

    pub fn source(&self) -> &FinCategory {
        &self.source
    }

    pub fn target(&self) -> &FinCategory {
        &self.target
    }

    pub fn object(&self, x: usize) -> usize {
        self.objects[x]
    }

    pub fn map(&self, m: Morph) -> Result<Morph> {
        (self.map)(m).ok_or_else(|| {
            Error::NotASubcategory(format!("{m} of {} has no image in {}", self.source.name(), self.target.name()))
        })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Functor) -> Functor {
        assert!(self.target.same_as(&other.source), "functors do not compose");
        let (a, b) = (self.map.clone(), other.map.clone());
        let objects = self.objects.iter().map(|&x| other.objects[x]).collect();
        Functor {
            source: self.source.clone(),
            target: other.target.clone(),
            objects,
            map: Arc::new(move |m| a(m).and_then(|n| b(n))),
        }
    }

    /// The induced functor between opposite categories.
    pub fn opposite(&self) -> Functor {
        let inner = self.map.clone();
        Functor {
            source: self.source.opposite(),
            target: self.target.opposite(),
            objects: self.objects.clone(),
            map: Arc::new(move |m| inner(FinCategory::op_morph(m)).map(FinCategory::op_morph)),
        }
    }

    /// Checks that objects, identities and all composites of the given pairs are preserved.
    /// With `pairs = None` every composable pair of the source is checked.
    pub fn validate(&self, pairs: Option<&[(Morph, Morph)]>) -> Vec<String> {
        let mut out = Vec::new();
        let c = &self.source;
        for x in 0..c.n_objects() {
            match (self.map)(c.identity(x)) {
                Some(m) if self.target.is_identity(m) && m.dom() == self.objects[x] => {}
                other => out.push(format!("identity of [{x}] maps to {other:?}")),
            }
        }
        let mut check = |g: Morph, f: Morph| {
            let lhs = (self.map)(c.compose(g, f));
            let rhs = match ((self.map)(g), (self.map)(f)) {
                (Some(a), Some(b)) if a.dom == b.cod => Some(self.target.compose(a, b)),
                _ => None,
            };
            if lhs.is_none() || lhs != rhs {
                out.push(format!("F({g} ∘ {f}) = {lhs:?} but F({g}) ∘ F({f}) = {rhs:?}"));
            }
        };
        match pairs {
            Some(ps) => ps.iter().for_each(|&(g, f)| check(g, f)),
            None => {
                let n = c.n_objects();
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            for f in c.homs(x, y) {
                                for g in c.homs(y, z) {
                                    check(g, f);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builtins::build_delta_truncated;

    #[test]
    fn identity_functor_is_valid() {
        let d = build_delta_truncated(2);
        assert!(Functor::identity(&d).validate(None).is_empty());
        assert!(Functor::identity(&d).opposite().validate(None).is_empty());
    }

    #[test]
    fn inclusion_rejects_object_mismatch() {
        let a = build_delta_truncated(1);
        let b = build_delta_truncated(2);
        assert!(matches!(Functor::inclusion(&a, &b), Err(Error::NotASubcategory(_))));
    }
}
