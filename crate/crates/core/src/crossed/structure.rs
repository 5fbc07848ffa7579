use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fincat::{FinCategory, Generator, Morph, Payload};

/// A category `B` with subcategories `C` and `D` on all objects such that every morphism
/// factors uniquely as `Ψ ∘ f` with `Ψ` in `C` and `f` in `D`.
///
/// All morphisms handed in and out are morphisms of the base category.
#[derive(Clone)]
pub struct CrossedCategory(Arc<Inner>);

#[derive(Clone)]
struct Inner {
    name: String,
    base: FinCategory,
    c_homs: Vec<Vec<u32>>,
    d_homs: Vec<Vec<u32>>,
    /// per hom-set `(x, z)`, per morphism: (mid object, index of Ψ in Hom(y, z), index of f in Hom(x, y))
    factor: Vec<Vec<(u32, u32, u32)>>,
    act_overrides: HashMap<(Morph, Morph), (Morph, Morph)>,
    c_category: OnceLock<FinCategory>,
    d_category: OnceLock<FinCategory>,
}

/// Which of the two subcategories of a crossed category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    C,
    D,
}

/// A wide subcategory of a base category, with the base payloads.
struct SubcategoryGen {
    name: String,
    base: FinCategory,
    homs: Vec<Vec<u32>>,
}

impl Generator for SubcategoryGen {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn n_objects(&self) -> usize {
        self.base.n_objects()
    }
    fn enumerate(&self, x: usize, y: usize) -> Vec<Payload> {
        let n = self.base.n_objects();
        self.homs[x * n + y].iter().map(|&i| self.base.payload(Morph::new(x, y, i as usize)).clone()).collect()
    }
    fn compose(&self, g: &Payload, f: &Payload, x: usize, y: usize, z: usize) -> Payload {
        let f = self.base.find(x, y, f).expect("member of the base");
        let g = self.base.find(y, z, g).expect("member of the base");
        self.base.payload(self.base.compose(g, f)).clone()
    }
    fn identity(&self, x: usize) -> Payload {
        self.base.payload(self.base.identity(x)).clone()
    }
    fn hom_len_hint(&self, x: usize, y: usize) -> Option<usize> {
        Some(self.homs[x * self.base.n_objects() + y].len())
    }
}

impl std::fmt::Debug for CrossedCategory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CrossedCategory({})", self.0.name)
    }
}

/// Builds a crossed category from membership predicates, checking that both predicates
/// define subcategories and that factorizations exist and are unique.
pub fn build_crossed(
    base: &FinCategory,
    c_members: impl Fn(Morph) -> bool + Sync,
    d_members: impl Fn(Morph) -> bool + Sync,
) -> Result<CrossedCategory> {
    let c_homs = members(base, &c_members);
    let d_homs = members(base, &d_members);
    check_subcategory(base, &c_homs, "C")?;
    check_subcategory(base, &d_homs, "D")?;
    CrossedCategory::from_members(base.name().to_string(), base.clone(), c_homs, d_homs)
}

fn members(base: &FinCategory, pred: &(impl Fn(Morph) -> bool + Sync)) -> Vec<Vec<u32>> {
    let n = base.n_objects();
    (0..n * n)
        .into_par_iter()
        .map(|k| base.homs(k / n, k % n).filter(|&m| pred(m)).map(|m| m.idx).collect())
        .collect()
}

fn contains(list: &[Vec<u32>], n: usize, m: Morph) -> bool {
    list[m.dom() * n + m.cod()].binary_search(&m.idx).is_ok()
}

fn check_subcategory(base: &FinCategory, homs: &[Vec<u32>], label: &str) -> Result<()> {
    let n = base.n_objects();
    for x in 0..n {
        if !contains(homs, n, base.identity(x)) {
            return Err(Error::NotASubcategory(format!("{label} misses the identity of [{x}]")));
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for &f in &homs[x * n + y] {
                    for &g in &homs[y * n + z] {
                        let gf = base.compose(Morph::new(y, z, g as usize), Morph::new(x, y, f as usize));
                        if !contains(homs, n, gf) {
                            return Err(Error::NotASubcategory(format!("{label} is not closed: composite {gf}")));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

impl CrossedCategory {
    /// Runs the exhaustive factorization audit over member lists (sorted base indices per
    /// hom-set, row-major over `(dom, cod)`).
    pub(crate) fn from_members(
        name: String,
        base: FinCategory,
        c_homs: Vec<Vec<u32>>,
        d_homs: Vec<Vec<u32>>,
    ) -> Result<Self> {
        let n = base.n_objects();
        let tallies: Vec<Result<Vec<(u32, u32, u32)>>> = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (x, z) = (k / n, k % n);
                let len = base.hom_len(x, z);
                let mut found = vec![(u32::MAX, 0u32, 0u32); len];
                let mut count = vec![0usize; len];
                for y in 0..n {
                    for &f in &d_homs[x * n + y] {
                        for &psi in &c_homs[y * n + z] {
                            let phi = base.compose(Morph::new(y, z, psi as usize), Morph::new(x, y, f as usize));
                            count[phi.idx as usize] += 1;
                            found[phi.idx as usize] = (y as u32, psi, f);
                        }
                    }
                }
                match count.iter().position(|&c| c != 1) {
                    Some(i) => Err(Error::NotCrossed { morphism: Morph::new(x, z, i).to_string(), count: count[i] }),
                    None => Ok(found),
                }
            })
            .collect();
        let factor = tallies.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(CrossedCategory(Arc::new(Inner { name, base, c_homs, d_homs, factor,
            act_overrides: HashMap::new(),
            c_category: OnceLock::new(),
            d_category: OnceLock::new(),
        })))
    }

    /// `C` or `D` as a category in its own right; its morphisms carry the base payloads and
    /// map to the base through [`CrossedCategory::to_base`].
    pub fn part(&self, part: Part) -> &FinCategory {
        let (cell, homs, label) = match part {
            Part::C => (&self.0.c_category, &self.0.c_homs, "C"),
            Part::D => (&self.0.d_category, &self.0.d_homs, "D"),
        };
        cell.get_or_init(|| {
            FinCategory::from_generator(Arc::new(SubcategoryGen {
                name: format!("{}:{label}", self.0.name),
                base: self.0.base.clone(),
                homs: homs.clone(),
            }))
        })
    }

    /// The base morphism of a morphism of `C` or `D`.
    pub fn to_base(&self, part: Part, m: Morph) -> Morph {
        let homs = match part {
            Part::C => &self.0.c_homs,
            Part::D => &self.0.d_homs,
        };
        let idx = homs[m.dom() * self.n_objects() + m.cod()][m.idx as usize];
        Morph { idx, ..m }
    }

    /// The morphism of `C` or `D` with the given base morphism, if it belongs there.
    pub fn from_base(&self, part: Part, m: Morph) -> Option<Morph> {
        let homs = match part {
            Part::C => &self.0.c_homs,
            Part::D => &self.0.d_homs,
        };
        let pos = homs[m.dom() * self.n_objects() + m.cod()].binary_search(&m.idx).ok()?;
        Some(Morph { idx: pos as u32, ..m })
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn base(&self) -> &FinCategory {
        &self.0.base
    }

    pub fn n_objects(&self) -> usize {
        self.0.base.n_objects()
    }

    pub fn in_c(&self, m: Morph) -> bool {
        contains(&self.0.c_homs, self.n_objects(), m)
    }

    pub fn in_d(&self, m: Morph) -> bool {
        contains(&self.0.d_homs, self.n_objects(), m)
    }

    /// Members of `C(x, y)` as base morphisms.
    pub fn c_homs(&self, x: usize, y: usize) -> impl Iterator<Item = Morph> + '_ {
        self.0.c_homs[x * self.n_objects() + y].iter().map(move |&i| Morph::new(x, y, i as usize))
    }

    /// Members of `D(x, y)` as base morphisms.
    pub fn d_homs(&self, x: usize, y: usize) -> impl Iterator<Item = Morph> + '_ {
        self.0.d_homs[x * self.n_objects() + y].iter().map(move |&i| Morph::new(x, y, i as usize))
    }

    /// The unique `(Ψ, f)` with `Φ = Ψ ∘ f`, `Ψ ∈ C`, `f ∈ D`.
    pub fn factorize(&self, phi: Morph) -> (Morph, Morph) {
        let n = self.n_objects();
        let (y, psi, f) = self.0.factor[phi.dom() * n + phi.cod()][phi.idx as usize];
        (Morph::new(y as usize, phi.cod(), psi as usize), Morph::new(phi.dom(), y as usize, f as usize))
    }

    /// `(f_*(Ψ), Ψ^*(f))`, the factorization of `f ∘ Ψ`.
    pub fn act(&self, f: Morph, psi: Morph) -> Result<(Morph, Morph)> {
        if psi.cod != f.dom {
            return Err(Error::NotComposable(format!("{f} ∘ {psi}")));
        }
        if !self.in_c(psi) {
            return Err(Error::NotComposable(format!("{psi} is not in C")));
        }
        if !self.in_d(f) {
            return Err(Error::NotComposable(format!("{f} is not in D")));
        }
        Ok(self.act_unchecked(f, psi))
    }

    pub(crate) fn act_unchecked(&self, f: Morph, psi: Morph) -> (Morph, Morph) {
        if !self.0.act_overrides.is_empty() {
            if let Some(&r) = self.0.act_overrides.get(&(f, psi)) {
                return r;
            }
        }
        self.factorize(self.0.base.compose(f, psi))
    }

    /// `f_*(Ψ) ∈ C`.
    pub fn act_lower(&self, f: Morph, psi: Morph) -> Result<Morph> {
        self.act(f, psi).map(|r| r.0)
    }

    /// `Ψ^*(f) ∈ D`.
    pub fn act_upper(&self, psi: Morph, f: Morph) -> Result<Morph> {
        self.act(f, psi).map(|r| r.1)
    }

    /// A copy whose action on `(f, Ψ)` returns the given pair instead of the true one.
    pub fn with_overridden_action(&self, f: Morph, psi: Morph, lower: Morph, upper: Morph) -> Self {
        let mut inner = (*self.0).clone();
        inner.act_overrides.insert((f, psi), (lower, upper));
        CrossedCategory(Arc::new(inner))
    }

    /// Members of `C` and `D` as global ids, for the JSON format.
    pub fn member_ids(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n_objects();
        let mut c = Vec::new();
        let mut d = Vec::new();
        for x in 0..n {
            for y in 0..n {
                c.extend(self.c_homs(x, y).map(|m| self.0.base.global_id(m)));
                d.extend(self.d_homs(x, y).map(|m| self.0.base.global_id(m)));
            }
        }
        (c, d)
    }
}
