//! Set maps `[n] → [m]` with a total order on every fiber, and the subcategories of the
//! resulting category that the crossed structures are assembled from.
//!
//! Payload encoding: the image vector of the underlying map (length `n + 1`) followed by
//! the concatenation of all fibers, fiber of `0` first, each listed in its order. The
//! second half is always a permutation of `[n]`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::builtins::{binomial, factorial, monotone_maps, permutations};
use crate::fincat::{FinCategory, Generator, Payload};

/// A set map together with a total order on each preimage.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiberOrderedMap {
    underlying: Vec<u16>,
    fibers: Vec<Vec<u16>>,
}

impl FiberOrderedMap {
    /// `fibers[j]` must list exactly the preimage of `j`, in the chosen order.
    pub fn new(underlying: Vec<u16>, fibers: Vec<Vec<u16>>) -> Result<Self> {
        let mut seen = vec![false; underlying.len()];
        for (j, fib) in fibers.iter().enumerate() {
            for &i in fib {
                let ok = (i as usize) < underlying.len() && underlying[i as usize] as usize == j && !seen[i as usize];
                if !ok {
                    return Err(Error::Input(format!("fiber {j} lists {i}, which is not in its preimage")));
                }
                seen[i as usize] = true;
            }
        }
        if seen.iter().any(|s| !s) || underlying.iter().any(|&v| v as usize >= fibers.len()) {
            return Err(Error::Input("fibers do not partition the domain".into()));
        }
        Ok(FiberOrderedMap { underlying, fibers })
    }

    pub fn from_payload(p: &[u16], cod: usize) -> Self {
        let n1 = p.len() / 2;
        let (u, seq) = p.split_at(n1);
        let mut fibers = vec![Vec::new(); cod + 1];
        for &i in seq {
            fibers[u[i as usize] as usize].push(i);
        }
        FiberOrderedMap { underlying: u.to_vec(), fibers }
    }

    pub fn to_payload(&self) -> Payload {
        let mut p = self.underlying.clone();
        for f in &self.fibers {
            p.extend_from_slice(f);
        }
        p
    }

    pub fn underlying(&self) -> &[u16] {
        &self.underlying
    }

    pub fn fiber(&self, j: usize) -> &[u16] {
        &self.fibers[j]
    }

    pub fn fibers(&self) -> &[Vec<u16>] {
        &self.fibers
    }

    pub fn dom(&self) -> usize {
        self.underlying.len() - 1
    }

    pub fn cod(&self) -> usize {
        self.fibers.len() - 1
    }

    /// `self ∘ f`: fibers of the composite are concatenations of the fibers of `f`,
    /// taken in the order prescribed by `self`.
    pub fn compose(&self, f: &FiberOrderedMap) -> FiberOrderedMap {
        let underlying = f.underlying.iter().map(|&i| self.underlying[i as usize]).collect();
        let fibers = self
            .fibers
            .iter()
            .map(|fib| fib.iter().flat_map(|&j| f.fibers[j as usize].iter().copied()).collect())
            .collect();
        FiberOrderedMap { underlying, fibers }
    }

    /// Monotone map with increasing fibers.
    pub fn monotone(image: &[u16], cod: usize) -> Self {
        let seq: Vec<u16> = (0..image.len() as u16).collect();
        Self::from_parts(image, &seq, cod)
    }

    /// The bijection `i ↦ perm[i]` (one-line notation) as a fiber-ordered map.
    pub fn bijection(perm: &[u16]) -> Self {
        let mut inv = vec![0u16; perm.len()];
        for (i, &v) in perm.iter().enumerate() {
            inv[v as usize] = i as u16;
        }
        let fibers = inv.into_iter().map(|i| vec![i]).collect();
        FiberOrderedMap { underlying: perm.to_vec(), fibers }
    }

    /// `Ψ ∘ σ` where `Ψ` is the monotone map with image vector `mono` and the fibers are
    /// read off the sequence `seq = σ⁻¹`.
    fn from_parts(mono: &[u16], seq: &[u16], cod: usize) -> Self {
        let mut underlying = vec![0u16; seq.len()];
        for (j, &i) in seq.iter().enumerate() {
            underlying[i as usize] = mono[j];
        }
        let mut fibers = vec![Vec::new(); cod + 1];
        for (j, &i) in seq.iter().enumerate() {
            fibers[mono[j] as usize].push(i);
        }
        FiberOrderedMap { underlying, fibers }
    }

    /// The unique decomposition `self = Ψ ∘ σ` with `Ψ` monotone and `σ` a bijection,
    /// returned as (image vector of `Ψ`, one-line notation of `σ`).
    pub fn monotone_bijection_split(&self) -> (Vec<u16>, Vec<u16>) {
        let mut mono = Vec::with_capacity(self.underlying.len());
        let mut sigma = vec![0u16; self.underlying.len()];
        let mut pos = 0u16;
        for (j, fib) in self.fibers.iter().enumerate() {
            for &i in fib {
                mono.push(j as u16);
                sigma[i as usize] = pos;
                pos += 1;
            }
        }
        (mono, sigma)
    }
}

/// Composition on encoded payloads, without building intermediate structures.
pub fn compose_payloads(g: &[u16], f: &[u16]) -> Payload {
    let n1 = f.len() / 2;
    let m1 = g.len() / 2;
    let (fu, fseq) = f.split_at(n1);
    let (gu, gseq) = g.split_at(m1);
    let mut counts = vec![0u16; m1 + 1];
    for &j in fu {
        counts[j as usize + 1] += 1;
    }
    for j in 0..m1 {
        counts[j + 1] += counts[j];
    }
    let mut out = Vec::with_capacity(2 * n1);
    out.extend(fu.iter().map(|&j| gu[j as usize]));
    for &j in gseq {
        let (a, b) = (counts[j as usize] as usize, counts[j as usize + 1] as usize);
        out.extend_from_slice(&fseq[a..b]);
    }
    out
}

/// The subcategories of ΔS used by the crossed structures, all on objects `[0..N]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// every fiber-ordered map: ΔS ≅ F(as)
    All,
    /// `Ψ ∘ t^k` with `Ψ` monotone: ΔC, also the image of ΔC^op
    Cyclic,
    /// maps with `0 ↦ 0`: Γ(as)
    Pointed,
    /// pointed members of `Cyclic`: the image of Δ^op
    PointedCyclic,
    /// monotone maps with increasing fibers: Δ
    Monotone,
    /// bijections: Σ_{•+1}
    Bijections,
    /// bijections fixing 0: Σ_•
    BijectionsFixingZero,
    /// powers of the cyclic operator: ℤ/(n+1)
    Rotations,
}

impl Family {
    pub fn label(&self) -> &'static str {
        match self {
            Family::All => "DeltaS",
            Family::Cyclic => "DeltaC",
            Family::Pointed => "Gamma(as)",
            Family::PointedCyclic => "Delta^op",
            Family::Monotone => "Delta",
            Family::Bijections => "Sigma_(.+1)",
            Family::BijectionsFixingZero => "Sigma_.",
            Family::Rotations => "Z/(.+1)",
        }
    }

    fn contains_monotone_part(&self, mono: &[u16], seq: &[u16], n: usize, m: usize) -> bool {
        let is_id = || n == m && mono.iter().enumerate().all(|(i, &v)| v as usize == i);
        let rotation = || {
            // seq[j] = j - k mod (n+1)
            let k = (n + 1 - seq[0] as usize) % (n + 1);
            seq.iter().enumerate().all(|(j, &s)| s as usize == (j + n + 1 - k) % (n + 1))
        };
        let zero_to_zero = || {
            let pos = seq.iter().position(|&i| i == 0).expect("permutation");
            mono[pos] == 0
        };
        match self {
            Family::All => true,
            Family::Cyclic => rotation(),
            Family::Pointed => zero_to_zero(),
            Family::PointedCyclic => rotation() && zero_to_zero(),
            Family::Monotone => seq.iter().enumerate().all(|(j, &s)| s as usize == j),
            Family::Bijections => is_id(),
            Family::BijectionsFixingZero => is_id() && seq[0] == 0,
            Family::Rotations => is_id() && rotation(),
        }
    }

    /// Membership of an arbitrary payload of ΔS.
    pub fn contains(&self, p: &[u16], cod: usize) -> bool {
        let fo = FiberOrderedMap::from_payload(p, cod);
        let (mono, sigma) = fo.monotone_bijection_split();
        let mut seq = vec![0u16; sigma.len()];
        for (i, &s) in sigma.iter().enumerate() {
            seq[s as usize] = i as u16;
        }
        self.contains_monotone_part(&mono, &seq, fo.dom(), cod)
    }

    pub fn hom_len(&self, n: usize, m: usize) -> usize {
        let mono = binomial(n + m + 1, n + 1);
        let bij = if n == m { 1 } else { 0 };
        match self {
            Family::All => factorial(n + 1) * mono,
            Family::Cyclic => (n + 1) * mono,
            Family::Pointed => factorial(n) * binomial(n + m + 1, m + 1),
            Family::PointedCyclic => binomial(n + m + 1, m + 1),
            Family::Monotone => mono,
            Family::Bijections => bij * factorial(n + 1),
            Family::BijectionsFixingZero => bij * factorial(n),
            Family::Rotations => bij * (n + 1),
        }
    }

    fn sequences(&self, n: usize) -> Vec<Vec<u16>> {
        match self {
            Family::All | Family::Pointed | Family::Bijections => permutations(n + 1),
            Family::BijectionsFixingZero => permutations(n)
                .into_iter()
                .map(|p| std::iter::once(0).chain(p.into_iter().map(|v| v + 1)).collect())
                .collect(),
            Family::Cyclic | Family::PointedCyclic | Family::Rotations => (0..=n)
                .map(|k| (0..=n).map(|j| ((j + n + 1 - k) % (n + 1)) as u16).collect())
                .collect(),
            Family::Monotone => vec![(0..=n as u16).collect()],
        }
    }

    pub fn enumerate(&self, n: usize, m: usize) -> Vec<Payload> {
        let monos: Vec<Payload> = match self {
            Family::Bijections | Family::BijectionsFixingZero | Family::Rotations => {
                if n != m {
                    return Vec::new();
                }
                vec![(0..=n as u16).collect()]
            }
            _ => monotone_maps(n, m),
        };
        let mut out = Vec::with_capacity(self.hom_len(n, m));
        for seq in self.sequences(n) {
            for mono in &monos {
                if self.contains_monotone_part(mono, &seq, n, m) {
                    out.push(FiberOrderedMap::from_parts(mono, &seq, m).to_payload());
                }
            }
        }
        out
    }
}

/// σ_i : [n+1] → [n], merging i and i+1, as a fiber-ordered map.
pub fn sigma(n: usize, i: usize) -> FiberOrderedMap {
    FiberOrderedMap::monotone(&crate::fincat::builtins::sigma_payload(n, i), n)
}

/// δ_i : [n-1] → [n], missing i.
pub fn delta(n: usize, i: usize) -> FiberOrderedMap {
    FiberOrderedMap::monotone(&crate::fincat::builtins::delta_payload(n, i), n)
}

/// The cyclic operator `t_n` on `[n]`: the bijection `i ↦ i + 1 mod (n + 1)`.
///
/// Listing `[n]` in the order `t` puts it, i.e. `t⁻¹(0), t⁻¹(1), …`, gives `(n, 0, 1, …, n−1)`.
pub fn cyclic_operator(n: usize) -> FiberOrderedMap {
    let perm: Vec<u16> = (0..=n).map(|i| ((i + 1) % (n + 1)) as u16).collect();
    FiberOrderedMap::bijection(&perm)
}

/// The transposition of `j` and `j + 1` on `[n]`.
pub fn transposition(n: usize, j: usize) -> FiberOrderedMap {
    let mut perm: Vec<u16> = (0..=n as u16).collect();
    perm.swap(j, j + 1);
    FiberOrderedMap::bijection(&perm)
}

struct FamilyGen {
    family: Family,
    top: usize,
}

impl Generator for FamilyGen {
    fn name(&self) -> String {
        format!("{}<={}", self.family.label(), self.top)
    }
    fn n_objects(&self) -> usize {
        self.top + 1
    }
    fn enumerate(&self, x: usize, y: usize) -> Vec<Payload> {
        self.family.enumerate(x, y)
    }
    fn compose(&self, g: &Payload, f: &Payload, _x: usize, _y: usize, _z: usize) -> Payload {
        compose_payloads(g, f)
    }
    fn identity(&self, x: usize) -> Payload {
        FiberOrderedMap::monotone(&(0..=x as u16).collect::<Vec<_>>(), x).to_payload()
    }
    fn generating_set(&self) -> Option<Vec<(usize, usize, Payload)>> {
        Some(family_generators(self.family, self.top))
    }
    fn hom_len_hint(&self, x: usize, y: usize) -> Option<usize> {
        Some(self.family.hom_len(x, y))
    }
}

fn family_generators(family: Family, top: usize) -> Vec<(usize, usize, Payload)> {
    let mut gens: Vec<FiberOrderedMap> = Vec::new();
    let faces = |gens: &mut Vec<FiberOrderedMap>| {
        for n in 0..top {
            for i in 0..=n {
                gens.push(sigma(n, i));
            }
        }
        for n in 1..=top {
            for i in 0..=n {
                gens.push(delta(n, i));
            }
        }
    };
    let transpositions = |gens: &mut Vec<FiberOrderedMap>, from: usize| {
        for n in 0..=top {
            for j in from..n {
                gens.push(transposition(n, j));
            }
        }
    };
    let rotations = |gens: &mut Vec<FiberOrderedMap>| {
        for n in 1..=top {
            gens.push(cyclic_operator(n));
        }
    };
    let simplicial_op = |gens: &mut Vec<FiberOrderedMap>| {
        // images of the faces d_i, d_n and degeneracies s_i of Δ^op
        for n in 1..=top {
            for i in 0..n {
                gens.push(sigma(n - 1, i));
            }
            gens.push(sigma(n - 1, 0).compose(&cyclic_operator(n)));
        }
        for n in 0..top {
            for i in 0..=n {
                gens.push(delta(n + 1, i + 1));
            }
        }
    };
    match family {
        Family::All => {
            faces(&mut gens);
            transpositions(&mut gens, 0);
        }
        Family::Cyclic => {
            faces(&mut gens);
            rotations(&mut gens);
        }
        Family::Pointed => {
            simplicial_op(&mut gens);
            transpositions(&mut gens, 1);
        }
        Family::PointedCyclic => simplicial_op(&mut gens),
        Family::Monotone => faces(&mut gens),
        Family::Bijections => transpositions(&mut gens, 0),
        Family::BijectionsFixingZero => transpositions(&mut gens, 1),
        Family::Rotations => rotations(&mut gens),
    }
    gens.into_iter().map(|g| (g.dom(), g.cod(), g.to_payload())).collect()
}

/// The truncation `≤ N` of one of the fiber-ordered families.
pub fn family_category(family: Family, top: usize) -> FinCategory {
    FinCategory::from_generator(Arc::new(FamilyGen { family, top }))
}
