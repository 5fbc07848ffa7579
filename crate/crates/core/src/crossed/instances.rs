//! The concrete crossed categories ΔS, ΔC, F(as), Γ(as) and `Σ_n = ℤ/n ⋈ Σ_{n−1}`, and the
//! embeddings of ΔC^op and Δ^op realizing their `C` parts.

use rayon::prelude::*;

use super::fiber_ordered::{cyclic_operator, delta, family_category, sigma, Family, FiberOrderedMap};
use super::structure::{build_crossed, CrossedCategory};
use crate::error::Result;
use crate::fincat::builtins::{build_delta_truncated, delta_delta, delta_sigma, group_category, GroupTable};
use crate::fincat::{FinCategory, Functor, Morph};

fn family_members(base: &FinCategory, family: Family) -> Vec<Vec<u32>> {
    let n = base.n_objects();
    (0..n * n)
        .into_par_iter()
        .map(|k| {
            let (x, y) = (k / n, k % n);
            let mut idx: Vec<u32> = family
                .enumerate(x, y)
                .iter()
                .map(|p| base.find(x, y, p).expect("family member lies in the base").idx)
                .collect();
            idx.sort_unstable();
            idx
        })
        .collect()
}

fn crossed_families(name: String, base: Family, c: Family, d: Family, top: usize) -> Result<CrossedCategory> {
    let b = family_category(base, top);
    let c_homs = family_members(&b, c);
    let d_homs = family_members(&b, d);
    CrossedCategory::from_members(name, b, c_homs, d_homs)
}

/// ΔS_{≤N} = Δ ⋈ Σ_{•+1}: fiber-ordered maps, `C` = monotone maps, `D` = bijections.
pub fn build_delta_s(top: usize) -> Result<CrossedCategory> {
    crossed_families(format!("DeltaS<={top}"), Family::All, Family::Monotone, Family::Bijections, top)
}

/// ΔC_{≤N} = Δ ⋈ ℤ/(•+1), realized inside ΔS as the maps `Ψ ∘ t^k`.
pub fn build_delta_c(top: usize) -> Result<CrossedCategory> {
    crossed_families(format!("DeltaC<={top}"), Family::Cyclic, Family::Monotone, Family::Rotations, top)
}

/// F(as)_{≤N}: ΔS with `C` = image of ΔC^op and `D` = Σ_• (bijections fixing 0).
pub fn build_f_as(top: usize) -> Result<CrossedCategory> {
    crossed_families(format!("F(as)<={top}"), Family::All, Family::Cyclic, Family::BijectionsFixingZero, top)
}

/// Γ(as)_{≤N}: pointed fiber-ordered maps, `C` = image of Δ^op, `D` = Σ_•.
pub fn build_gamma_as(top: usize) -> Result<CrossedCategory> {
    crossed_families(
        format!("Gamma(as)<={top}"),
        Family::Pointed,
        Family::PointedCyclic,
        Family::BijectionsFixingZero,
        top,
    )
}

/// `Σ_n` on one object with `C` = powers of the cycle `(0 1 … n−1)` and `D` = the stabilizer of 0.
pub fn build_symmetric_crossed(n: usize) -> Result<CrossedCategory> {
    let (table, perms) = GroupTable::symmetric(n);
    let base = group_category(table, &format!("Sigma_{n}"));
    let rotation = |p: &[u16]| {
        let k = p.first().copied().unwrap_or(0) as usize;
        p.iter().enumerate().all(|(i, &v)| v as usize == (i + k) % n)
    };
    let c: Vec<bool> = perms.iter().map(|p| rotation(p)).collect();
    let d: Vec<bool> = perms.iter().map(|p| p.first().is_none_or(|&v| v == 0)).collect();
    build_crossed(&base, |m| c[m.idx as usize], |m| d[m.idx as usize])
}

/// The abstract cyclic category ΔC_{≤N}, with its standard generators.
pub fn delta_c_category(top: usize) -> FinCategory {
    family_category(Family::Cyclic, top)
}

/// The embedding `(ΔC_{≤N})^op → ΔS_{≤N}` on generators
/// `d_i ↦ σ_i (i < n)`, `d_n ↦ σ_0 ∘ t_n`, `s_i ↦ δ_{i+1}`, `t_n ↦ t_n`, extended to all
/// morphisms and verified functorial. Here `d_i`, `s_i` are the opposites of `δ_i`, `σ_i` in
/// [`delta_c_category`] and the cyclic generator of the opposite is the opposite of `t_n⁻¹`.
pub fn delta_c_op_embedding(top: usize, target: &FinCategory) -> Result<Functor> {
    let source = delta_c_category(top).opposite();
    let abstract_c = source.opposite();
    let mut images = Vec::new();
    let find_src = |f: &FiberOrderedMap| {
        FinCategory::op_morph(abstract_c.find(f.dom(), f.cod(), &f.to_payload()).expect("generator of ΔC"))
    };
    let find_tgt = |f: &FiberOrderedMap| target.find(f.dom(), f.cod(), &f.to_payload()).expect("image in target");
    for n in 1..=top {
        for i in 0..=n {
            let img = if i < n { sigma(n - 1, i) } else { sigma(n - 1, 0).compose(&cyclic_operator(n)) };
            images.push((find_src(&delta(n, i)), find_tgt(&img)));
        }
        let mut inverse = cyclic_operator(n);
        for _ in 1..n {
            inverse = inverse.compose(&cyclic_operator(n));
        }
        images.push((find_src(&inverse), find_tgt(&cyclic_operator(n))));
    }
    for n in 0..top {
        for i in 0..=n {
            images.push((find_src(&sigma(n, i)), find_tgt(&delta(n + 1, i + 1))));
        }
    }
    Functor::from_generators(&source, target, (0..=top).collect(), &images)
}

/// The embedding `(Δ_{≤N})^op → Γ(as)_{≤N}` on generators
/// `d_i ↦ σ_i (i < n)`, `d_n ↦ σ_0 ∘ t_n`, `s_i ↦ δ_{i+1}`.
pub fn delta_op_embedding(top: usize, target: &FinCategory) -> Result<Functor> {
    let simplex = build_delta_truncated(top);
    let source = simplex.opposite();
    let find_tgt = |f: &FiberOrderedMap| target.find(f.dom(), f.cod(), &f.to_payload()).expect("image in target");
    let mut images = Vec::new();
    for n in 1..=top {
        for i in 0..=n {
            let img = if i < n { sigma(n - 1, i) } else { sigma(n - 1, 0).compose(&cyclic_operator(n)) };
            images.push((FinCategory::op_morph(delta_delta(&simplex, n, i)), find_tgt(&img)));
        }
    }
    for n in 0..top {
        for i in 0..=n {
            images.push((FinCategory::op_morph(delta_sigma(&simplex, n, i)), find_tgt(&delta(n + 1, i + 1))));
        }
    }
    Functor::from_generators(&source, target, (0..=top).collect(), &images)
}

/// The image of a functor as sorted member lists per hom-set of its target.
pub fn image_members(functor: &Functor) -> Vec<Vec<u32>> {
    let t = functor.target();
    let n = t.n_objects();
    let mut out = vec![Vec::new(); n * n];
    for m in functor.source().all_morphisms() {
        let img: Morph = functor.map(m).expect("total functor");
        out[img.dom() * n + img.cod()].push(img.idx);
    }
    for list in &mut out {
        list.sort_unstable();
        list.dedup();
    }
    out
}
