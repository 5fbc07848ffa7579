use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::resolution::{CoverStrategy, Resolution};
use crate::catmod::{CatModule, Variance};
use crate::error::{Error, Result};
use crate::fincat::Morph;
use crate::linalg::{ChainComplex, Field, Mat};

/// Which argument of `Tor^B(M, N)` is resolved.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    /// Resolve the contravariant argument `M` and tensor with `N`.
    #[default]
    ResolveContravariant,
    /// Resolve the covariant argument `N` and tensor with `M`.
    ResolveCovariant,
}

/// The complex `P_* ⊗_B L` for a resolution `P_*` of a covariant module and a contravariant
/// module `L` over the same base, using `L ⊗ K[Hom(A, −)] = L(A)`.
pub fn tensor_with_resolution<F: Field>(res: &Resolution<F>, other: &CatModule<F>) -> Result<ChainComplex<F>> {
    if !res.base().same_as(other.base()) {
        return Err(Error::BaseMismatch(format!("{} vs {}", res.base().name(), other.base().name())));
    }
    if other.variance() != Variance::Contravariant {
        return Err(Error::BaseMismatch("the unresolved argument must be contravariant here".into()));
    }
    let field = other.field();
    let levels = res.levels();
    let block_offsets = |k: usize| -> Vec<usize> {
        let mut out = vec![0];
        for &a in levels[k].free.generators() {
            out.push(out.last().unwrap() + other.dim(a));
        }
        out
    };
    let offsets: Vec<Vec<usize>> = (0..levels.len()).map(block_offsets).collect();
    let spaces: Vec<usize> = offsets.iter().map(|o| *o.last().unwrap()).collect();
    let mut diffs = Vec::with_capacity(levels.len().saturating_sub(1));
    for k in 1..levels.len() {
        let (level, prev) = (&levels[k], &levels[k - 1]);
        let mut cache: FxHashMap<Morph, Mat<F>> = FxHashMap::default();
        let mut cols = Vec::with_capacity(spaces[k]);
        for (g, &a) in level.free.generators().iter().enumerate() {
            let prev_offsets = prev.free.offsets(a);
            let mut terms = Vec::new();
            for (i, c) in &level.images[g] {
                let (g2, idx) = prev.free.locate(&prev_offsets, *i as usize);
                let h = Morph::new(prev.free.generators()[g2], a, idx);
                terms.push((g2, h, c.clone()));
            }
            for j in 0..other.dim(a) {
                let mut entries = Vec::new();
                for (g2, h, c) in &terms {
                    let mat = cache.entry(*h).or_insert_with(|| other.action(*h));
                    for (r, v) in mat.col(j) {
                        entries.push(((offsets[k - 1][*g2] + *r as usize) as u32, field.mul(c, v)));
                    }
                }
                cols.push(crate::linalg::mat::collect_vec(field, entries));
            }
        }
        diffs.push(Mat::from_columns(field, spaces[k - 1], cols));
    }
    ChainComplex::new(field, spaces, diffs)
}

/// Dimensions of `Tor_0 … Tor_{max_degree}` of a contravariant `m` and a covariant `n`.
pub fn tor<F: Field>(
    m: &CatModule<F>,
    n: &CatModule<F>,
    max_degree: usize,
    side: Side,
    strategy: CoverStrategy,
) -> Result<Vec<usize>> {
    if !m.base().same_as(n.base()) {
        return Err(Error::BaseMismatch(format!("{} vs {}", m.base().name(), n.base().name())));
    }
    if m.variance() != Variance::Contravariant || n.variance() != Variance::Covariant {
        return Err(Error::BaseMismatch("Tor needs a contravariant and a covariant module".into()));
    }
    let field = m.field();
    let (resolved, other) = match side {
        Side::ResolveContravariant => (m.as_opposite(), n.as_opposite()),
        Side::ResolveCovariant => (n.clone(), m.clone()),
    };
    let res = Resolution::new(field, &resolved, max_degree + 1, strategy);
    let complex = tensor_with_resolution(&res, &other)?;
    complex.homology_dims(0..=max_degree)
}

/// Tor dimensions at a truncation level with the stabilization comparison against the next one.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TorReport {
    pub tor: Vec<usize>,
    pub degrees: [usize; 2],
    pub base: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stabilized_upto: Option<usize>,
}

/// Largest `d' ≤ d` such that the two lists agree in degrees `0..=d'`.
pub fn stabilized_upto(at_n: &[usize], at_next: &[usize], d: usize) -> Option<usize> {
    let agree = at_n.iter().zip(at_next).take(d + 1).take_while(|(a, b)| a == b).count();
    agree.checked_sub(1)
}

/// Runs `compute(N)` and `compute(N + 1)` and reports the values at `N` with the degree up to
/// which they agree. Fails with `MarginViolation` when `d > N − 2`.
pub fn tor_with_stabilization<Fn>(base: &str, top: usize, d: usize, mut compute: Fn) -> Result<TorReport>
where
    Fn: FnMut(usize) -> Result<Vec<usize>>,
{
    if d + 2 > top {
        return Err(Error::MarginViolation { max_degree: d, truncation: top });
    }
    let at_n = compute(top)?;
    let at_next = compute(top + 1)?;
    Ok(TorReport {
        stabilized_upto: stabilized_upto(&at_n, &at_next, d),
        tor: at_n,
        degrees: [0, d],
        base: base.to_string(),
        truncation: Some(top),
    })
}
