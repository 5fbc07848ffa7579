use serde::Serialize;

use super::algebra::{AlgebraData, BimoduleData};
use super::loday::{cyclic_structure_over, factor_through_over, loday_functor_over, FactorTarget};
use super::oracle::{cyclic_oracle, hochschild_oracle};
use crate::catmod::{make_trivial, Variance};
use crate::crossed::{delta_c_category, family_category, Family};
use crate::error::Result;
use crate::fincat::build_delta_truncated;
use crate::linalg::Field;
use crate::pseudoadj::build_b_module;
use crate::tor::{tor, tor_with_stabilization, CoverStrategy, Side, TorReport};

/// The three computations of Hochschild or cyclic homology side by side.
#[derive(Clone, Debug, Serialize)]
pub struct HomologyComparison {
    /// Tor over Γ(as) with `b̄`, or over F(as) with `b`
    pub crossed: TorReport,
    /// Tor over `Δ^op` or `ΔC^op` with the trivial module
    pub simplicial: TorReport,
    pub oracle: Vec<usize>,
    pub agree: Vec<bool>,
    pub stabilized: bool,
    pub holds: bool,
}

fn compare(crossed: TorReport, simplicial: TorReport, oracle: Vec<usize>, d: usize) -> HomologyComparison {
    let agree: Vec<bool> =
        (0..=d).map(|k| crossed.tor[k] == simplicial.tor[k] && simplicial.tor[k] == oracle[k]).collect();
    let stabilized = [&crossed, &simplicial].iter().all(|r| r.stabilized_upto == Some(d));
    let holds = stabilized && agree.iter().all(|&a| a);
    HomologyComparison { crossed, simplicial, oracle, agree, stabilized, holds }
}

/// `Tor^{Γ(as)≤N}(b̄, L(A, M))` and `Tor^{Δ^op≤N}(K, L(A, M))` in degrees `0..=d`, each
/// repeated at `N + 1`.
pub fn hochschild_functor_routes<F: Field>(
    a: &AlgebraData<F>,
    m: &BimoduleData<F>,
    top: usize,
    d: usize,
    side: Side,
) -> Result<(TorReport, TorReport)> {
    let field = a.field();
    let crossed = tor_with_stabilization("Gamma(as)", top, d, |n| {
        let base = family_category(Family::Pointed, n);
        let b = build_b_module(field, &base)?;
        let l = factor_through_over(a, m, &base, FactorTarget::GammaAs)?;
        tor(&b, &l, d, side, CoverStrategy::Greedy)
    })?;
    let simplicial = tor_with_stabilization("Delta^op", top, d, |n| {
        let base = build_delta_truncated(n).opposite();
        let l = loday_functor_over(a, m, &base)?;
        tor(&make_trivial(field, &base, Variance::Contravariant), &l, d, side, CoverStrategy::Greedy)
    })?;
    Ok((crossed, simplicial))
}

/// `Tor^{F(as)≤N}(b, L(A, A))` and `Tor^{ΔC^op≤N}(K, L(A, A))` in degrees `0..=d`, each
/// repeated at `N + 1`.
pub fn cyclic_functor_routes<F: Field>(a: &AlgebraData<F>, top: usize, d: usize, side: Side) -> Result<(TorReport, TorReport)> {
    let field = a.field();
    let regular = a.regular_bimodule();
    let crossed = tor_with_stabilization("F(as)", top, d, |n| {
        let base = family_category(Family::All, n);
        let b = build_b_module(field, &base)?;
        let l = factor_through_over(a, &regular, &base, FactorTarget::FAs)?;
        tor(&b, &l, d, side, CoverStrategy::Greedy)
    })?;
    let simplicial = tor_with_stabilization("DeltaC^op", top, d, |n| {
        let base = delta_c_category(n).opposite();
        let l = cyclic_structure_over(a, &base)?;
        tor(&make_trivial(field, &base, Variance::Contravariant), &l, d, side, CoverStrategy::Greedy)
    })?;
    Ok((crossed, simplicial))
}

/// `HH_*(A, M)` in degrees `0..=d` by both functor routes and the Hochschild complex.
pub fn compare_hochschild<F: Field>(
    a: &AlgebraData<F>,
    m: &BimoduleData<F>,
    top: usize,
    d: usize,
    side: Side,
) -> Result<HomologyComparison> {
    let (crossed, simplicial) = hochschild_functor_routes(a, m, top, d, side)?;
    Ok(compare(crossed, simplicial, hochschild_oracle(a, m, d)?, d))
}

/// `HC_*(A)` in degrees `0..=d` by both functor routes and the cyclic bicomplex.
pub fn compare_cyclic<F: Field>(a: &AlgebraData<F>, top: usize, d: usize, side: Side) -> Result<HomologyComparison> {
    let (crossed, simplicial) = cyclic_functor_routes(a, top, d, side)?;
    Ok(compare(crossed, simplicial, cyclic_oracle(a, d)?, d))
}
