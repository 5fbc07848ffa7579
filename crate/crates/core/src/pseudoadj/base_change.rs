use serde::Serialize;

use super::pseudo_free::{forget_to_c, pseudo_free};
use crate::catmod::CatModule;
use crate::crossed::CrossedCategory;
use crate::error::Result;
use crate::linalg::Field;
use crate::tor::{tor, CoverStrategy, Side};

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BaseChangeReport {
    /// `Tor^B(L_D(a), b)`
    pub left: Vec<usize>,
    /// `Tor^C(a, O(b))`
    pub right: Vec<usize>,
    pub agree: bool,
    /// set when the base is a truncation, where disagreement near the top can be an
    /// artifact of truncation rather than a failure
    pub truncated: bool,
}

/// Computes both sides of `Tor^B(L_D(a), b) ≅ Tor^C(a, O(b))` independently.
pub fn base_change_check<F: Field>(
    x: &CrossedCategory,
    a: &CatModule<F>,
    b: &CatModule<F>,
    max_degree: usize,
    side: Side,
    strategy: CoverStrategy,
) -> Result<BaseChangeReport> {
    let left = tor(&pseudo_free(x, a)?, b, max_degree, side, strategy)?;
    let right = tor(a, &forget_to_c(x, b)?, max_degree, side, strategy)?;
    Ok(BaseChangeReport {
        agree: left == right,
        left,
        right,
        truncated: x.name().contains("<="),
    })
}
