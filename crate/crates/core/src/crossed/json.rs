//! JSON for crossed categories: the category format plus member id lists and, optionally,
//! explicit action entries that replace the derived ones.

use serde::{Deserialize, Serialize};

use super::structure::{build_crossed, CrossedCategory};
use crate::error::Result;
use crate::fincat::json::{from_json, morph_from_id, to_json, CategoryJson};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrossedJson {
    #[serde(flatten)]
    pub category: CategoryJson,
    pub c_members: Vec<usize>,
    pub d_members: Vec<usize>,
    /// `[f, psi, f_*(psi), psi^*(f)]` entries overriding the derived action.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub act_overrides: Vec<[usize; 4]>,
}

pub fn crossed_to_json(x: &CrossedCategory) -> CrossedJson {
    let (c_members, d_members) = x.member_ids();
    CrossedJson { category: to_json(x.base()), c_members, d_members, act_overrides: Vec::new() }
}

pub fn crossed_from_json(j: &CrossedJson) -> Result<CrossedCategory> {
    let base = from_json(&j.category)?;
    let ids = |list: &[usize]| -> Result<std::collections::HashSet<_>> {
        list.iter().map(|&i| morph_from_id(&base, i)).collect()
    };
    let (c, d) = (ids(&j.c_members)?, ids(&j.d_members)?);
    let mut x = build_crossed(&base, |m| c.contains(&m), |m| d.contains(&m))?;
    for &[f, psi, lower, upper] in &j.act_overrides {
        let m = |i| morph_from_id(&base, i);
        x = x.with_overridden_action(m(f)?, m(psi)?, m(lower)?, m(upper)?);
    }
    Ok(x)
}
