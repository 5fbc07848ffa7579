//! JSON module format:
//! `{ "category": "f_as:3" | {inline category}, "variance": "co" | "contra",
//!    "dims": [...], "action": { "<morphism id>": [[entry, ...], ...] } }`.
//! Entries are integers or strings such as `"-3/4"`. The listed morphisms must generate
//! the category; the remaining matrices are obtained by composition.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::module::{CatModule, Variance};
use crate::catalog::category_by_name;
use crate::error::{Error, Result};
use crate::fincat::json::{from_json as category_from_json, morph_from_id, to_json as category_to_json, CategoryJson};
use crate::fincat::FinCategory;
use crate::linalg::field::parse_rational;
use crate::linalg::{Field, Mat};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategoryRef {
    Named(String),
    Inline(CategoryJson),
}

impl CategoryRef {
    pub fn resolve(&self) -> Result<FinCategory> {
        match self {
            CategoryRef::Named(name) => category_by_name(name),
            CategoryRef::Inline(j) => category_from_json(j),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleJson {
    pub category: CategoryRef,
    pub variance: Variance,
    pub dims: Vec<usize>,
    pub action: BTreeMap<String, Vec<Vec<Entry>>>,
}

pub(crate) fn parse_entry<F: Field>(field: &F, e: &Entry) -> Result<F::Elem> {
    match e {
        Entry::Int(v) => Ok(field.from_i64(*v)),
        Entry::Text(s) => {
            let q = parse_rational(s)?;
            field.from_ratio(q.numer(), q.denom())
        }
    }
}

pub fn module_from_json<F: Field>(field: &F, j: &ModuleJson) -> Result<CatModule<F>> {
    module_over(field, j, &j.category.resolve()?)
}

/// Loads a module over an already built category named `spec`; the JSON must refer to the
/// same category, by that name or inline.
pub fn module_from_json_over<F: Field>(field: &F, j: &ModuleJson, base: &FinCategory, spec: &str) -> Result<CatModule<F>> {
    let matches = match &j.category {
        CategoryRef::Named(name) => name == spec,
        CategoryRef::Inline(inline) => {
            serde_json::to_value(inline)? == serde_json::to_value(category_to_json(base))?
        }
    };
    if !matches {
        return Err(Error::BaseMismatch(format!("module JSON is not over {spec}")));
    }
    module_over(field, j, base)
}

fn module_over<F: Field>(field: &F, j: &ModuleJson, base: &FinCategory) -> Result<CatModule<F>> {
    let base = base.clone();
    let mut generators = Vec::new();
    for (id, rows) in &j.action {
        let id: usize = id.parse().map_err(|_| Error::Input(format!("morphism id `{id}` is not a number")))?;
        let m = morph_from_id(&base, id)?;
        let width = rows.first().map_or(0, Vec::len);
        let parsed = rows
            .iter()
            .map(|r| {
                if r.len() != width {
                    return Err(Error::Input(format!("ragged matrix for morphism {id}")));
                }
                r.iter().map(|e| parse_entry(field, e)).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mat = if parsed.is_empty() {
            let (r, c) = match j.variance {
                Variance::Covariant => (j.dims[m.cod()], j.dims[m.dom()]),
                Variance::Contravariant => (j.dims[m.dom()], j.dims[m.cod()]),
            };
            Mat::zeros(field, r, c)
        } else {
            Mat::from_rows(field, width, &parsed)
        };
        generators.push((m, mat));
    }
    CatModule::from_generators(field, &base, j.variance, j.dims.clone(), &generators)
}

/// Exports the matrices of the generating morphisms; `category` defaults to an inline copy.
pub fn module_to_json<F: Field>(m: &CatModule<F>, category: Option<String>) -> ModuleJson {
    let base = m.base();
    let mut action = BTreeMap::new();
    for g in base.generating_morphisms() {
        let rows = m
            .action(g)
            .to_scalar_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|s| Entry::Text(s.to_string())).collect())
            .collect();
        action.insert(base.global_id(g).to_string(), rows);
    }
    ModuleJson {
        category: category.map_or_else(|| CategoryRef::Inline(category_to_json(base)), CategoryRef::Named),
        variance: m.variance(),
        dims: m.dims().to_vec(),
        action,
    }
}
