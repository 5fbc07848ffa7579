//! Resolution of category and module specifications given on the command line.

use std::path::Path;

use functor_tor::catalog::category_by_name;
use functor_tor::catmod::json::{module_from_json_over, ModuleJson};
use functor_tor::catmod::{make_representable, make_trivial, CatModule, Variance};
use functor_tor::fincat::{build_group_category, FinCategory};
use functor_tor::hochschild::{
    algebra_from_json, bimodule_from_json, cyclic_structure_over, factor_through_over, loday_functor_over, AlgebraJson,
    BimoduleJson, FactorTarget,
};
use functor_tor::linalg::Field;
use functor_tor::pseudoadj::build_b_module;
use functor_tor::{Error, Result};
use serde::Deserialize;

use super::read_json;

/// Built-in families that are truncations of infinite categories.
const TRUNCATED: &[&str] = &["delta", "delta_op", "delta_c", "delta_c_op", "delta_s", "f_as", "gamma_as"];

/// A base category named on the command line, rebuildable at other truncations.
#[derive(Clone, Debug)]
pub enum CategorySpec {
    Builtin { name: String, n: usize },
    Group { path: String },
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupFile {
    Table(Vec<Vec<usize>>),
    Wrapped { table: Vec<Vec<usize>> },
}

pub fn group_from_file(path: &Path) -> Result<FinCategory> {
    let table = match read_json::<GroupFile>(path)? {
        GroupFile::Table(t) | GroupFile::Wrapped { table: t } => t,
    };
    build_group_category(table)
}

impl CategorySpec {
    /// Parses `name:N`, `name` (with `fallback_n`) or `group:<file>`.
    pub fn parse(spec: &str, fallback_n: Option<usize>) -> Result<Self> {
        if let Some(path) = spec.strip_prefix("group:") {
            return Ok(CategorySpec::Group { path: path.to_string() });
        }
        let (name, n) = match spec.split_once(':') {
            Some((name, n)) => (name, n.parse().map_err(|_| Error::Input(format!("bad size in `{spec}`")))?),
            None => (spec, fallback_n.ok_or_else(|| Error::Input(format!("`{spec}` needs a size, as `{spec}:N` or --N")))?),
        };
        Ok(CategorySpec::Builtin { name: name.to_string(), n })
    }

    pub fn truncation(&self) -> Option<usize> {
        match self {
            CategorySpec::Builtin { name, n } if TRUNCATED.contains(&name.as_str()) => Some(*n),
            _ => None,
        }
    }

    pub fn label(&self) -> String {
        match self {
            CategorySpec::Builtin { name, n } => format!("{name}:{n}"),
            CategorySpec::Group { path } => format!("group:{path}"),
        }
    }

    pub fn family(&self) -> &str {
        match self {
            CategorySpec::Builtin { name, .. } => name,
            CategorySpec::Group { .. } => "group",
        }
    }

    pub fn build_at(&self, n: usize) -> Result<FinCategory> {
        match self {
            CategorySpec::Builtin { name, .. } => category_by_name(&format!("{name}:{n}")),
            CategorySpec::Group { path } => group_from_file(Path::new(path)),
        }
    }

    pub fn build(&self) -> Result<FinCategory> {
        match self {
            CategorySpec::Builtin { n, .. } => self.build_at(*n),
            CategorySpec::Group { .. } => self.build_at(0),
        }
    }
}

/// A module named on the command line.
#[derive(Clone, Debug)]
pub enum ModuleSpec {
    Trivial,
    Representable(usize),
    CyclicWords,
    Loday { algebra: String, bimodule: Option<String> },
    File(String),
}

impl ModuleSpec {
    pub fn parse(spec: &str) -> Result<Self> {
        Ok(match spec {
            "trivial" => ModuleSpec::Trivial,
            "b" => ModuleSpec::CyclicWords,
            _ => {
                if let Some(a) = spec.strip_prefix("rep:") {
                    ModuleSpec::Representable(a.parse().map_err(|_| Error::Input(format!("bad object in `{spec}`")))?)
                } else if let Some(rest) = spec.strip_prefix("loday:") {
                    let mut parts = rest.splitn(2, ',');
                    let algebra = parts.next().unwrap_or_default().to_string();
                    ModuleSpec::Loday { algebra, bimodule: parts.next().map(str::to_string) }
                } else {
                    ModuleSpec::File(spec.to_string())
                }
            }
        })
    }

    /// Whether the module can be rebuilt over the same family at another truncation.
    pub fn rebuildable(&self) -> bool {
        !matches!(self, ModuleSpec::File(_))
    }

    pub fn build<F: Field>(&self, field: &F, category: &CategorySpec, base: &FinCategory, variance: Variance) -> Result<CatModule<F>> {
        let module = match self {
            ModuleSpec::Trivial => make_trivial(field, base, variance),
            ModuleSpec::Representable(a) => {
                if *a >= base.n_objects() {
                    return Err(Error::Input(format!("object {a} is not in {}", base.name())));
                }
                make_representable(field, base, *a, variance)
            }
            ModuleSpec::CyclicWords => {
                if variance != Variance::Contravariant {
                    return Err(Error::Input("b is contravariant; use it as --left".into()));
                }
                build_b_module(field, base)?
            }
            ModuleSpec::Loday { algebra, bimodule } => {
                if variance != Variance::Covariant {
                    return Err(Error::Input("loday modules are covariant; use them as --right".into()));
                }
                let a = algebra_from_json(field, &read_json::<AlgebraJson>(Path::new(algebra))?)?;
                let m = match bimodule {
                    Some(path) => bimodule_from_json(&a, &read_json::<BimoduleJson>(Path::new(path))?)?,
                    None => a.regular_bimodule(),
                };
                match category.family() {
                    "gamma_as" => factor_through_over(&a, &m, base, FactorTarget::GammaAs)?,
                    "f_as" => factor_through_over(&a, &m, base, FactorTarget::FAs)?,
                    "delta_op" => loday_functor_over(&a, &m, base)?,
                    "delta_c_op" if bimodule.is_none() => cyclic_structure_over(&a, base)?,
                    other => {
                        return Err(Error::Input(format!(
                            "loday modules live over gamma_as, f_as, delta_op or delta_c_op (with no bimodule), not {other}"
                        )))
                    }
                }
            }
            ModuleSpec::File(path) => {
                let j: ModuleJson = read_json(Path::new(path))?;
                let m = module_from_json_over(field, &j, base, &category.label())?;
                if m.variance() != variance {
                    return Err(Error::BaseMismatch(format!("{path} has the wrong variance for this argument")));
                }
                m
            }
        };
        Ok(module)
    }
}
