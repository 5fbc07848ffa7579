//! Built-in categories and crossed categories addressed by short names such as `f_as:4`.

use crate::crossed::{build_delta_c, build_delta_s, build_f_as, build_gamma_as, build_symmetric_crossed, CrossedCategory};
use crate::error::{Error, Result};
use crate::fincat::builtins::{build_delta_truncated, group_category, GroupTable};
use crate::fincat::FinCategory;

/// Names accepted by [`category_by_name`], each followed by `:N`.
pub const CATEGORY_NAMES: &[&str] =
    &["delta", "delta_op", "delta_c", "delta_c_op", "delta_s", "f_as", "gamma_as", "sigma", "cyclic"];

/// Names accepted by [`crossed_by_name`], each followed by `:N`.
pub const CROSSED_NAMES: &[&str] = &["delta_s", "delta_c", "f_as", "gamma_as", "sigma"];

fn split(spec: &str) -> Result<(&str, usize)> {
    let (name, n) = spec
        .split_once(':')
        .ok_or_else(|| Error::Input(format!("expected NAME:N, got `{spec}`")))?;
    let n = n.trim().parse().map_err(|_| Error::Input(format!("bad size in `{spec}`")))?;
    Ok((name.trim(), n))
}

pub fn crossed_by_name(spec: &str) -> Result<CrossedCategory> {
    let (name, n) = split(spec)?;
    match name {
        "delta_s" => build_delta_s(n),
        "delta_c" => build_delta_c(n),
        "f_as" => build_f_as(n),
        "gamma_as" => build_gamma_as(n),
        "sigma" if n >= 1 => build_symmetric_crossed(n),
        _ => Err(Error::Input(format!("unknown crossed category `{spec}`; known: {}", CROSSED_NAMES.join(", ")))),
    }
}

pub fn category_by_name(spec: &str) -> Result<FinCategory> {
    let (name, n) = split(spec)?;
    Ok(match name {
        "delta" => build_delta_truncated(n),
        "delta_op" => build_delta_truncated(n).opposite(),
        "delta_c_op" => build_delta_c(n)?.base().opposite(),
        "cyclic" if n >= 1 => group_category(GroupTable::cyclic(n), &format!("Z/{n}")),
        "delta_c" | "delta_s" | "f_as" | "gamma_as" | "sigma" => crossed_by_name(spec)?.base().clone(),
        _ => return Err(Error::Input(format!("unknown category `{spec}`; known: {}", CATEGORY_NAMES.join(", ")))),
    })
}
