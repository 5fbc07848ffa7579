use std::path::{Path, PathBuf};

use clap::ValueEnum;
use functor_tor::hochschild::{
    algebra_from_json, bimodule_from_json, compare_cyclic, compare_hochschild, cyclic_functor_routes, cyclic_oracle,
    hochschild_functor_routes, hochschild_oracle, AlgebraJson, BimoduleJson,
};
use functor_tor::linalg::Field;
use functor_tor::report::{Report, RunConfig};
use functor_tor::tor::Side;
use functor_tor::{Error, Result};

use super::{config, read_json, with_field, Cli, FieldChoice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Hochschild,
    Cyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Functor,
    Oracle,
    Both,
}

pub fn run(args: &Cli, kind: Kind, algebra: &Path, bimodule: Option<&PathBuf>, via: Via) -> Result<Report> {
    let g = &args.global;
    let aj: AlgebraJson = read_json(algebra)?;
    let field = FieldChoice::from_tag(aj.field_tag()?)?;
    if g.field.is_some() || g.p.is_some() {
        let requested = FieldChoice::from_args(g.field.as_deref(), g.p)?;
        if requested.tag() != field.tag() {
            return Err(Error::FieldMismatch {
                expected: format!("{:?}", requested.tag()),
                found: format!("{:?} in {}", field.tag(), algebra.display()),
            });
        }
    }
    if kind == Kind::Cyclic && bimodule.is_some() {
        return Err(Error::Input("cyclic homology takes no bimodule".into()));
    }
    let bj: Option<BimoduleJson> = bimodule.map(|p| read_json(p)).transpose()?;
    let d = g.max_degree.unwrap_or(2);
    let top = g.truncation.unwrap_or(d + 2);
    let mut cfg = config(args, &field);
    cfg.truncation = if via == Via::Oracle { None } else { Some(top) };
    cfg.max_degree = Some(d);
    cfg.inputs = std::iter::once(algebra).chain(bimodule.map(PathBuf::as_path)).map(|p| p.display().to_string()).collect();
    with_field!(&field, |f| compute(f, kind, &aj, bj.as_ref(), via, top, d, g.side.into(), cfg))
}

#[allow(clippy::too_many_arguments)]
fn compute<F: Field>(
    field: &F,
    kind: Kind,
    aj: &AlgebraJson,
    bj: Option<&BimoduleJson>,
    via: Via,
    top: usize,
    d: usize,
    side: Side,
    cfg: RunConfig,
) -> Result<Report> {
    let a = algebra_from_json(field, aj)?;
    let m = match bj {
        Some(j) => bimodule_from_json(&a, j)?,
        None => a.regular_bimodule(),
    };
    let name = match kind {
        Kind::Hochschild => "homology hochschild",
        Kind::Cyclic => "homology cyclic",
    };
    let mut report = Report::new(name, cfg);
    match via {
        Via::Oracle => {
            let dims = report.timed("oracle", || match kind {
                Kind::Hochschild => hochschild_oracle(&a, &m, d),
                Kind::Cyclic => cyclic_oracle(&a, d),
            })?;
            report.table("oracle", dims);
        }
        Via::Functor => {
            let (crossed, simplicial) = report.timed("functor", || match kind {
                Kind::Hochschild => hochschild_functor_routes(&a, &m, top, d, side),
                Kind::Cyclic => cyclic_functor_routes(&a, top, d, side),
            })?;
            report.check("routes agree", crossed.tor == simplicial.tor, (&crossed.tor, &simplicial.tor));
            report.table("crossed", crossed);
            report.table("simplicial", simplicial);
        }
        Via::Both => {
            let c = report.timed("all routes", || match kind {
                Kind::Hochschild => compare_hochschild(&a, &m, top, d, side),
                Kind::Cyclic => compare_cyclic(&a, top, d, side),
            })?;
            for (k, ok) in c.agree.iter().enumerate() {
                report.check(
                    format!("degree {k}"),
                    *ok,
                    [c.crossed.tor[k], c.simplicial.tor[k], c.oracle[k]],
                );
            }
            report.check(
                "stabilized",
                c.stabilized,
                [c.crossed.stabilized_upto, c.simplicial.stabilized_upto],
            );
            report.table("crossed", &c.crossed);
            report.table("simplicial", &c.simplicial);
            report.table("oracle", &c.oracle);
        }
    }
    Ok(report)
}
