use functor_tor::catmod::Variance;
use functor_tor::linalg::Field;
use functor_tor::report::{Report, RunConfig};
use functor_tor::tor::{tor, tor_with_stabilization, CoverStrategy, Side, TorReport};
use functor_tor::{Error, Result};

use super::inputs::{CategorySpec, ModuleSpec};
use super::GlobalArgs;

pub fn run<F: Field>(
    field: &F,
    category: &str,
    left: &str,
    right: &str,
    g: &GlobalArgs,
    mut cfg: RunConfig,
) -> Result<Report> {
    let spec = CategorySpec::parse(category, g.truncation)?;
    let (left_spec, right_spec) = (ModuleSpec::parse(left)?, ModuleSpec::parse(right)?);
    let side: Side = g.side.into();
    let truncation = spec.truncation();
    let d = g.max_degree.unwrap_or_else(|| truncation.map_or(2, |n| n.saturating_sub(2)));
    cfg.truncation = truncation;
    cfg.max_degree = Some(d);

    let compute = |base_n: Option<usize>| -> Result<Vec<usize>> {
        let base = match base_n {
            Some(n) => spec.build_at(n)?,
            None => spec.build()?,
        };
        let at = match base_n {
            Some(n) => CategorySpec::parse(spec.family(), Some(n))?,
            None => spec.clone(),
        };
        let m = left_spec.build(field, &at, &base, Variance::Contravariant)?;
        let n = right_spec.build(field, &at, &base, Variance::Covariant)?;
        tor(&m, &n, d, side, CoverStrategy::Greedy)
    };

    let mut report = Report::new("tor", cfg);
    let result = report.timed("tor", || -> Result<TorReport> {
        match truncation {
            Some(top) if left_spec.rebuildable() && right_spec.rebuildable() => {
                tor_with_stabilization(&spec.label(), top, d, |n| compute(Some(n)))
            }
            Some(top) => {
                if d + 2 > top {
                    return Err(Error::MarginViolation { max_degree: d, truncation: top });
                }
                Ok(TorReport {
                    tor: compute(None)?,
                    degrees: [0, d],
                    base: spec.label(),
                    truncation: Some(top),
                    stabilized_upto: None,
                })
            }
            None => Ok(TorReport {
                tor: compute(None)?,
                degrees: [0, d],
                base: spec.label(),
                truncation: None,
                stabilized_upto: None,
            }),
        }
    })?;
    report.table("tor", &result);
    report.table("side", side);
    Ok(report)
}
