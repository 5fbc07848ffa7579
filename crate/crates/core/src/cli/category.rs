use std::path::Path;

use functor_tor::catalog::crossed_by_name;
use functor_tor::crossed::check_crossed_laws;
use functor_tor::fincat::validate_category_within;
use functor_tor::report::{Report, RunConfig};
use functor_tor::{Error, Result};
use serde_json::json;

use super::inputs::group_from_file;

/// Failures listed in full in a report; the rest are counted.
const WITNESS_LIMIT: usize = 20;

/// Associativity triples checked before switching to seeded sampling.
const TRIPLE_BUDGET: u128 = 2_000_000;

pub fn run(kind: &str, n: Option<usize>, seed: u64, mut cfg: RunConfig) -> Result<Report> {
    cfg.inputs = vec![kind.to_string()];
    let (category, crossed) = if let Some(path) = kind.strip_prefix("group:") {
        (group_from_file(Path::new(path))?, None)
    } else {
        let n = n.unwrap_or(3);
        cfg.truncation = Some(n);
        match kind {
            "delta" | "cyclic" => (functor_tor::catalog::category_by_name(&format!("{kind}:{n}"))?, None),
            "delta_s" | "delta_c" | "f_as" | "gamma_as" | "sym" => {
                let name = if kind == "sym" { "sigma" } else { kind };
                if name == "sigma" && n == 0 {
                    return Err(Error::Input("sym needs n ≥ 1".into()));
                }
                let x = crossed_by_name(&format!("{name}:{n}"))?;
                (x.base().clone(), Some(x))
            }
            other => {
                return Err(Error::Input(format!(
                    "unknown category kind `{other}`; expected delta, delta_s, delta_c, f_as, gamma_as, sym, cyclic or group:<file>"
                )))
            }
        }
    };

    let mut report = Report::new(format!("category {kind}"), cfg);
    let objects = category.n_objects();
    let sizes: Vec<Vec<usize>> =
        (0..objects).map(|x| (0..objects).map(|y| category.hom_len(x, y)).collect()).collect();
    report.table("hom_sizes", &sizes);
    report.table("name", category.name());

    let (violations, coverage) =
        report.timed("category_axioms", || validate_category_within(&category, TRIPLE_BUDGET, seed));
    report.check(
        "category_axioms",
        violations.is_empty(),
        json!({
            "morphisms": category.total_morphisms(),
            "coverage": coverage,
            "violations": violations.len(),
            "witnesses": &violations[..violations.len().min(WITNESS_LIMIT)],
        }),
    );
    if let Some(x) = crossed {
        let violations = report.timed("crossed_laws", || check_crossed_laws(&x));
        report.check(
            "crossed_laws",
            violations.is_empty(),
            json!({
                "violations": violations.len(),
                "witnesses": &violations[..violations.len().min(WITNESS_LIMIT)],
            }),
        );
    }
    Ok(report)
}
