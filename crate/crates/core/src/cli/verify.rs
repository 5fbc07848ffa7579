use std::path::PathBuf;

use clap::ValueEnum;
use functor_tor::catalog::crossed_by_name;
use functor_tor::catmod::{make_representable, make_trivial, CatModule, Variance};
use functor_tor::crossed::json::{crossed_from_json, CrossedJson};
use functor_tor::crossed::{check_crossed_laws, CrossedCategory, Part};
use functor_tor::fincat::{build_delta_truncated, factorial, group_category, GroupTable};
use functor_tor::linalg::{Field, Mat};
use functor_tor::pseudoadj::{
    adjunction_check, base_change_check, build_b_module, check_cyclic_order_representables, iso_is_natural, pseudo_adjunction_iso,
};
use functor_tor::report::{Report, RunConfig};
use functor_tor::tor::{check_hom_tensor_duality, hom_over_category, CoverStrategy, Side};
use functor_tor::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::read_json;

const WITNESS_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    CrossedLaws,
    #[value(name = "lemma-2-2")]
    Duality,
    #[value(name = "thm-2-3")]
    Adjunction,
    PseudoAdjunction,
    BaseChange,
    #[value(name = "prop-3-4")]
    CyclicOrders,
    All,
}

impl Suite {
    fn label(self) -> &'static str {
        match self {
            Suite::CrossedLaws => "crossed-laws",
            Suite::Duality => "lemma-2-2",
            Suite::Adjunction => "thm-2-3",
            Suite::PseudoAdjunction => "pseudo-adjunction",
            Suite::BaseChange => "base-change",
            Suite::CyclicOrders => "prop-3-4",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub truncation: usize,
    pub max_degree: Option<usize>,
    pub seed: u64,
    pub samples: usize,
    pub group: Option<String>,
    pub crossed: Option<PathBuf>,
    pub side: Side,
}

pub fn run<F: Field>(field: &F, suite: Suite, opts: &Options, mut cfg: RunConfig) -> Result<Report> {
    cfg.truncation = Some(opts.truncation);
    let mut report = Report::new(format!("verify {}", suite.label()), cfg);
    let selected: Vec<Suite> = match suite {
        Suite::All => vec![
            Suite::CrossedLaws,
            Suite::Duality,
            Suite::Adjunction,
            Suite::PseudoAdjunction,
            Suite::BaseChange,
            Suite::CyclicOrders,
        ],
        one => vec![one],
    };
    for s in selected {
        let start = std::time::Instant::now();
        match s {
            Suite::CrossedLaws => crossed_laws(opts, &mut report)?,
            Suite::Duality => duality(field, &mut report)?,
            Suite::Adjunction => adjunction(field, opts, &mut report)?,
            Suite::PseudoAdjunction => pseudo_adjunction(field, opts, &mut report)?,
            Suite::BaseChange => base_change(field, opts, &mut report)?,
            Suite::CyclicOrders => cyclic_orders(field, opts, &mut report)?,
            Suite::All => unreachable!(),
        }
        report.timings_ms.insert(s.label().to_string(), start.elapsed().as_millis() as u64);
    }
    Ok(report)
}

fn crossed(spec: &str) -> Result<CrossedCategory> {
    crossed_by_name(spec)
}

fn crossed_laws(opts: &Options, report: &mut Report) -> Result<()> {
    let targets: Vec<(String, CrossedCategory)> = match &opts.crossed {
        Some(path) => {
            let j: CrossedJson = read_json(path)?;
            vec![(path.display().to_string(), crossed_from_json(&j)?)]
        }
        None => {
            let n = opts.truncation;
            let mut specs: Vec<String> =
                ["delta_s", "delta_c", "f_as", "gamma_as"].iter().map(|k| format!("{k}:{n}")).collect();
            specs.extend((2..=5).map(|k| format!("sigma:{k}")));
            specs.into_iter().map(|s| crossed(&s).map(|x| (s, x))).collect::<Result<_>>()?
        }
    };
    for (label, x) in targets {
        let violations = check_crossed_laws(&x);
        let mut laws: Vec<&str> = violations.iter().map(|v| v.law).collect();
        laws.dedup();
        report.check(
            format!("crossed-laws {label}"),
            violations.is_empty(),
            json!({
                "violations": violations.len(),
                "laws": laws,
                "witnesses": &violations[..violations.len().min(WITNESS_LIMIT)],
            }),
        );
    }
    Ok(())
}

fn duality<F: Field>(field: &F, report: &mut Report) -> Result<()> {
    let one = group_category(GroupTable::cyclic(1), "1");
    let z3 = group_category(GroupTable::cyclic(3), "Z/3");
    let delta = build_delta_truncated(2);
    let cases = [
        ("point trivial", make_trivial(field, &one, Variance::Contravariant), make_trivial(field, &one, Variance::Covariant), 1),
        ("Z/3 regular", make_trivial(field, &z3, Variance::Contravariant), make_representable(field, &z3, 0, Variance::Covariant), 1),
        (
            "delta:2 representables at [1]",
            make_representable(field, &delta, 1, Variance::Contravariant),
            make_representable(field, &delta, 1, Variance::Covariant),
            2,
        ),
    ];
    for (label, n, m, v) in cases {
        let r = check_hom_tensor_duality(&n, &m, v)?;
        report.check(format!("lemma-2-2 {label}"), r.holds, &r);
    }
    Ok(())
}

fn zero_module<F: Field>(field: &F, base: &functor_tor::fincat::FinCategory, variance: Variance) -> CatModule<F> {
    let f = field.clone();
    CatModule::from_fn(field, base, variance, vec![0; base.n_objects()], move |_| Mat::zeros(&f, 0, 0))
}

fn adjunction<F: Field>(field: &F, opts: &Options, report: &mut Report) -> Result<()> {
    let sym3 = crossed("sigma:3")?;
    let small = opts.truncation.min(2);
    let f_as = crossed(&format!("f_as:{small}"))?;
    let gamma = crossed(&format!("gamma_as:{small}"))?;
    let cases: Vec<(String, &CrossedCategory, CatModule<F>, CatModule<F>)> = vec![
        (
            "sigma:3 trivial".into(),
            &sym3,
            make_trivial(field, sym3.part(Part::C), Variance::Contravariant),
            make_trivial(field, sym3.base(), Variance::Contravariant),
        ),
        (
            "sigma:3 zero".into(),
            &sym3,
            zero_module(field, sym3.part(Part::C), Variance::Contravariant),
            make_trivial(field, sym3.base(), Variance::Contravariant),
        ),
        (
            format!("f_as:{small} trivial, b"),
            &f_as,
            make_trivial(field, f_as.part(Part::C), Variance::Contravariant),
            build_b_module(field, f_as.base())?,
        ),
        (
            format!("gamma_as:{small} representable, b-bar"),
            &gamma,
            make_representable(field, gamma.part(Part::C), 0, Variance::Contravariant),
            build_b_module(field, gamma.base())?,
        ),
    ];
    for (label, x, n, m) in cases {
        let r = adjunction_check(x, &n, &m)?;
        report.check(format!("thm-2-3 {label}"), r.holds, &r);
    }
    Ok(())
}

fn random_map<F: Field>(rng: &mut ChaCha8Rng, m: &CatModule<F>, n: &CatModule<F>) -> Result<Vec<Mat<F>>> {
    let hom = hom_over_category(m, n)?;
    let coeffs: Vec<F::Elem> = (0..hom.dim).map(|_| m.field().from_i64(rng.gen_range(-3..=3))).collect();
    Ok(hom.combination(m, n, &coeffs))
}

fn pseudo_adjunction<F: Field>(field: &F, opts: &Options, report: &mut Report) -> Result<()> {
    let small = opts.truncation.min(2);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let specs: Vec<String> = ["delta_s", "delta_c", "f_as", "gamma_as"]
        .iter()
        .map(|k| format!("{k}:{small}"))
        .chain(["sigma:3".to_string()])
        .collect();
    for spec in specs {
        let x = crossed(&spec)?;
        let objects = x.n_objects();
        let over_c: Vec<(String, CatModule<F>)> = (0..objects)
            .map(|a| (format!("rep:{a}"), make_representable(field, x.part(Part::C), a, Variance::Contravariant)))
            .chain([("trivial".into(), make_trivial(field, x.part(Part::C), Variance::Contravariant))])
            .collect();
        let over_b: Vec<(String, CatModule<F>)> = (0..objects)
            .map(|a| (format!("rep:{a}"), make_representable(field, x.base(), a, Variance::Covariant)))
            .chain([("trivial".into(), make_trivial(field, x.base(), Variance::Covariant))])
            .collect();
        let mut failures = Vec::new();
        for sample in 0..opts.samples {
            let pick = |rng: &mut ChaCha8Rng, n: usize| rng.gen_range(0..n);
            let (i, i2) = (pick(&mut rng, over_c.len()), pick(&mut rng, over_c.len()));
            let (j, j2) = (pick(&mut rng, over_b.len()), pick(&mut rng, over_b.len()));
            let (m, m2, n, n2) = (&over_c[i].1, &over_c[i2].1, &over_b[j].1, &over_b[j2].1);
            let alpha = random_map(&mut rng, m, m2)?;
            let beta = random_map(&mut rng, n, n2)?;
            let iso = pseudo_adjunction_iso(&x, m, n)?.report;
            let natural = iso_is_natural(&x, (m, m2, &alpha), (n, n2, &beta))?;
            if !iso.holds() || !natural {
                failures.push(json!({
                    "sample": sample,
                    "m": [&over_c[i].0, &over_c[i2].0],
                    "n": [&over_b[j].0, &over_b[j2].0],
                    "iso": iso,
                    "natural": natural,
                }));
            }
        }
        report.check(
            format!("pseudo-adjunction {spec}"),
            failures.is_empty(),
            json!({ "samples": opts.samples, "seed": opts.seed, "failures": failures }),
        );
    }
    Ok(())
}

fn base_change<F: Field>(field: &F, opts: &Options, report: &mut Report) -> Result<()> {
    let groups: Vec<(String, usize)> = match opts.group.as_deref() {
        None => vec![("sigma:3".into(), 3), ("sigma:4".into(), 2)],
        Some("sym3") => vec![("sigma:3".into(), 3)],
        Some("sym4") => vec![("sigma:4".into(), 2)],
        Some(other) if other.starts_with("sigma:") => vec![(other.to_string(), 2)],
        Some(other) => return Err(Error::Input(format!("unknown group `{other}`; expected sym3, sym4 or sigma:<n>"))),
    };
    for (spec, default_degree) in groups {
        let x = crossed(&spec)?;
        let d = opts.max_degree.unwrap_or(default_degree);
        let a = make_trivial(field, x.part(Part::C), Variance::Contravariant);
        let b = make_trivial(field, x.base(), Variance::Covariant);
        let r = base_change_check(&x, &a, &b, d, opts.side, CoverStrategy::Greedy)?;
        report.check(format!("base-change {spec}"), r.agree, &r);
    }
    Ok(())
}

fn cyclic_orders<F: Field>(field: &F, opts: &Options, report: &mut Report) -> Result<()> {
    let n = opts.truncation;
    for kind in ["f_as", "gamma_as"] {
        let x = crossed(&format!("{kind}:{n}"))?;
        let r = check_cyclic_order_representables(field, &x)?;
        let expected: Vec<usize> = (0..=n).map(factorial).collect();
        report.check(format!("b dimensions {kind}:{n}"), r.dims_b == expected, json!({ "dims": r.dims_b, "expected": expected }));
        report.check(format!("prop-3-4 {kind}:{n}"), r.holds, &r);
    }
    Ok(())
}
