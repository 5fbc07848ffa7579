//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Tolerances: every comparison is exact (dimensions over exact fields). Wall-clock bounds are
//! 60 s for criterion 1 and 600 s for criterion 6.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use functor_tor::catalog::crossed_by_name;
use functor_tor::catmod::{make_representable, make_trivial, CatModule, Variance};
use functor_tor::crossed::{build_crossed, check_crossed_laws, CrossedCategory, Part};
use functor_tor::fincat::{build_delta_truncated, factorial, group_category, GroupTable};
use functor_tor::hochschild::{compare_cyclic, compare_hochschild, AlgebraData, HomologyComparison};
use functor_tor::linalg::{Field, Mat, PrimeField, Rationals};
use functor_tor::pseudoadj::{
    adjunction_check, base_change_check, check_cyclic_order_representables, cyclic_orders, iso_is_natural, pseudo_adjunction_iso,
};
use functor_tor::tor::{
    check_hom_tensor_duality, hom_over_category, tensor_over_category, tensor_with_resolution, tor, CoverStrategy, Resolution,
    Side,
};
use functor_tor::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const LAW_BUDGET: Duration = Duration::from_secs(60);
const HOMOLOGY_BUDGET: Duration = Duration::from_secs(600);
const PAIRS_PER_CATEGORY: usize = 20;
const SEED: u64 = 2024;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn fp(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn crossed(spec: &str) -> CrossedCategory {
    crossed_by_name(spec).unwrap_or_else(|e| panic!("{spec}: {e}"))
}

/// Rank of a dense integer matrix over `F_p`, or over the rationals when `p == 0`.
fn dense_rank(mut rows: Vec<Vec<i128>>, p: i128) -> usize {
    let reduce = |v: i128| if p == 0 { v } else { v.rem_euclid(p) };
    for row in rows.iter_mut() {
        for v in row.iter_mut() {
            *v = reduce(*v);
        }
    }
    let cols = rows.first().map_or(0, Vec::len);
    let (mut rank, mut prev) = (0, 1i128);
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, pivot);
        for r in rank + 1..rows.len() {
            if p != 0 && rows[r][c] == 0 {
                continue;
            }
            for k in c + 1..cols {
                let v = rows[rank][c] * rows[r][k] - rows[r][c] * rows[rank][k];
                // fraction-free elimination: the division by the previous pivot is exact
                rows[r][k] = if p == 0 { v / prev } else { reduce(v) };
            }
            rows[r][c] = 0;
        }
        if p == 0 {
            prev = rows[rank][c];
        }
        rank += 1;
    }
    rank
}

/// `H_k(Z/n; F_p)` (or rational coefficients for `p == 0`) for `k = 0..=top` from the bar complex.
fn bar_homology_of_cyclic_group(n: usize, p: i128, top: usize) -> Vec<usize> {
    let tuples = |k: usize| -> Vec<Vec<usize>> {
        (0..n.pow(k as u32))
            .map(|mut code| {
                (0..k)
                    .map(|_| {
                        let g = code % n;
                        code /= n;
                        g
                    })
                    .collect()
            })
            .collect()
    };
    let index = |t: &[usize]| t.iter().rev().fold(0, |acc, &g| acc * n + g);
    // rank of d_k : C_k → C_{k-1}
    let rank_of = |k: usize| -> usize {
        if k == 0 {
            return 0;
        }
        let mut rows = vec![vec![0i128; n.pow(k as u32)]; n.pow(k as u32 - 1)];
        for (col, t) in tuples(k).iter().enumerate() {
            for i in 0..=k {
                let face: Vec<usize> = if i == 0 {
                    t[1..].to_vec()
                } else if i == k {
                    t[..k - 1].to_vec()
                } else {
                    let mut f = t[..i - 1].to_vec();
                    f.push((t[i - 1] + t[i]) % n);
                    f.extend_from_slice(&t[i + 1..]);
                    f
                };
                rows[index(&face)][col] += if i % 2 == 0 { 1 } else { -1 };
            }
        }
        dense_rank(rows, p)
    };
    let ranks: Vec<usize> = (0..=top + 1).map(rank_of).collect();
    (0..=top).map(|k| n.pow(k as u32) - ranks[k] - ranks[k + 1]).collect()
}

/// `HH_k(K[x]/(x²))` from the periodic resolution `A ← A ← A ← …` with maps alternating
/// between `0` and multiplication by `2x`.
fn dual_numbers_hochschild(characteristic: u32, top: usize) -> Vec<usize> {
    let two_x_rank = if characteristic == 2 { 0 } else { 1 };
    (0..=top).map(|k| if k == 0 { 2 } else { 2 - two_x_rank }).collect()
}

fn crossed_laws() -> Outcome {
    let start = Instant::now();
    let mut specs: Vec<String> = ["delta_s", "delta_c", "f_as", "gamma_as"].iter().map(|k| format!("{k}:4")).collect();
    specs.extend((1..=5).map(|n| format!("sigma:{n}")));
    let mut bad = Vec::new();
    for spec in &specs {
        let violations = check_crossed_laws(&crossed(spec));
        if !violations.is_empty() {
            bad.push(format!("{spec}: {} ({})", violations.len(), violations[0].law));
        }
    }
    let elapsed = start.elapsed();
    outcome(
        bad.is_empty() && elapsed < LAW_BUDGET,
        format!("{} categories, violations {:?}, {:.1} s (bound {} s)", specs.len(), bad, elapsed.as_secs_f64(), LAW_BUDGET.as_secs()),
    )
}

/// Every morphism is hit by exactly one composable pair `ψ ∘ f`, counted independently of the
/// construction-time audit.
fn unique_factorization() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    for spec in ["delta_s:4", "delta_c:4", "f_as:4", "gamma_as:4", "sigma:3", "sigma:4", "sigma:5"] {
        let x = crossed(spec);
        let b = x.base();
        let n = x.n_objects();
        let mut hits: Vec<Vec<u32>> = (0..n * n).map(|k| vec![0; b.hom_len(k / n, k % n)]).collect();
        for a in 0..n {
            for y in 0..n {
                for f in x.d_homs(a, y) {
                    for c in 0..n {
                        for psi in x.c_homs(y, c) {
                            let phi = b.compose(psi, f);
                            hits[a * n + c][phi.idx as usize] += 1;
                        }
                    }
                }
            }
        }
        let exact = hits.iter().flatten().all(|&h| h == 1);
        ok &= exact;
        notes.push(format!("{spec}:{}", if exact { "unique" } else { "NOT unique" }));
    }
    let z4 = group_category(GroupTable::cyclic(4), "Z/4");
    let half = |m: functor_tor::fincat::Morph| m.idx.is_multiple_of(2);
    let rejected = matches!(build_crossed(&z4, half, half), Err(Error::NotCrossed { count: 2, .. }));
    ok &= rejected;
    notes.push(format!("broken Z/4 fixture rejected with NotCrossed: {rejected}"));
    outcome(ok, notes.join(", "))
}

fn random_map<F: Field>(rng: &mut ChaCha8Rng, m: &CatModule<F>, n: &CatModule<F>) -> Vec<Mat<F>> {
    let hom = hom_over_category(m, n).unwrap();
    let coeffs: Vec<F::Elem> = (0..hom.dim).map(|_| m.field().from_i64(rng.gen_range(-3..=3))).collect();
    hom.combination(m, n, &coeffs)
}

fn pseudo_adjunction() -> Outcome {
    let field = Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut notes = Vec::new();
    let mut ok = true;
    for spec in ["delta_s:2", "delta_c:2", "f_as:2", "gamma_as:2", "sigma:3", "sigma:4"] {
        let x = crossed(spec);
        let objects = x.n_objects();
        let over_c: Vec<_> = (0..objects)
            .map(|a| make_representable(&field, x.part(Part::C), a, Variance::Contravariant))
            .chain([make_trivial(&field, x.part(Part::C), Variance::Contravariant)])
            .collect();
        let over_b: Vec<_> = (0..objects)
            .map(|a| make_representable(&field, x.base(), a, Variance::Covariant))
            .chain([make_trivial(&field, x.base(), Variance::Covariant)])
            .collect();
        let mut good = 0;
        for _ in 0..PAIRS_PER_CATEGORY {
            let (m, m2) = (&over_c[rng.gen_range(0..over_c.len())], &over_c[rng.gen_range(0..over_c.len())]);
            let (n, n2) = (&over_b[rng.gen_range(0..over_b.len())], &over_b[rng.gen_range(0..over_b.len())]);
            let alpha = random_map(&mut rng, m, m2);
            let beta = random_map(&mut rng, n, n2);
            let invertible = pseudo_adjunction_iso(&x, m, n).unwrap().report.holds();
            let natural = iso_is_natural(&x, (m, m2, &alpha), (n, n2, &beta)).unwrap();
            good += usize::from(invertible && natural);
        }
        ok &= good == PAIRS_PER_CATEGORY;
        notes.push(format!("{spec} {good}/{PAIRS_PER_CATEGORY}"));
    }
    outcome(ok, format!("seed {SEED}: {}", notes.join(", ")))
}

fn base_change_trivial<F: Field>(field: &F, spec: &str, d: usize, side: Side) -> (Vec<usize>, Vec<usize>) {
    let x = crossed(spec);
    let r = base_change_check(
        &x,
        &make_trivial(field, x.part(Part::C), Variance::Contravariant),
        &make_trivial(field, x.base(), Variance::Covariant),
        d,
        side,
        CoverStrategy::Greedy,
    )
    .unwrap();
    (r.left, r.right)
}

fn base_change() -> Outcome {
    let oracle_f3 = bar_homology_of_cyclic_group(3, 3, 3);
    let oracle_q = bar_homology_of_cyclic_group(3, 0, 3);
    let (l1, r1) = base_change_trivial(&fp(3), "sigma:3", 3, Side::ResolveContravariant);
    let (l2, r2) = base_change_trivial(&Rationals, "sigma:3", 3, Side::ResolveContravariant);
    let (l3, r3) = base_change_trivial(&fp(2), "sigma:4", 2, Side::ResolveContravariant);
    let i = l1 == r1 && l1 == oracle_f3 && l1 == vec![1, 1, 1, 1];
    let ii = l2 == r2 && l2 == oracle_q && l2 == vec![1, 0, 0, 0];
    let iii = l3 == r3;
    outcome(
        i && ii && iii,
        format!(
            "(i) F3 {l1:?}/{r1:?} bar {oracle_f3:?}; (ii) Q {l2:?}/{r2:?} bar {oracle_q:?}; (iii) Sigma_4 over F2 {l3:?}/{r3:?}"
        ),
    )
}

fn cyclic_words() -> Outcome {
    let mut notes = Vec::new();
    let mut ok = true;
    let expected: Vec<usize> = (0..=4).map(factorial).collect();
    for spec in ["f_as:4", "gamma_as:4"] {
        let x = crossed(spec);
        let dims = cyclic_orders(&Rationals, x.base()).unwrap().module.dims().to_vec();
        let r = check_cyclic_order_representables(&Rationals, &x).unwrap();
        ok &= dims == expected && r.holds && r.dims_free == expected;
        notes.push(format!("{spec} dims {dims:?} iso {} on {} morphisms", r.holds, r.morphisms_checked));
    }
    outcome(ok, notes.join("; "))
}

fn homology_line(label: &str, c: &HomologyComparison) -> String {
    format!(
        "{label}: crossed {:?} simplicial {:?} oracle {:?} stabilized {}",
        c.crossed.tor, c.simplicial.tor, c.oracle, c.stabilized
    )
}

fn hochschild_and_cyclic() -> Outcome {
    let start = Instant::now();
    let side = Side::default();
    let q = AlgebraData::ground_field(&Rationals);
    let hh_q = compare_hochschild(&q, &q.regular_bimodule(), 4, 2, side).unwrap();
    let eps = AlgebraData::dual_numbers(&fp(2));
    let hh_eps = compare_hochschild(&eps, &eps.regular_bimodule(), 4, 2, side).unwrap();
    let hc_q = compare_cyclic(&q, 5, 2, side).unwrap();
    let elapsed = start.elapsed();
    let closed_form = dual_numbers_hochschild(2, 2);
    let ok = hh_q.holds
        && hh_q.oracle == vec![1, 0, 0]
        && hh_eps.holds
        && hh_eps.oracle == closed_form
        && hc_q.holds
        && hc_q.oracle == vec![1, 0, 1]
        && elapsed < HOMOLOGY_BUDGET;
    let note = if closed_form == vec![2, 1, 1] {
        String::new()
    } else {
        format!(" (expected list [2,1,1] is the characteristic-0 value; in characteristic 2 the periodic resolution gives {closed_form:?})")
    };
    outcome(
        ok,
        format!(
            "{}; {}{note}; {}; {:.1} s (bound {} s)",
            homology_line("HH Q N=4", &hh_q),
            homology_line("HH F2[x]/(x^2) N=4", &hh_eps),
            homology_line("HC Q N=5", &hc_q),
            elapsed.as_secs_f64(),
            HOMOLOGY_BUDGET.as_secs()
        ),
    )
}

fn duality() -> Outcome {
    let q = Rationals;
    let one = group_category(GroupTable::cyclic(1), "1");
    let z3 = group_category(GroupTable::cyclic(3), "Z/3");
    let delta = build_delta_truncated(2);
    let duality = [
        check_hom_tensor_duality(&make_trivial(&q, &one, Variance::Contravariant), &make_trivial(&q, &one, Variance::Covariant), 1),
        check_hom_tensor_duality(&make_trivial(&q, &z3, Variance::Contravariant), &make_representable(&q, &z3, 0, Variance::Covariant), 1),
        check_hom_tensor_duality(
            &make_representable(&q, &delta, 1, Variance::Contravariant),
            &make_representable(&q, &delta, 1, Variance::Covariant),
            2,
        ),
    ]
    .map(Result::unwrap);
    let duality_ok = duality.iter().all(|r| r.holds && r.lhs_dim == r.rhs_dim && r.map_rank == r.lhs_dim);
    let dims_ok = duality[0].lhs_dim == 1 && duality[1].lhs_dim == 1;
    let sym3 = crossed("sigma:3");
    let adjunction = adjunction_check(
        &sym3,
        &make_trivial(&q, sym3.part(Part::C), Variance::Contravariant),
        &make_trivial(&q, sym3.base(), Variance::Contravariant),
    )
    .unwrap();
    let adjunction_ok = adjunction.holds && adjunction.hom_left == 1 && adjunction.hom_right == 1;
    outcome(
        duality_ok && dims_ok && adjunction_ok,
        format!(
            "bijection dims {:?}, map ranks {:?}; Hom dims on Sigma_3 {} = {}",
            duality.iter().map(|r| (r.lhs_dim, r.rhs_dim)).collect::<Vec<_>>(),
            duality.iter().map(|r| r.map_rank).collect::<Vec<_>>(),
            adjunction.hom_left,
            adjunction.hom_right
        ),
    )
}

struct Invariants {
    runs: usize,
    square_zero: usize,
    exact: usize,
    tor0_is_tensor: usize,
    group_runs: usize,
    side_independent: usize,
}

fn structural_run<F: Field>(m: &CatModule<F>, n: &CatModule<F>, d: usize, group: bool, acc: &mut Invariants) {
    let field = m.field();
    acc.runs += 1;
    let mut square_zero = true;
    let mut exact = true;
    for (resolved, other) in [(m.as_opposite(), n.as_opposite()), (n.clone(), m.clone())] {
        let res = Resolution::new(field, &resolved, d + 1, CoverStrategy::Greedy);
        square_zero &= res.check_square_zero().is_ok();
        exact &= res.check_exact().is_ok();
        let complex = tensor_with_resolution(&res, &other).unwrap();
        square_zero &= complex.check_square_zero(0..=d).is_ok();
    }
    acc.square_zero += usize::from(square_zero);
    acc.exact += usize::from(exact);
    let left = tor(m, n, d, Side::ResolveContravariant, CoverStrategy::Greedy).unwrap();
    acc.tor0_is_tensor += usize::from(left[0] == tensor_over_category(m, n).unwrap().dim);
    if group {
        acc.group_runs += 1;
        let right = tor(m, n, d, Side::ResolveCovariant, CoverStrategy::Greedy).unwrap();
        acc.side_independent += usize::from(left == right);
    }
}

fn structural_family<F: Field>(field: &F, acc: &mut Invariants) {
    let mut groups: Vec<_> = (1..=5).map(|n| group_category(GroupTable::cyclic(n), &format!("Z/{n}"))).collect();
    groups.push(crossed("sigma:3").base().clone());
    for g in &groups {
        let modules_contra = [make_trivial(field, g, Variance::Contravariant), make_representable(field, g, 0, Variance::Contravariant)];
        let modules_co = [make_trivial(field, g, Variance::Covariant), make_representable(field, g, 0, Variance::Covariant)];
        for m in &modules_contra {
            for n in &modules_co {
                structural_run(m, n, 3, true, acc);
            }
        }
    }
    for c in [build_delta_truncated(3), crossed("delta_c:3").base().clone(), crossed("gamma_as:3").base().clone()] {
        for a in [0, 1] {
            let m = make_representable(field, &c, a, Variance::Contravariant);
            structural_run(&m, &make_trivial(field, &c, Variance::Covariant), 1, false, acc);
            structural_run(&make_trivial(field, &c, Variance::Contravariant), &make_representable(field, &c, a, Variance::Covariant), 1, false, acc);
        }
    }
}

fn structural_invariants() -> Outcome {
    let mut acc = Invariants { runs: 0, square_zero: 0, exact: 0, tor0_is_tensor: 0, group_runs: 0, side_independent: 0 };
    structural_family(&Rationals, &mut acc);
    structural_family(&fp(2), &mut acc);
    structural_family(&fp(3), &mut acc);
    let ok = acc.square_zero == acc.runs
        && acc.exact == acc.runs
        && acc.tor0_is_tensor == acc.runs
        && acc.side_independent == acc.group_runs;
    outcome(
        ok,
        format!(
            "d∘d = 0 in {}/{} runs, exact {}/{}, Tor_0 = tensor {}/{}, side-independent {}/{} group runs",
            acc.square_zero, acc.runs, acc.exact, acc.runs, acc.tor0_is_tensor, acc.runs, acc.side_independent, acc.group_runs
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("crossed-law suite", crossed_laws),
        ("unique factorization", unique_factorization),
        ("pseudo-adjunction iso and naturality", pseudo_adjunction),
        ("base change", base_change),
        ("b and b-bar structure", cyclic_words),
        ("Hochschild and cyclic homology routes", hochschild_and_cyclic),
        ("duality checks", duality),
        ("structural invariants", structural_invariants),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| outcome(false, "panicked"));
        failures += usize::from(!result.passed);
        println!(
            "{} criterion {}: {name}: {} [{:.1} s]",
            if result.passed { "PASS" } else { "FAIL" },
            k + 1,
            result.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
