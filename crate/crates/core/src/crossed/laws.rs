use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;

use super::structure::CrossedCategory;
use crate::fincat::Morph;

/// One failed identity between the two actions, with the tuple it failed on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: &'static str,
    pub tuple: Vec<String>,
}

pub const PUSHFORWARD_ALONG_COMPOSITE: &str = "(f1 . f2)_*(psi) = f1_*(f2_*(psi))";
pub const PULLBACK_ALONG_COMPOSITE: &str = "(psi1 . psi2)^*(f) = psi2^*(psi1^*(f))";
pub const PUSHFORWARD_OF_COMPOSITE: &str = "f_*(psi1 . psi2) = f_*(psi1) . (psi1^*(f))_*(psi2)";
pub const PULLBACK_OF_COMPOSITE: &str = "psi^*(f1 . f2) = (f2_*(psi))^*(f1) . psi^*(f2)";
pub const IDENTITY_OF_TARGET: &str = "id_*(psi) = psi and psi^*(id) = id";
pub const IDENTITY_OF_SOURCE: &str = "id^*(f) = f and f_*(id) = id";

fn violation(law: &'static str, tuple: &[Morph]) -> LawViolation {
    LawViolation { law, tuple: tuple.iter().map(|m| m.to_string()).collect() }
}

/// Exhaustively checks the six identities satisfied by the actions of a crossed category
/// over all composable tuples. An empty report means all of them hold.
pub fn check_crossed_laws(x: &CrossedCategory) -> Vec<LawViolation> {
    let n = x.n_objects();
    let b = x.base();
    let mut out = Vec::new();

    for a in 0..n {
        for c in 0..n {
            for psi in x.c_homs(a, c) {
                if x.act_unchecked(b.identity(c), psi) != (psi, b.identity(a)) {
                    out.push(violation(IDENTITY_OF_TARGET, &[psi]));
                }
            }
            for f in x.d_homs(a, c) {
                if x.act_unchecked(f, b.identity(a)) != (b.identity(c), f) {
                    out.push(violation(IDENTITY_OF_SOURCE, &[f]));
                }
            }
        }
    }

    let quads: Vec<(usize, usize, usize, usize)> = (0..n.pow(4))
        .map(|k| (k / (n * n * n), (k / (n * n)) % n, (k / n) % n, k % n))
        .collect();

    let mut act: FxHashMap<(Morph, Morph), (Morph, Morph)> = FxHashMap::default();
    let mut d_compose: FxHashMap<(Morph, Morph), Morph> = FxHashMap::default();
    for (p, q, r) in (0..n * n * n).map(|k| (k / (n * n), (k / n) % n, k % n)) {
        for f in x.d_homs(q, r) {
            for psi in x.c_homs(p, q) {
                act.insert((f, psi), x.act_unchecked(f, psi));
            }
            for f2 in x.d_homs(p, q) {
                d_compose.insert((f, f2), b.compose(f, f2));
            }
        }
    }
    let act = |f: Morph, psi: Morph| act[&(f, psi)];
    let d_compose = |g: Morph, f: Morph| d_compose[&(g, f)];

    // ψ : p → q in C, f2 : q → r and f1 : r → s in D
    let two_d: Vec<LawViolation> = quads
        .par_iter()
        .flat_map_iter(|&(p, q, r, s)| {
            let mut bad = Vec::new();
            for psi in x.c_homs(p, q) {
                for f2 in x.d_homs(q, r) {
                    let (lower2, upper2) = act(f2, psi);
                    for f1 in x.d_homs(r, s) {
                        let (lower1, upper1) = act(f1, lower2);
                        let (lower, upper) = act(d_compose(f1, f2), psi);
                        if lower != lower1 {
                            bad.push(violation(PUSHFORWARD_ALONG_COMPOSITE, &[f1, f2, psi]));
                        }
                        if upper != d_compose(upper1, upper2) {
                            bad.push(violation(PULLBACK_OF_COMPOSITE, &[psi, f1, f2]));
                        }
                    }
                }
            }
            bad
        })
        .collect();
    out.extend(two_d);

    // ψ2 : p → q and ψ1 : q → r in C, f : r → s in D
    let two_c: Vec<LawViolation> = quads
        .par_iter()
        .flat_map_iter(|&(p, q, r, s)| {
            let mut bad = Vec::new();
            for psi1 in x.c_homs(q, r) {
                for psi2 in x.c_homs(p, q) {
                    let psi12 = b.compose(psi1, psi2);
                    for f in x.d_homs(r, s) {
                        let (lower1, upper1) = act(f, psi1);
                        let (lower2, upper2) = act(upper1, psi2);
                        let (lower, upper) = act(f, psi12);
                        if upper != upper2 {
                            bad.push(violation(PULLBACK_ALONG_COMPOSITE, &[psi1, psi2, f]));
                        }
                        if lower != b.compose(lower1, lower2) {
                            bad.push(violation(PUSHFORWARD_OF_COMPOSITE, &[f, psi1, psi2]));
                        }
                    }
                }
            }
            bad
        })
        .collect();
    out.extend(two_c);
    out
}
