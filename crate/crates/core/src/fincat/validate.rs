use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::category::{FinCategory, Morph};

/// A single failed category axiom, with the morphisms involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum CategoryViolation {
    LeftIdentity { morphism: String },
    RightIdentity { morphism: String },
    Associativity { h: String, g: String, f: String },
}

/// Exhaustively checks identities on every morphism and associativity on every
/// composable triple. An empty list means the category axioms hold.
pub fn validate_category(c: &FinCategory) -> Vec<CategoryViolation> {
    let n = c.n_objects();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for f in c.homs(x, y) {
                if c.compose(c.identity(y), f) != f {
                    out.push(CategoryViolation::LeftIdentity { morphism: f.to_string() });
                }
                if c.compose(f, c.identity(x)) != f {
                    out.push(CategoryViolation::RightIdentity { morphism: f.to_string() });
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    for f in c.homs(x, y) {
                        for g in c.homs(y, z) {
                            let gf = c.compose(g, f);
                            for h in c.homs(z, w) {
                                if c.compose(h, gf) != c.compose(c.compose(h, g), f) {
                                    out.push(associativity(h, g, f));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// How [`validate_category_within`] covered the composable triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coverage {
    pub composable_triples: u128,
    pub checked_triples: u128,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Like [`validate_category`] when there are at most `budget` composable triples; otherwise
/// identities are still checked on every morphism and associativity on `budget` triples
/// drawn with a generator seeded by `seed`.
pub fn validate_category_within(c: &FinCategory, budget: u128, seed: u64) -> (Vec<CategoryViolation>, Coverage) {
    let n = c.n_objects();
    let h = |x: usize, y: usize| c.hom_len(x, y) as u128;
    let mut triples = 0u128;
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    triples += h(x, y) * h(y, z) * h(z, w);
                }
            }
        }
    }
    if triples <= budget {
        let out = validate_category(c);
        return (out, Coverage { composable_triples: triples, checked_triples: triples, exhaustive: true, seed: None });
    }
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for f in c.homs(x, y) {
                if c.compose(c.identity(y), f) != f {
                    out.push(CategoryViolation::LeftIdentity { morphism: f.to_string() });
                }
                if c.compose(f, c.identity(x)) != f {
                    out.push(CategoryViolation::RightIdentity { morphism: f.to_string() });
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = c.total_morphisms();
    let next = |rng: &mut ChaCha8Rng, from: usize| -> Morph {
        loop {
            let to = rng.gen_range(0..n);
            let len = c.hom_len(from, to);
            if len > 0 {
                return Morph::new(from, to, rng.gen_range(0..len));
            }
        }
    };
    for _ in 0..budget {
        let f = c.from_global_id(rng.gen_range(0..total)).expect("id in range");
        let g = next(&mut rng, f.cod());
        let h = next(&mut rng, g.cod());
        if c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f) {
            out.push(associativity(h, g, f));
        }
    }
    (out, Coverage { composable_triples: triples, checked_triples: budget, exhaustive: false, seed: Some(seed) })
}

fn associativity(h: Morph, g: Morph, f: Morph) -> CategoryViolation {
    CategoryViolation::Associativity { h: h.to_string(), g: g.to_string(), f: f.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builtins::*;

    #[test]
    fn builtins_pass() {
        assert!(validate_category(&build_delta_truncated(3)).is_empty());
        assert!(validate_category(&build_symmetric_groupoid(3, true)).is_empty());
        assert!(validate_category(&build_group_category(vec![vec![0]]).unwrap()).is_empty());
        assert!(validate_category(&build_delta_truncated(2).opposite()).is_empty());
    }
}
