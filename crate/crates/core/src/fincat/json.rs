//! JSON exchange format for finite categories.
//!
//! ```json
//! { "objects": 2,
//!   "homs": [ { "dom": 0, "cod": 0, "payloads": [[0]] }, … ],
//!   "compose": [[g, f, g∘f], …],
//!   "identities": [id_0, id_1] }
//! ```
//! Morphism ids number the payloads in order of appearance across `homs`. `identities`
//! is optional; when absent the unique two-sided neutral endomorphism is used.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::category::{FinCategory, Morph, Payload, TableData};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomJson {
    pub dom: usize,
    pub cod: usize,
    pub payloads: Vec<Payload>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CategoryJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub objects: usize,
    pub homs: Vec<HomJson>,
    pub compose: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<usize>>,
}

/// Exports a category in canonical order. Intended for small categories: the composition
/// list has one entry per composable pair.
pub fn to_json(c: &FinCategory) -> CategoryJson {
    let n = c.n_objects();
    let mut homs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let payloads: Vec<Payload> = c.homs(x, y).map(|m| c.payload(m).clone()).collect();
            if !payloads.is_empty() {
                homs.push(HomJson { dom: x, cod: y, payloads });
            }
        }
    }
    let mut compose = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for f in c.homs(x, y) {
                    for g in c.homs(y, z) {
                        compose.push([c.global_id(g), c.global_id(f), c.global_id(c.compose(g, f))]);
                    }
                }
            }
        }
    }
    let identities = Some((0..n).map(|x| c.global_id(c.identity(x))).collect());
    CategoryJson { name: Some(c.name().to_string()), objects: n, homs, compose, identities }
}

pub fn from_json(j: &CategoryJson) -> Result<FinCategory> {
    let n = j.objects;
    // id -> (dom, cod, payload)
    let mut by_id: Vec<(usize, usize, Payload)> = Vec::new();
    let mut homs: Vec<Vec<Payload>> = vec![Vec::new(); n * n];
    for h in &j.homs {
        if h.dom >= n || h.cod >= n {
            return Err(Error::Input(format!("hom ({}, {}) outside {n} objects", h.dom, h.cod)));
        }
        for p in &h.payloads {
            by_id.push((h.dom, h.cod, p.clone()));
            homs[h.dom * n + h.cod].push(p.clone());
        }
    }
    for (k, list) in homs.iter_mut().enumerate() {
        let before = list.len();
        list.sort();
        list.dedup();
        if list.len() != before {
            return Err(Error::Input(format!("duplicate payload in Hom({}, {})", k / n, k % n)));
        }
    }
    let local = |id: usize| -> Result<(usize, usize, usize)> {
        let (x, y, p) = by_id.get(id).ok_or_else(|| Error::Input(format!("unknown morphism id {id}")))?;
        let idx = homs[x * n + y].binary_search(p).expect("payload present");
        Ok((*x, *y, idx))
    };
    let mut compose: HashMap<(u32, u32, u32), Vec<u32>> = HashMap::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (lf, lg) = (homs[x * n + y].len(), homs[y * n + z].len());
                if lf * lg > 0 {
                    compose.insert((x as u32, y as u32, z as u32), vec![u32::MAX; lf * lg]);
                }
            }
        }
    }
    for &[g, f, gf] in &j.compose {
        let (gy, gz, gi) = local(g)?;
        let (fx, fy, fi) = local(f)?;
        let (cx, cz, ci) = local(gf)?;
        if fy != gy || cx != fx || cz != gz {
            return Err(Error::Input(format!("composition entry [{g}, {f}, {gf}] has mismatched endpoints")));
        }
        let lf = homs[fx * n + fy].len();
        compose.get_mut(&(fx as u32, fy as u32, gz as u32)).expect("allocated")[gi * lf + fi] = ci as u32;
    }
    if let Some(((x, y, z), _)) = compose.iter().find(|(_, t)| t.contains(&u32::MAX)) {
        return Err(Error::Input(format!("composition table incomplete for ({x}, {y}, {z})")));
    }
    let identities = match &j.identities {
        Some(ids) => {
            if ids.len() != n {
                return Err(Error::Input("one identity per object required".into()));
            }
            ids.iter()
                .enumerate()
                .map(|(x, &id)| {
                    let (a, b, i) = local(id)?;
                    if (a, b) != (x, x) {
                        return Err(Error::Input(format!("identity of {x} is not an endomorphism")));
                    }
                    Ok(i as u32)
                })
                .collect::<Result<Vec<_>>>()?
        }
        None => (0..n)
            .map(|x| find_neutral(&homs, &compose, n, x))
            .collect::<Result<Vec<_>>>()?,
    };
    let name = j.name.clone().unwrap_or_else(|| "user".to_string());
    Ok(FinCategory::from_table(name, n, TableData { homs, compose, identities }))
}

fn find_neutral(
    homs: &[Vec<Payload>],
    compose: &HashMap<(u32, u32, u32), Vec<u32>>,
    n: usize,
    x: usize,
) -> Result<u32> {
    let ends = homs[x * n + x].len();
    'cand: for e in 0..ends {
        for y in 0..n {
            // e on the right of every f : x → y
            let lf = homs[x * n + y].len();
            if lf > 0 {
                let t = &compose[&(x as u32, x as u32, y as u32)];
                if (0..lf).any(|f| t[f * ends + e] != f as u32) {
                    continue 'cand;
                }
            }
            // e on the left of every f : y → x
            let lf = homs[y * n + x].len();
            if lf > 0 {
                let t = &compose[&(y as u32, x as u32, x as u32)];
                if (0..lf).any(|f| t[e * lf + f] != f as u32) {
                    continue 'cand;
                }
            }
        }
        return Ok(e as u32);
    }
    Err(Error::Input(format!("object {x} has no identity")))
}

/// Replaces one composition entry; used to build deliberately broken fixtures.
pub fn corrupt_composition(j: &mut CategoryJson, g: usize, f: usize, result: usize) {
    for entry in &mut j.compose {
        if entry[0] == g && entry[1] == f {
            entry[2] = result;
        }
    }
}

pub fn morph_from_id(c: &FinCategory, id: usize) -> Result<Morph> {
    c.from_global_id(id).ok_or_else(|| Error::Input(format!("unknown morphism id {id}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::builtins::build_delta_truncated;
    use crate::fincat::validate::{validate_category, CategoryViolation};

    #[test]
    fn export_import_preserves_composition() {
        let d = build_delta_truncated(2);
        let back = from_json(&to_json(&d)).unwrap();
        for g in d.all_morphisms() {
            for f in d.all_morphisms().into_iter().filter(|f| f.cod == g.dom) {
                assert_eq!(d.compose(g, f), back.compose(g, f));
            }
        }
        assert!(validate_category(&back).is_empty());
    }

    #[test]
    fn corrupted_entry_is_reported() {
        let d = build_delta_truncated(1);
        let mut j = to_json(&d);
        // Hom([0],[1]) = {0→0, 0→1}; send δ∘σ-type composite somewhere wrong
        let h01: Vec<Morph> = d.homs(0, 1).collect();
        let s = d.homs(1, 0).next().unwrap();
        let (g, f) = (d.global_id(h01[1]), d.global_id(s));
        let wrong = d.global_id(d.identity(1));
        corrupt_composition(&mut j, g, f, wrong);
        let bad = from_json(&j).unwrap();
        let report = validate_category(&bad);
        assert!(report.iter().any(|v| matches!(v, CategoryViolation::Associativity { .. })));
    }

    #[test]
    fn incomplete_table_is_rejected() {
        let d = build_delta_truncated(1);
        let mut j = to_json(&d);
        j.compose.pop();
        assert!(from_json(&j).is_err());
    }
}
