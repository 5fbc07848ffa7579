//! The simplicial category, symmetric groupoids and one-object group categories.

use std::sync::Arc;

use super::category::{FinCategory, Generator, Morph, Payload};
use crate::error::{Error, Result};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All weakly increasing maps `[n] → [m]` as image vectors, in lexicographic order.
pub fn monotone_maps(n: usize, m: usize) -> Vec<Payload> {
    fn rec(pos: usize, min: u16, n: usize, m: u16, cur: &mut Payload, out: &mut Vec<Payload>) {
        if pos > n {
            out.push(cur.clone());
            return;
        }
        for v in min..=m {
            cur.push(v);
            rec(pos + 1, v, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, n, m as u16, &mut Vec::with_capacity(n + 1), &mut out);
    out
}

/// All permutations of `0..n` in one-line notation, lexicographically.
pub fn permutations(n: usize) -> Vec<Payload> {
    let mut cur: Payload = (0..n as u16).collect();
    let mut out = vec![cur.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// `g ∘ f` for maps given as image vectors.
pub fn compose_maps(g: &[u16], f: &[u16]) -> Payload {
    f.iter().map(|&i| g[i as usize]).collect()
}

pub fn invert_perm(p: &[u16]) -> Payload {
    let mut inv = vec![0u16; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u16;
    }
    inv
}

/// The codegeneracy `σ_i : [n+1] → [n]` hitting `i` twice.
pub fn sigma_payload(n: usize, i: usize) -> Payload {
    (0..=n + 1).map(|j| if j <= i { j as u16 } else { (j - 1) as u16 }).collect()
}

/// The coface `δ_i : [n-1] → [n]` whose image misses `i`.
pub fn delta_payload(n: usize, i: usize) -> Payload {
    (0..n).map(|j| if j < i { j as u16 } else { (j + 1) as u16 }).collect()
}

struct Simplicial {
    top: usize,
}

impl Generator for Simplicial {
    fn name(&self) -> String {
        format!("Delta<={}", self.top)
    }
    fn n_objects(&self) -> usize {
        self.top + 1
    }
    fn enumerate(&self, x: usize, y: usize) -> Vec<Payload> {
        monotone_maps(x, y)
    }
    fn compose(&self, g: &Payload, f: &Payload, _x: usize, _y: usize, _z: usize) -> Payload {
        compose_maps(g, f)
    }
    fn identity(&self, x: usize) -> Payload {
        (0..=x as u16).collect()
    }
    fn generating_set(&self) -> Option<Vec<(usize, usize, Payload)>> {
        let mut gens = Vec::new();
        for n in 0..self.top {
            for i in 0..=n {
                gens.push((n + 1, n, sigma_payload(n, i)));
            }
        }
        for n in 1..=self.top {
            for i in 0..=n {
                gens.push((n - 1, n, delta_payload(n, i)));
            }
        }
        Some(gens)
    }
    fn hom_len_hint(&self, x: usize, y: usize) -> Option<usize> {
        Some(binomial(x + y + 1, x + 1))
    }
}

/// The simplicial category truncated to objects `[0], …, [n]`.
pub fn build_delta_truncated(n: usize) -> FinCategory {
    FinCategory::from_generator(Arc::new(Simplicial { top: n }))
}

/// `σ_i^n : [n+1] → [n]` in a truncated simplicial category.
pub fn delta_sigma(c: &FinCategory, n: usize, i: usize) -> Morph {
    c.find(n + 1, n, &sigma_payload(n, i)).expect("sigma in range")
}

/// `δ_i^n : [n-1] → [n]` in a truncated simplicial category.
pub fn delta_delta(c: &FinCategory, n: usize, i: usize) -> Morph {
    c.find(n - 1, n, &delta_payload(n, i)).expect("delta in range")
}

struct SymmetricGroupoid {
    top: usize,
    shifted: bool,
}

impl Generator for SymmetricGroupoid {
    fn name(&self) -> String {
        if self.shifted {
            format!("Sigma_(.+1)<={}", self.top)
        } else {
            format!("Sigma_.<={}", self.top)
        }
    }
    fn n_objects(&self) -> usize {
        self.top + 1
    }
    fn enumerate(&self, x: usize, y: usize) -> Vec<Payload> {
        if x != y {
            return Vec::new();
        }
        if self.shifted {
            permutations(x + 1)
        } else {
            // Σ_x as the permutations of [x] fixing 0
            permutations(x).into_iter().map(|p| std::iter::once(0).chain(p.into_iter().map(|v| v + 1)).collect()).collect()
        }
    }
    fn compose(&self, g: &Payload, f: &Payload, _x: usize, _y: usize, _z: usize) -> Payload {
        compose_maps(g, f)
    }
    fn identity(&self, x: usize) -> Payload {
        (0..=x as u16).collect()
    }
    fn hom_len_hint(&self, x: usize, y: usize) -> Option<usize> {
        Some(if x != y {
            0
        } else if self.shifted {
            factorial(x + 1)
        } else {
            factorial(x)
        })
    }
}

/// The groupoid with `Hom([n],[n]) = Σ_n` (or `Σ_{n+1}` when `shifted`) and no other arrows.
pub fn build_symmetric_groupoid(n: usize, shifted: bool) -> FinCategory {
    FinCategory::from_generator(Arc::new(SymmetricGroupoid { top: n, shifted }))
}

/// A finite group as a multiplication table: `table[a][b] = a · b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<u16>>,
    identity: u16,
}

impl GroupTable {
    /// Validates the group axioms, naming the first failure.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > u16::MAX as usize {
            return Err(Error::Input("group too large".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {a} has length {}, expected {n}", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::NotAGroup(format!("closure: entry {v} in row {a} is not an element")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("identity: no two-sided neutral element".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == e && table[b][a] == e) {
                return Err(Error::NotAGroup(format!("inverses: element {a} has no inverse")));
            }
        }
        let table = table.into_iter().map(|r| r.into_iter().map(|v| v as u16).collect()).collect();
        Ok(GroupTable { table, identity: e as u16 })
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()).expect("cyclic group")
    }

    /// Σ_n acting on `0..n`, elements ordered lexicographically in one-line notation,
    /// product `(a · b)(i) = a(b(i))`.
    pub fn symmetric(n: usize) -> (Self, Vec<Payload>) {
        let perms = permutations(n);
        let index = |p: &Payload| perms.binary_search(p).expect("permutation");
        let table = perms.iter().map(|a| perms.iter().map(|b| index(&compose_maps(a, b))).collect()).collect();
        (Self::new(table).expect("symmetric group"), perms)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.mul(a, b) == self.identity()).expect("group inverse")
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.iter().map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }
}

struct GroupCat {
    group: GroupTable,
    name: String,
}

impl Generator for GroupCat {
    fn name(&self) -> String {
        self.name.clone()
    }
    fn n_objects(&self) -> usize {
        1
    }
    fn enumerate(&self, _x: usize, _y: usize) -> Vec<Payload> {
        (0..self.group.order() as u16).map(|g| vec![g]).collect()
    }
    fn compose(&self, g: &Payload, f: &Payload, _x: usize, _y: usize, _z: usize) -> Payload {
        vec![self.group.mul(g[0] as usize, f[0] as usize) as u16]
    }
    fn identity(&self, _x: usize) -> Payload {
        vec![self.group.identity() as u16]
    }
    fn hom_len_hint(&self, _x: usize, _y: usize) -> Option<usize> {
        Some(self.group.order())
    }
}

/// The one-object category whose endomorphisms are the group elements; `g ∘ f = g · f`.
pub fn build_group_category(table: Vec<Vec<usize>>) -> Result<FinCategory> {
    let group = GroupTable::new(table)?;
    Ok(group_category(group, "group"))
}

pub fn group_category(group: GroupTable, name: &str) -> FinCategory {
    let name = format!("{name}(|G|={})", group.order());
    FinCategory::from_generator(Arc::new(GroupCat { group, name }))
}

/// Group element of a morphism in a one-object group category.
pub fn group_element(m: Morph) -> usize {
    m.idx as usize
}
