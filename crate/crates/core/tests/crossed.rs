use functor_tor::crossed::json::{crossed_from_json, crossed_to_json};
use functor_tor::crossed::laws::PUSHFORWARD_ALONG_COMPOSITE;
use functor_tor::crossed::*;
use functor_tor::fincat::builtins::{binomial, factorial, group_category, GroupTable};
use functor_tor::fincat::{FinCategory, Morph};
use functor_tor::Error;

fn fo(c: &FinCategory, m: Morph) -> FiberOrderedMap {
    FiberOrderedMap::from_payload(c.payload(m), m.cod())
}

fn find(c: &FinCategory, f: &FiberOrderedMap) -> Morph {
    c.find(f.dom(), f.cod(), &f.to_payload()).unwrap()
}

#[test]
fn delta_s_hom_counts() {
    let x = build_delta_s(3).unwrap();
    let b = x.base();
    assert_eq!(b.hom_len(1, 0), 2);
    assert_eq!(b.hom_len(2, 0), 6);
    assert_eq!(b.hom_len(1, 1), 6);
    for n in 0..=3 {
        for m in 0..=3 {
            assert_eq!(b.homs(n, m).count(), factorial(n + 1) * binomial(n + m + 1, n + 1));
        }
    }
}

#[test]
fn gamma_as_hom_counts() {
    let x = build_gamma_as(4).unwrap();
    for n in 0..=4 {
        assert_eq!(x.base().homs(n, 0).count(), factorial(n + 1));
        for m in 0..=4 {
            assert_eq!(x.base().homs(n, m).count(), factorial(n) * binomial(n + m + 1, m + 1));
        }
    }
}

#[test]
fn all_builtins_pass_the_audit() {
    for top in 0..=4 {
        build_delta_s(top).unwrap();
        build_delta_c(top).unwrap();
        build_f_as(top).unwrap();
        build_gamma_as(top).unwrap();
    }
    for n in 1..=5 {
        build_symmetric_crossed(n).unwrap();
    }
}

#[test]
fn factorizations_recompose() {
    for x in [build_delta_s(3).unwrap(), build_f_as(3).unwrap(), build_gamma_as(3).unwrap(), build_delta_c(3).unwrap()] {
        let b = x.base();
        for phi in b.all_morphisms() {
            let (psi, f) = x.factorize(phi);
            assert!(x.in_c(psi) && x.in_d(f));
            assert_eq!(b.compose(psi, f), phi);
        }
    }
}

#[test]
fn f_as_swapped_fiber_factors_as_collapse_after_transposition() {
    // in F(as) the D part on [1] is trivial, so the C part must absorb the order
    let x = build_f_as(2).unwrap();
    let b = x.base();
    let phi = find(b, &FiberOrderedMap::new(vec![0, 0], vec![vec![1, 0]]).unwrap());
    let (psi, f) = x.factorize(phi);
    assert!(b.is_identity(f));
    assert_eq!(psi, phi);
    // in ΔS the same map is the monotone collapse after the transposition (0 1)
    let s = build_delta_s(2).unwrap();
    let phi = find(s.base(), &FiberOrderedMap::new(vec![0, 0], vec![vec![1, 0]]).unwrap());
    let (psi, f) = s.factorize(phi);
    assert_eq!(fo(s.base(), psi), FiberOrderedMap::monotone(&[0, 0], 0));
    assert_eq!(fo(s.base(), f), FiberOrderedMap::bijection(&[1, 0]));
    // only two candidate pairs exist: (collapse, id) and (collapse, swap)
    let candidates: Vec<_> = s.c_homs(1, 0).flat_map(|c| s.d_homs(1, 1).map(move |d| (c, d))).collect();
    assert_eq!(candidates.len(), 2);
    assert_eq!(candidates.iter().filter(|&&(c, d)| s.base().compose(c, d) == phi).count(), 1);
}

#[test]
fn f_as_factorization_has_d_part_fixing_zero() {
    let x = build_f_as(3).unwrap();
    for phi in x.base().all_morphisms() {
        let (_, f) = x.factorize(phi);
        assert_eq!(fo(x.base(), f).underlying()[0], 0);
    }
}

fn perm_mul(a: &[u16], b: &[u16]) -> Vec<u16> {
    b.iter().map(|&i| a[i as usize]).collect()
}

#[test]
fn sigma_three_as_rotations_times_transposition() {
    let (table, perms) = GroupTable::symmetric(3);
    let base = group_category(table, "Sigma_3");
    let cycle = vec![1u16, 2, 0];
    let swap = vec![1u16, 0, 2];
    let id = vec![0u16, 1, 2];
    let c_set = [id.clone(), cycle.clone(), perm_mul(&cycle, &cycle)];
    let d_set = [id.clone(), swap.clone()];
    let pc = perms.clone();
    let pd = perms.clone();
    let x = build_crossed(&base, |m| c_set.contains(&pc[m.idx as usize]), |m| d_set.contains(&pd[m.idx as usize]))
        .unwrap();
    // the 3 × 2 products are pairwise distinct, hence cover Σ_3
    let mut products: Vec<Vec<u16>> = c_set.iter().flat_map(|c| d_set.iter().map(|d| perm_mul(c, d))).collect();
    products.sort();
    products.dedup();
    assert_eq!(products.len(), 6);

    let morph = |p: &[u16]| Morph::new(0, 0, perms.iter().position(|q| q == p).unwrap());
    let (psi, f) = (morph(&cycle), morph(&swap));
    let (lower, upper) = x.act(f, psi).unwrap();
    let target = perm_mul(&swap, &cycle);
    let expected: Vec<_> = c_set
        .iter()
        .flat_map(|c| d_set.iter().map(move |d| (c.clone(), d.clone())))
        .filter(|(c, d)| perm_mul(c, d) == target)
        .collect();
    assert_eq!(expected.len(), 1);
    assert_eq!(perms[lower.idx as usize], expected[0].0);
    assert_eq!(perms[upper.idx as usize], expected[0].1);
    assert!(check_crossed_laws(&x).is_empty());
}

#[test]
fn actions_of_identities() {
    let x = build_delta_s(2).unwrap();
    let b = x.base();
    for psi in x.c_homs(1, 2) {
        assert_eq!(x.act_lower(b.identity(2), psi).unwrap(), psi);
        assert_eq!(x.act_upper(psi, b.identity(2)).unwrap(), b.identity(1));
    }
    for f in x.d_homs(2, 2) {
        assert_eq!(x.act_lower(f, b.identity(2)).unwrap(), b.identity(2));
        assert_eq!(x.act_upper(b.identity(2), f).unwrap(), f);
    }
}

#[test]
fn laws_hold_on_small_instances() {
    for x in [build_delta_s(3).unwrap(), build_delta_c(4).unwrap(), build_gamma_as(4).unwrap(), build_f_as(3).unwrap()] {
        assert!(check_crossed_laws(&x).is_empty(), "{}", x.name());
    }
    for n in 1..=5 {
        assert!(check_crossed_laws(&build_symmetric_crossed(n).unwrap()).is_empty());
    }
}

#[test]
fn corrupted_action_is_reported() {
    let x = build_symmetric_crossed(3).unwrap();
    let f = x.d_homs(0, 0).find(|&m| !x.base().is_identity(m)).unwrap();
    let psi = x.c_homs(0, 0).find(|&m| !x.base().is_identity(m)).unwrap();
    let (lower, upper) = x.act(f, psi).unwrap();
    let other = x.c_homs(0, 0).find(|&m| m != lower).unwrap();
    let bad = x.with_overridden_action(f, psi, other, upper);
    let report = check_crossed_laws(&bad);
    assert!(!report.is_empty());
    assert!(report.iter().any(|v| v.law == PUSHFORWARD_ALONG_COMPOSITE));
}

#[test]
fn crossed_json_round_trip_and_corruption() {
    let x = build_symmetric_crossed(3).unwrap();
    let j = crossed_to_json(&x);
    let back = crossed_from_json(&j).unwrap();
    assert!(check_crossed_laws(&back).is_empty());
    let text = serde_json::to_string(&j).unwrap();
    let mut j2: functor_tor::crossed::json::CrossedJson = serde_json::from_str(&text).unwrap();
    let c = &j2.c_members;
    let d = &j2.d_members;
    let (f, psi) = (d[1], c[1]);
    j2.act_overrides.push([f, psi, c[0], d[0]]);
    let bad = crossed_from_json(&j2).unwrap();
    assert!(!check_crossed_laws(&bad).is_empty());
}

#[test]
fn broken_cyclic_four_fixture() {
    let z4 = group_category(GroupTable::cyclic(4), "Z/4");
    let r = build_crossed(&z4, |m| m.idx % 2 == 0, |m| m.idx % 2 == 0);
    assert!(matches!(r, Err(Error::NotCrossed { count: 2, .. })));
}

#[test]
fn delta_c_op_embedding_is_functorial_with_cyclic_image() {
    for top in 1..=4 {
        let s = build_delta_s(top).unwrap();
        let e = delta_c_op_embedding(top, s.base()).unwrap();
        assert!(e.validate(Some(&[])).is_empty());
        let f = build_f_as(top).unwrap();
        let image = image_members(&e);
        for x in 0..=top {
            for y in 0..=top {
                let c: Vec<u32> = f.c_homs(x, y).map(|m| m.idx).collect();
                assert_eq!(image[x * (top + 1) + y], c);
            }
        }
    }
}

#[test]
fn delta_c_op_generator_images() {
    let s = build_delta_s(2).unwrap();
    let e = delta_c_op_embedding(2, s.base()).unwrap();
    let c = delta_c_category(2);
    let op = |f: &FiberOrderedMap| FinCategory::op_morph(find(&c, f));
    let t = fiber_ordered::cyclic_operator(2);
    // listing [2] in the order t arranges it: 2, 0, 1
    let t_inv = t.compose(&t);
    let image_t = fo(s.base(), e.map(op(&t_inv)).unwrap());
    assert_eq!(image_t, t);
    let order: Vec<u16> = image_t.fibers().iter().map(|f| f[0]).collect();
    assert_eq!(order, vec![2, 0, 1]);
    let d1 = e.map(op(&fiber_ordered::delta(2, 1))).unwrap();
    assert_eq!(fo(s.base(), d1), fiber_ordered::sigma(1, 1));
    let d2 = e.map(op(&fiber_ordered::delta(2, 2))).unwrap();
    assert_eq!(fo(s.base(), d2), fiber_ordered::sigma(1, 0).compose(&t));
}

#[test]
fn delta_op_embedding_lands_on_gamma_c_part() {
    for top in 1..=4 {
        let g = build_gamma_as(top).unwrap();
        let e = delta_op_embedding(top, g.base()).unwrap();
        let image = image_members(&e);
        assert_eq!(e.source().total_morphisms(), image.iter().map(Vec::len).sum::<usize>());
        for x in 0..=top {
            for y in 0..=top {
                let c: Vec<u32> = g.c_homs(x, y).map(|m| m.idx).collect();
                assert_eq!(image[x * (top + 1) + y], c);
            }
        }
    }
}

#[test]
fn unshifted_degeneracy_leaves_gamma_as() {
    let d0 = fiber_ordered::delta(2, 0);
    assert!(!Family::Pointed.contains(&d0.to_payload(), 2));
    assert!(Family::Pointed.contains(&fiber_ordered::delta(2, 1).to_payload(), 2));
}
