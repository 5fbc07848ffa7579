use functor_tor::catmod::{restrict, validate_functoriality, CatModule};
use functor_tor::crossed::{
    cyclic_operator, delta, delta_c_op_embedding, delta_op_embedding, family_category, sigma, FiberOrderedMap, Family,
};
use functor_tor::fincat::{delta_delta, delta_sigma, FinCategory, GroupTable, Morph};
use functor_tor::hochschild::*;
use functor_tor::linalg::{Field, Mat, PrimeField, Rationals};
use functor_tor::tor::Side;
use functor_tor::Error;
use proptest::prelude::*;

fn q() -> Rationals {
    Rationals
}

fn fp(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn same_actions<F: Field>(a: &CatModule<F>, b: &CatModule<F>) -> bool {
    a.dims() == b.dims() && a.base().all_morphisms().into_iter().all(|m| a.action(m) == b.action(m))
}

fn symmetric3<F: Field>(field: &F) -> (AlgebraData<F>, GroupTable) {
    let (group, _) = GroupTable::symmetric(3);
    (AlgebraData::group_algebra(field, &group), group)
}

#[test]
fn malformed_algebras_are_rejected() {
    let f = q();
    let (o, z) = (f.one(), f.zero());
    // e0 e0 = e1, e1 anything = 0, unit e0: not unital
    let sc = vec![vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]], vec![
        vec![z.clone(), z.clone()],
        vec![z.clone(), z.clone()],
    ]];
    assert!(matches!(AlgebraData::new(&f, &sc, &[o.clone(), z.clone()]), Err(Error::NotUnital(_))));
    // e1 e1 = e0 with e0 e1 = 0: (e1 e1) e1 = e0 e1 = 0 but e1 (e1 e1) = e1 e0 = e1
    let sc = vec![vec![vec![z.clone(), z.clone()], vec![z.clone(), z.clone()]], vec![
        vec![z.clone(), o.clone()],
        vec![o.clone(), z.clone()],
    ]];
    assert!(matches!(AlgebraData::new(&f, &sc, &[o, z]), Err(Error::NotAssociative(_))));
}

#[test]
fn bimodule_relations_are_checked() {
    let f = q();
    let a = AlgebraData::dual_numbers(&f);
    // x acting on the left by a nonzero nilpotent and on the right by zero is a bimodule
    let nil = Mat::from_rows_i64(&f, &[vec![0, 0], vec![1, 0]]);
    let id = Mat::identity(&f, 2);
    let zero = Mat::zeros(&f, 2, 2);
    assert!(BimoduleData::new(&a, 2, vec![id.clone(), nil.clone()], vec![id.clone(), zero]).is_ok());
    // x acting by the identity contradicts x² = 0
    assert!(matches!(
        BimoduleData::new(&a, 2, vec![id.clone(), id.clone()], vec![id.clone(), nil.clone()]),
        Err(Error::NotAssociative(_))
    ));
    // both sides square to zero but do not commute
    let upper = nil.transpose();
    assert!(matches!(BimoduleData::new(&a, 2, vec![id.clone(), nil], vec![id, upper]), Err(Error::RelationViolation(_))));
}

#[test]
fn hochschild_oracle_on_classical_algebras() {
    let k = AlgebraData::ground_field(&q());
    assert_eq!(hochschild_oracle(&k, &k.regular_bimodule(), 3).unwrap(), vec![1, 0, 0, 0]);
    let eps = AlgebraData::dual_numbers(&q());
    assert_eq!(hochschild_oracle(&eps, &eps.regular_bimodule(), 3).unwrap(), vec![2, 1, 1, 1]);
    let z3 = AlgebraData::group_algebra(&q(), &GroupTable::cyclic(3));
    assert_eq!(hochschild_oracle(&z3, &z3.regular_bimodule(), 2).unwrap(), vec![3, 0, 0]);
}

/// `K[x]/(x²)` has a periodic bimodule resolution; applying `A ⊗_{A^e} −` gives the complex
/// `A ← A ← A ← …` whose maps alternate between `0` (odd degrees) and `2x` (even degrees).
fn dual_numbers_closed_form<F: Field>(field: &F, max_degree: usize) -> Vec<usize> {
    let two_x = Mat::from_rows(field, 2, &[vec![field.zero(), field.zero()], vec![field.from_i64(2), field.zero()]]);
    let r = usize::from(!two_x.is_zero());
    let outgoing_rank = |n: usize| if n >= 2 && n.is_multiple_of(2) { r } else { 0 };
    (0..=max_degree).map(|n| 2 - outgoing_rank(n) - outgoing_rank(n + 1)).collect()
}

#[test]
fn dual_numbers_in_every_characteristic() {
    assert_eq!(dual_numbers_closed_form(&q(), 3), vec![2, 1, 1, 1]);
    assert_eq!(dual_numbers_closed_form(&fp(2), 3), vec![2, 2, 2, 2]);
    for p in [2, 3, 5] {
        let a = AlgebraData::dual_numbers(&fp(p));
        assert_eq!(hochschild_oracle(&a, &a.regular_bimodule(), 3).unwrap(), dual_numbers_closed_form(&fp(p), 3));
    }
}

#[test]
fn group_algebra_of_s3_over_f2() {
    // ⊕ over conjugacy classes of H_*(centralizer; F_2): S_3, Z/2 and Z/3
    let (a, _) = symmetric3(&fp(2));
    assert_eq!(hochschild_oracle(&a, &a.regular_bimodule(), 2).unwrap(), vec![3, 2, 2]);
    let (a, _) = symmetric3(&q());
    assert_eq!(hochschild_oracle(&a, &a.regular_bimodule(), 2).unwrap(), vec![3, 0, 0]);
}

#[test]
fn degree_zero_is_the_commutator_quotient() {
    let (s3, _) = symmetric3(&q());
    let eps = AlgebraData::dual_numbers(&fp(3));
    assert_eq!(commutator_quotient_dim(&s3, &s3.regular_bimodule()), 3);
    assert_eq!(hochschild_oracle(&s3, &s3.regular_bimodule(), 0).unwrap()[0], 3);
    assert_eq!(commutator_quotient_dim(&eps, &eps.regular_bimodule()), 2);
}

#[test]
fn cyclic_oracles_agree() {
    let k = AlgebraData::ground_field(&q());
    assert_eq!(cyclic_oracle(&k, 4).unwrap(), vec![1, 0, 1, 0, 1]);
    let eps = AlgebraData::dual_numbers(&q());
    assert_eq!(cyclic_oracle(&eps, 4).unwrap(), connes_oracle(&eps, 4).unwrap());
    let z3 = AlgebraData::group_algebra(&q(), &GroupTable::cyclic(3));
    assert_eq!(cyclic_oracle(&z3, 3).unwrap(), vec![3, 0, 3, 0]);
    assert_eq!(cyclic_oracle(&z3, 3).unwrap(), connes_oracle(&z3, 3).unwrap());
    let k2 = AlgebraData::ground_field(&fp(2));
    assert_eq!(cyclic_oracle(&k2, 4).unwrap(), vec![1, 0, 1, 0, 1]);
    assert!(matches!(connes_oracle(&k2, 2), Err(Error::UnsupportedCharacteristic(_))));
}

fn loday_matches_oracle<F: Field>(a: &AlgebraData<F>) -> bool {
    let l = loday_functor(a, &a.regular_bimodule(), 4).unwrap();
    assert_eq!(l.dims()[3], a.dim().pow(4));
    moore_homology(&l, 3).unwrap() == hochschild_oracle(a, &a.regular_bimodule(), 3).unwrap()
}

#[test]
fn loday_functor_is_the_hochschild_complex() {
    assert!(loday_matches_oracle(&AlgebraData::dual_numbers(&q())));
    assert!(loday_matches_oracle(&AlgebraData::dual_numbers(&fp(2))));
    assert!(loday_matches_oracle(&symmetric3(&fp(3)).0));
    let l = loday_functor(&AlgebraData::ground_field(&q()), &AlgebraData::ground_field(&q()).regular_bimodule(), 2)
        .unwrap();
    assert!(matches!(moore_homology(&l, 2), Err(Error::MarginViolation { .. })));
}

#[test]
fn cyclic_structure_examples() {
    let k = AlgebraData::ground_field(&q());
    let c = cyclic_structure(&k, 3).unwrap();
    assert_eq!(c.dims(), &[1, 1, 1, 1]);
    assert!(c.base().all_morphisms().into_iter().all(|m| c.action(m).is_identity()));
    assert!(validate_functoriality(&c).is_empty());

    let eps = AlgebraData::dual_numbers(&q());
    let c = cyclic_structure(&eps, 3).unwrap();
    let dc = c.base().opposite_of().unwrap().clone();
    let t1 = FinCategory::op_morph(dc.find(1, 1, &cyclic_operator(1).to_payload()).unwrap());
    let swap = Mat::from_rows_i64(&q(), &[vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![0, 1, 0, 0], vec![0, 0, 0, 1]]);
    assert_eq!(c.action(t1), swap);
    assert!(c.action(t1).mul(&c.action(t1)).is_identity());

    // faces and degeneracies agree with the Loday functor
    let l = loday_functor(&eps, &eps.regular_bimodule(), 3).unwrap();
    let simplex = l.base().opposite_of().unwrap().clone();
    let op_in = |cat: &FinCategory, f: &FiberOrderedMap| FinCategory::op_morph(cat.find(f.dom(), f.cod(), &f.to_payload()).unwrap());
    for n in 1..=3 {
        for i in 0..=n {
            let face = FinCategory::op_morph(delta_delta(&simplex, n, i));
            assert_eq!(c.action(op_in(&dc, &delta(n, i))), l.action(face));
        }
    }
    for n in 0..3 {
        for i in 0..=n {
            let degeneracy = FinCategory::op_morph(delta_sigma(&simplex, n, i));
            assert_eq!(c.action(op_in(&dc, &sigma(n, i))), l.action(degeneracy));
        }
    }
}

#[test]
fn loday_functor_examples() {
    let k = AlgebraData::ground_field(&q());
    assert_eq!(loday_functor(&k, &k.regular_bimodule(), 3).unwrap().dims(), &[1, 1, 1, 1]);
    let eps = AlgebraData::dual_numbers(&q());
    let l = loday_functor(&eps, &eps.regular_bimodule(), 3).unwrap();
    assert_eq!(l.dims(), &[2, 4, 8, 16]);
    assert!(validate_functoriality(&l).is_empty());
    let g = factor_through(&eps, &eps.regular_bimodule(), 3, FactorTarget::GammaAs).unwrap();
    assert!(validate_functoriality(&g).is_empty());
    let f = factor_through(&k, &k.regular_bimodule(), 3, FactorTarget::FAs).unwrap();
    assert!(f.base().all_morphisms().into_iter().all(|m| f.action(m).is_identity()));
}

#[test]
fn gamma_factorization_restricts_to_loday_functor() {
    let (a, _) = symmetric3(&q());
    let m = a.regular_bimodule();
    let gamma = family_category(Family::Pointed, 3);
    let over_gamma = factor_through_over(&a, &m, &gamma, FactorTarget::GammaAs).unwrap();
    let embedding = delta_op_embedding(3, &gamma).unwrap();
    let restricted = restrict(&over_gamma, &embedding).unwrap();
    let direct = loday_functor_over(&a, &m, embedding.source()).unwrap();
    assert!(same_actions(&restricted, &direct));
}

#[test]
fn fas_factorization_restricts_to_cyclic_structure() {
    let (a, _) = symmetric3(&fp(3));
    let fas = family_category(Family::All, 3);
    let over_fas = factor_through_over(&a, &a.regular_bimodule(), &fas, FactorTarget::FAs).unwrap();
    let embedding = delta_c_op_embedding(3, &fas).unwrap();
    let restricted = restrict(&over_fas, &embedding).unwrap();
    let direct = cyclic_structure_over(&a, embedding.source()).unwrap();
    assert!(same_actions(&restricted, &direct));
}

#[test]
fn fiber_order_decides_the_side() {
    let (a, group) = symmetric3(&q());
    let gamma = family_category(Family::Pointed, 1);
    let l = factor_through_over(&a, &a.regular_bimodule(), &gamma, FactorTarget::GammaAs).unwrap();
    let find = |order: Vec<u16>| {
        let f = FiberOrderedMap::new(vec![0, 0], vec![order]).unwrap();
        gamma.find(1, 0, &f.to_payload()).unwrap()
    };
    let (m_then_a, a_then_m) = (find(vec![0, 1]), find(vec![1, 0]));
    let one = q().one();
    for mi in 0..6 {
        for ai in 0..6 {
            let input = vec![((mi * 6 + ai) as u32, one.clone())];
            assert_eq!(l.apply(m_then_a, &input), vec![(group.mul(mi, ai) as u32, one.clone())]);
            assert_eq!(l.apply(a_then_m, &input), vec![(group.mul(ai, mi) as u32, one.clone())]);
        }
    }
    let fas = family_category(Family::All, 1);
    let l = factor_through_over(&a, &a.regular_bimodule(), &fas, FactorTarget::FAs).unwrap();
    let swap = Morph::new(1, 0, 0);
    let f = FiberOrderedMap::from_payload(fas.payload(swap), 0);
    let (first, second) = (f.fiber(0)[0] as usize, f.fiber(0)[1] as usize);
    for x in 0..6 {
        for y in 0..6 {
            let digits = [x, y];
            let input = vec![((x * 6 + y) as u32, one.clone())];
            let expected = group.mul(digits[first], digits[second]);
            assert_eq!(l.apply(swap, &input), vec![(expected as u32, one.clone())]);
        }
    }
}

#[test]
fn fas_needs_the_regular_bimodule() {
    let f = q();
    let a = AlgebraData::dual_numbers(&f);
    let nil = Mat::from_rows_i64(&f, &[vec![0, 0], vec![1, 0]]);
    let id = Mat::identity(&f, 2);
    let twisted = BimoduleData::new(&a, 2, vec![id.clone(), nil], vec![id, Mat::zeros(&f, 2, 2)]).unwrap();
    assert!(matches!(factor_through(&a, &twisted, 2, FactorTarget::FAs), Err(Error::BimoduleNotAlgebra)));
    assert!(factor_through(&a, &twisted, 2, FactorTarget::GammaAs).is_ok());
}

#[test]
fn hochschild_routes_agree_on_a_twisted_bimodule() {
    let f = fp(3);
    let a = AlgebraData::dual_numbers(&f);
    let nil = Mat::from_rows_i64(&f, &[vec![0, 0], vec![1, 0]]);
    let id = Mat::identity(&f, 2);
    let twisted = BimoduleData::new(&a, 2, vec![id.clone(), nil], vec![id, Mat::zeros(&f, 2, 2)]).unwrap();
    let report = compare_hochschild(&a, &twisted, 3, 1, Side::default()).unwrap();
    assert!(report.holds, "{report:?}");
}

#[test]
fn margin_is_enforced() {
    let k = AlgebraData::ground_field(&q());
    let err = compare_hochschild(&k, &k.regular_bimodule(), 3, 2, Side::default()).unwrap_err();
    assert!(matches!(err, Error::MarginViolation { max_degree: 2, truncation: 3 }));
    assert!(matches!(compare_cyclic(&k, 2, 1, Side::default()), Err(Error::MarginViolation { .. })));
}

#[test]
fn cyclic_routes_agree_for_small_truncations() {
    let k = AlgebraData::ground_field(&fp(2));
    let report = compare_cyclic(&k, 3, 1, Side::ResolveCovariant).unwrap();
    assert!(report.holds, "{report:?}");
    assert_eq!(report.oracle, vec![1, 0]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn routes_agree_for_cyclic_group_algebras(order in 1usize..=3, p in prop::sample::select(vec![0u32, 2, 3])) {
        let group = GroupTable::cyclic(order);
        let holds = if p == 0 {
            let a = AlgebraData::group_algebra(&q(), &group);
            compare_hochschild(&a, &a.regular_bimodule(), 3, 1, Side::default()).unwrap().holds
        } else {
            let a = AlgebraData::group_algebra(&fp(p), &group);
            compare_hochschild(&a, &a.regular_bimodule(), 3, 1, Side::default()).unwrap().holds
        };
        prop_assert!(holds);
    }
}

#[test]
fn commutative_group_algebra_in_characteristic_two() {
    let a = AlgebraData::group_algebra(&fp(2), &GroupTable::cyclic(2));
    let m = a.regular_bimodule();
    assert_eq!(commutator_quotient_dim(&a, &m), 2);
    assert_eq!(hochschild_oracle(&a, &m, 0).unwrap(), vec![2]);
    let c = compare_hochschild(&a, &m, 3, 1, Side::default()).unwrap();
    assert!(c.holds, "{c:?}");
}

#[test]
fn enlarging_the_cyclic_window_keeps_lower_degrees() {
    for a in [AlgebraData::dual_numbers(&q()), AlgebraData::group_algebra(&q(), &GroupTable::cyclic(3))] {
        let short = cyclic_oracle(&a, 3).unwrap();
        let long = cyclic_oracle(&a, 4).unwrap();
        assert_eq!(&long[..4], &short[..]);
    }
}
