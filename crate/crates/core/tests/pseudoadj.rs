use functor_tor::catmod::{make_representable, make_trivial, validate_functoriality, CatModule, ModuleMap, Variance};
use functor_tor::crossed::{
    build_crossed, build_delta_c, build_delta_s, build_f_as, build_gamma_as, build_symmetric_crossed, CrossedCategory,
    Part,
};
use functor_tor::fincat::builtins::{factorial, group_category, GroupTable};
use functor_tor::linalg::{rank, Field, Mat, PrimeField, Rationals};
use functor_tor::pseudoadj::*;
use functor_tor::tor::{hom_over_category, CoverStrategy, Side};
use functor_tor::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn q() -> Rationals {
    Rationals
}

fn fp(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn zero_module<F: Field>(field: &F, x: &CrossedCategory, part: Option<Part>, variance: Variance) -> CatModule<F> {
    let base = part.map_or(x.base(), |p| x.part(p)).clone();
    let f = field.clone();
    let dims = vec![0; base.n_objects()];
    CatModule::from_fn(field, &base, variance, dims, move |_| Mat::zeros(&f, 0, 0))
}

fn trivial_over_c<F: Field>(field: &F, x: &CrossedCategory) -> CatModule<F> {
    make_trivial(field, x.part(Part::C), Variance::Contravariant)
}

#[test]
fn pseudo_free_over_symmetric_group() {
    let x = build_symmetric_crossed(3).unwrap();
    let l = pseudo_free(&x, &trivial_over_c(&q(), &x)).unwrap();
    assert_eq!(l.dims(), &[2]);
    assert!(validate_functoriality(&l).is_empty());
}

#[test]
fn pseudo_free_of_trivial_counts_orders() {
    for x in [build_f_as(4).unwrap(), build_gamma_as(4).unwrap()] {
        let l = pseudo_free(&x, &trivial_over_c(&q(), &x)).unwrap();
        let expected: Vec<usize> = (0..=4).map(factorial).collect();
        assert_eq!(l.dims(), expected.as_slice(), "{}", x.name());
    }
    let x = build_f_as(2).unwrap();
    assert!(validate_functoriality(&pseudo_free(&x, &trivial_over_c(&fp(2), &x)).unwrap()).is_empty());
}

#[test]
fn pseudo_free_with_trivial_d_is_the_identity() {
    let base = group_category(GroupTable::cyclic(3), "Z/3");
    let x = build_crossed(&base, |_| true, |m| base.is_identity(m)).unwrap();
    let m = make_representable(&fp(5), x.part(Part::C), 0, Variance::Contravariant);
    let l = pseudo_free(&x, &m).unwrap();
    assert_eq!(l.dims(), m.dims());
    for phi in x.part(Part::C).all_morphisms() {
        assert_eq!(l.action(x.to_base(Part::C, phi)), m.action(phi));
    }
}

#[test]
fn pseudo_free_rejects_wrong_inputs() {
    let x = build_symmetric_crossed(3).unwrap();
    let over_base = make_trivial(&q(), x.base(), Variance::Contravariant);
    assert!(matches!(pseudo_free(&x, &over_base), Err(Error::BaseMismatch(_))));
    let covariant = make_trivial(&q(), x.part(Part::C), Variance::Covariant);
    assert!(matches!(pseudo_free(&x, &covariant), Err(Error::BaseMismatch(_))));
}

/// Yoneda: the element `id_A ⊗ id_A` of `L_D(K[Hom_C(−, A)])(A)` induces a map from
/// `K[Hom_B(−, A)]`, which must be invertible at every object.
#[test]
fn pseudo_free_preserves_representables() {
    let field = q();
    for x in [build_delta_s(2).unwrap(), build_f_as(2).unwrap(), build_symmetric_crossed(4).unwrap()] {
        for a in 0..x.n_objects() {
            let rep_c = make_representable(&field, x.part(Part::C), a, Variance::Contravariant);
            let rep_b = make_representable(&field, x.base(), a, Variance::Contravariant);
            let l = pseudo_free(&x, &rep_c).unwrap();
            assert_eq!(l.dims(), rep_b.dims());
            let layout = pseudo_free_layout(&x, &rep_c);
            let id_d = x.from_base(Part::D, x.base().identity(a)).unwrap();
            let id_c = x.part(Part::C).identity(a);
            let generator = vec![((layout.offset(id_d) + id_c.idx as usize) as u32, field.one())];
            let components: Vec<Mat<Rationals>> = (0..x.n_objects())
                .map(|y| {
                    let cols = x.base().homs(y, a).map(|phi| l.apply(phi, &generator)).collect();
                    Mat::from_columns(&field, l.dim(y), cols)
                })
                .collect();
            for (y, c) in components.iter().enumerate() {
                assert_eq!(rank(c), l.dim(y), "{} at A = {a}, X = {y}", x.name());
            }
            assert!(ModuleMap::new(&rep_b, &l, components).is_ok());
        }
    }
}

fn random_hom<F: Field>(rng: &mut ChaCha8Rng, m: &CatModule<F>, n: &CatModule<F>) -> Vec<Mat<F>> {
    let hom = hom_over_category(m, n).unwrap();
    let coeffs: Vec<F::Elem> = (0..hom.dim).map(|_| m.field().from_i64(rng.gen_range(-3..=3))).collect();
    hom.combination(m, n, &coeffs)
}

#[test]
fn pseudo_free_is_exact() {
    let field = fp(3);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for x in [build_delta_c(2).unwrap(), build_gamma_as(2).unwrap(), build_symmetric_crossed(3).unwrap()] {
        let c = x.part(Part::C);
        let modules: Vec<CatModule<PrimeField>> = (0..x.n_objects())
            .map(|a| make_representable(&field, c, a, Variance::Contravariant))
            .chain([trivial_over_c(&field, &x)])
            .collect();
        for _ in 0..6 {
            let (m, m2) = (&modules[rng.gen_range(0..modules.len())], &modules[rng.gen_range(0..modules.len())]);
            let alpha = random_hom(&mut rng, m, m2);
            let (lm, lm2) = (pseudo_free(&x, m).unwrap(), pseudo_free(&x, m2).unwrap());
            let l_alpha = pseudo_free_map(&x, m, m2, &alpha);
            assert!(ModuleMap::new(&lm, &lm2, l_alpha.clone()).is_ok());
            // kernel and image dimensions are the blockwise sums
            for obj in 0..x.n_objects() {
                let expected: usize =
                    (0..x.n_objects()).map(|a| rank(&alpha[a]) * x.part(Part::D).hom_len(obj, a)).sum();
                assert_eq!(rank(&l_alpha[obj]), expected, "{} at {obj}", x.name());
            }
        }
    }
}

#[test]
fn adjunction_iso_examples() {
    let x = build_symmetric_crossed(3).unwrap();
    let f3 = fp(3);
    let iso = pseudo_adjunction_iso(&x, &trivial_over_c(&f3, &x), &make_trivial(&f3, x.base(), Variance::Covariant))
        .unwrap();
    assert_eq!((iso.report.left_dim, iso.report.right_dim), (1, 1));
    assert!(iso.report.holds());
    assert_eq!(iso.iso.rows(), 1);

    let x = build_f_as(2).unwrap();
    for a in 0..=2 {
        let n = make_representable(&q(), x.base(), a, Variance::Covariant);
        let report = pseudo_adjunction_iso(&x, &trivial_over_c(&q(), &x), &n).unwrap().report;
        assert!(report.holds(), "{report:?}");
    }

    for x in [build_delta_s(2).unwrap(), build_gamma_as(2).unwrap()] {
        let zero = zero_module(&q(), &x, Some(Part::C), Variance::Contravariant);
        let n = make_trivial(&q(), x.base(), Variance::Covariant);
        let report = pseudo_adjunction_iso(&x, &zero, &n).unwrap().report;
        assert_eq!((report.left_dim, report.right_dim), (0, 0));
    }
}

/// Twenty seeded pairs of module maps per crossed category; the iso must commute with the
/// induced maps on both tensor products.
#[test]
fn adjunction_iso_is_natural() {
    let field = q();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let categories = [
        build_delta_s(2).unwrap(),
        build_delta_c(2).unwrap(),
        build_f_as(2).unwrap(),
        build_gamma_as(2).unwrap(),
        build_symmetric_crossed(3).unwrap(),
    ];
    for x in &categories {
        let objects = x.n_objects();
        let cs: Vec<_> = (0..objects)
            .map(|a| make_representable(&field, x.part(Part::C), a, Variance::Contravariant))
            .chain([trivial_over_c(&field, x)])
            .collect();
        let bs: Vec<_> = (0..objects)
            .map(|a| make_representable(&field, x.base(), a, Variance::Covariant))
            .chain([make_trivial(&field, x.base(), Variance::Covariant)])
            .collect();
        for _ in 0..20 {
            let (m, m2) = (&cs[rng.gen_range(0..cs.len())], &cs[rng.gen_range(0..cs.len())]);
            let (n, n2) = (&bs[rng.gen_range(0..bs.len())], &bs[rng.gen_range(0..bs.len())]);
            let alpha = random_hom(&mut rng, m, m2);
            let beta = random_hom(&mut rng, n, n2);
            assert!(iso_is_natural(x, (m, m2, &alpha), (n, n2, &beta)).unwrap(), "{}", x.name());
        }
    }
}

#[test]
fn base_change_over_symmetric_groups() {
    let x = build_symmetric_crossed(3).unwrap();
    let f3 = fp(3);
    let r = base_change_check(
        &x,
        &trivial_over_c(&f3, &x),
        &make_trivial(&f3, x.base(), Variance::Covariant),
        3,
        Side::default(),
        CoverStrategy::Greedy,
    )
    .unwrap();
    assert_eq!((r.left.clone(), r.right.clone()), (vec![1, 1, 1, 1], vec![1, 1, 1, 1]));
    assert!(r.agree && !r.truncated);

    let r = base_change_check(
        &x,
        &trivial_over_c(&q(), &x),
        &make_trivial(&q(), x.base(), Variance::Covariant),
        3,
        Side::ResolveCovariant,
        CoverStrategy::Greedy,
    )
    .unwrap();
    assert_eq!(r.left, vec![1, 0, 0, 0]);
    assert!(r.agree);

    let x = build_symmetric_crossed(4).unwrap();
    let f2 = fp(2);
    let r = base_change_check(
        &x,
        &trivial_over_c(&f2, &x),
        &make_trivial(&f2, x.base(), Variance::Covariant),
        2,
        Side::default(),
        CoverStrategy::Greedy,
    )
    .unwrap();
    assert!(r.agree, "{r:?}");
}

#[test]
fn base_change_on_truncated_categories() {
    let field = fp(2);
    for x in [build_delta_c(3).unwrap(), build_gamma_as(3).unwrap()] {
        let a = make_representable(&field, x.part(Part::C), 1, Variance::Contravariant);
        let b = make_trivial(&field, x.base(), Variance::Covariant);
        let r = base_change_check(&x, &a, &b, 1, Side::default(), CoverStrategy::Greedy).unwrap();
        assert!(r.agree && r.truncated, "{r:?}");
    }
}

#[test]
fn b_modules_have_factorial_dimensions() {
    for x in [build_f_as(4).unwrap(), build_gamma_as(4).unwrap()] {
        let b = build_b_module(&q(), x.base()).unwrap();
        assert_eq!(b.dims(), &[1, 1, 2, 6, 24]);
        assert_eq!(b.variance(), Variance::Contravariant);
    }
    let x = build_f_as(2).unwrap();
    assert!(validate_functoriality(&build_b_module(&fp(2), x.base()).unwrap()).is_empty());
}

#[test]
fn cyclic_order_representables_at_small_truncations() {
    for x in [build_f_as(3).unwrap(), build_gamma_as(3).unwrap()] {
        let r = check_cyclic_order_representables(&q(), &x).unwrap();
        assert!(r.holds, "{r:?}");
        assert_eq!(r.dims_b[0], 1);
        assert_eq!(r.dims_b, r.dims_free);
    }
}

#[test]
fn adjunction_examples() {
    let x = build_symmetric_crossed(3).unwrap();
    let r =
        adjunction_check(&x, &trivial_over_c(&q(), &x), &make_trivial(&q(), x.base(), Variance::Contravariant)).unwrap();
    assert_eq!((r.hom_left, r.hom_right), (1, 1));
    assert!(r.holds);

    let zero = zero_module(&q(), &x, Some(Part::C), Variance::Contravariant);
    let r = adjunction_check(&x, &zero, &make_trivial(&q(), x.base(), Variance::Contravariant)).unwrap();
    assert_eq!((r.hom_left, r.hom_right), (0, 0));

    let x = build_f_as(2).unwrap();
    let b = build_b_module(&q(), x.base()).unwrap();
    assert!(adjunction_check(&x, &trivial_over_c(&q(), &x), &b).unwrap().holds);
}
