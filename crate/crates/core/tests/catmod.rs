use functor_tor::catmod::json::{module_from_json, module_to_json};
use functor_tor::catmod::*;
use functor_tor::crossed::{build_f_as, build_gamma_as, delta_op_embedding};
use functor_tor::fincat::builtins::{build_delta_truncated, group_category, GroupTable};
use functor_tor::fincat::Functor;
use functor_tor::linalg::{Field, Mat, PrimeField, Rationals};

#[test]
fn representable_dimensions() {
    let q = Rationals;
    let g = group_category(GroupTable::cyclic(5), "Z/5");
    assert_eq!(make_representable(&q, &g, 0, Variance::Contravariant).dims(), &[5]);
    let d = build_delta_truncated(2);
    assert_eq!(make_representable(&q, &d, 0, Variance::Contravariant).dims(), &[1, 1, 1]);
    let f = build_f_as(2).unwrap();
    assert_eq!(make_representable(&q, f.base(), 0, Variance::Contravariant).dims(), &[1, 2, 6]);
    assert_eq!(make_representable(&q, f.base(), 0, Variance::Covariant).dims(), &[1, 2, 3]);
}

#[test]
fn builtin_modules_are_functorial() {
    let q = Rationals;
    let d = build_delta_truncated(3);
    for v in [Variance::Covariant, Variance::Contravariant] {
        for a in 0..=3 {
            assert!(validate_functoriality(&make_representable(&q, &d, a, v)).is_empty());
        }
        assert!(validate_functoriality(&make_trivial(&q, &d, v)).is_empty());
    }
    let g = build_gamma_as(2).unwrap();
    let p = PrimeField::new(3).unwrap();
    for a in 0..=2 {
        assert!(validate_functoriality(&make_representable(&p, g.base(), a, Variance::Covariant)).is_empty());
        assert!(validate_on_generators(&make_representable(&p, g.base(), a, Variance::Contravariant)).is_empty());
    }
}

#[test]
fn trivial_module_over_simplicial_opposite() {
    let m = make_trivial(&Rationals, &build_delta_truncated(3).opposite(), Variance::Covariant);
    assert_eq!(m.dims(), &[1, 1, 1, 1]);
    assert!(validate_functoriality(&m).is_empty());
}

#[test]
fn dual_is_an_involution() {
    let q = Rationals;
    let f = build_f_as(2).unwrap();
    let m = make_representable(&q, f.base(), 1, Variance::Contravariant);
    let dm = dual(&m);
    assert_eq!(dm.variance(), Variance::Covariant);
    assert_eq!(dm.dims(), m.dims());
    assert!(validate_functoriality(&dm).is_empty());
    let ddm = dual(&dm);
    for x in f.base().all_morphisms() {
        assert_eq!(ddm.action(x), m.action(x));
    }
    let t = make_trivial(&q, f.base(), Variance::Covariant);
    let dt = dual(&t);
    assert_eq!(dt.variance(), Variance::Contravariant);
    assert!(f.base().all_morphisms().iter().all(|&x| dt.action(x).is_identity()));
}

#[test]
fn restriction() {
    let q = Rationals;
    let g = build_gamma_as(3).unwrap();
    let m = make_representable(&q, g.base(), 0, Variance::Covariant);
    let same = restrict(&m, &Functor::identity(g.base())).unwrap();
    for x in g.base().all_morphisms() {
        assert_eq!(same.action(x), m.action(x));
    }
    let e = delta_op_embedding(3, g.base()).unwrap();
    let simplicial = restrict(&m, &e).unwrap();
    assert_eq!(simplicial.dims(), m.dims());
    assert!(validate_functoriality(&simplicial).is_empty());
    let t = restrict(&make_trivial(&q, g.base(), Variance::Covariant), &e).unwrap();
    assert!(e.source().all_morphisms().iter().all(|&x| t.action(x).is_identity()));
    // restriction commutes with duality
    let a = dual(&simplicial);
    let b = restrict(&dual(&m), &e).unwrap();
    for x in e.source().all_morphisms() {
        assert_eq!(a.action(x), b.action(x));
    }
    let wrong = build_delta_truncated(3);
    assert!(restrict(&m, &Functor::identity(&wrong)).is_err());
}

#[test]
fn corrupted_action_is_reported() {
    let q = Rationals;
    let d = build_delta_truncated(2);
    let m = make_representable(&q, &d, 2, Variance::Covariant);
    let victim = d.homs(0, 1).next().unwrap();
    let mut mat = m.action(victim);
    mat.set(0, 0, q.from_i64(7));
    let bad = m.with_action_override(victim, mat);
    let report = validate_functoriality(&bad);
    assert!(report.iter().any(|v| matches!(v, ModuleViolation::Composition { .. })));
}

#[test]
fn json_round_trip() {
    let q = Rationals;
    let d = build_delta_truncated(2);
    let m = make_representable(&q, &d, 1, Variance::Contravariant);
    let j = module_to_json(&m, Some("delta:2".into()));
    let text = serde_json::to_string(&j).unwrap();
    let back = module_from_json(&q, &serde_json::from_str(&text).unwrap()).unwrap();
    for x in back.base().all_morphisms() {
        assert_eq!(back.action(x), m.action(x));
    }
    let inline = module_from_json(&q, &module_to_json(&m, None)).unwrap();
    assert_eq!(inline.dims(), m.dims());
}

#[test]
fn inconsistent_generators_are_rejected() {
    let q = Rationals;
    let d = build_delta_truncated(1);
    let gens: Vec<_> = d
        .generating_morphisms()
        .into_iter()
        .map(|g| (g, Mat::from_rows_i64(&q, &[vec![2]])))
        .collect();
    assert!(CatModule::from_generators(&q, &d, Variance::Covariant, vec![1, 1], &gens).is_err());
}

#[test]
fn module_maps_check_naturality() {
    let q = Rationals;
    let d = build_delta_truncated(2);
    let m = make_representable(&q, &d, 0, Variance::Covariant);
    let t = make_trivial(&q, &d, Variance::Covariant);
    // augmentation: every basis element to 1
    let aug: Vec<Mat<Rationals>> = (0..=2).map(|x| Mat::from_rows_i64(&q, &[vec![1; m.dim(x)]])).collect();
    assert!(ModuleMap::new(&m, &t, aug).is_ok());
    let mut bad: Vec<Mat<Rationals>> = (0..=2).map(|x| Mat::from_rows_i64(&q, &[vec![1; m.dim(x)]])).collect();
    bad[1] = Mat::from_rows_i64(&q, &[vec![1, 0]]);
    assert!(ModuleMap::new(&m, &t, bad).is_err());
}
