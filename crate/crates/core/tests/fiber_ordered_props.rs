use functor_tor::crossed::{family_category, FiberOrderedMap, Family};
use functor_tor::fincat::validate_category;
use proptest::prelude::*;

fn fiber_ordered(n: usize, m: usize) -> impl Strategy<Value = FiberOrderedMap> {
    (proptest::collection::vec(0..=m as u16, n + 1), Just((0..=n as u16).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(move |(underlying, order)| {
            let mut fibers = vec![Vec::new(); m + 1];
            for i in order {
                fibers[underlying[i as usize] as usize].push(i);
            }
            FiberOrderedMap::new(underlying, fibers).unwrap()
        })
}

fn triple(top: usize) -> impl Strategy<Value = (FiberOrderedMap, FiberOrderedMap, FiberOrderedMap)> {
    (0..=top, 0..=top, 0..=top, 0..=top).prop_flat_map(|(a, b, c, d)| (fiber_ordered(a, b), fiber_ordered(b, c), fiber_ordered(c, d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn composition_is_associative((f, g, h) in triple(4)) {
        prop_assert_eq!(h.compose(&g).compose(&f), h.compose(&g.compose(&f)));
    }

    #[test]
    fn payload_round_trip(f in (0..=4usize, 0..=4usize).prop_flat_map(|(n, m)| fiber_ordered(n, m))) {
        prop_assert_eq!(FiberOrderedMap::from_payload(&f.to_payload(), f.cod()), f.clone());
        prop_assert!(Family::All.contains(&f.to_payload(), f.cod()));
    }

    #[test]
    fn monotone_bijection_split_recomposes(f in (0..=4usize, 0..=4usize).prop_flat_map(|(n, m)| fiber_ordered(n, m))) {
        let (mono, sigma) = f.monotone_bijection_split();
        let rebuilt = FiberOrderedMap::monotone(&mono, f.cod()).compose(&FiberOrderedMap::bijection(&sigma));
        prop_assert_eq!(rebuilt, f);
    }
}

#[test]
fn category_axioms_exhaustive_up_to_two() {
    assert!(validate_category(&family_category(Family::All, 2)).is_empty());
    assert!(validate_category(&family_category(Family::Pointed, 2)).is_empty());
}
