use proptest::prelude::*;
use rescale_core::algebra::{holonomy_lie, quadratic_dual, rescale_algebra, AlgebraPresentation};
use rescale_core::exact::rational::int;
use rescale_core::lcs::extract_ranks;

/// Random presentations: a few degree-two relations and an optional top
/// truncation.
fn presentation() -> impl Strategy<Value = AlgebraPresentation> {
    (2usize..=4)
        .prop_flat_map(|n| {
            let pair = (0..n, 0..n, -2i64..=2).prop_filter("distinct", |(i, j, c)| i != j && *c != 0);
            let rel = prop::collection::vec(pair, 1..=2);
            (Just(n), prop::collection::vec(rel, 0..=3), prop::option::of(1usize..=n))
        })
        .prop_map(|(n, rels, top)| {
            let rels = rels.into_iter().map(|r| r.into_iter().map(|(i, j, c)| (vec![i, j], int(c))).collect()).collect();
            AlgebraPresentation::new(n, rels, top).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rescaling_substitutes_the_hilbert_series(a in presentation(), k in 1usize..=3) {
        let order = 14;
        prop_assert_eq!(rescale_algebra(&a, k).hilbert(order), a.hilbert(order).substitute(1, 2 * k + 1));
    }

    #[test]
    fn holonomy_low_degrees(a in presentation()) {
        let n = a.n();
        let h = holonomy_lie(&a, 2).unwrap();
        prop_assert_eq!(h.dims().get(1), n as u64);
        let a2 = a.hilbert(2).coeff(2);
        prop_assert_eq!(int((n * (n - 1) / 2) as i64) - a2, int(h.dims().get(2) as i64));
    }

    #[test]
    fn double_dual_is_the_relation_space(a in presentation()) {
        if a.is_quadratic() {
            prop_assert!(quadratic_dual(&a).unwrap().double_dual_holds());
        }
    }

    #[test]
    fn lcs_ranks_of_koszul_families_are_holonomy_dims(family in 0usize..3, size in 1usize..=3) {
        let a = match family {
            0 => AlgebraPresentation::wedge(size + 1).unwrap(),
            1 => AlgebraPresentation::torus(size + 1).unwrap(),
            _ => AlgebraPresentation::surface(size).unwrap(),
        };
        let order = 5;
        let ranks = extract_ranks(&a.hilbert(order), order).unwrap();
        let h = holonomy_lie(&a, order).unwrap();
        for d in 1..=order {
            prop_assert_eq!(ranks.get(d), h.dims().get(d).into());
        }
    }
}
