use num_bigint::BigInt;
use proptest::prelude::*;
use rescale_core::exact::rational::int;
use rescale_core::exact::PowerSeries;
use rescale_core::geometry::{
    arrangement_series, graph_connected, link_cohomology, link_report, rescale_link, ArrangementSpec,
    WeightedLinkingGraph,
};

fn graph() -> impl Strategy<Value = WeightedLinkingGraph> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(-2i64..=2, n * (n - 1) / 2).prop_map(move |w| {
            let mut it = w.into_iter();
            let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| (i, j, it.next().unwrap())).collect();
            WeightedLinkingGraph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn connected_links_have_natural_ranks(g in graph()) {
        prop_assume!(graph_connected(&g));
        let r = link_report(&g, 1, 10).unwrap();
        prop_assert!(r.homotopy_ranks.ranks().iter().all(|x| *x >= BigInt::from(0)));
        if g.is_complete() {
            prop_assert_eq!(r.closed_forms_agree, Some(true));
        }
    }

    #[test]
    fn rescaling_a_link_regrades_its_cohomology(g in graph(), k in 1usize..=3) {
        let base = link_cohomology(&g, 1).unwrap();
        let (scaled, p) = rescale_link(&g, k).unwrap();
        let c = link_cohomology(&scaled, p).unwrap();
        prop_assert_eq!(&c.products, &base.products);
        let widened = PowerSeries::from_coeffs(base.hilbert.coeffs().iter().cloned(), 2 * p);
        prop_assert_eq!(c.hilbert, widened.substitute(1, p));
        prop_assert_eq!(c.presentation.hilbert(4), base.presentation.hilbert(4));
    }

    #[test]
    fn supersolvable_rank_product(exps in prop::collection::vec(1u64..=4, 1..=3), k in 1usize..=2) {
        let order = 12;
        let r = arrangement_series(&ArrangementSpec::Supersolvable { exponents: exps.clone() }, k, order).unwrap();
        let mut expect = PowerSeries::one(order);
        for &d in &exps {
            expect = expect.mul(&PowerSeries::one(order).sub(&PowerSeries::monomial(int(d as i64), 2 * k + 1, order)));
        }
        prop_assert_eq!(r.homotopy_product, Some(expect));
    }
}
