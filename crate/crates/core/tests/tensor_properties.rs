use proptest::prelude::*;
use rescale_core::exact::rational::int;
use rescale_core::exact::PowerSeries;
use rescale_core::tensor::{
    free_lie_dims_lyndon, lie_span_dims, GeneratorSet, LieElement, SignConvention,
};

/// A generator or a bracket of two generators, scaled.
fn monomial(gens: &std::sync::Arc<GeneratorSet>, pick: (usize, Option<usize>, i64), n: usize) -> LieElement {
    let g = |i: usize| LieElement::generator(gens, n, i % gens.len()).unwrap();
    let base = match pick.1 {
        None => g(pick.0),
        Some(j) => g(pick.0).bracket(&g(j)).unwrap(),
    };
    base.scale(&int(pick.2))
}

fn pick() -> impl Strategy<Value = (usize, Option<usize>, i64)> {
    (0usize..3, prop::option::of(0usize..3), prop_oneof![-2i64..=-1, 1i64..=2])
}

fn sign(a: usize, b: usize) -> i64 {
    if (a * b).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graded_jacobi(degrees in prop::collection::vec(1usize..=3, 3), px in pick(), py in pick(), pz in pick()) {
        let gens = GeneratorSet::graded(&degrees).unwrap();
        let n = 18;
        let (x, y, z) = (monomial(&gens, px, n), monomial(&gens, py, n), monomial(&gens, pz, n));
        prop_assume!(!x.is_zero() && !y.is_zero() && !z.is_zero());
        let (a, b, c) = (x.degree().unwrap(), y.degree().unwrap(), z.degree().unwrap());
        let sum = x.bracket(&y.bracket(&z).unwrap()).unwrap().scale(&int(sign(a, c)))
            .add(&y.bracket(&z.bracket(&x).unwrap()).unwrap().scale(&int(sign(b, a))))
            .add(&z.bracket(&x.bracket(&y).unwrap()).unwrap().scale(&int(sign(c, b))));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn free_span_matches_lyndon(n in 1usize..=3, degree in 1usize..=2, signed in any::<bool>()) {
        let convention = if signed && degree % 2 == 0 { SignConvention::Graded } else { SignConvention::Unsigned };
        let gens = GeneratorSet::new(
            (1..=n).map(|i| format!("x{i}")).collect(), vec![degree; n], vec![1; n], convention,
        ).unwrap();
        prop_assert_eq!(lie_span_dims(&gens, &[], 6).unwrap(), free_lie_dims_lyndon(&gens, 6).unwrap());
    }

    #[test]
    fn even_free_product_identity(degrees in prop::collection::vec(prop_oneof![Just(2usize), Just(4)], 1..=3)) {
        let order = 10;
        let gens = GeneratorSet::graded(&degrees).unwrap();
        let dims = lie_span_dims(&gens, &[], order).unwrap();
        let mut lhs = PowerSeries::one(order);
        for (d, m) in dims.iter() {
            let f = PowerSeries::one(order).sub(&PowerSeries::monomial(int(1), d, order));
            lhs = lhs.mul(&f.pow(m as i64).unwrap());
        }
        let mut rhs = PowerSeries::one(order);
        for &d in &degrees {
            rhs = rhs.sub(&PowerSeries::monomial(int(1), d, order));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotients_shrink_as_relations_grow(picks in prop::collection::vec(pick(), 1..=3)) {
        let gens = GeneratorSet::ungraded(3);
        let n = 5;
        let rels: Vec<LieElement> = picks.iter().map(|&p| monomial(&gens, p, n)).collect();
        let mut prev = lie_span_dims(&gens, &[], n).unwrap();
        for k in 1..=rels.len() {
            let cur = lie_span_dims(&gens, &rels[..k], n).unwrap();
            for d in 1..=n {
                prop_assert!(cur.get(d) <= prev.get(d), "degree {}", d);
            }
            prev = cur;
        }
    }
}
