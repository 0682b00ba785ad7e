use std::collections::BTreeMap;

use super::model::{build_quillen_model, QuillenModel};
use crate::algebra::{holonomy_lie, rescale_algebra, AlgebraPresentation, Verdict};
use crate::error::Result;
use crate::exact::{Echelon, IntRow};
use crate::par::*;
use crate::tensor::{rescale_lie_dims, BlockKey, Grading, GradedLieDims, LieSpan, Word};

/// Homology of a Quillen model per degree, with the split by bracket length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuillenHomology {
    pub dims: GradedLieDims,
    /// `(degree, bracket length) -> dim`, nonzero entries only.
    pub bigraded: BTreeMap<(usize, usize), u64>,
}

/// `dim H_d = Σ_w (dim L_{d,w} - rank ∂_{d,w} - rank ∂_{d+1,w})`, where `w`
/// is the weight, preserved by `∂`.
pub fn quillen_homology_dims(model: &QuillenModel, order: usize) -> Result<QuillenHomology> {
    model.check_square_zero()?;
    let order = order.min(model.truncation());
    let mut dims = GradedLieDims::new(order);
    let mut bigraded = BTreeMap::new();
    if model.is_empty() {
        return Ok(QuillenHomology { dims, bigraded });
    }
    let gens = model.gens();
    let weights: Vec<i64> = (0..gens.len()).map(|g| gens.weight(g) as i64).collect();
    let grading = Grading::new(gens, vec![weights]);
    let span = LieSpan::free(&grading, order + 1)?;
    let keys: Vec<BlockKey> = (1..=order + 1).flat_map(|d| span.blocks_of_degree(d).map(|(k, _)| k.clone()).collect::<Vec<_>>()).collect();
    // rank of ∂ leaving each block
    let ranks: Vec<Result<(BlockKey, usize)>> = keys
        .into_par_iter()
        .map(|key| {
            let block = span.block(&key).expect("listed block");
            let images: Vec<IntRow<Word>> = block
                .rows()
                .iter()
                .map(|r| model.differential().apply_row(r))
                .collect::<Result<_>>()?;
            let mut e = Echelon::new();
            e.extend_batched(images);
            Ok((key, e.rank()))
        })
        .collect();
    let mut rank_out: BTreeMap<BlockKey, usize> = BTreeMap::new();
    for r in ranks {
        let (k, v) = r?;
        rank_out.insert(k, v);
    }
    let m = 2 * model.k() + 1;
    for d in 1..=order {
        for (key, block) in span.blocks_of_degree(d) {
            let above: BlockKey = vec![key[0] + 1, key[1]];
            let h = block.rank() - rank_out[key] - rank_out.get(&above).copied().unwrap_or(0);
            if h > 0 {
                let w = key[1] as usize;
                dims.set(d, dims.get(d) + h as u64);
                *bigraded.entry((d, m * w - d)).or_insert(0) += h as u64;
            }
        }
    }
    Ok(QuillenHomology { dims, bigraded })
}

/// Outcome of comparing Quillen homology against the rescaled holonomy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuillenTest {
    pub verdict: Verdict,
    pub homology: QuillenHomology,
    pub rescaled_holonomy: GradedLieDims,
}

/// Compares `H_* L(A[k], 0)` with `H(A)[k]` in degrees `1..=order`.
pub fn koszul_quillen_test(a: &AlgebraPresentation, k: usize, order: usize) -> Result<QuillenTest> {
    let model = build_quillen_model(&rescale_algebra(a, k), order)?;
    let homology = quillen_homology_dims(&model, order)?;
    let hol = holonomy_lie(a, order / (2 * k))?;
    let mut rescaled = GradedLieDims::new(order);
    for (d, n) in rescale_lie_dims(hol.dims(), k).iter() {
        if d <= order {
            rescaled.set(d, n);
        }
    }
    let first_bad = (1..=order).find(|&d| homology.dims.get(d) != rescaled.get(d));
    let verdict = match first_bad {
        None => Verdict::ConsistentUpTo { degree: order },
        Some(d) => Verdict::Fail {
            degree: Some(d),
            detail: format!(
                "Quillen homology has dimension {} but the rescaled holonomy Lie algebra has {}",
                homology.dims.get(d),
                rescaled.get(d)
            ),
        },
    };
    Ok(QuillenTest { verdict, homology, rescaled_holonomy: rescaled })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use crate::tensor::{free_lie_dims_lyndon, GeneratorSet};

    fn pres(n: usize, rels: &[&[(&[usize], i64)]], top: Option<usize>) -> AlgebraPresentation {
        let rels = rels.iter().map(|r| r.iter().map(|(m, c)| (m.to_vec(), int(*c))).collect()).collect();
        AlgebraPresentation::new(n, rels, top).unwrap()
    }

    #[test]
    fn rescaled_wedge_is_free() {
        let wedge = pres(2, &[&[(&[0, 1], 1)]], None);
        let m = build_quillen_model(&rescale_algebra(&wedge, 1), 10).unwrap();
        let h = quillen_homology_dims(&m, 10).unwrap();
        let free = free_lie_dims_lyndon(&GeneratorSet::graded(&[2, 2]).unwrap(), 10).unwrap();
        assert_eq!(h.dims, free);
    }

    #[test]
    fn torus_homology() {
        let h = quillen_homology_dims(&build_quillen_model(&rescale_algebra(&AlgebraPresentation::exterior(2), 1), 10).unwrap(), 10).unwrap();
        assert_eq!(h.dims.iter().collect::<Vec<_>>(), vec![(2, 2)]);
        assert_eq!(h.bigraded.get(&(2, 1)), Some(&2));
    }

    #[test]
    fn generic_arrangement_fails_in_degree_seven() {
        let t = koszul_quillen_test(&pres(3, &[], Some(2)), 1, 8).unwrap();
        assert_eq!(t.verdict.failing_degree(), Some(7));
        assert_eq!(t.homology.dims.get(7), 1);
        assert_eq!(t.rescaled_holonomy.get(7), 0);
        assert_eq!(t.homology.bigraded.get(&(7, 2)), Some(&1));
    }

    #[test]
    fn torus_and_wedge_pass() {
        assert!(koszul_quillen_test(&AlgebraPresentation::exterior(2), 1, 10).unwrap().verdict.passed());
        let wedge = pres(2, &[&[(&[0, 1], 1)]], None);
        assert!(koszul_quillen_test(&wedge, 1, 10).unwrap().verdict.passed());
    }
}
