use std::sync::Arc;

use super::dual::orthogonal_complement;
use super::exterior::monomials;
use super::presentation::AlgebraPresentation;
use crate::error::Result;
use crate::exact::Rational;
use crate::tensor::{quotient_dims, quotient_spans, GeneratorSet, GradedLieDims, LieElement, LieSpan, TensorElement, Word};

/// `L(x_1..x_n) / ideal(im ∇)` graded by bracket length, where `im ∇` is
/// the annihilator of the degree-two relations of `A` under the determinant
/// pairing.
#[derive(Clone, Debug)]
pub struct Holonomy {
    gens: Arc<GeneratorSet>,
    relations: Vec<LieElement>,
    dims: GradedLieDims,
    free: LieSpan,
    ideal: LieSpan,
}

impl Holonomy {
    pub fn gens(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    /// Basis of `im ∇` as brackets `Σ c_ij [x_i, x_j]`.
    pub fn relations(&self) -> &[LieElement] {
        &self.relations
    }

    pub fn dims(&self) -> &GradedLieDims {
        &self.dims
    }

    pub fn free_span(&self) -> &LieSpan {
        &self.free
    }

    pub fn ideal_span(&self) -> &LieSpan {
        &self.ideal
    }
}

/// Holonomy Lie algebra of `A` through bracket length `order`.
pub fn holonomy_lie(a: &AlgebraPresentation, order: usize) -> Result<Holonomy> {
    let n = a.n();
    let gens = GeneratorSet::ungraded(n);
    let truncation = order.max(2);
    let pairs = monomials(n, 2);
    let image = orthogonal_complement(&a.degree_two_relation_space(), pairs.len());
    let relations = image
        .iter()
        .map(|c| {
            let terms = pairs.iter().zip(c).flat_map(|(m, q)| {
                let mut idx = m.indices();
                let (i, j) = (idx.next().unwrap(), idx.next().unwrap());
                [(Word::from_letters(&[i, j]), q.clone()), (Word::from_letters(&[j, i]), -q.clone())]
            });
            let t = TensorElement::from_terms(&gens, truncation, terms.collect::<Vec<(Word, Rational)>>())?;
            Ok(LieElement::from_tensor_unchecked(t))
        })
        .collect::<Result<Vec<_>>>()?;
    let (free, ideal) = quotient_spans(&gens, &relations, order)?;
    let dims = quotient_dims(&free, &ideal);
    Ok(Holonomy { gens, relations, dims, free, ideal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use crate::tensor::free_lie_dims_lyndon;

    fn pres(n: usize, rels: &[&[(&[usize], i64)]]) -> AlgebraPresentation {
        let rels = rels.iter().map(|r| r.iter().map(|(m, c)| (m.to_vec(), int(*c))).collect()).collect();
        AlgebraPresentation::new(n, rels, None).unwrap()
    }

    #[test]
    fn wedge_gives_free_lie() {
        let a = pres(3, &[&[(&[0, 1], 1)], &[(&[0, 2], 1)], &[(&[1, 2], 1)]]);
        let h = holonomy_lie(&a, 5).unwrap();
        assert!(h.relations().is_empty());
        assert_eq!(h.dims(), &free_lie_dims_lyndon(&GeneratorSet::ungraded(3), 5).unwrap());
    }

    #[test]
    fn torus_is_abelian() {
        let h = holonomy_lie(&AlgebraPresentation::exterior(2), 6).unwrap();
        assert_eq!(h.relations().len(), 1);
        assert_eq!(h.relations()[0].to_string(), "x1 x2 - x2 x1");
        assert_eq!(h.dims().to_vec(), vec![2, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn genus_two() {
        let a = pres(4, &[&[(&[0, 2], 1)], &[(&[0, 3], 1)], &[(&[1, 2], 1)], &[(&[1, 3], 1)], &[(&[0, 1], 1), (&[2, 3], -1)]]);
        let h = holonomy_lie(&a, 5).unwrap();
        assert_eq!(h.relations()[0].to_string(), "x1 x2 - x2 x1 + x3 x4 - x4 x3");
        assert_eq!(h.dims().to_vec(), vec![4, 5, 16, 45, 144]);
    }

    #[test]
    fn degree_two_count() {
        // n(n-1)/2 minus the rank of ∇
        let a = pres(4, &[&[(&[0, 1], 1)], &[(&[2, 3], 1), (&[0, 2], 1)]]);
        let h = holonomy_lie(&a, 2).unwrap();
        let a2 = a.hilbert(2).coeff(2);
        assert_eq!(int(6 - h.dims().get(2) as i64), a2);
    }
}
