use std::sync::Arc;

use crate::algebra::RescaledAlgebra;
use crate::error::{Error, Result};
use crate::exact::{rational, Rational};
use crate::tensor::{Derivation, GeneratorSet, LieElement, SignConvention, TensorElement, Word};

/// Free graded Lie algebra on one generator `z_β` per basis element `β` of
/// `A^q` (`q >= 1`), placed in degree `(2k+1)q - 1` with weight `q`, and the
/// quadratic differential dual to the product:
///
/// `∂ z_β = Σ c^β_{jl} (-1)^{|b_j|} z_j z_l`, where `b_j b_l = Σ c^β_{jl} b_β`
/// in `A[k]` and `|b_j|` is the degree of `b_j` there.
#[derive(Clone, Debug)]
pub struct QuillenModel {
    k: usize,
    truncation: usize,
    gens: Arc<GeneratorSet>,
    /// `(q, index in the standard basis of A^q)` for each generator.
    sources: Vec<(usize, usize)>,
    differential: Derivation,
}

impl QuillenModel {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn gens(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    pub fn sources(&self) -> &[(usize, usize)] {
        &self.sources
    }

    pub fn differential(&self) -> &Derivation {
        &self.differential
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `∂` of generator `g` as a Lie element.
    pub fn boundary(&self, g: usize) -> LieElement {
        LieElement::from_tensor_unchecked(self.differential.image(g).clone())
    }

    /// Checks `∂∂ z = 0` on every generator.
    pub fn check_square_zero(&self) -> Result<()> {
        for g in 0..self.gens.len() {
            let dd = self.differential.apply(self.differential.image(g))?;
            if !dd.is_zero() {
                return Err(Error::DifferentialNotSquareZero(self.gens.name(g).to_string()));
            }
        }
        Ok(())
    }
}

/// Builds the model with every generator of degree `<= truncation + 1`,
/// which is what homology through degree `truncation` needs.
pub fn build_quillen_model(b: &RescaledAlgebra, truncation: usize) -> Result<QuillenModel> {
    let a = b.base();
    let k = b.k();
    let m = 2 * k + 1;
    let top = truncation + 1;
    let q_max = (top + 1) / m;
    let quotient = a.quotient(q_max);
    let mut names = Vec::new();
    let mut degrees = Vec::new();
    let mut weights = Vec::new();
    let mut sources = Vec::new();
    for q in 1..=q_max.min(quotient.max_degree()) {
        for (i, mono) in quotient.basis(q).iter().enumerate() {
            names.push(if q == 1 {
                format!("x{}", mono.indices().next().unwrap() + 1)
            } else {
                format!("z[{mono:?}]")
            });
            degrees.push(m * q - 1);
            weights.push(q);
            sources.push((q, i));
        }
    }
    let gens = GeneratorSet::new(names, degrees, weights, SignConvention::Graded)?;
    let index_of = |q: usize, i: usize| sources.iter().position(|&s| s == (q, i)).expect("generator present");
    let mut images: Vec<Vec<(Word, Rational)>> = vec![Vec::new(); gens.len()];
    for p in 1..q_max {
        for pp in 1..=q_max - p {
            let q = p + pp;
            for i in 0..quotient.dim(p) {
                for j in 0..quotient.dim(pp) {
                    let sign = if (m * p) % 2 == 1 { rational::int(-1) } else { rational::one() };
                    let w = Word::from_letters(&[index_of(p, i), index_of(pp, j)]);
                    for (beta, c) in quotient.mul_basis(p, i, pp, j) {
                        images[index_of(q, beta)].push((w, &c * &sign));
                    }
                }
            }
        }
    }
    let images: Vec<(usize, LieElement)> = images
        .into_iter()
        .enumerate()
        .filter(|(_, t)| !t.is_empty())
        .map(|(g, t)| {
            let el = TensorElement::from_terms(&gens, top, t)?;
            Ok((g, LieElement::from_tensor_unchecked(el)))
        })
        .collect::<Result<_>>()?;
    let images: Vec<(usize, LieElement)> = images.into_iter().filter(|(_, e)| !e.is_zero()).collect();
    let differential = Derivation::new(&gens, top, &images)?;
    let model = QuillenModel { k, truncation, gens, sources, differential };
    model.check_square_zero()?;
    Ok(model)
}

/// Whether every generator image is a Lie element (a sanity check on the
/// sign convention).
pub fn images_are_lie(model: &QuillenModel) -> bool {
    (0..model.gens().len()).all(|g| {
        let t = model.differential().image(g);
        t.is_zero() || crate::tensor::is_lie_element(t)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rescale_algebra, AlgebraPresentation};
    use crate::exact::rational::int;

    #[test]
    fn torus_model() {
        let m = build_quillen_model(&rescale_algebra(&AlgebraPresentation::exterior(2), 1), 6).unwrap();
        assert_eq!(m.gens().degrees(), &[2, 2, 5]);
        assert_eq!(m.gens().name(2), "z[e1e2]");
        // ∂z = -(x1 x2 - x2 x1), the fixed convention
        assert_eq!(m.boundary(2).to_string(), "-x1 x2 + x2 x1");
        assert!(images_are_lie(&m));
    }

    #[test]
    fn wedge_model_has_zero_differential() {
        let rels = vec![vec![(vec![0, 1], int(1))]];
        let a = AlgebraPresentation::new(2, rels, None).unwrap();
        let m = build_quillen_model(&rescale_algebra(&a, 2), 12).unwrap();
        assert_eq!(m.gens().degrees(), &[4, 4]);
        assert!((0..2).all(|g| m.boundary(g).is_zero()));
    }

    #[test]
    fn trivial_algebra_gives_empty_model() {
        let m = build_quillen_model(&rescale_algebra(&AlgebraPresentation::exterior(0), 1), 10).unwrap();
        assert!(m.is_empty());
    }

    #[test]
    fn square_zero_on_three_torus() {
        let m = build_quillen_model(&rescale_algebra(&AlgebraPresentation::exterior(3), 1), 9).unwrap();
        assert_eq!(m.gens().len(), 7);
        assert!(m.check_square_zero().is_ok());
        assert!(images_are_lie(&m));
    }
}
