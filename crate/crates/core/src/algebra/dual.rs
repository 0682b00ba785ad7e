use std::sync::Arc;

use num_traits::Zero;

use super::exterior::monomials;
use super::groebner::{hilbert_counts, NcPoly};
use super::presentation::AlgebraPresentation;
use super::verdict::Verdict;
use crate::error::{Error, Result};
use crate::exact::{rational, PowerSeries, Rational, SparseMatrix};
use crate::tensor::{GeneratorSet, TensorElement, Word};

/// `A^! = T(V*) / (R^⊥)`. With the determinant pairing
/// `<e_i e_j, x_i x_j> = 1` (`i < j`), the relation space is spanned by
/// commutators `Σ c_ij [x_i, x_j]` whose coefficient vector `c` is orthogonal
/// to every vector of the degree-two relation space of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticDual {
    n: usize,
    relation_space: Vec<Vec<Rational>>,
    annihilator: Vec<Vec<Rational>>,
}

/// Orthogonal complement under the dot product, as a kernel basis.
pub fn orthogonal_complement(vectors: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { rational::one() } else { Rational::zero() }).collect())
            .collect();
    }
    SparseMatrix::from_dense(vectors).kernel_basis()
}

fn span_rank(vectors: &[Vec<Rational>]) -> usize {
    if vectors.is_empty() {
        0
    } else {
        SparseMatrix::from_dense(vectors).rank()
    }
}

impl QuadraticDual {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficient vectors over `e_i e_j` spanning `R`.
    pub fn relation_space(&self) -> &[Vec<Rational>] {
        &self.relation_space
    }

    /// Coefficient vectors over `[x_i, x_j]` spanning `R^⊥`.
    pub fn annihilator(&self) -> &[Vec<Rational>] {
        &self.annihilator
    }

    /// `(R^⊥)^⊥ = R`, compared as subspaces.
    pub fn double_dual_holds(&self) -> bool {
        let dim = self.n * self.n.saturating_sub(1) / 2;
        let back = orthogonal_complement(&self.annihilator, dim);
        let r = span_rank(&self.relation_space);
        let mut both = back.clone();
        both.extend(self.relation_space.iter().cloned());
        span_rank(&back) == r && span_rank(&both) == r
    }

    /// The relations of `A^!` as elements of the free associative algebra.
    pub fn relations(&self, gens: &Arc<GeneratorSet>, truncation: usize) -> Result<Vec<TensorElement>> {
        let pairs = monomials(self.n, 2);
        self.annihilator
            .iter()
            .map(|c| {
                let mut terms = Vec::new();
                for (m, q) in pairs.iter().zip(c) {
                    if q.is_zero() {
                        continue;
                    }
                    let mut idx = m.indices();
                    let (i, j) = (idx.next().unwrap(), idx.next().unwrap());
                    terms.push((Word::from_letters(&[i, j]), q.clone()));
                    terms.push((Word::from_letters(&[j, i]), -q.clone()));
                }
                TensorElement::from_terms(gens, truncation, terms)
            })
            .collect()
    }

    fn nc_relations(&self) -> Vec<NcPoly> {
        let g = GeneratorSet::ungraded(self.n);
        self.relations(&g, 2).expect("degree two fits").into_iter().map(|t| t.terms().clone()).collect()
    }

    /// `dim A^!_d` for `d <= order`.
    pub fn hilbert(&self, order: usize) -> PowerSeries {
        let counts = hilbert_counts(self.n, &self.nc_relations(), order);
        PowerSeries::from_coeffs(counts.into_iter().map(|c| Rational::from_integer(c.into())), order)
    }
}

/// The quadratic dual; the ideal of `A` must be generated in degree two.
pub fn quadratic_dual(a: &AlgebraPresentation) -> Result<QuadraticDual> {
    if let Some(d) = a.first_non_quadratic_degree() {
        return Err(Error::QuadraticRequired(format!("the ideal needs a generator in degree {d}")));
    }
    let n = a.n();
    let relation_space = a.degree_two_relation_space();
    let annihilator = orthogonal_complement(&relation_space, n * n.saturating_sub(1) / 2);
    Ok(QuadraticDual { n, relation_space, annihilator })
}

/// Checks `Hilb(A,t) · Hilb(A^!,-t) = 1` through degree `order`.
pub fn koszul_series_test(a: &AlgebraPresentation, order: usize) -> Result<Verdict> {
    let dual = quadratic_dual(a)?;
    let lhs = a.hilbert(order).mul(&dual.hilbert(order).substitute(-1, 1));
    Ok(match lhs.first_difference(&PowerSeries::one(order)) {
        None => Verdict::ConsistentUpTo { degree: order },
        Some(d) => Verdict::Fail {
            degree: Some(d),
            detail: format!("Hilb(A,t)·Hilb(A^!,-t) has coefficient {} in degree {d}", rational::show(&lhs.coeff(d))),
        },
    })
}
