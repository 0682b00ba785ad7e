use super::presentation::AlgebraPresentation;
use crate::exact::PowerSeries;

/// `A[k]`: the algebra `A` with degree `q` moved to `(2k+1)q`, same product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RescaledAlgebra {
    base: AlgebraPresentation,
    k: usize,
}

impl RescaledAlgebra {
    pub fn base(&self) -> &AlgebraPresentation {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Degree in `A[k]` of a degree-`q` element of `A`.
    pub fn degree(&self, q: usize) -> usize {
        (2 * self.k + 1) * q
    }

    pub fn hilbert(&self, order: usize) -> PowerSeries {
        let m = 2 * self.k + 1;
        let base = self.base.hilbert(order / m);
        PowerSeries::from_coeffs(base.coeffs().iter().cloned(), order).substitute(1, m)
    }
}

pub fn rescale_algebra(a: &AlgebraPresentation, k: usize) -> RescaledAlgebra {
    assert!(k >= 1, "rescaling needs k >= 1");
    RescaledAlgebra { base: a.clone(), k }
}
