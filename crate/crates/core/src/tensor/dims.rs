use std::collections::BTreeMap;

use crate::exact::{rational, PowerSeries};

/// Dimensions of a graded Lie algebra by degree, known up to `truncation`.
/// Only nonzero dimensions are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedLieDims {
    dims: BTreeMap<usize, u64>,
    truncation: usize,
}

impl GradedLieDims {
    pub fn new(truncation: usize) -> Self {
        GradedLieDims { dims: BTreeMap::new(), truncation }
    }

    /// `dims[i]` is the dimension in degree `i + 1`.
    pub fn from_slice(dims: &[u64]) -> Self {
        let mut out = Self::new(dims.len());
        for (i, &d) in dims.iter().enumerate() {
            out.set(i + 1, d);
        }
        out
    }

    pub fn set(&mut self, degree: usize, dim: u64) {
        assert!(degree >= 1 && degree <= self.truncation, "degree {degree} outside 1..={}", self.truncation);
        if dim == 0 {
            self.dims.remove(&degree);
        } else {
            self.dims.insert(degree, dim);
        }
    }

    pub fn get(&self, degree: usize) -> u64 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Nonzero `(degree, dim)` pairs in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.dims.iter().map(|(&d, &n)| (d, n))
    }

    /// Dimensions in degrees `1..=truncation`.
    pub fn to_vec(&self) -> Vec<u64> {
        (1..=self.truncation).map(|d| self.get(d)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn hilbert(&self) -> PowerSeries {
        PowerSeries::from_coeffs((0..=self.truncation).map(|d| rational::int(self.get(d) as i64)), self.truncation)
    }
}

/// Degree dilation `q -> 2kq`: `result[2kq] = L[q]`.
pub fn rescale_lie_dims(l: &GradedLieDims, k: usize) -> GradedLieDims {
    assert!(k >= 1, "rescaling needs k >= 1");
    let mut out = GradedLieDims::new(2 * k * l.truncation());
    for (d, n) in l.iter() {
        out.set(2 * k * d, n);
    }
    out
}
