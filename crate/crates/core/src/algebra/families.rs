use super::presentation::AlgebraPresentation;
use crate::error::Result;
use crate::exact::rational;

impl AlgebraPresentation {
    /// Cohomology of a wedge of `n` circles: every product vanishes.
    pub fn wedge(n: usize) -> Result<Self> {
        Self::from_elements(n, Vec::new(), Some(1.min(n)))
    }

    /// Cohomology of the `n`-torus.
    pub fn torus(n: usize) -> Result<Self> {
        Self::from_elements(n, Vec::new(), None)
    }

    /// Cohomology of the closed orientable surface of genus `g`, generators
    /// ordered `a_1, b_1, .., a_g, b_g`: `a_i b_i = a_1 b_1` and all other
    /// products of distinct generators vanish.
    pub fn surface(g: usize) -> Result<Self> {
        let n = 2 * g;
        let one = rational::int(1);
        let mut rels = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !(i % 2 == 0 && j == i + 1) {
                    rels.push(vec![(vec![i, j], one.clone())]);
                }
            }
        }
        for i in 1..g {
            rels.push(vec![(vec![0, 1], one.clone()), (vec![2 * i, 2 * i + 1], -one.clone())]);
        }
        Self::new(n, rels, Some(2.min(n)))
    }

    /// Cohomology of the complement of `n` generic affine hyperplanes in
    /// `C^l`: the exterior algebra with every monomial of degree above `l`
    /// killed.
    pub fn generic_arrangement(n: usize, l: usize) -> Result<Self> {
        Self::from_elements(n, Vec::new(), Some(l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::PowerSeries;

    #[test]
    fn hilbert_series_of_families() {
        let s = |c: &[i64]| PowerSeries::from_ints(c, 5);
        assert_eq!(AlgebraPresentation::wedge(3).unwrap().hilbert(5), s(&[1, 3]));
        assert_eq!(AlgebraPresentation::torus(3).unwrap().hilbert(5), s(&[1, 3, 3, 1]));
        assert_eq!(AlgebraPresentation::surface(1).unwrap().hilbert(5), s(&[1, 2, 1]));
        assert_eq!(AlgebraPresentation::surface(3).unwrap().hilbert(5), s(&[1, 6, 1]));
        assert_eq!(AlgebraPresentation::generic_arrangement(4, 2).unwrap().hilbert(5), s(&[1, 4, 6]));
    }

    #[test]
    fn quadratic_families() {
        assert!(AlgebraPresentation::wedge(2).unwrap().is_quadratic());
        assert!(AlgebraPresentation::surface(2).unwrap().is_quadratic());
        assert!(!AlgebraPresentation::generic_arrangement(3, 2).unwrap().is_quadratic());
    }
}
