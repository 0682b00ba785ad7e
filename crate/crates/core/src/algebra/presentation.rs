use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::exterior::{monomials, Monomial};
use crate::error::{Error, Result};
use crate::exact::{rational, Echelon, IntRow, PowerSeries, Rational, TrackedEchelon};
use crate::par::*;

/// Homogeneous element of an exterior algebra.
pub type ExteriorElement = BTreeMap<Monomial, Rational>;

/// Largest supported number of exterior generators.
pub const MAX_GENERATORS: usize = 63;

/// Connected graded-commutative algebra `Λ(e_1..e_n) / I`. The ideal `I` is
/// generated by the listed homogeneous relations together with every
/// monomial of degree above `top_truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    n: usize,
    relations: Vec<ExteriorElement>,
    top_truncation: usize,
}

impl AlgebraPresentation {
    /// Relations are lists of `(indices, coefficient)`; each index list is a
    /// product of generators in the given order.
    pub fn new(n: usize, relations: Vec<Vec<(Vec<usize>, Rational)>>, top_truncation: Option<usize>) -> Result<Self> {
        let mut rels = Vec::with_capacity(relations.len());
        for (r, terms) in relations.into_iter().enumerate() {
            let mut el = ExteriorElement::new();
            for (idx, c) in terms {
                if let Some(&bad) = idx.iter().find(|&&i| i >= n) {
                    return Err(Error::InvalidInput(format!("relation {r}: generator index {bad} out of range")));
                }
                if let Some((m, neg)) = Monomial::from_indices(&idx) {
                    let e = el.entry(m).or_insert_with(Rational::zero);
                    *e += if neg { -c } else { c };
                }
            }
            el.retain(|_, c| !c.is_zero());
            rels.push(el);
        }
        Self::from_elements(n, rels, top_truncation)
    }

    pub fn from_elements(n: usize, relations: Vec<ExteriorElement>, top_truncation: Option<usize>) -> Result<Self> {
        if n > MAX_GENERATORS {
            return Err(Error::InvalidInput(format!("at most {MAX_GENERATORS} generators are supported")));
        }
        let mut rels = Vec::new();
        for (r, el) in relations.into_iter().enumerate() {
            let mut el = el;
            el.retain(|_, c| !c.is_zero());
            let mut degs = el.keys().map(|m| m.degree());
            let Some(d) = degs.next() else { continue };
            if degs.any(|e| e != d) {
                return Err(Error::InvalidInput(format!("relation {r} is not homogeneous")));
            }
            if d < 2 {
                return Err(Error::InvalidInput(format!("relation {r} has degree {d}; relations start in degree 2")));
            }
            if el.keys().any(|m| m.bits() >> n != 0) {
                return Err(Error::InvalidInput(format!("relation {r} uses a generator outside e1..e{n}")));
            }
            rels.push(el);
        }
        Ok(AlgebraPresentation { n, relations: rels, top_truncation: top_truncation.unwrap_or(n).min(n) })
    }

    /// The full exterior algebra on `n` generators.
    pub fn exterior(n: usize) -> Self {
        Self::from_elements(n, Vec::new(), None).expect("valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[ExteriorElement] {
        &self.relations
    }

    pub fn top_truncation(&self) -> usize {
        self.top_truncation
    }

    /// Spanning set of the ideal in degree `d`, optionally restricted to
    /// relations of degree at most `max_rel_degree`.
    fn ideal_generators(&self, d: usize, max_rel_degree: usize) -> Vec<Vec<(Monomial, Rational)>> {
        if d > self.top_truncation {
            return monomials(self.n, d).into_iter().map(|m| vec![(m, rational::one())]).collect();
        }
        let mut out = Vec::new();
        for r in &self.relations {
            let e = r.keys().next().map_or(0, |m| m.degree());
            if e > d || e > max_rel_degree {
                continue;
            }
            for m in monomials(self.n, d - e) {
                let prod: Vec<(Monomial, Rational)> = r
                    .iter()
                    .filter_map(|(rm, c)| rm.mul(m).map(|(p, neg)| (p, if neg { -c.clone() } else { c.clone() })))
                    .collect();
                if !prod.is_empty() {
                    out.push(prod);
                }
            }
        }
        out
    }

    fn ideal_rank(&self, d: usize, max_rel_degree: usize) -> usize {
        let mut e = Echelon::new();
        for g in self.ideal_generators(d, max_rel_degree) {
            e.insert(IntRow::from_rationals(g));
        }
        e.rank()
    }

    /// `dim A^d` for `d <= order`, degree by degree.
    pub fn hilbert(&self, order: usize) -> PowerSeries {
        let dims: Vec<i64> = (0..=order)
            .into_par_iter()
            .map(|d| {
                if d > self.n {
                    return 0;
                }
                let total = monomials(self.n, d).len();
                (total - self.ideal_rank(d, usize::MAX)) as i64
            })
            .collect();
        PowerSeries::from_ints(&dims, order)
    }

    /// Basis of the degree-two part of the ideal, in coordinates over
    /// `e_i e_j` (`i < j`, lexicographic).
    pub fn degree_two_relation_space(&self) -> Vec<Vec<Rational>> {
        let pairs = monomials(self.n, 2);
        let pos: HashMap<Monomial, usize> = pairs.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut t = TrackedEchelon::new();
        let mut basis = Vec::new();
        for g in self.ideal_generators(2, 2) {
            if t.insert(g.clone()) {
                let mut v = vec![Rational::zero(); pairs.len()];
                for (m, c) in g {
                    v[pos[&m]] += c;
                }
                basis.push(v);
            }
        }
        basis
    }

    /// Whether the ideal is generated by its degree-two part: degreewise
    /// ranks agree with those of the ideal generated in degree two.
    pub fn is_quadratic(&self) -> bool {
        self.first_non_quadratic_degree().is_none()
    }

    /// Lowest degree where the ideal exceeds the one generated by its
    /// degree-two part.
    pub fn first_non_quadratic_degree(&self) -> Option<usize> {
        let two = AlgebraPresentation {
            n: self.n,
            relations: self.quadratic_part_elements(),
            top_truncation: self.n,
        };
        (3..=self.n).find(|&d| self.ideal_rank(d, usize::MAX) != two.ideal_rank(d, 2))
    }

    fn quadratic_part_elements(&self) -> Vec<ExteriorElement> {
        let pairs = monomials(self.n, 2);
        self.degree_two_relation_space()
            .into_iter()
            .map(|v| pairs.iter().copied().zip(v).filter(|(_, c)| !c.is_zero()).collect())
            .collect()
    }

    /// Normal-form data up to degree `max_degree`.
    pub fn quotient(&self, max_degree: usize) -> Quotient {
        let top = max_degree.min(self.n);
        let per_degree: Vec<(Vec<Monomial>, TrackedEchelon<Monomial>)> = (0..=top)
            .into_par_iter()
            .map(|d| {
                let mut t = TrackedEchelon::new();
                for g in self.ideal_generators(d, usize::MAX) {
                    t.insert(g);
                }
                let basis = monomials(self.n, d).into_iter().filter(|m| !t.is_pivot(m)).collect();
                (basis, t)
            })
            .collect();
        let (basis, reducers): (Vec<_>, Vec<_>) = per_degree.into_iter().unzip();
        let index = basis.iter().map(|b: &Vec<Monomial>| b.iter().enumerate().map(|(i, m)| (*m, i)).collect()).collect();
        Quotient { basis, index, reducers }
    }
}

/// Standard-monomial basis of `A^d` for each degree, with exact normal forms.
#[derive(Clone, Debug)]
pub struct Quotient {
    basis: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    reducers: Vec<TrackedEchelon<Monomial>>,
}

impl Quotient {
    pub fn max_degree(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis.get(d).map_or(0, Vec::len)
    }

    pub fn basis(&self, d: usize) -> &[Monomial] {
        self.basis.get(d).map_or(&[], Vec::as_slice)
    }

    /// Coordinates of a degree-`d` element over the standard basis.
    pub fn normal_form(&self, d: usize, v: Vec<(Monomial, Rational)>) -> Vec<(usize, Rational)> {
        if d > self.max_degree() {
            return Vec::new();
        }
        self.reducers[d].remainder(v).into_iter().map(|(m, c)| (self.index[d][&m], c)).collect()
    }

    /// Product of basis elements `i` of degree `p` and `j` of degree `q`.
    pub fn mul_basis(&self, p: usize, i: usize, q: usize, j: usize) -> Vec<(usize, Rational)> {
        match self.basis[p][i].mul(self.basis[q][j]) {
            Some((m, neg)) if p + q <= self.max_degree() => {
                self.normal_form(p + q, vec![(m, if neg { rational::int(-1) } else { rational::one() })])
            }
            _ => Vec::new(),
        }
    }
}
