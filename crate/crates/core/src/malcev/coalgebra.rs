use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{rational, Rational};
use crate::tensor::{GeneratorSet, LieElement, TensorElement};

/// Homology coalgebra of the loop space of `S^m`, spanned by powers `v^j`
/// of a primitive class of degree `m - 1`, stored for `j <= r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopCoalgebra {
    m: usize,
    cutoff: usize,
    diagonals: Vec<Vec<(usize, usize, BigInt)>>,
}

impl LoopCoalgebra {
    pub fn new(m: usize, cutoff: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidInput(format!("sphere dimension {m} must be at least 2")));
        }
        let diagonals = (0..=cutoff).map(|j| diagonal(m, j)).collect();
        Ok(LoopCoalgebra { m, cutoff, diagonals })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    /// Degree of `v^j`.
    pub fn degree(&self, j: usize) -> usize {
        j * (self.m - 1)
    }

    /// `Δ(v^j) = Σ c · v^a ⊗ v^b` as `(a, b, c)` with `a + b = j`.
    pub fn diagonal(&self, j: usize) -> &[(usize, usize, BigInt)] {
        &self.diagonals[j]
    }

    /// The diagonal with the `v^j ⊗ 1` and `1 ⊗ v^j` terms removed.
    pub fn reduced_diagonal(&self, j: usize) -> impl Iterator<Item = &(usize, usize, BigInt)> + '_ {
        self.diagonals[j].iter().filter(|(a, b, _)| *a > 0 && *b > 0)
    }

    /// Counit: the two edge terms of every diagonal have coefficient one.
    pub fn counit_holds(&self) -> bool {
        (0..=self.cutoff).all(|j| {
            let coeff = |a: usize, b: usize| {
                self.diagonals[j]
                    .iter()
                    .filter(|t| t.0 == a && t.1 == b)
                    .map(|t| t.2.clone())
                    .sum::<BigInt>()
            };
            coeff(j, 0) == BigInt::from(1) && coeff(0, j) == BigInt::from(1)
        })
    }

    /// `(Δ ⊗ 1)Δ = (1 ⊗ Δ)Δ` on the stored range, compared as coefficient
    /// tables on `v^a ⊗ v^b ⊗ v^c`.
    pub fn coassociative(&self) -> bool {
        (0..=self.cutoff).all(|j| {
            let mut left: BTreeMap<(usize, usize, usize), BigInt> = BTreeMap::new();
            let mut right = left.clone();
            for (a, b, c) in &self.diagonals[j] {
                for (a1, a2, c1) in &self.diagonals[*a] {
                    *left.entry((*a1, *a2, *b)).or_default() += c * c1;
                }
                for (b1, b2, c2) in &self.diagonals[*b] {
                    *right.entry((*a, *b1, *b2)).or_default() += c * c2;
                }
            }
            left.retain(|_, c| !c.is_zero());
            right.retain(|_, c| !c.is_zero());
            left == right
        })
    }
}

fn diagonal(m: usize, j: usize) -> Vec<(usize, usize, BigInt)> {
    let mut out = Vec::new();
    if m % 2 == 1 {
        for a in 0..=j {
            out.push((a, j - a, rational::binomial(j, a)));
        }
    } else {
        let k = j / 2;
        for r in 0..=k {
            let c = rational::binomial(k, r);
            if j.is_multiple_of(2) {
                out.push((2 * r, 2 * (k - r), c));
            } else {
                out.push((2 * r + 1, 2 * (k - r), c.clone()));
                out.push((2 * r, 2 * (k - r) + 1, c));
            }
        }
    }
    out
}

/// Graded Lie algebra `E` realised inside a tensor algebra with Koszul
/// signs; `abelian` replaces every bracket by zero.
#[derive(Clone, Debug)]
pub struct TargetLie {
    gens: Arc<GeneratorSet>,
    truncation: usize,
    abelian: bool,
}

impl TargetLie {
    /// Free graded Lie algebra on generators of the given degrees.
    pub fn free(degrees: &[usize], truncation: usize) -> Result<Self> {
        Ok(TargetLie { gens: GeneratorSet::graded(degrees)?, truncation, abelian: false })
    }

    /// Abelian Lie algebra spanned by generators of the given degrees.
    pub fn abelian(degrees: &[usize], truncation: usize) -> Result<Self> {
        Ok(TargetLie { gens: GeneratorSet::graded(degrees)?, truncation, abelian: true })
    }

    pub fn gens(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn zero(&self) -> LieElement {
        LieElement::zero(&self.gens, self.truncation)
    }

    pub fn generator(&self, i: usize) -> Result<LieElement> {
        LieElement::generator(&self.gens, self.truncation, i)
    }

    /// Bracket with terms past the truncation dropped.
    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> LieElement {
        if self.abelian {
            return self.zero();
        }
        let mut acc = TensorElement::zero(&self.gens, self.truncation);
        for (p, x) in a.as_tensor().homogeneous_parts() {
            for (q, y) in b.as_tensor().homogeneous_parts() {
                if p + q <= self.truncation {
                    acc = acc.add(&x.commutator(&y).expect("degree fits"));
                }
            }
        }
        LieElement::from_tensor_unchecked(acc)
    }
}

/// Degree-zero linear map `C_+ → E`: `values[j - 1] = f(v^j)` for
/// `j = 1..=r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomMap {
    values: Vec<LieElement>,
}

impl HomMap {
    /// Checks that every `f(v^j)` is zero or homogeneous of degree
    /// `j (m - 1)`.
    pub fn new(c: &LoopCoalgebra, values: Vec<LieElement>) -> Result<Self> {
        if values.len() != c.cutoff() {
            return Err(Error::InvalidInput(format!("need {} values, got {}", c.cutoff(), values.len())));
        }
        for (i, v) in values.iter().enumerate() {
            let want = c.degree(i + 1);
            if !v.is_zero() && v.degree() != Some(want) {
                return Err(Error::DegreeMismatch(format!("f(v^{}) must have degree {want}", i + 1)));
            }
        }
        Ok(HomMap { values })
    }

    pub fn zero(c: &LoopCoalgebra, e: &TargetLie) -> Self {
        HomMap { values: vec![e.zero(); c.cutoff()] }
    }

    pub fn value(&self, j: usize) -> &LieElement {
        &self.values[j - 1]
    }

    pub fn add(&self, other: &Self) -> Self {
        HomMap { values: self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect() }
    }
}

/// `[f, g] = b ∘ (f ⊗ g) ∘ Δ̄`, evaluated on each `v^j` of the stored range.
pub fn hom_lie_bracket(c: &LoopCoalgebra, e: &TargetLie, f: &HomMap, g: &HomMap) -> Result<HomMap> {
    let values = (1..=c.cutoff())
        .map(|j| {
            c.reduced_diagonal(j).fold(e.zero(), |acc, (a, b, coef)| {
                let t = e.bracket(f.value(*a), g.value(*b));
                acc.add(&t.scale(&Rational::from_integer(coef.clone())))
            })
        })
        .collect();
    HomMap::new(c, values)
}

/// Constants making `f ↦ Σ c_j f(v^j)` a Lie map: `c_j = 1/j!` for odd `m`,
/// `c_2k = c_(2k+1) = 1/k!` for even `m`. Entry `j - 1` holds `c_j`.
pub fn lemma_constants(m: usize, r: usize) -> Vec<Rational> {
    (1..=r).map(|j| rational::inverse_factorial(if m % 2 == 1 { j } else { j / 2 })).collect()
}

/// `Σ c_j f(v^j)`.
pub fn lemma_map(f: &HomMap, consts: &[Rational]) -> LieElement {
    let first = f.values[0].as_tensor();
    let zero = LieElement::zero(first.gens(), first.truncation());
    f.values.iter().zip(consts).fold(zero, |acc, (v, c)| acc.add(&v.scale(c)))
}

/// Bracket of the regraded algebra `E{m} = ⊕ E_(j(m-1))`: for even `m` two
/// elements of odd `j` commute, otherwise the bracket of `E` is kept. Only
/// components with `j <= r` are retained.
pub fn rebracket(c: &LoopCoalgebra, e: &TargetLie, s: &LieElement, t: &LieElement) -> LieElement {
    let step = c.m() - 1;
    let mut acc = e.zero();
    for (p, x) in s.as_tensor().homogeneous_parts() {
        for (q, y) in t.as_tensor().homogeneous_parts() {
            let (jp, jq) = (p / step, q / step);
            if jp + jq > c.cutoff() || (c.m().is_multiple_of(2) && jp % 2 == 1 && jq % 2 == 1) {
                continue;
            }
            let (x, y) = (LieElement::from_tensor_unchecked(x.clone()), LieElement::from_tensor_unchecked(y));
            acc = acc.add(&e.bracket(&x, &y));
        }
    }
    acc
}

/// Outcome of comparing both sides of the bracket-preservation identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaCheck {
    pub holds: bool,
    /// Least `j` whose `v^j` component differs on some sample.
    pub first_mismatch: Option<usize>,
}

/// Checks `Φ([f, g]) = [Φ f, Φ g]'` on each sample pair, where
/// `Φ(f) = Σ c_j f(v^j)` and `[,]'` is the regraded bracket.
pub fn verify_lemma_exp3(
    c: &LoopCoalgebra,
    e: &TargetLie,
    samples: &[(HomMap, HomMap)],
    consts: &[Rational],
) -> Result<LemmaCheck> {
    if consts.len() < c.cutoff() {
        return Err(Error::InvalidInput(format!("need {} constants", c.cutoff())));
    }
    let mut first: Option<usize> = None;
    for (f, g) in samples {
        let lhs = lemma_map(&hom_lie_bracket(c, e, f, g)?, consts);
        let rhs = rebracket(c, e, &lemma_map(f, consts), &lemma_map(g, consts));
        for j in 1..=c.cutoff() {
            let d = c.degree(j);
            if lhs.as_tensor().part(d) != rhs.as_tensor().part(d) {
                first = Some(first.map_or(j, |k| k.min(j)));
                break;
            }
        }
    }
    Ok(LemmaCheck { holds: first.is_none(), first_mismatch: first })
}

/// Sample maps into the free Lie algebra on `n >= 2` generators of degree
/// `m - 1`: `f(v^j)` left-normed on letters `0, 1, 2, ..`, and `g(v^j)` on
/// letters `1, 2, ..`, indices taken mod `n`.
pub fn free_lie_samples(c: &LoopCoalgebra, n: usize) -> Result<(TargetLie, Vec<(HomMap, HomMap)>)> {
    if n < 2 {
        return Err(Error::InvalidInput("samples need at least two generators".into()));
    }
    let step = c.m() - 1;
    let e = TargetLie::free(&vec![step; n], c.cutoff() * step)?;
    let chain = |start: usize| -> Result<Vec<LieElement>> {
        let mut out = vec![e.generator(start % n)?];
        for j in 1..c.cutoff() {
            let prev = out.last().expect("nonempty").clone();
            out.push(e.bracket(&prev, &e.generator((start + j) % n)?));
        }
        Ok(out)
    };
    let f = HomMap::new(c, chain(0)?)?;
    let g = HomMap::new(c, chain(1)?)?;
    let h = f.add(&g);
    Ok((e, vec![(f.clone(), g.clone()), (g.clone(), f.clone()), (h.clone(), g), (f, h)]))
}
