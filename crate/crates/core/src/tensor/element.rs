use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::generators::GeneratorSet;
use super::word::{Word, MAX_LEN};
use crate::error::{Error, Result};
use crate::exact::{rational, IntRow, Rational};

/// Element of the free associative algebra on a generator set, truncated
/// above total degree `N`. Stored words all have degree `<= N` and nonzero
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    gens: Arc<GeneratorSet>,
    truncation: usize,
    terms: BTreeMap<Word, Rational>,
}

impl TensorElement {
    pub fn zero(gens: &Arc<GeneratorSet>, truncation: usize) -> Self {
        TensorElement { gens: Arc::clone(gens), truncation, terms: BTreeMap::new() }
    }

    pub fn scalar(gens: &Arc<GeneratorSet>, truncation: usize, c: Rational) -> Self {
        Self::from_terms(gens, truncation, [(Word::EMPTY, c)]).expect("degree zero fits")
    }

    pub fn generator(gens: &Arc<GeneratorSet>, truncation: usize, i: usize) -> Result<Self> {
        Self::from_terms(gens, truncation, [(Word::letter(i), Rational::one())])
    }

    /// Sums the given terms; any word of degree above the truncation is an
    /// error.
    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(
        gens: &Arc<GeneratorSet>,
        truncation: usize,
        terms: I,
    ) -> Result<Self> {
        let mut e = Self::zero(gens, truncation);
        for (w, c) in terms {
            let d = gens.word_degree(w);
            if d > truncation {
                return Err(Error::TruncationOverflow { degree: d, truncation });
            }
            e.add_term(w, c);
        }
        Ok(e)
    }

    /// Rebuilds an element from an integer row over words.
    pub fn from_row(gens: &Arc<GeneratorSet>, truncation: usize, row: &IntRow<Word>) -> Result<Self> {
        Self::from_terms(gens, truncation, row.to_rationals())
    }

    /// Integer row proportional to this element (content divided out).
    pub fn to_row(&self) -> IntRow<Word> {
        IntRow::from_rationals(self.terms.iter().map(|(w, c)| (*w, c.clone())))
    }

    fn add_term(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn gens(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rational> {
        &self.terms
    }

    pub fn coeff(&self, w: Word) -> Rational {
        self.terms.get(&w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(Word::EMPTY)
    }

    /// The common degree of all terms, or `None` for zero and mixed elements.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut ds = self.terms.keys().map(|w| self.gens.word_degree(*w));
        let first = ds.next()?;
        ds.all(|d| d == first).then_some(first)
    }

    /// Degree-`d` component.
    pub fn part(&self, d: usize) -> Self {
        let terms = self.terms.iter().filter(|(w, _)| self.gens.word_degree(**w) == d);
        TensorElement { gens: Arc::clone(&self.gens), truncation: self.truncation, terms: terms.map(|(w, c)| (*w, c.clone())).collect() }
    }

    /// Components by degree, lowest first; zero parts are skipped.
    pub fn homogeneous_parts(&self) -> Vec<(usize, Self)> {
        let mut parts: BTreeMap<usize, Self> = BTreeMap::new();
        for (w, c) in &self.terms {
            let d = self.gens.word_degree(*w);
            parts.entry(d).or_insert_with(|| Self::zero(&self.gens, self.truncation)).terms.insert(*w, c.clone());
        }
        parts.into_iter().collect()
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.gens, &other.gens) || self.gens == other.gens,
            "elements over different generator sets"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let truncation = self.truncation.min(other.truncation);
        let mut out = self.clone();
        out.truncation = truncation;
        for (w, c) in &other.terms {
            out.add_term(*w, c.clone());
        }
        out.terms.retain(|w, _| self.gens.word_degree(*w) <= truncation);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.gens, self.truncation);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = &*v * c;
        }
        out
    }

    fn product(&self, other: &Self, drop_overflow: bool) -> Result<Self> {
        self.check_compatible(other);
        let truncation = self.truncation.min(other.truncation);
        // Right factor bucketed by degree: only pairs within the truncation are visited.
        let mut buckets: Vec<Vec<(Word, &Rational)>> = vec![Vec::new(); truncation + 1];
        let mut top = 0;
        for (v, b) in &other.terms {
            let d = self.gens.word_degree(*v);
            top = top.max(d);
            if d <= truncation {
                buckets[d].push((*v, b));
            }
        }
        let mut out = Self::zero(&self.gens, truncation);
        for (u, a) in &self.terms {
            let du = self.gens.word_degree(*u);
            if !drop_overflow && du + top > truncation {
                return Err(Error::TruncationOverflow { degree: du + top, truncation });
            }
            for (dv, bucket) in buckets.iter().enumerate().take((truncation + 1).saturating_sub(du)) {
                for (v, b) in bucket {
                    let w = u.concat(*v).ok_or(Error::TruncationOverflow { degree: du + dv, truncation: MAX_LEN })?;
                    out.add_term(w, a * *b);
                }
            }
        }
        Ok(out)
    }

    /// Concatenation product; a product term above the truncation is an
    /// error.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.product(other, false)
    }

    /// Product in the quotient by words of degree above the truncation.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        self.product(other, true).expect("truncated product cannot overflow")
    }

    /// Drops every term of degree above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let mut out = self.clone();
        out.truncation = order.min(self.truncation);
        out.terms.retain(|w, _| self.gens.word_degree(*w) <= order);
        out
    }

    /// Graded commutator `ab - (-1)^{|a||b|} ba`, extended bilinearly.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other);
        let truncation = self.truncation.min(other.truncation);
        let mut out = Self::zero(&self.gens, truncation);
        for (u, a) in &self.terms {
            let du = self.gens.word_degree(*u);
            for (v, b) in &other.terms {
                let dv = self.gens.word_degree(*v);
                let d = du + dv;
                if d > truncation {
                    return Err(Error::TruncationOverflow { degree: d, truncation });
                }
                let overflow = Error::TruncationOverflow { degree: d, truncation: MAX_LEN };
                let c = a * b;
                out.add_term(u.concat(*v).ok_or(overflow.clone())?, c.clone());
                let sign_even = (self.gens.parity(du) * self.gens.parity(dv)).is_multiple_of(2);
                out.add_term(v.concat(*u).ok_or(overflow)?, if sign_even { -c } else { c });
            }
        }
        Ok(out)
    }

    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = rational::is_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let word: Vec<&str> = w.letters().map(|l| self.gens.name(l)).collect();
            match (w.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{}", rational::show(&mag))?,
                (false, true) => write!(f, "{}", word.join(" "))?,
                (false, false) => write!(f, "{} {}", rational::show(&mag), word.join(" "))?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

/// A tensor element known to lie in the Lie subalgebra generated by the
/// generators. Closed under the operations below.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieElement(TensorElement);

impl LieElement {
    pub fn zero(gens: &Arc<GeneratorSet>, truncation: usize) -> Self {
        LieElement(TensorElement::zero(gens, truncation))
    }

    pub fn generator(gens: &Arc<GeneratorSet>, truncation: usize, i: usize) -> Result<Self> {
        TensorElement::generator(gens, truncation, i).map(LieElement)
    }

    /// Wraps a tensor element without checking membership; callers vouch for
    /// it (see `is_lie_element` for a check).
    pub fn from_tensor_unchecked(t: TensorElement) -> Self {
        LieElement(t)
    }

    /// Wraps a tensor element after the Dynkin test.
    pub fn from_tensor(t: TensorElement) -> Result<Self> {
        match t.homogeneous_parts().into_iter().find(|(_, p)| !is_lie_element(p)) {
            Some((d, _)) => Err(Error::NotPrimitive(d)),
            None => Ok(LieElement(t)),
        }
    }

    pub fn as_tensor(&self) -> &TensorElement {
        &self.0
    }

    pub fn into_tensor(self) -> TensorElement {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.homogeneous_degree()
    }

    /// Graded bracket. Overflow past the truncation is an error.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.0.commutator(&other.0).map(LieElement)
    }

    pub fn add(&self, other: &Self) -> Self {
        LieElement(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        LieElement(self.0.sub(&other.0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LieElement(self.0.scale(c))
    }

    pub fn neg(&self) -> Self {
        LieElement(self.0.neg())
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Left-normed bracketing `[..[[w1,w2],w3],..,wm]` of a word, as a tensor
/// element.
pub fn left_normed(gens: &Arc<GeneratorSet>, truncation: usize, w: Word) -> Result<TensorElement> {
    let mut letters = w.letters();
    let Some(first) = letters.next() else {
        return Ok(TensorElement::zero(gens, truncation));
    };
    let mut acc = TensorElement::generator(gens, truncation, first)?;
    for l in letters {
        acc = acc.commutator(&TensorElement::generator(gens, truncation, l)?)?;
    }
    Ok(acc)
}

/// Dynkin–Specht–Wever test on a homogeneous element without constant term:
/// `p` is a Lie element iff left-normed bracketing of every word multiplies
/// `p` by its length. Mixed-length input is tested lengthwise.
pub fn is_lie_element(p: &TensorElement) -> bool {
    if !p.constant_term().is_zero() {
        return false;
    }
    let mut by_len: BTreeMap<usize, Vec<(Word, Rational)>> = BTreeMap::new();
    for (w, c) in p.terms() {
        by_len.entry(w.len()).or_default().push((*w, c.clone()));
    }
    by_len.into_iter().all(|(len, terms)| {
        let gens = p.gens();
        let n = p.truncation();
        let mut theta = TensorElement::zero(gens, n);
        let mut orig = TensorElement::zero(gens, n);
        for (w, c) in terms {
            let Ok(b) = left_normed(gens, n, w) else { return false };
            theta = theta.add(&b.scale(&c));
            orig.add_term(w, c);
        }
        theta == orig.scale(&rational::int(len as i64))
    })
}
