use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{rational, Rational};
use crate::tensor::{GeneratorSet, LieElement, TensorElement};

/// `exp(x) = Σ x^j / j!` in the truncated tensor algebra; `x` must have zero
/// constant term.
pub fn exp_series(x: &TensorElement) -> Result<TensorElement> {
    if !x.constant_term().is_zero() {
        return Err(Error::InvalidInput("exp needs an element without constant term".into()));
    }
    let n = x.truncation();
    let steps = n / x.gens().min_degree().max(1);
    let mut out = TensorElement::scalar(x.gens(), n, Rational::one());
    let mut power = out.clone();
    for j in 1..=steps {
        power = power.mul_truncated(x);
        if power.is_zero() {
            break;
        }
        out = out.add(&power.scale(&rational::inverse_factorial(j)));
    }
    Ok(out)
}

/// `log(1 + u) = Σ (-1)^(j+1) u^j / j`; the argument must have constant term
/// one.
pub fn log_series(a: &TensorElement) -> Result<TensorElement> {
    if !a.constant_term().is_one() {
        return Err(Error::InvalidInput("log needs an element with constant term one".into()));
    }
    let n = a.truncation();
    let u = a.sub(&TensorElement::scalar(a.gens(), n, Rational::one()));
    let steps = n / a.gens().min_degree().max(1);
    let mut out = TensorElement::zero(a.gens(), n);
    let mut power = TensorElement::scalar(a.gens(), n, Rational::one());
    for j in 1..=steps {
        power = power.mul_truncated(&u);
        if power.is_zero() {
            break;
        }
        let c = rational::rat(if j % 2 == 1 { 1 } else { -1 }, j as i64);
        out = out.add(&power.scale(&c));
    }
    Ok(out)
}

/// Element of the free Lie algebra completed by bracket length and
/// truncated at length `r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MalcevElement(LieElement);

impl MalcevElement {
    pub fn new(x: LieElement) -> Self {
        MalcevElement(x)
    }

    pub fn zero(gens: &Arc<GeneratorSet>, r: usize) -> Self {
        MalcevElement(LieElement::zero(gens, r))
    }

    pub fn generator(gens: &Arc<GeneratorSet>, r: usize, i: usize) -> Result<Self> {
        LieElement::generator(gens, r, i).map(MalcevElement)
    }

    pub fn lie(&self) -> &LieElement {
        &self.0
    }

    pub fn into_lie(self) -> LieElement {
        self.0
    }

    pub fn gens(&self) -> &Arc<GeneratorSet> {
        self.0.as_tensor().gens()
    }

    pub fn order(&self) -> usize {
        self.0.as_tensor().truncation()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Least bracket length carrying a nonzero term; `None` for zero.
    pub fn filtration_order(&self) -> Option<usize> {
        self.0.as_tensor().terms().keys().map(|w| w.len()).min()
    }

    /// Homogeneous part of bracket length `d`.
    pub fn part(&self, d: usize) -> LieElement {
        LieElement::from_tensor_unchecked(self.0.as_tensor().part(d))
    }

    /// Drops bracket lengths above `r`.
    pub fn truncate(&self, r: usize) -> Self {
        MalcevElement(LieElement::from_tensor_unchecked(self.0.as_tensor().truncate(r)))
    }

    pub fn add(&self, other: &Self) -> Self {
        MalcevElement(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        MalcevElement(self.0.sub(&other.0))
    }

    pub fn neg(&self) -> Self {
        MalcevElement(self.0.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        MalcevElement(self.0.scale(c))
    }

    /// Bracket with terms past the truncation dropped.
    pub fn bracket(&self, other: &Self) -> Self {
        let r = self.order().min(other.order());
        let mut acc = TensorElement::zero(self.gens(), r);
        for (i, a) in self.0.as_tensor().homogeneous_parts() {
            for (j, b) in other.0.as_tensor().homogeneous_parts() {
                if i + j <= r {
                    acc = acc.add(&a.truncate(r).commutator(&b.truncate(r)).expect("length fits"));
                }
            }
        }
        MalcevElement(LieElement::from_tensor_unchecked(acc))
    }
}

impl fmt::Display for MalcevElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Campbell–Hausdorff product `log(exp x · exp y)` truncated at length `r`,
/// checked to be a Lie element in every length.
pub fn bch(x: &MalcevElement, y: &MalcevElement, r: usize) -> Result<MalcevElement> {
    let r = r.min(x.order()).min(y.order());
    let ex = exp_series(&x.0.as_tensor().truncate(r))?;
    let ey = exp_series(&y.0.as_tensor().truncate(r))?;
    let z = log_series(&ex.mul_truncated(&ey))?;
    LieElement::from_tensor(z).map(MalcevElement)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn setup(r: usize) -> (Arc<GeneratorSet>, MalcevElement, MalcevElement) {
        let g = GeneratorSet::ungraded(2);
        let x = MalcevElement::generator(&g, r, 0).unwrap();
        let y = MalcevElement::generator(&g, r, 1).unwrap();
        (g, x, y)
    }

    #[test]
    fn exp_of_generator_is_divided_powers() {
        let (_, x, _) = setup(4);
        let e = exp_series(x.lie().as_tensor()).unwrap();
        assert_eq!(e.terms().len(), 5);
        let xxx = x.lie().as_tensor().mul_truncated(x.lie().as_tensor()).mul_truncated(x.lie().as_tensor());
        assert_eq!(e.part(3), xxx.scale(&rat(1, 6)));
    }

    #[test]
    fn log_inverts_exp() {
        let (_, x, y) = setup(5);
        let z = x.add(&y.scale(&rat(-3, 2))).add(&x.bracket(&y));
        let back = log_series(&exp_series(z.lie().as_tensor()).unwrap()).unwrap();
        assert_eq!(&back, z.lie().as_tensor());
    }

    #[test]
    fn exp_and_log_reject_wrong_constants() {
        let (g, x, _) = setup(3);
        let one = TensorElement::scalar(&g, 3, Rational::one());
        assert!(exp_series(&one).is_err());
        assert!(log_series(x.lie().as_tensor()).is_err());
    }

    #[test]
    fn bch_degree_two() {
        let (_, x, y) = setup(2);
        let z = bch(&x, &y, 2).unwrap();
        let expected = x.add(&y).add(&x.bracket(&y).scale(&rat(1, 2)));
        assert_eq!(z, expected);
    }

    #[test]
    fn bch_degree_three() {
        let (_, x, y) = setup(3);
        let z = bch(&x, &y, 3).unwrap();
        let xy = x.bracket(&y);
        let expected = xy.bracket(&x).neg().add(&xy.bracket(&y)).scale(&rat(1, 12));
        // [x,[x,y]] = -[[x,y],x] and [y,[y,x]] = [[x,y],y]
        assert_eq!(z.part(3), expected.into_lie());
    }

    #[test]
    fn bch_with_zero_is_identity() {
        let (g, x, _) = setup(4);
        let zero = MalcevElement::zero(&g, 4);
        assert_eq!(bch(&x, &zero, 4).unwrap(), x);
        assert_eq!(bch(&zero, &x, 4).unwrap(), x);
        assert_eq!(bch(&x, &x.neg(), 4).unwrap(), zero);
    }

    #[test]
    fn filtration_order_and_parts() {
        let (g, x, y) = setup(3);
        assert_eq!(MalcevElement::zero(&g, 3).filtration_order(), None);
        let c = x.bracket(&y);
        assert_eq!(c.filtration_order(), Some(2));
        assert_eq!(c.add(&x).filtration_order(), Some(1));
        assert_eq!(c.add(&x).part(2), c.clone().into_lie());
        assert!(c.truncate(1).is_zero());
        assert!(c.bracket(&c).is_zero());
    }
}
