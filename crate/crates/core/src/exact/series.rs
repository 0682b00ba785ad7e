use std::fmt;

use num_traits::{One, Zero};

use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// Truncated univariate power series `c_0 + c_1 t + ... + c_N t^N` over ℚ.
///
/// The truncation order `N` travels with the value. Binary operations work
/// modulo `t^(min(N_a, N_b) + 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![Rational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Rational::one(), 0, order)
    }

    /// `c t^d`, truncated at `order`.
    pub fn monomial(c: Rational, d: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if d <= order {
            s.coeffs[d] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// coefficients past `order` are dropped.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = Rational>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (d, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[d] = c;
        }
        s
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rational::int(c)), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, d: usize) -> Rational {
        self.coeffs.get(d).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().cloned(), order.min(self.order()))
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_coeffs((0..=n).map(|d| &self.coeffs[d] + &other.coeffs[d]), n)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_coeffs((0..=n).map(|d| &self.coeffs[d] - &other.coeffs[d]), n)
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiplicative inverse up to truncation, by forward substitution.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out = Self::zero(n);
        out.coeffs[0] = inv0.clone();
        for d in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=d {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out.coeffs[d - i];
                }
            }
            out.coeffs[d] = -(acc * &inv0);
        }
        Ok(out)
    }

    /// `a(sign · t^m)`, keeping the truncation order of `self`.
    pub fn substitute(&self, sign: i8, m: usize) -> Self {
        assert!(m >= 1, "substitution exponent must be positive");
        assert!(sign == 1 || sign == -1, "sign must be ±1");
        let n = self.order();
        let mut out = Self::zero(n);
        for (d, c) in self.coeffs.iter().enumerate() {
            if d * m > n {
                break;
            }
            out.coeffs[d * m] = if sign < 0 && d % 2 == 1 { -c } else { c.clone() };
        }
        out
    }

    /// `self^e` for a possibly negative integer exponent.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.reciprocal()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        let mut sq = base;
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    /// First degree at which the two series differ, within the common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&d| self.coeffs[d] != other.coeffs[d])
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} + O(t^{})", self.order() + 1)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coeff = rational::show(&mag);
            match (d, mag.is_one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{coeff}t")?,
                (_, true) => write!(f, "t^{d}")?,
                (_, false) => write!(f, "{coeff}t^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn s(c: &[i64], n: usize) -> PowerSeries {
        PowerSeries::from_ints(c, n)
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(s(&[1, 1], 6).mul(&s(&[1, -1], 6)), s(&[1, 0, -1], 6));
    }

    #[test]
    fn one_is_identity() {
        let a = s(&[3, -1, 4, 1, -5], 4);
        assert_eq!(PowerSeries::one(4).mul(&a), a);
    }

    #[test]
    fn reciprocal_of_one_minus_two_t() {
        let a = s(&[1, -2], 8);
        // Direct expansion: 1/(1-2t) = sum 2^d t^d.
        let expected = s(&[1, 2, 4, 8, 16, 32, 64, 128, 256], 8);
        let r = a.reciprocal().unwrap();
        assert_eq!(r, expected);
        assert!(a.mul(&r).is_one());
    }

    #[test]
    fn geometric_series() {
        let r = s(&[1, -1], 5).reciprocal().unwrap();
        assert_eq!(r, s(&[1, 1, 1, 1, 1, 1], 5));
        assert_eq!(PowerSeries::one(3).reciprocal().unwrap(), PowerSeries::one(3));
    }

    #[test]
    fn reciprocal_of_cube() {
        // (1-t^2)^3 has inverse sum binom(j+2,2) t^{2j}; frozen by long division.
        let r = s(&[1, 0, -3, 0, 3, 0, -1], 8).reciprocal().unwrap();
        assert_eq!(r, s(&[1, 0, 3, 0, 6, 0, 10, 0, 15], 8));
    }

    #[test]
    fn reciprocal_needs_unit() {
        assert_eq!(s(&[0, 1], 3).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn substitution() {
        assert_eq!(s(&[1, 1], 6).substitute(1, 3), s(&[1, 0, 0, 1], 6));
        let a = s(&[2, 5, 7], 4);
        assert_eq!(a.substitute(1, 1), a);
        assert_eq!(s(&[1, -2], 6).substitute(-1, 2), s(&[1, 0, 2], 6));
    }

    #[test]
    fn mixed_orders_take_minimum() {
        let p = s(&[1, 1, 1], 2).mul(&s(&[1, 1, 1, 1, 1], 5));
        assert_eq!(p.order(), 2);
        assert_eq!(p, s(&[1, 2, 3], 2));
    }

    #[test]
    fn powers() {
        assert_eq!(s(&[1, 1], 4).pow(3).unwrap(), s(&[1, 3, 3, 1], 4));
        assert_eq!(s(&[1, -1], 3).pow(-2).unwrap(), s(&[1, 2, 3, 4], 3));
        assert_eq!(s(&[1, -1], 3).pow(0).unwrap(), PowerSeries::one(3));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -4, 1], 2).to_string(), "1 - 4t + t^2");
        let half = PowerSeries::from_coeffs([int(0), rational::rat(1, 2)], 1);
        assert_eq!(half.to_string(), "1/2t");
        assert_eq!(PowerSeries::zero(2).to_string(), "0");
    }
}
