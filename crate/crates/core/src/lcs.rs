//! Hilbert-series identities for lower central series ranks, homotopy ranks
//! of rescaled spaces and loop-space Poincaré series.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rational, PowerSeries, Rational};
use crate::tensor::GradedLieDims;

/// Which ranks a table holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankKind {
    /// `φ_n`: ranks of the graded pieces of the lower central series.
    LowerCentral,
    /// `Φ_n`: ranks of the homotopy groups of the loop space.
    Homotopy,
}

/// Ranks indexed by degree `1..=truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTable {
    pub kind: RankKind,
    ranks: Vec<BigInt>,
    pub source: PowerSeries,
}

impl RankTable {
    pub fn truncation(&self) -> usize {
        self.ranks.len()
    }

    pub fn get(&self, n: usize) -> BigInt {
        if n == 0 {
            return BigInt::zero();
        }
        self.ranks.get(n - 1).cloned().unwrap_or_default()
    }

    /// Ranks in degrees `1..=truncation`.
    pub fn ranks(&self) -> &[BigInt] {
        &self.ranks
    }

    /// Nonzero `(degree, rank)` pairs.
    pub fn support(&self) -> Vec<(usize, BigInt)> {
        self.ranks.iter().enumerate().filter(|(_, r)| !r.is_zero()).map(|(i, r)| (i + 1, r.clone())).collect()
    }
}

/// `(1 - t^n)^e` for any integer `e`, by the generalised binomial theorem.
pub fn one_minus_power(n: usize, e: &BigInt, order: usize) -> PowerSeries {
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    let mut binom = Rational::one();
    let mut j = 1usize;
    while n * j <= order {
        // C(e, j) = C(e, j-1) (e - j + 1) / j
        binom = binom * Rational::from_integer(e - BigInt::from(j - 1)) / Rational::from_integer(j.into());
        if binom.is_zero() {
            break;
        }
        coeffs[n * j] = if j % 2 == 1 { -binom.clone() } else { binom.clone() };
        j += 1;
    }
    PowerSeries::from_coeffs(coeffs, order)
}

/// `∏_{n} (1 - t^{n·stride})^{ranks[n]}` truncated at `order`.
pub fn rank_product(ranks: &[(usize, BigInt)], stride: usize, order: usize) -> PowerSeries {
    ranks
        .iter()
        .filter(|(n, _)| n * stride <= order)
        .fold(PowerSeries::one(order), |acc, (n, r)| acc.mul(&one_minus_power(n * stride, r, order)))
}

/// The integers `φ_n` with `∏_{n<=N} (1-t^n)^{φ_n} = P(-t) mod t^{N+1}`,
/// found degree by degree: the degree-`n` coefficient fixes `φ_n`.
pub fn extract_ranks(p: &PowerSeries, order: usize) -> Result<RankTable> {
    let order = order.min(p.order());
    if !p.coeff(0).is_one() {
        return Err(Error::InvalidInput(format!("series must start with 1, got {}", rational::show(&p.coeff(0)))));
    }
    let target = p.truncate(order).substitute(-1, 1);
    let mut cur = PowerSeries::one(order);
    let mut ranks = Vec::with_capacity(order);
    for n in 1..=order {
        let phi = cur.coeff(n) - target.coeff(n);
        let Some(phi) = rational::as_integer(&phi) else {
            return Err(Error::NonIntegralRank { degree: n, value: rational::show(&phi) });
        };
        if phi.is_negative() {
            return Err(Error::NegativeRank { degree: n, value: phi.to_string() });
        }
        cur = cur.mul(&one_minus_power(n, &phi, order));
        ranks.push(phi);
    }
    Ok(RankTable { kind: RankKind::LowerCentral, ranks, source: p.truncate(order) })
}

/// `Φ_{2kr} = φ_r` for `2kr <= order`; every other degree is zero.
pub fn homotopy_ranks(p_x: &PowerSeries, k: usize, order: usize) -> Result<RankTable> {
    assert!(k >= 1, "rescaling needs k >= 1");
    let lcs = extract_ranks(p_x, order / (2 * k))?;
    let mut ranks = vec![BigInt::zero(); order];
    for (r, phi) in lcs.support() {
        ranks[2 * k * r - 1] = phi;
    }
    Ok(RankTable { kind: RankKind::Homotopy, ranks, source: lcs.source })
}

/// `∏_r (1 - t^{(2k+1)r})^{Φ_{2kr}}` through `order`.
pub fn homotopy_product(phi: &RankTable, k: usize, order: usize) -> PowerSeries {
    let scaled: Vec<(usize, BigInt)> =
        phi.support().into_iter().filter(|(n, _)| n % (2 * k) == 0).map(|(n, r)| (n / (2 * k), r)).collect();
    rank_product(&scaled, 2 * k + 1, order)
}

/// `P_X(-t^{2k})^{-1}`.
pub fn loop_poincare(p_x: &PowerSeries, k: usize, order: usize) -> Result<PowerSeries> {
    assert!(k >= 1, "rescaling needs k >= 1");
    let widened = PowerSeries::from_coeffs(p_x.coeffs().iter().cloned(), order);
    widened.substitute(-1, 2 * k).reciprocal()
}

/// `∏_d (1 - t^d)^{-dim_d}` through `order`, for evenly graded dimensions.
pub fn pbw_series(l: &GradedLieDims, order: usize) -> Result<PowerSeries> {
    if let Some((d, _)) = l.iter().find(|(d, _)| d % 2 == 1 && *d <= order) {
        return Err(Error::OddDegreeUnsupported(d));
    }
    let ranks: Vec<(usize, BigInt)> = l.iter().map(|(d, n)| (d, -BigInt::from(n))).collect();
    Ok(rank_product(&ranks, 1, order))
}

/// Regraded dimensions and the degrees that had to be dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rebracketed {
    pub dims: GradedLieDims,
    pub dropped: Vec<usize>,
}

/// `result[r] = E[r(m-1)]`; nonzero degrees not divisible by `m - 1` are
/// reported as dropped.
pub fn rebracket_dims(e: &GradedLieDims, m: usize) -> Rebracketed {
    assert!(m >= 2, "rebracketing needs m >= 2");
    let step = m - 1;
    let mut dims = GradedLieDims::new(e.truncation() / step);
    let mut dropped = Vec::new();
    for (d, n) in e.iter() {
        if d % step == 0 {
            dims.set(d / step, n);
        } else {
            dropped.push(d);
        }
    }
    Rebracketed { dims, dropped }
}
