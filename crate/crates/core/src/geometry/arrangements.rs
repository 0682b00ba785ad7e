use crate::algebra::{AlgebraPresentation, Verdict};
use crate::error::{Error, Result};
use crate::exact::{rational, PowerSeries};
use crate::lcs::{homotopy_product, homotopy_ranks, loop_poincare, RankTable};

use super::links::one_minus;

/// Arrangement class with the numeric data that determines its cohomology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArrangementSpec {
    /// Fiber-type arrangement with exponents `d_1..d_l`.
    Supersolvable { exponents: Vec<u64> },
    /// `n` affine hyperplanes in general position in `C^l`, `n > l >= 1`.
    Generic { n: usize, l: usize },
    /// The coordinate hyperplanes of `C^n`.
    Boolean { n: usize },
}

impl ArrangementSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            ArrangementSpec::Supersolvable { exponents } if exponents.contains(&0) => {
                Err(Error::InvalidInput("exponents must be positive".into()))
            }
            ArrangementSpec::Generic { n, l } if !(*n > *l && *l >= 1) => {
                Err(Error::InvalidInput(format!("generic arrangement needs n > l >= 1, got n = {n}, l = {l}")))
            }
            _ => Ok(()),
        }
    }

    /// Poincaré polynomial of the complement.
    pub fn poincare(&self) -> PowerSeries {
        match self {
            ArrangementSpec::Supersolvable { exponents } => factored_poincare(exponents),
            ArrangementSpec::Boolean { n } => factored_poincare(&vec![1; *n]),
            ArrangementSpec::Generic { n, l } => {
                PowerSeries::from_coeffs((0..=*l).map(|d| rational::int(binomial_i64(*n, d))), *l)
            }
        }
    }

    /// Cohomology ring as an exterior quotient, when the class determines it.
    pub fn presentation(&self) -> Option<AlgebraPresentation> {
        match self {
            ArrangementSpec::Boolean { n } => Some(AlgebraPresentation::exterior(*n)),
            ArrangementSpec::Generic { n, l } => AlgebraPresentation::new(*n, Vec::new(), Some(*l)).ok(),
            ArrangementSpec::Supersolvable { .. } => None,
        }
    }
}

fn factored_poincare(exponents: &[u64]) -> PowerSeries {
    let order = exponents.len();
    exponents.iter().fold(PowerSeries::one(order), |acc, &d| {
        acc.mul(&PowerSeries::from_coeffs([rational::int(1), rational::int(d as i64)], order))
    })
}

fn binomial_i64(n: usize, k: usize) -> i64 {
    i64::try_from(rational::binomial(n, k)).expect("binomial fits i64")
}

/// The two loop-space series of a generic arrangement with `l = n - 1`: the
/// actual one `1/((1 - t^(2k))^n - t^((2k+1)n - 2))` and the one the
/// lower central series formula predicts, `1/P_X(-t^(2k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopCandidates {
    pub actual: PowerSeries,
    pub lcs_predicted: PowerSeries,
    pub first_difference: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ArrangementReport {
    pub spec: ArrangementSpec,
    pub k: usize,
    pub order: usize,
    pub poincare: PowerSeries,
    pub verdict: Verdict,
    /// Ranks from the lower central series formula, or why they do not
    /// exist.
    pub homotopy_ranks: std::result::Result<RankTable, Error>,
    pub homotopy_product: Option<PowerSeries>,
    /// Loop-space series: the LCS prediction for Koszul classes, the actual
    /// series for generic arrangements with `l = n - 1`.
    pub loop_series: Option<PowerSeries>,
    pub candidates: Option<LoopCandidates>,
    /// For factored classes, whether `∏(1 - d_i t^(2k+1)) = P_Y(-t)` and the
    /// loop series equals `∏(1 - d_i t^(2k))^(-1)`.
    pub closed_forms_agree: Option<bool>,
}

/// Poincaré, homotopy-rank and loop-space series of the `k`-th redundant
/// subspace arrangement built from `spec`, through degree `order`.
pub fn arrangement_series(spec: &ArrangementSpec, k: usize, order: usize) -> Result<ArrangementReport> {
    spec.validate()?;
    if k == 0 {
        return Err(Error::InvalidInput("rescaling needs k >= 1".into()));
    }
    let poincare = spec.poincare();
    let widened = PowerSeries::from_coeffs(poincare.coeffs().iter().cloned(), order);
    let ranks = homotopy_ranks(&widened, k, order);
    let product = ranks.as_ref().ok().map(|r| homotopy_product(r, k, order));
    let predicted = loop_poincare(&poincare, k, order)?;
    let exponents = match spec {
        ArrangementSpec::Supersolvable { exponents } => Some(exponents.clone()),
        ArrangementSpec::Boolean { n } => Some(vec![1; *n]),
        ArrangementSpec::Generic { .. } => None,
    };
    let (verdict, loop_series, candidates, closed_forms_agree) = match (&exponents, spec) {
        (Some(ex), _) => {
            let prod = ex.iter().fold(PowerSeries::one(order), |acc, &d| acc.mul(&one_minus(d as i64, 2 * k + 1, order)));
            // P_Y(t) = P_X(t^(2k+1)), so P_Y(-t) = P_X(-t^(2k+1))
            let py = widened.substitute(-1, 2 * k + 1);
            let lp = ex.iter().fold(PowerSeries::one(order), |acc, &d| acc.mul(&one_minus(d as i64, 2 * k, order)));
            let lp = lp.reciprocal()?;
            let agree = product.as_ref() == Some(&prod) && prod == py && lp == predicted;
            let reason = if matches!(spec, ArrangementSpec::Boolean { .. }) {
                "exterior algebra of a torus"
            } else {
                "supersolvable arrangement"
            };
            (Verdict::TheoremBacked { reason: reason.into() }, Some(predicted), None, Some(agree))
        }
        (None, ArrangementSpec::Generic { n, l }) => {
            let verdict = match spec.presentation().and_then(|a| a.first_non_quadratic_degree()) {
                Some(d) => Verdict::Fail {
                    degree: Some(d),
                    detail: format!("not quadratic: relations are generated in degree {d}"),
                },
                None => Verdict::TheoremBacked { reason: "rank-one arrangement is supersolvable".into() },
            };
            let candidates = (*l == n - 1).then(|| {
                let base = one_minus(1, 2 * k, order).pow(*n as i64).expect("nonnegative power");
                let w = (2 * k + 1) * n - 2;
                let actual = base
                    .sub(&PowerSeries::monomial(rational::int(1), w, order))
                    .reciprocal()
                    .expect("unit constant term");
                let first_difference = actual.first_difference(&predicted);
                LoopCandidates { actual, lcs_predicted: predicted.clone(), first_difference }
            });
            let loop_series = candidates.as_ref().map(|c| c.actual.clone());
            (verdict, loop_series, candidates, None)
        }
        (None, _) => unreachable!("factored classes carry exponents"),
    };
    Ok(ArrangementReport {
        spec: spec.clone(),
        k,
        order,
        poincare,
        verdict,
        homotopy_ranks: ranks,
        homotopy_product: product,
        loop_series,
        candidates,
        closed_forms_agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn series(c: &[i64], n: usize) -> PowerSeries {
        PowerSeries::from_ints(c, n)
    }

    #[test]
    fn validation() {
        assert!(ArrangementSpec::Supersolvable { exponents: vec![1, 0] }.validate().is_err());
        assert!(ArrangementSpec::Generic { n: 2, l: 2 }.validate().is_err());
        assert!(ArrangementSpec::Generic { n: 2, l: 0 }.validate().is_err());
        assert!(ArrangementSpec::Generic { n: 3, l: 2 }.validate().is_ok());
        assert!(arrangement_series(&ArrangementSpec::Boolean { n: 2 }, 0, 6).is_err());
    }

    #[test]
    fn poincare_polynomials() {
        assert_eq!(ArrangementSpec::Supersolvable { exponents: vec![1, 2, 3] }.poincare(), series(&[1, 6, 11, 6], 3));
        assert_eq!(ArrangementSpec::Generic { n: 4, l: 2 }.poincare(), series(&[1, 4, 6], 2));
        assert_eq!(ArrangementSpec::Boolean { n: 3 }.poincare(), series(&[1, 3, 3, 1], 3));
        let gen = ArrangementSpec::Generic { n: 4, l: 2 }.presentation().unwrap();
        assert_eq!(gen.hilbert(3), series(&[1, 4, 6, 0], 3));
    }

    #[test]
    fn braid_arrangement() {
        let r = arrangement_series(&ArrangementSpec::Supersolvable { exponents: vec![1, 2, 3] }, 1, 12).unwrap();
        // (1 - t^3)(1 - 2t^3)(1 - 3t^3) multiplied out by hand
        assert_eq!(r.homotopy_product, Some(series(&[1, 0, 0, -6, 0, 0, 11, 0, 0, -6], 12)));
        assert!(matches!(r.verdict, Verdict::TheoremBacked { .. }));
        assert_eq!(r.closed_forms_agree, Some(true));
        let ranks = r.homotopy_ranks.unwrap();
        assert_eq!(ranks.get(2), BigInt::from(6));
        // necklace count: φ_2 = Σ (d^2 - d) / 2 = 0 + 1 + 3
        assert_eq!(ranks.get(4), BigInt::from(4));
    }

    #[test]
    fn generic_three_lines() {
        let r = arrangement_series(&ArrangementSpec::Generic { n: 3, l: 2 }, 1, 12).unwrap();
        assert_eq!(r.verdict.failing_degree(), Some(3));
        let c = r.candidates.unwrap();
        let cube = one_minus(1, 2, 12).pow(3).unwrap();
        let t = |d| PowerSeries::monomial(rational::int(1), d, 12);
        assert_eq!(c.actual, cube.sub(&t(7)).reciprocal().unwrap());
        assert_eq!(c.lcs_predicted, cube.add(&t(6)).reciprocal().unwrap());
        assert_eq!(c.first_difference, Some(6));
        assert_eq!(r.loop_series, Some(c.actual));
    }

    #[test]
    fn generic_predicted_series_closed_form() {
        for n in 3..=5 {
            for k in 1..=2 {
                let r = arrangement_series(&ArrangementSpec::Generic { n, l: n - 1 }, k, 16).unwrap();
                let sign = if n % 2 == 1 { 1 } else { -1 };
                let denom = one_minus(1, 2 * k, 16)
                    .pow(n as i64)
                    .unwrap()
                    .add(&PowerSeries::monomial(rational::int(sign), 2 * k * n, 16));
                assert_eq!(r.candidates.unwrap().lcs_predicted, denom.reciprocal().unwrap(), "n = {n}, k = {k}");
            }
        }
    }

    #[test]
    fn generic_without_candidates() {
        let r = arrangement_series(&ArrangementSpec::Generic { n: 5, l: 2 }, 1, 10).unwrap();
        assert!(r.candidates.is_none() && r.loop_series.is_none());
        assert_eq!(r.verdict.failing_degree(), Some(3));
        let line = arrangement_series(&ArrangementSpec::Generic { n: 4, l: 1 }, 1, 10).unwrap();
        assert!(line.verdict.passed());
    }

    #[test]
    fn boolean_is_a_torus() {
        let r = arrangement_series(&ArrangementSpec::Boolean { n: 2 }, 1, 10).unwrap();
        assert_eq!(r.loop_series, Some(series(&[1, 0, 2, 0, 3, 0, 4, 0, 5, 0, 6], 10)));
        assert_eq!(r.closed_forms_agree, Some(true));
    }
}
