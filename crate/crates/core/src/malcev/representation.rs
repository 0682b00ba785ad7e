use std::sync::Arc;

use num_traits::One;

use super::series::{exp_series, log_series, MalcevElement};
use super::word::GroupWord;
use crate::error::{Error, Result};
use crate::exact::{rational, Rational};
use crate::tensor::{GeneratorSet, LieElement, TensorElement, Word};

/// `ρ(w) = log(∏ exp(±x_i))` truncated at bracket length `r`, over the
/// ungraded generators `x1..xn`.
pub fn ch_representation(w: &GroupWord, r: usize) -> Result<MalcevElement> {
    let gens = GeneratorSet::ungraded(w.n());
    ch_representation_in(&gens, w, r)
}

fn ch_representation_in(gens: &Arc<GeneratorSet>, w: &GroupWord, r: usize) -> Result<MalcevElement> {
    if r == 0 {
        return Err(Error::InvalidInput("truncation order must be at least 1".into()));
    }
    let mut prod = TensorElement::scalar(gens, r, Rational::one());
    for &(i, e) in w.letters() {
        let x = TensorElement::generator(gens, r, i)?.scale(&rational::int(e as i64));
        prod = prod.mul_truncated(&exp_series(&x)?);
    }
    LieElement::from_tensor(log_series(&prod)?).map(MalcevElement::new)
}

/// Derivation of the completed free Lie algebra attached to a link:
/// `∂(v_i) = [x_i, ρ(l_i)]`, keeping bracket lengths up to `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkDerivation {
    order: usize,
    images: Vec<MalcevElement>,
    linking: Vec<Vec<i64>>,
}

impl LinkDerivation {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `∂(v_i)`; zero or of filtration order at least 2.
    pub fn image(&self, i: usize) -> &MalcevElement {
        &self.images[i]
    }

    pub fn images(&self) -> &[MalcevElement] {
        &self.images
    }

    /// Lowest part of `∂`: entry `(i, j)` is the coefficient of `x_i x_j` in
    /// `∂(v_i)`, so `∂(v_i) = Σ_j l_ij [x_i, x_j] + (longer brackets)`.
    pub fn linking(&self) -> &[Vec<i64>] {
        &self.linking
    }

    /// `∂(v_i)` with its length-two part removed.
    pub fn higher_part(&self, i: usize) -> MalcevElement {
        let img = &self.images[i];
        img.sub(&MalcevElement::new(img.part(2)))
    }
}

/// Builds `∂(v_i) = [x_i, ρ(l_i)]` for one longitude per component.
pub fn link_derivation(longitudes: &[GroupWord], r: usize) -> Result<LinkDerivation> {
    let n = longitudes.len();
    if let Some(l) = longitudes.iter().find(|l| l.n() != n) {
        return Err(Error::InvalidInput(format!(
            "longitude {l} is over {} letters but there are {n} components",
            l.n()
        )));
    }
    if r < 2 {
        return Err(Error::InvalidInput("derivation order must be at least 2".into()));
    }
    let gens = GeneratorSet::ungraded(n);
    let images = longitudes
        .iter()
        .enumerate()
        .map(|(i, l)| {
            let rho = ch_representation_in(&gens, l, r - 1)?;
            let rho = MalcevElement::new(LieElement::from_tensor_unchecked(
                TensorElement::from_terms(&gens, r, rho.lie().as_tensor().terms().clone())?,
            ));
            Ok(MalcevElement::generator(&gens, r, i)?.bracket(&rho))
        })
        .collect::<Result<Vec<_>>>()?;
    let linking = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let w = Word::from_letters(&[i, j]);
                    let c = images[i].lie().as_tensor().coeff(w);
                    let c = rational::as_integer(&c).expect("linking coefficient is integral");
                    i64::try_from(c).expect("linking number fits i64")
                })
                .collect()
        })
        .collect();
    Ok(LinkDerivation { order: r, images, linking })
}

/// Linking matrix read from exponent sums: `l_ij` is the exponent of `x_j`
/// in `l_i` for `i != j`, and the diagonal is zero.
pub fn linking_from_exponents(longitudes: &[GroupWord]) -> Vec<Vec<i64>> {
    let n = longitudes.len();
    (0..n).map(|i| (0..n).map(|j| if i == j { 0 } else { longitudes[i].exponent_sum(j) }).collect()).collect()
}

/// Raw Campbell–Hausdorff invariant of order `r`: the derivation
/// representative and its linking part. Comparing orbits under the
/// automorphism action is not implemented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChInvariant {
    pub derivation: LinkDerivation,
    pub orbit_comparison: &'static str,
}

pub fn ch_invariant_raw(longitudes: &[GroupWord], r: usize) -> Result<ChInvariant> {
    Ok(ChInvariant { derivation: link_derivation(longitudes, r)?, orbit_comparison: "unsupported" })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use crate::malcev::series::bch;

    fn words(ws: &[&str]) -> Vec<GroupWord> {
        ws.iter().map(|w| GroupWord::parse(w, ws.len()).unwrap()).collect()
    }

    fn xs(n: usize, r: usize) -> Vec<MalcevElement> {
        let g = GeneratorSet::ungraded(n);
        (0..n).map(|i| MalcevElement::generator(&g, r, i).unwrap()).collect()
    }

    #[test]
    fn product_of_two_generators() {
        let x = xs(2, 2);
        let rho = ch_representation(&GroupWord::parse("x1 x2", 2).unwrap(), 2).unwrap();
        assert_eq!(rho, x[0].add(&x[1]).add(&x[0].bracket(&x[1]).scale(&rat(1, 2))));
    }

    #[test]
    fn inverse_cancels() {
        let rho = ch_representation(&GroupWord::parse("x1 x1^-1", 2).unwrap(), 4).unwrap();
        assert!(rho.is_zero());
    }

    #[test]
    fn commutator_lowest_term() {
        let x = xs(2, 3);
        let rho = ch_representation(&GroupWord::parse("x1 x2 x1^-1 x2^-1", 2).unwrap(), 3).unwrap();
        assert_eq!(rho.filtration_order(), Some(2));
        assert_eq!(rho.part(2), x[0].bracket(&x[1]).into_lie());
        // folding Campbell–Hausdorff products letter by letter gives the same
        let folded = [&x[0], &x[1], &x[0].neg(), &x[1].neg()]
            .into_iter()
            .fold(MalcevElement::zero(x[0].gens(), 3), |acc, g| bch(&acc, g, 3).unwrap());
        assert_eq!(rho, folded);
    }

    #[test]
    fn rejects_zero_order() {
        assert!(ch_representation(&GroupWord::identity(1), 0).is_err());
    }

    #[test]
    fn hopf_link() {
        let d = link_derivation(&words(&["x2", "x1"]), 3).unwrap();
        let x = xs(2, 3);
        assert_eq!(d.image(0), &x[0].bracket(&x[1]));
        assert_eq!(d.image(1), &x[1].bracket(&x[0]));
        assert_eq!(d.linking(), &[vec![0, 1], vec![1, 0]]);
        assert!(d.higher_part(0).is_zero());
    }

    #[test]
    fn trivial_longitudes() {
        let d = link_derivation(&words(&["", "", ""]), 4).unwrap();
        assert!(d.images().iter().all(MalcevElement::is_zero));
        assert!(d.linking().iter().flatten().all(|&l| l == 0));
    }

    #[test]
    fn longitude_with_two_letters() {
        let d = link_derivation(&words(&["x2 x3", "", ""]), 2).unwrap();
        let x = xs(3, 2);
        assert_eq!(d.image(0), &x[0].bracket(&x[1]).add(&x[0].bracket(&x[2])));
        assert_eq!(d.linking()[0], vec![0, 1, 1]);
    }

    #[test]
    fn linking_matches_exponent_sums() {
        let ls = words(&["x2 x3^-1 x2 x1", "x1^-1 x3 x1", "x2^2 x1 x2^-1"]);
        let d = link_derivation(&ls, 4).unwrap();
        assert_eq!(d.linking(), linking_from_exponents(&ls).as_slice());
        assert!(d.images().iter().all(|v| v.filtration_order().is_none_or(|o| o >= 2)));
    }

    #[test]
    fn longitudes_must_match_components() {
        let ls = vec![GroupWord::parse("x2", 3).unwrap(), GroupWord::parse("x1", 3).unwrap()];
        assert!(link_derivation(&ls, 3).is_err());
        assert!(link_derivation(&words(&["x2", "x1"]), 1).is_err());
    }

    #[test]
    fn raw_invariant_flags_orbits() {
        let inv = ch_invariant_raw(&words(&["x2", "x1"]), 3).unwrap();
        assert_eq!(inv.orbit_comparison, "unsupported");
        assert_eq!(inv.derivation.linking()[0][1], 1);
    }
}
