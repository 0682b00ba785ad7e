use std::sync::Arc;

use num_bigint::BigInt;

use super::element::{LieElement, TensorElement};
use super::generators::GeneratorSet;
use super::word::{Word, MAX_LEN};
use crate::error::{Error, Result};
use crate::exact::IntRow;

/// Degree `-1` derivation of the tensor algebra fixed by generator images.
/// Restricted to Lie elements it obeys `∂[a,b] = [∂a,b] + (-1)^{|a|}[a,∂b]`.
#[derive(Clone, Debug)]
pub struct Derivation {
    gens: Arc<GeneratorSet>,
    images: Vec<TensorElement>,
    rows: Vec<Vec<(Word, BigInt)>>,
}

impl Derivation {
    /// Missing generators map to zero. Each nonzero image must sit in degree
    /// one below its generator.
    pub fn new(gens: &Arc<GeneratorSet>, truncation: usize, images: &[(usize, LieElement)]) -> Result<Self> {
        let mut imgs = vec![TensorElement::zero(gens, truncation); gens.len()];
        for (g, im) in images {
            if *g >= gens.len() {
                return Err(Error::InvalidInput(format!("generator index {g} out of range")));
            }
            let want = gens.degree(*g).checked_sub(1);
            if !im.is_zero() && im.degree() != want {
                return Err(Error::DegreeMismatch(format!(
                    "image of {} has degree {:?}, expected {:?}",
                    gens.name(*g),
                    im.degree(),
                    want
                )));
            }
            imgs[*g] = im.as_tensor().clone();
        }
        let rows = imgs
            .iter()
            .map(|t| t.terms().iter().map(|(w, c)| (*w, c.numer() * (t_lcm(t) / c.denom()))).collect())
            .collect();
        Ok(Derivation { gens: Arc::clone(gens), images: imgs, rows })
    }

    pub fn image(&self, g: usize) -> &TensorElement {
        &self.images[g]
    }

    /// Applies the derivation to a tensor element.
    pub fn apply(&self, e: &TensorElement) -> Result<TensorElement> {
        let mut out = TensorElement::zero(&self.gens, e.truncation());
        for (w, c) in e.terms() {
            let mut prefix_deg = 0;
            for i in 0..w.len() {
                let l = w.get(i);
                let img = &self.images[l];
                if !img.is_zero() {
                    let pre = w.slice(0, i);
                    let post = w.slice(i + 1, w.len());
                    let sign_odd = self.gens.parity(prefix_deg) == 1;
                    let lhs = TensorElement::from_terms(&self.gens, e.truncation(), [(pre, c.clone())])?;
                    let rhs = TensorElement::from_terms(&self.gens, e.truncation(), [(post, num_traits::One::one())])?;
                    let term = lhs.mul(img)?.mul(&rhs)?;
                    out = if sign_odd { out.sub(&term) } else { out.add(&term) };
                }
                prefix_deg += self.gens.degree(l);
            }
        }
        Ok(out)
    }

    /// Applies the derivation to a row known up to scalar. The images are
    /// scaled by a common positive integer, which spans ignore.
    pub fn apply_row(&self, row: &IntRow<Word>) -> Result<IntRow<Word>> {
        let mut out: Vec<(Word, BigInt)> = Vec::new();
        for (w, c) in row.entries() {
            let mut prefix_deg = 0;
            for i in 0..w.len() {
                let l = w.get(i);
                let pre = w.slice(0, i);
                let post = w.slice(i + 1, w.len());
                let neg = self.gens.parity(prefix_deg) == 1;
                for (iw, ic) in &self.rows[l] {
                    let nw = pre
                        .concat(*iw)
                        .and_then(|x| x.concat(post))
                        .ok_or(Error::TruncationOverflow { degree: w.len() + iw.len() - 1, truncation: MAX_LEN })?;
                    let v = &c * ic;
                    out.push((nw, if neg { -v } else { v }));
                }
                prefix_deg += self.gens.degree(l);
            }
        }
        Ok(IntRow::from_big_unsorted(out))
    }
}

fn t_lcm(t: &TensorElement) -> BigInt {
    use num_integer::Integer;
    t.terms().values().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()))
}

/// Extends generator images to the unique degree `-1` derivation and
/// evaluates it on `e`.
pub fn extend_derivation(images: &[(usize, LieElement)], e: &LieElement) -> Result<LieElement> {
    let t = e.as_tensor();
    if !e.is_zero() && e.degree().is_none() {
        return Err(Error::DegreeMismatch("element is not homogeneous".into()));
    }
    let d = Derivation::new(t.gens(), t.truncation(), images)?;
    d.apply(t).map(LieElement::from_tensor_unchecked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    // x, y in degree 2 and z in degree 5, so ∂z = [x,y] has the right degree.
    fn setup() -> [LieElement; 3] {
        let g = GeneratorSet::graded(&[2, 2, 5]).unwrap();
        [0, 1, 2].map(|i| LieElement::generator(&g, 12, i).unwrap())
    }

    #[test]
    fn generator_case() {
        let [x, y, z] = setup();
        let xy = x.bracket(&y).unwrap();
        assert_eq!(extend_derivation(&[(2, xy.clone())], &z).unwrap(), xy);
    }

    #[test]
    fn wrong_degree_rejected() {
        let [x, _, z] = setup();
        assert!(matches!(extend_derivation(&[(2, x)], &z), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn cycles_map_to_zero() {
        let [x, y, _] = setup();
        assert!(extend_derivation(&[], &x.bracket(&y).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn derivation_of_odd_square() {
        let [x, y, z] = setup();
        let xy = x.bracket(&y).unwrap();
        let got = extend_derivation(&[(2, xy.clone())], &z.bracket(&z).unwrap()).unwrap();
        // [∂z,z] - [z,∂z], and [z,∂z] = -[∂z,z] since |∂z| is even
        let expected = xy.bracket(&z).unwrap().scale(&int(2));
        assert_eq!(got, expected);
        assert!(!got.is_zero());
    }

    #[test]
    fn row_version_agrees_up_to_scale() {
        let [x, y, z] = setup();
        let xy = x.bracket(&y).unwrap().scale(&crate::exact::rational::rat(3, 2));
        let d = Derivation::new(z.as_tensor().gens(), 12, &[(2, xy)]).unwrap();
        let e = z.bracket(&z).unwrap();
        let a = d.apply(e.as_tensor()).unwrap().to_row();
        let b = d.apply_row(&e.as_tensor().to_row()).unwrap();
        assert_eq!(a, b);
    }
}
