use std::collections::BTreeMap;

use num_traits::Zero;

use super::series::{bch, MalcevElement};
use crate::error::{Error, Result};
use crate::exact::{Rational, TrackedEchelon};
use crate::tensor::{quotient_basis, GeneratorSet, Grading, LieSpan, RatVec, Word};

type Vector = Vec<Rational>;

/// Finite-dimensional Lie algebra given by structure constants on a basis,
/// each basis vector carrying a filtration degree `>= 1`.
#[derive(Clone, Debug)]
pub struct NilpotentLie {
    degrees: Vec<usize>,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
    class: usize,
}

impl NilpotentLie {
    /// `brackets` lists `[b_i, b_j]` for `i < j`; the rest follows from
    /// antisymmetry. Fails with `NotNilpotent` when the lower central series
    /// stabilizes above zero.
    pub fn new(degrees: Vec<usize>, brackets: Vec<((usize, usize), Vec<(usize, Rational)>)>) -> Result<Self> {
        let dim = degrees.len();
        if degrees.contains(&0) {
            return Err(Error::InvalidInput("filtration degrees start at 1".into()));
        }
        let mut table = BTreeMap::new();
        for ((i, j), v) in brackets {
            if i >= j || j >= dim || v.iter().any(|(k, _)| *k >= dim) {
                return Err(Error::InvalidInput(format!("bad structure constant entry ({i}, {j})")));
            }
            let v: Vec<_> = v.into_iter().filter(|(_, q)| !q.is_zero()).collect();
            if !v.is_empty() {
                table.insert((i, j), v);
            }
        }
        let mut l = NilpotentLie { degrees, brackets: table, class: 0 };
        l.check_jacobi()?;
        l.class = l.nilpotency_class()?;
        Ok(l)
    }

    pub fn abelian(dim: usize) -> Self {
        NilpotentLie { degrees: vec![1; dim], brackets: BTreeMap::new(), class: usize::from(dim > 0) }
    }

    /// Free nilpotent Lie algebra of the given class on `n` generators, with
    /// bracket length as filtration degree. Basis vector `i < n` is the
    /// generator `x_(i+1)`.
    pub fn free(n: usize, class: usize) -> Result<Self> {
        Self::free_with_basis(n, class).map(|(l, _)| l)
    }

    /// As `free`, also returning the tensor representative of every basis
    /// vector.
    pub fn free_with_basis(n: usize, class: usize) -> Result<(Self, Vec<RatVec>)> {
        if class == 0 {
            return Err(Error::InvalidInput("class must be at least 1".into()));
        }
        let gens = GeneratorSet::ungraded(n);
        let span = LieSpan::free(&Grading::multidegree(&gens), class)?;
        let basis = quotient_basis(&span, None, class);
        let mut order: Vec<usize> = (0..basis.len()).collect();
        order.sort_by(|&a, &b| basis.weight(a).cmp(&basis.weight(b)).then_with(|| basis.key(b).cmp(basis.key(a))));
        let mut position = vec![0; basis.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let degrees = order.iter().map(|&i| basis.weight(i)).collect();
        let brackets = (0..basis.len())
            .flat_map(|i| (i + 1..basis.len()).map(move |j| (i, j)))
            .map(|(i, j)| {
                let v = basis.bracket(order[i], order[j]).iter().map(|(k, q)| (position[*k], q.clone())).collect();
                ((i, j), v)
            })
            .collect();
        let reps = order.iter().map(|&i| basis.rep(i).to_vec()).collect();
        Ok((Self::new(degrees, brackets)?, reps))
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn class(&self) -> usize {
        self.class
    }

    fn basis_bracket(&self, i: usize, j: usize) -> Option<(Rational, &[(usize, Rational)])> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.brackets.get(&(i, j)).map(|v| (Rational::from_integer(1.into()), v.as_slice())),
            Greater => self.brackets.get(&(j, i)).map(|v| (Rational::from_integer((-1).into()), v.as_slice())),
            Equal => None,
        }
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut out = vec![Rational::zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                if let Some((s, v)) = self.basis_bracket(i, j) {
                    let f = a * b * s;
                    for (k, q) in v {
                        out[k.to_owned()] += &f * q;
                    }
                }
            }
        }
        out
    }

    /// Whether `[F_1, F_r] ⊂ F_(r+1)` holds on basis vectors.
    pub fn respects_filtration(&self) -> bool {
        self.brackets
            .iter()
            .all(|(&(i, j), v)| v.iter().all(|(k, _)| self.degrees[*k] > self.degrees[i].max(self.degrees[j])))
    }

    /// The stronger condition `[F_r, F_s] ⊂ F_(r+s)`.
    pub fn is_malcev(&self) -> bool {
        self.brackets
            .iter()
            .all(|(&(i, j), v)| v.iter().all(|(k, _)| self.degrees[*k] >= self.degrees[i] + self.degrees[j]))
    }

    /// Least filtration degree among nonzero coordinates.
    pub fn filtration_order(&self, x: &[Rational]) -> Option<usize> {
        x.iter().zip(&self.degrees).filter(|(q, _)| !q.is_zero()).map(|(_, d)| *d).min()
    }

    fn check_jacobi(&self) -> Result<()> {
        let dim = self.dim();
        let e = |i: usize| {
            let mut v = vec![Rational::zero(); dim];
            v[i] = Rational::from_integer(1.into());
            v
        };
        for a in 0..dim {
            for b in a + 1..dim {
                for c in b + 1..dim {
                    let (ea, eb, ec) = (e(a), e(b), e(c));
                    let t1 = self.bracket(&ea, &self.bracket(&eb, &ec));
                    let t2 = self.bracket(&eb, &self.bracket(&ec, &ea));
                    let t3 = self.bracket(&ec, &self.bracket(&ea, &eb));
                    if t1.iter().zip(&t2).zip(&t3).any(|((p, q), r)| !(p + q + r).is_zero()) {
                        return Err(Error::InvalidInput(format!("Jacobi identity fails on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Length of the lower central series `γ_1 = L, γ_(i+1) = [L, γ_i]`.
    fn nilpotency_class(&self) -> Result<usize> {
        let dim = self.dim();
        let to_sparse = |v: Vector| -> Vec<(usize, Rational)> {
            v.into_iter().enumerate().filter(|(_, q)| !q.is_zero()).collect()
        };
        let mut gamma: Vec<Vector> = (0..dim)
            .map(|i| {
                let mut v = vec![Rational::zero(); dim];
                v[i] = Rational::from_integer(1.into());
                v
            })
            .collect();
        let mut class = 0;
        while !gamma.is_empty() {
            class += 1;
            let mut next = TrackedEchelon::new();
            let mut rows = Vec::new();
            for i in 0..dim {
                let mut ei = vec![Rational::zero(); dim];
                ei[i] = Rational::from_integer(1.into());
                for g in &gamma {
                    let v = self.bracket(&ei, g);
                    if next.insert(to_sparse(v.clone())) {
                        rows.push(v);
                    }
                }
            }
            if rows.len() == gamma.len() {
                return Err(Error::NotNilpotent);
            }
            gamma = rows;
        }
        Ok(class)
    }
}

/// Result of a product in the exponential group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupProduct {
    pub product: Vector,
    pub filtration_order: Option<usize>,
}

/// Group law `x·y = x + y + ½[x,y] + …` of the exponential group of a
/// nilpotent Lie algebra. The Campbell–Hausdorff series is computed on two
/// free letters through the nilpotency class and evaluated through the
/// Dynkin projection `p_d = (1/d) Σ_w p_w [..[w_1,w_2],..,w_d]`.
pub fn exp_group(l: &NilpotentLie, x: &[Rational], y: &[Rational]) -> Result<GroupProduct> {
    if x.len() != l.dim() || y.len() != l.dim() {
        return Err(Error::InvalidInput(format!("elements must have {} coordinates", l.dim())));
    }
    let class = l.class().max(1);
    let gens = GeneratorSet::ungraded(2);
    let series = bch(&MalcevElement::generator(&gens, class, 0)?, &MalcevElement::generator(&gens, class, 1)?, class)?;
    let mut out = vec![Rational::zero(); l.dim()];
    for (w, c) in series.lie().as_tensor().terms() {
        let v = eval_left_normed(l, *w, x, y);
        let f = c / Rational::from_integer((w.len() as i64).into());
        for (o, q) in out.iter_mut().zip(v) {
            *o += &f * q;
        }
    }
    let filtration_order = l.filtration_order(&out);
    Ok(GroupProduct { product: out, filtration_order })
}

/// Inverse in the exponential group.
pub fn exp_group_inverse(x: &[Rational]) -> Vector {
    x.iter().map(|q| -q).collect()
}

fn eval_left_normed(l: &NilpotentLie, w: Word, x: &[Rational], y: &[Rational]) -> Vector {
    let pick = |letter: usize| if letter == 0 { x.to_vec() } else { y.to_vec() };
    let mut letters = w.letters();
    let mut acc = pick(letters.next().expect("nonempty word"));
    for g in letters {
        if acc.iter().all(Zero::is_zero) {
            break;
        }
        acc = l.bracket(&acc, &pick(g));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::malcev::representation::ch_representation;
    use crate::malcev::word::GroupWord;
    use crate::tensor::TensorElement;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&a| int(a)).collect()
    }

    fn mul(l: &NilpotentLie, a: &[Rational], b: &[Rational]) -> Vector {
        exp_group(l, a, b).unwrap().product
    }

    #[test]
    fn abelian_group_law_is_addition() {
        let l = NilpotentLie::abelian(3);
        let p = exp_group(&l, &v(&[1, 2, 0]), &v(&[0, -2, 5])).unwrap();
        assert_eq!(p.product, v(&[1, 0, 5]));
        assert_eq!(p.filtration_order, Some(1));
        assert!(l.is_malcev() && l.respects_filtration());
    }

    #[test]
    fn inverse_is_negation() {
        let l = NilpotentLie::free(2, 3).unwrap();
        let x: Vector = (0..l.dim()).map(|i| rat(i as i64 + 1, 3)).collect();
        let p = exp_group(&l, &x, &exp_group_inverse(&x)).unwrap();
        assert!(p.product.iter().all(Zero::is_zero));
        assert_eq!(p.filtration_order, None);
    }

    #[test]
    fn free_class_two_commutator() {
        let l = NilpotentLie::free(2, 2).unwrap();
        assert_eq!((l.dim(), l.class()), (3, 2));
        assert!(l.is_malcev());
        let (x, y) = (v(&[1, 0, 0]), v(&[0, 1, 0]));
        let xy = mul(&l, &x, &y);
        let c = mul(&l, &mul(&l, &xy, &exp_group_inverse(&x)), &exp_group_inverse(&y));
        assert_eq!(c, l.bracket(&x, &y));
        assert_eq!(exp_group(&l, &c, &v(&[0, 0, 0])).unwrap().filtration_order, Some(2));
    }

    #[test]
    fn free_class_three_matches_tensor_calculus() {
        let (l, reps) = NilpotentLie::free_with_basis(2, 3).unwrap();
        assert_eq!(l.dim(), 5);
        let word = GroupWord::parse("x1 x2 x1^-1 x2^-1", 2).unwrap();
        let (x, y) = (v(&[1, 0, 0, 0, 0]), v(&[0, 1, 0, 0, 0]));
        let c = [exp_group_inverse(&x), exp_group_inverse(&y)]
            .iter()
            .fold(mul(&l, &x, &y), |acc, g| mul(&l, &acc, g));
        // push the coordinates back to the tensor algebra through the basis
        let gens = GeneratorSet::ungraded(2);
        let mut t = TensorElement::zero(&gens, 3);
        assert_eq!(TensorElement::from_terms(&gens, 3, reps[0].clone()).unwrap(), TensorElement::generator(&gens, 3, 0).unwrap());
        for (i, q) in c.iter().enumerate() {
            let rep = TensorElement::from_terms(&gens, 3, reps[i].clone()).unwrap();
            t = t.add(&rep.scale(q));
        }
        assert_eq!(&t, ch_representation(&word, 3).unwrap().lie().as_tensor());
    }

    #[test]
    fn associativity() {
        let l = NilpotentLie::free(2, 4).unwrap();
        let a: Vector = (0..l.dim()).map(|i| rat(1, i as i64 + 1)).collect();
        let b: Vector = (0..l.dim()).map(|i| int(i as i64 % 3 - 1)).collect();
        let c: Vector = (0..l.dim()).map(|i| rat(2 - i as i64, 5)).collect();
        assert_eq!(mul(&l, &mul(&l, &a, &b), &c), mul(&l, &a, &mul(&l, &b, &c)));
    }

    #[test]
    fn non_nilpotent_is_rejected() {
        // sl2: [e,f] = h, [h,e] = 2e, [h,f] = -2f with basis (e, f, h)
        let sl2 = vec![((0, 1), vec![(2, int(1))]), ((0, 2), vec![(0, int(-2))]), ((1, 2), vec![(1, int(2))])];
        assert_eq!(NilpotentLie::new(vec![1; 3], sl2).unwrap_err(), Error::NotNilpotent);
    }

    #[test]
    fn jacobi_violation_is_rejected() {
        // [e0,e1] = e0, [e1,e2] = e1: the Jacobi sum on (e0,e1,e2) is e0
        let bad = vec![((0, 1), vec![(0, int(1))]), ((1, 2), vec![(1, int(1))])];
        assert!(matches!(NilpotentLie::new(vec![1; 3], bad), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn filtration_flags() {
        // Heisenberg with the centre placed in degree 2, then in degree 3
        let h = |d| NilpotentLie::new(vec![1, 1, d], vec![((0, 1), vec![(2, int(1))])]).unwrap();
        assert!(h(2).is_malcev());
        assert!(h(3).is_malcev());
        let weak = NilpotentLie::new(vec![1, 2, 2], vec![((0, 1), vec![(2, int(1))])]).unwrap();
        assert!(!weak.respects_filtration());
        let clie = NilpotentLie::new(vec![2, 2, 3], vec![((0, 1), vec![(2, int(1))])]).unwrap();
        assert!(clie.respects_filtration() && !clie.is_malcev());
    }

    #[test]
    fn wrong_length_is_rejected() {
        let l = NilpotentLie::abelian(2);
        assert!(exp_group(&l, &v(&[1]), &v(&[1, 2])).is_err());
    }
}
