use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use super::span::{BlockKey, LieSpan};
use super::word::Word;
use crate::exact::{Rational, TrackedEchelon};
use crate::par::*;

pub type RatVec = Vec<(Word, Rational)>;

/// Basis of a graded Lie algebra through a weight (the weight is the first
/// block-key entry), with structure constants `[b_i, b_j] = Σ s^c_{ij} b_c`.
#[derive(Clone, Debug)]
pub struct LieBasis {
    keys: Vec<BlockKey>,
    reps: Vec<RatVec>,
    brackets: HashMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl LieBasis {
    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn weight(&self, i: usize) -> usize {
        self.keys[i][0] as usize
    }

    pub fn key(&self, i: usize) -> &BlockKey {
        &self.keys[i]
    }

    /// Tensor representative of `b_i`.
    pub fn rep(&self, i: usize) -> &[(Word, Rational)] {
        &self.reps[i]
    }

    /// `[b_i, b_j]`, empty when zero or beyond the weight cutoff.
    pub fn bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        self.brackets.get(&(i, j)).map_or(&[], Vec::as_slice)
    }
}

/// Unsigned commutator of exact word vectors.
pub fn commutator(a: &RatVec, b: &RatVec) -> RatVec {
    let mut out: BTreeMap<Word, Rational> = BTreeMap::new();
    for (u, x) in a {
        for (v, y) in b {
            let c = x * y;
            *out.entry(u.concat(*v).expect("word fits")).or_insert_with(Rational::zero) += &c;
            *out.entry(v.concat(*u).expect("word fits")).or_insert_with(Rational::zero) -= c;
        }
    }
    out.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Chooses representatives of `L/I` in every block of the free span and
/// reduces brackets of representatives back onto them. Without an ideal
/// this is a basis of the free Lie algebra truncated at `max_weight`.
pub fn quotient_basis(free: &LieSpan, ideal: Option<&LieSpan>, max_weight: usize) -> LieBasis {
    let max_weight = max_weight.min(free.max_degree());
    let mut keys = Vec::new();
    let mut reps: Vec<RatVec> = Vec::new();
    let mut deciders: HashMap<BlockKey, (TrackedEchelon<Word>, usize, usize)> = HashMap::new();
    for d in 1..=max_weight {
        for (key, block) in free.blocks_of_degree(d) {
            let mut t = TrackedEchelon::new();
            let mut n_ideal = 0;
            if let Some(ib) = ideal.and_then(|i| i.block(key)) {
                for r in ib.rows() {
                    t.insert(r.to_rationals());
                    n_ideal += 1;
                }
            }
            let first = reps.len();
            for r in block.rows() {
                let v = r.to_rationals();
                if t.insert(v.clone()) {
                    keys.push(key.clone());
                    reps.push(v);
                }
            }
            deciders.insert(key.clone(), (t, n_ideal, first));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..reps.len())
        .flat_map(|i| (0..reps.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| keys[i][0] + keys[j][0] <= max_weight as i64)
        .collect();
    let brackets: HashMap<(usize, usize), Vec<(usize, Rational)>> = pairs
        .into_par_iter()
        .filter_map(|(i, j)| {
            let c = commutator(&reps[i], &reps[j]);
            if c.is_empty() {
                return None;
            }
            let key: BlockKey = keys[i].iter().zip(&keys[j]).map(|(a, b)| a + b).collect();
            let (t, n_ideal, first) = deciders.get(&key)?;
            let coeffs = t.decompose(c).expect("bracket lies in the free Lie algebra");
            let s: Vec<(usize, Rational)> = coeffs
                .into_iter()
                .enumerate()
                .skip(*n_ideal)
                .filter(|(_, q)| !q.is_zero())
                .map(|(pos, q)| (first + pos - n_ideal, q))
                .collect();
            (!s.is_empty()).then_some(((i, j), s))
        })
        .collect();
    LieBasis { keys, reps, brackets }
}

