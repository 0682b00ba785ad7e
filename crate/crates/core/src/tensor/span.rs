//! Degreewise spans of Lie elements inside the tensor algebra.
//!
//! Work is split into blocks: a block collects the words of one degree and
//! one value of a list of additive characters on generators. Brackets with a
//! generator move blocks by that generator's key, so spans can be built
//! block by block, and blocks of one degree are independent.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_traits::Zero;

use super::dims::GradedLieDims;
use super::element::{LieElement, TensorElement};
use super::generators::GeneratorSet;
use super::rows::bracket_letter;
use super::word::{Word, MAX_LEN};
use crate::error::{Error, Result};
use crate::exact::{rational, Echelon, IntRow, SparseMatrix};
use crate::par::*;

/// `[degree, χ_1, .., χ_m]`.
pub type BlockKey = Vec<i64>;

/// Additive characters on generators used to split words into blocks.
#[derive(Clone, Debug)]
pub struct Grading {
    gens: Arc<GeneratorSet>,
    chars: Vec<Vec<i64>>,
}

impl Grading {
    /// `chars[c][g]` is the value of character `c` on generator `g`.
    pub fn new(gens: &Arc<GeneratorSet>, chars: Vec<Vec<i64>>) -> Self {
        assert!(chars.iter().all(|c| c.len() == gens.len()), "character length mismatch");
        Grading { gens: Arc::clone(gens), chars }
    }

    pub fn by_degree(gens: &Arc<GeneratorSet>) -> Self {
        Self::new(gens, Vec::new())
    }

    /// Full multidegree: one character per generator.
    pub fn multidegree(gens: &Arc<GeneratorSet>) -> Self {
        let n = gens.len();
        Self::new(gens, (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect())
    }

    /// The finest content grading for which every listed element is
    /// homogeneous.
    pub fn compatible_with(gens: &Arc<GeneratorSet>, elements: &[TensorElement]) -> Self {
        let n = gens.len();
        let content = |w: Word| {
            let mut c = vec![0i64; n];
            for l in w.letters() {
                c[l] += 1;
            }
            c
        };
        let mut constraints: Vec<Vec<i64>> = Vec::new();
        for e in elements {
            let mut words = e.terms().keys();
            let Some(&first) = words.next() else { continue };
            let base = content(first);
            for &w in words {
                let diff: Vec<i64> = content(w).iter().zip(&base).map(|(a, b)| a - b).collect();
                constraints.push(diff);
            }
        }
        if constraints.is_empty() {
            return Self::multidegree(gens);
        }
        let dense: Vec<Vec<_>> = constraints.iter().map(|r| r.iter().map(|&x| rational::int(x)).collect()).collect();
        let kernel = SparseMatrix::from_dense(&dense).kernel_basis();
        let chars = kernel
            .into_iter()
            .map(|v| {
                let row = IntRow::from_rationals(v.into_iter().enumerate().filter(|(_, q)| !q.is_zero()));
                let mut out = vec![0i64; n];
                for (j, x) in row.entries() {
                    out[j] = i64::try_from(x).expect("small character");
                }
                out
            })
            .collect();
        Self::new(gens, chars)
    }

    pub fn gens(&self) -> &Arc<GeneratorSet> {
        &self.gens
    }

    pub fn gen_key(&self, g: usize) -> BlockKey {
        let mut k = Vec::with_capacity(1 + self.chars.len());
        k.push(self.gens.degree(g) as i64);
        k.extend(self.chars.iter().map(|c| c[g]));
        k
    }

    pub fn key(&self, w: Word) -> BlockKey {
        let mut k = vec![0i64; 1 + self.chars.len()];
        for l in w.letters() {
            k[0] += self.gens.degree(l) as i64;
            for (i, c) in self.chars.iter().enumerate() {
                k[i + 1] += c[l];
            }
        }
        k
    }

    /// Splits a row into its block components.
    pub fn split(&self, row: &IntRow<Word>) -> BTreeMap<BlockKey, IntRow<Word>> {
        let mut parts: BTreeMap<BlockKey, Vec<(Word, num_bigint::BigInt)>> = BTreeMap::new();
        for (w, c) in row.entries() {
            parts.entry(self.key(w)).or_default().push((w, c));
        }
        parts.into_iter().map(|(k, es)| (k, IntRow::from_big_unsorted(es))).collect()
    }
}

fn key_add(a: &BlockKey, b: &BlockKey) -> BlockKey {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn key_sub(a: &BlockKey, b: &BlockKey) -> BlockKey {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Span of all iterated brackets `[g_1,[g_2,..[g_m, s]..]]` of seed elements
/// with generators (`m >= 0`), block by block, up to a maximal degree.
#[derive(Clone, Debug)]
pub struct LieSpan {
    grading: Grading,
    max_degree: usize,
    blocks: BTreeMap<BlockKey, Echelon<Word>>,
}

impl LieSpan {
    /// The free Lie algebra: seeds are the generators.
    pub fn free(grading: &Grading, max_degree: usize) -> Result<Self> {
        let gens = grading.gens();
        let seeds = (0..gens.len()).map(|g| IntRow::from_ints([(Word::letter(g), 1)])).collect();
        Self::closure(grading, seeds, max_degree)
    }

    /// The Lie ideal generated by `seeds`.
    pub fn ideal(grading: &Grading, seeds: Vec<IntRow<Word>>, max_degree: usize) -> Result<Self> {
        Self::closure(grading, seeds, max_degree)
    }

    fn closure(grading: &Grading, seeds: Vec<IntRow<Word>>, max_degree: usize) -> Result<Self> {
        let gens = Arc::clone(grading.gens());
        if max_degree / gens.min_degree() > MAX_LEN {
            return Err(Error::TruncationOverflow { degree: max_degree, truncation: MAX_LEN * gens.min_degree() });
        }
        let mut seed_blocks: BTreeMap<BlockKey, Vec<IntRow<Word>>> = BTreeMap::new();
        for s in &seeds {
            for (k, part) in grading.split(s) {
                if k[0] >= 1 && k[0] as usize <= max_degree {
                    seed_blocks.entry(k).or_default().push(part);
                }
            }
        }
        let gen_keys: Vec<BlockKey> = (0..gens.len()).map(|g| grading.gen_key(g)).collect();
        let mut blocks: BTreeMap<BlockKey, Echelon<Word>> = BTreeMap::new();
        let mut by_degree: Vec<BTreeSet<BlockKey>> = vec![BTreeSet::new(); max_degree + 1];
        for d in 1..=max_degree {
            let mut keys: BTreeSet<BlockKey> =
                seed_blocks.keys().filter(|k| k[0] as usize == d).cloned().collect();
            for (g, gk) in gen_keys.iter().enumerate() {
                let dg = gens.degree(g);
                if dg < d {
                    keys.extend(by_degree[d - dg].iter().map(|k| key_add(k, gk)));
                }
            }
            let keys: Vec<BlockKey> = keys.into_iter().collect();
            let built: Vec<Result<(BlockKey, Echelon<Word>)>> = keys
                .into_par_iter()
                .map(|key| {
                    let mut cands: Vec<IntRow<Word>> = seed_blocks.get(&key).cloned().unwrap_or_default();
                    for (g, gk) in gen_keys.iter().enumerate() {
                        let dg = gens.degree(g);
                        if dg >= d {
                            continue;
                        }
                        if let Some(src) = blocks.get(&key_sub(&key, gk)) {
                            for b in src.rows() {
                                cands.push(bracket_letter(&gens, g, b, d - dg)?);
                            }
                        }
                    }
                    let mut e = Echelon::new();
                    e.extend_batched(cands);
                    Ok((key, e))
                })
                .collect();
            for r in built {
                let (key, e) = r?;
                if e.rank() > 0 {
                    by_degree[d].insert(key.clone());
                    blocks.insert(key, e);
                }
            }
        }
        Ok(LieSpan { grading: grading.clone(), max_degree, blocks })
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn rank(&self, degree: usize) -> usize {
        self.blocks_of_degree(degree).map(|(_, e)| e.rank()).sum()
    }

    pub fn block(&self, key: &BlockKey) -> Option<&Echelon<Word>> {
        self.blocks.get(key)
    }

    pub fn blocks_of_degree(&self, degree: usize) -> impl Iterator<Item = (&BlockKey, &Echelon<Word>)> {
        self.blocks.iter().filter(move |(k, _)| k[0] as usize == degree)
    }

    /// Whether the element lies in the span.
    pub fn contains(&self, row: &IntRow<Word>) -> bool {
        self.grading.split(row).into_iter().all(|(k, part)| match self.blocks.get(&k) {
            Some(e) => e.contains(part),
            None => part.is_zero(),
        })
    }
}

fn check_relations(gens: &Arc<GeneratorSet>, relations: &[LieElement]) -> Result<()> {
    for r in relations {
        if r.as_tensor().gens() != gens {
            return Err(Error::InvalidInput("relation over a different generator set".into()));
        }
        if !r.is_zero() && r.degree().is_none() {
            return Err(Error::InvalidInput(format!("relation {r} is not homogeneous")));
        }
    }
    Ok(())
}

/// Spans of the free Lie algebra and of the ideal generated by `relations`,
/// built over the finest grading compatible with the relations.
pub fn quotient_spans(gens: &Arc<GeneratorSet>, relations: &[LieElement], n: usize) -> Result<(LieSpan, LieSpan)> {
    check_relations(gens, relations)?;
    let tensors: Vec<TensorElement> = relations.iter().map(|r| r.as_tensor().clone()).collect();
    let grading = Grading::compatible_with(gens, &tensors);
    let free = LieSpan::free(&grading, n)?;
    let ideal = LieSpan::ideal(&grading, tensors.iter().map(|t| t.to_row()).collect(), n)?;
    Ok((free, ideal))
}

/// Dimensions of `L(gens)/ideal(relations)` in degrees `1..=n`, as the rank
/// of the bracket span minus the rank of the ideal span in each degree.
pub fn lie_span_dims(gens: &Arc<GeneratorSet>, relations: &[LieElement], n: usize) -> Result<GradedLieDims> {
    let (free, ideal) = quotient_spans(gens, relations, n)?;
    Ok(quotient_dims(&free, &ideal))
}

pub fn quotient_dims(free: &LieSpan, ideal: &LieSpan) -> GradedLieDims {
    let n = free.max_degree();
    let mut dims = GradedLieDims::new(n);
    for d in 1..=n {
        dims.set(d, (free.rank(d) - ideal.rank(d)) as u64);
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::element::left_normed;

    fn rel(g: &Arc<GeneratorSet>, n: usize, pairs: &[(usize, usize)]) -> LieElement {
        let mut t = TensorElement::zero(g, n);
        for &(i, j) in pairs {
            t = t.add(&left_normed(g, n, Word::from_letters(&[i, j])).unwrap());
        }
        LieElement::from_tensor(t).unwrap()
    }

    #[test]
    fn free_on_two() {
        let g = GeneratorSet::ungraded(2);
        assert_eq!(lie_span_dims(&g, &[], 4).unwrap().to_vec(), vec![2, 1, 2, 3]);
    }

    #[test]
    fn abelianisation() {
        let g = GeneratorSet::ungraded(2);
        let r = rel(&g, 4, &[(0, 1)]);
        assert_eq!(lie_span_dims(&g, &[r], 4).unwrap().to_vec(), vec![2, 0, 0, 0]);
    }

    #[test]
    fn genus_two_relation() {
        let g = GeneratorSet::ungraded(4);
        let r = rel(&g, 3, &[(0, 1), (2, 3)]);
        assert_eq!(lie_span_dims(&g, &[r], 3).unwrap().to_vec(), vec![4, 5, 16]);
    }

    #[test]
    fn compatible_grading_is_coarser_than_content() {
        let g = GeneratorSet::ungraded(4);
        let r = rel(&g, 2, &[(0, 1), (2, 3)]);
        let gr = Grading::compatible_with(&g, &[r.as_tensor().clone()]);
        let a = gr.key(Word::from_letters(&[0, 1]));
        let b = gr.key(Word::from_letters(&[3, 2]));
        assert_eq!(a, b);
        assert_ne!(gr.key(Word::from_letters(&[0, 2])), a);
    }

    #[test]
    fn membership() {
        let g = GeneratorSet::ungraded(2);
        let span = LieSpan::free(&Grading::multidegree(&g), 3).unwrap();
        let lie = left_normed(&g, 3, Word::from_letters(&[0, 1, 0])).unwrap();
        assert!(span.contains(&lie.to_row()));
        assert!(!span.contains(&IntRow::from_ints([(Word::from_letters(&[0, 1]), 1)])));
    }

    #[test]
    fn mixed_relation_rejected() {
        let g = GeneratorSet::ungraded(2);
        let x = LieElement::generator(&g, 3, 0).unwrap();
        let bad = x.add(&rel(&g, 3, &[(0, 1)]));
        assert!(matches!(lie_span_dims(&g, &[bad], 3), Err(Error::InvalidInput(_))));
    }
}
