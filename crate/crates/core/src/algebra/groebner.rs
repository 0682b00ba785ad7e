//! Truncated noncommutative Gröbner bases for homogeneous relations in
//! degree-one generators, under the degree-lexicographic order.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::exact::Rational;
use crate::tensor::Word;

/// Homogeneous noncommutative polynomial; the leading word is the largest.
pub type NcPoly = BTreeMap<Word, Rational>;

fn make_monic(p: &mut NcPoly) {
    if let Some((_, c)) = p.last_key_value() {
        let inv = c.recip();
        for v in p.values_mut() {
            *v = &*v * &inv;
        }
    }
}

fn lead(p: &NcPoly) -> Word {
    *p.last_key_value().expect("nonzero polynomial").0
}

#[derive(Clone, Debug, Default)]
pub struct GroebnerBasis {
    polys: Vec<NcPoly>,
    by_lead: HashMap<Word, usize>,
    lead_lengths: Vec<usize>,
}

impl GroebnerBasis {
    pub fn leads(&self) -> impl Iterator<Item = Word> + '_ {
        self.polys.iter().map(lead)
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// A factor of `w` that is a leading word: `(element, offset)`.
    fn find_factor(&self, w: Word) -> Option<(usize, usize)> {
        for &l in &self.lead_lengths {
            if l > w.len() {
                continue;
            }
            for start in 0..=w.len() - l {
                if let Some(&g) = self.by_lead.get(&w.slice(start, start + l)) {
                    return Some((g, start));
                }
            }
        }
        None
    }

    pub fn reduce(&self, mut p: NcPoly) -> NcPoly {
        let mut out = NcPoly::new();
        while let Some((w, c)) = p.pop_last() {
            match self.find_factor(w) {
                None => {
                    out.insert(w, c);
                }
                Some((g, start)) => {
                    let g = &self.polys[g];
                    let l = lead(g).len();
                    let (pre, post) = (w.slice(0, start), w.slice(start + l, w.len()));
                    for (u, a) in g.iter().rev().skip(1) {
                        let word = pre.concat(*u).and_then(|x| x.concat(post)).expect("same length as w");
                        let e = p.entry(word).or_insert_with(Rational::zero);
                        *e -= &c * a;
                        if e.is_zero() {
                            p.remove(&word);
                        }
                    }
                }
            }
        }
        out
    }

    fn push(&mut self, mut p: NcPoly) {
        make_monic(&mut p);
        let l = lead(&p);
        self.by_lead.insert(l, self.polys.len());
        if !self.lead_lengths.contains(&l.len()) {
            self.lead_lengths.push(l.len());
            self.lead_lengths.sort_unstable();
        }
        self.polys.push(p);
    }
}

fn shift(p: &NcPoly, pre: Word, post: Word) -> NcPoly {
    p.iter().map(|(w, c)| (pre.concat(*w).and_then(|x| x.concat(post)).expect("word fits"), c.clone())).collect()
}

fn sub(a: &NcPoly, b: &NcPoly) -> NcPoly {
    let mut out = a.clone();
    for (w, c) in b {
        let e = out.entry(*w).or_insert_with(Rational::zero);
        *e -= c;
        if e.is_zero() {
            out.remove(w);
        }
    }
    out
}

/// All elements of the reduced Gröbner basis of degree at most `max_degree`
/// (Bergman's overlap resolution, degree by degree).
pub fn truncated_groebner(relations: &[NcPoly], max_degree: usize) -> GroebnerBasis {
    let mut gb = GroebnerBasis::default();
    let mut by_degree: BTreeMap<usize, Vec<NcPoly>> = BTreeMap::new();
    for r in relations.iter().filter(|r| !r.is_empty()) {
        by_degree.entry(lead(r).len()).or_default().push(r.clone());
    }
    for d in 1..=max_degree {
        let mut cands = by_degree.remove(&d).unwrap_or_default();
        let existing = gb.polys.len();
        for i in 0..existing {
            for j in 0..existing {
                let (u, v) = (lead(&gb.polys[i]), lead(&gb.polys[j]));
                let (lu, lv) = (u.len(), v.len());
                if lu + lv <= d {
                    continue;
                }
                // proper overlap: a nonempty suffix of u equals a prefix of v
                let s = lu + lv - d;
                if s >= lu.min(lv) || u.slice(lu - s, lu) != v.slice(0, s) {
                    continue;
                }
                let a = u.slice(0, lu - s);
                let b = v.slice(s, lv);
                cands.push(sub(&shift(&gb.polys[i], Word::EMPTY, b), &shift(&gb.polys[j], a, Word::EMPTY)));
            }
        }
        for c in cands {
            let r = gb.reduce(c);
            if !r.is_empty() {
                gb.push(r);
            }
        }
    }
    gb
}

/// Counts words of each length `0..=max_len` over `n` letters that contain
/// no leading word of `gb` as a factor (Aho–Corasick automaton).
pub fn count_normal_words(n: usize, gb: &GroebnerBasis, max_len: usize) -> Vec<u128> {
    // trie
    let mut next: Vec<Vec<usize>> = vec![vec![usize::MAX; n]];
    let mut terminal = vec![false];
    for w in gb.leads() {
        let mut s = 0;
        for l in w.letters() {
            if next[s][l] == usize::MAX {
                next[s][l] = next.len();
                next.push(vec![usize::MAX; n]);
                terminal.push(false);
            }
            s = next[s][l];
        }
        terminal[s] = true;
    }
    // failure links, breadth first
    let mut fail = vec![0usize; next.len()];
    let mut queue = std::collections::VecDeque::new();
    for l in 0..n {
        match next[0][l] {
            usize::MAX => next[0][l] = 0,
            c => queue.push_back(c),
        }
    }
    while let Some(s) = queue.pop_front() {
        terminal[s] = terminal[s] || terminal[fail[s]];
        for l in 0..n {
            let c = next[s][l];
            if c == usize::MAX {
                next[s][l] = next[fail[s]][l];
            } else {
                fail[c] = if s == 0 { 0 } else { next[fail[s]][l] };
                queue.push_back(c);
            }
        }
    }
    // children of the root have failure 0 already; terminal flags of deeper
    // states were merged above in BFS order
    let mut counts = vec![0u128; next.len()];
    counts[0] = 1;
    let mut out = vec![1u128];
    for _ in 1..=max_len {
        let mut nc = vec![0u128; next.len()];
        for (s, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for l in 0..n {
                let t = next[s][l];
                if !terminal[t] {
                    nc[t] += c;
                }
            }
        }
        out.push(nc.iter().sum());
        counts = nc;
    }
    out
}

/// Number of normal words in each degree of `T(V)/(relations)`.
pub fn hilbert_counts(n: usize, relations: &[NcPoly], max_degree: usize) -> Vec<u128> {
    let gb = truncated_groebner(relations, max_degree);
    count_normal_words(n, &gb, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn poly(terms: &[(&[usize], i64)]) -> NcPoly {
        terms.iter().map(|(w, c)| (Word::from_letters(w), int(*c))).collect()
    }

    #[test]
    fn free_algebra() {
        assert_eq!(hilbert_counts(2, &[], 4), vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn polynomial_ring_in_three_variables() {
        let rels: Vec<NcPoly> = [(0, 1), (0, 2), (1, 2)].iter().map(|&(i, j)| poly(&[(&[i, j], 1), (&[j, i], -1)])).collect();
        // binom(d+2, 2)
        assert_eq!(hilbert_counts(3, &rels, 5), vec![1, 3, 6, 10, 15, 21]);
    }

    #[test]
    fn overlaps_that_resolve() {
        let rels = vec![poly(&[(&[1, 0], 1), (&[0, 1], -1)]), poly(&[(&[1, 1], 1)])];
        // commutative with y^2 = 0: monomials x^a and x^a y
        assert_eq!(hilbert_counts(2, &rels, 5), vec![1, 2, 2, 2, 2, 2]);
    }

    /// `dim T_d / J_d` by linear algebra on all words of length `d`.
    fn brute_force(n: usize, rels: &[NcPoly], max: usize) -> Vec<u128> {
        use crate::exact::{Echelon, IntRow};
        let words = |len: usize| -> Vec<Word> {
            let mut ws = vec![Word::EMPTY];
            for _ in 0..len {
                ws = ws.into_iter().flat_map(|w| (0..n).map(move |l| w.concat(Word::letter(l)).unwrap())).collect();
            }
            ws
        };
        (0..=max)
            .map(|d| {
                let mut e = Echelon::new();
                for r in rels {
                    let rl = lead(r).len();
                    for a in 0..=d.saturating_sub(rl) {
                        if a + rl > d {
                            continue;
                        }
                        for pre in words(a) {
                            for post in words(d - rl - a) {
                                e.insert(IntRow::from_rationals(shift(r, pre, post)));
                            }
                        }
                    }
                }
                (n.pow(d as u32) - e.rank()) as u128
            })
            .collect()
    }

    #[test]
    fn overlap_produces_new_element() {
        // y^2 = yx: the self-overlap yyy yields the new degree-3 element yxy - yxx
        let rels = vec![poly(&[(&[1, 1], 1), (&[1, 0], -1)])];
        let gb = truncated_groebner(&rels, 3);
        assert_eq!(gb.len(), 2);
        assert_eq!(hilbert_counts(2, &rels, 7), brute_force(2, &rels, 7));
    }

    #[test]
    fn matches_brute_force_on_mixed_relations() {
        let rels = vec![
            poly(&[(&[0, 1], 1), (&[1, 0], 1), (&[2, 2], -1)]),
            poly(&[(&[1, 2], 1), (&[2, 0], -2)]),
        ];
        assert_eq!(hilbert_counts(3, &rels, 6), brute_force(3, &rels, 6));
    }

    #[test]
    fn one_relator() {
        let r = poly(&[(&[0, 1], 1), (&[1, 0], -1), (&[2, 3], 1), (&[3, 2], -1)]);
        // 1/(1 - 4t + t^2)
        assert_eq!(hilbert_counts(4, &[r], 6), vec![1, 4, 15, 56, 209, 780, 2911]);
    }
}
