//! Chevalley–Eilenberg test: homology of `(Λ ℋ, ∂)` per exterior degree `p`
//! and weight (sum of bracket lengths). Dimensions agree with those of the
//! dual cochain complex.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::algebra::{holonomy_lie, AlgebraPresentation, Holonomy, Verdict};
use crate::error::Result;
use crate::exact::{rational, Echelon, IntRow, Rational};
use crate::par::*;
use crate::tensor::{quotient_basis, BlockKey, LieBasis};

/// Basis of the holonomy Lie algebra through `max_weight`, with structure
/// constants.
pub fn holonomy_basis(h: &Holonomy, max_weight: usize) -> LieBasis {
    quotient_basis(h.free_span(), Some(h.ideal_span()), max_weight)
}

type Chain = Vec<usize>;

/// Sorted `p`-subsets of the basis with total weight `<= max_weight`.
fn chains(basis: &LieBasis, p: usize, max_weight: usize) -> Vec<Chain> {
    fn go(basis: &LieBasis, start: usize, left: usize, budget: usize, cur: &mut Chain, out: &mut Vec<Chain>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..basis.len() {
            let w = basis.weight(i);
            // the remaining left-1 elements weigh at least 1 each
            if w + (left - 1) > budget {
                continue;
            }
            cur.push(i);
            go(basis, i + 1, left - 1, budget - w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(basis, 0, p, max_weight, &mut Vec::new(), &mut out);
    out
}

fn chain_key(basis: &LieBasis, c: &Chain) -> BlockKey {
    let len = if basis.is_empty() { 1 } else { basis.key(0).len() };
    let mut k = vec![0i64; len];
    for &i in c {
        for (a, b) in k.iter_mut().zip(basis.key(i)) {
            *a += b;
        }
    }
    k
}

/// `∂(x_1 ∧ .. ∧ x_m) = Σ_{a<b} (-1)^{a+b} [x_a, x_b] ∧ x_1 .. x̂_a .. x̂_b .. x_m`.
pub fn ce_boundary(basis: &LieBasis, c: &Chain) -> Vec<(Chain, Rational)> {
    let mut out: BTreeMap<Chain, Rational> = BTreeMap::new();
    for a in 0..c.len() {
        for b in a + 1..c.len() {
            let br = basis.bracket(c[a], c[b]);
            if br.is_empty() {
                continue;
            }
            let rest: Chain = c.iter().enumerate().filter(|&(i, _)| i != a && i != b).map(|(_, &x)| x).collect();
            let outer_neg = (a + b) % 2 == 1;
            for (t, s) in br {
                if rest.contains(t) {
                    continue;
                }
                let pos = rest.partition_point(|x| x < t);
                let mut chain = rest.clone();
                chain.insert(pos, *t);
                let neg = outer_neg ^ (pos % 2 == 1);
                let e = out.entry(chain).or_insert_with(Rational::zero);
                if neg {
                    *e -= s;
                } else {
                    *e += s;
                }
            }
        }
    }
    out.into_iter().filter(|(_, q)| !q.is_zero()).collect()
}

/// CE homology dimensions `(p, weight) -> dim` for `p <= p_max`,
/// `weight <= weight_max`.
pub fn ce_homology(basis: &LieBasis, p_max: usize, weight_max: usize) -> BTreeMap<(usize, usize), u64> {
    // chain spaces C_p for p <= p_max + 1, grouped by block key
    let spaces: Vec<BTreeMap<BlockKey, Vec<Chain>>> = (0..=p_max + 1)
        .map(|p| {
            let mut m: BTreeMap<BlockKey, Vec<Chain>> = BTreeMap::new();
            for c in chains(basis, p, weight_max) {
                m.entry(chain_key(basis, &c)).or_default().push(c);
            }
            m
        })
        .collect();
    // rank of ∂ : C_p -> C_{p-1} per block
    let jobs: Vec<(usize, BlockKey)> =
        (1..=p_max + 1).flat_map(|p| spaces[p].keys().map(move |k| (p, k.clone()))).collect();
    let ranks: HashMap<(usize, BlockKey), usize> = jobs
        .into_par_iter()
        .map(|(p, key)| {
            let target: HashMap<&Chain, usize> = spaces[p - 1]
                .get(&key)
                .map(|cs| cs.iter().enumerate().map(|(i, c)| (c, i)).collect())
                .unwrap_or_default();
            let mut e = Echelon::new();
            let rows: Vec<IntRow<usize>> = spaces[p][&key]
                .iter()
                .map(|c| IntRow::from_rationals(ce_boundary(basis, c).into_iter().map(|(t, q)| (target[&t], q))))
                .collect();
            e.extend_batched(rows);
            ((p, key), e.rank())
        })
        .collect();
    let mut out = BTreeMap::new();
    for (p, space) in spaces.iter().enumerate().take(p_max + 1) {
        for (key, cs) in space {
            let r_out = if p == 0 { 0 } else { ranks[&(p, key.clone())] };
            let r_in = ranks.get(&(p + 1, key.clone())).copied().unwrap_or(0);
            let h = cs.len() - r_out - r_in;
            if h > 0 {
                *out.entry((p, key[0] as usize)).or_insert(0) += h as u64;
            }
        }
    }
    out
}

/// Outcome of the CE test with the cohomology table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CeTest {
    pub verdict: Verdict,
    pub cohomology: BTreeMap<(usize, usize), u64>,
}

/// Passes iff `H^p_w = 0` for `w != p` and `dim H^p_p = dim A^p` for all
/// `p <= p_max`, `w <= weight_max`.
pub fn koszul_ce_test(a: &AlgebraPresentation, p_max: usize, weight_max: usize) -> Result<CeTest> {
    let hol = holonomy_lie(a, weight_max)?;
    let basis = holonomy_basis(&hol, weight_max);
    let cohomology = ce_homology(&basis, p_max, weight_max);
    let hilb = a.hilbert(p_max);
    let mut verdict = Verdict::ConsistentUpTo { degree: weight_max };
    'outer: for w in 0..=weight_max {
        for p in 0..=p_max.min(w) {
            let h = cohomology.get(&(p, w)).copied().unwrap_or(0);
            let expected = if p == w { rational::as_integer(&hilb.coeff(p)).and_then(|b| u64::try_from(b).ok()).unwrap_or(0) } else { 0 };
            if h != expected {
                let detail = if p == w {
                    format!("H^{p} in weight {w} has dimension {h} but A^{p} has dimension {expected}")
                } else {
                    format!("off-diagonal class: H^{p} in weight {w} has dimension {h}")
                };
                verdict = Verdict::Fail { degree: Some(w), detail };
                break 'outer;
            }
        }
    }
    Ok(CeTest { verdict, cohomology })
}
