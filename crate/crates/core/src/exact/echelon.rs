//! Incremental exact row reduction over sparse integer rows.
//!
//! Rows are primitive integer vectors (content 1, positive leading entry).
//! Entries live in `i64` until an operation would overflow, at which point
//! that row switches to `BigInt` for good. Elimination is fraction-free.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;

pub trait Column: Ord + Copy + Eq + Hash + Send + Sync + std::fmt::Debug {}
impl<T: Ord + Copy + Eq + Hash + Send + Sync + std::fmt::Debug> Column for T {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Vals {
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

/// Sparse integer row with strictly increasing columns and no zero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntRow<K> {
    cols: Vec<K>,
    vals: Vals,
}

impl<K: Column> IntRow<K> {
    pub fn empty() -> Self {
        IntRow { cols: Vec::new(), vals: Vals::Small(Vec::new()) }
    }

    /// Clears denominators and normalises. Entries may arrive unsorted and
    /// with repeated columns; repeats are summed.
    pub fn from_rationals<I: IntoIterator<Item = (K, Rational)>>(entries: I) -> Self {
        let mut es: Vec<(K, Rational)> = entries.into_iter().filter(|(_, q)| !q.is_zero()).collect();
        es.sort_by_key(|a| a.0);
        let mut merged: Vec<(K, Rational)> = Vec::with_capacity(es.len());
        for (k, q) in es {
            match merged.last_mut() {
                Some((lk, lq)) if *lk == k => *lq += q,
                _ => merged.push((k, q)),
            }
        }
        merged.retain(|(_, q)| !q.is_zero());
        let mut lcm = BigInt::one();
        for (_, q) in &merged {
            lcm = lcm.lcm(q.denom());
        }
        let ints = merged
            .into_iter()
            .map(|(k, q)| (k, q.numer() * (&lcm / q.denom())))
            .collect::<Vec<_>>();
        Self::from_big_sorted(ints)
    }

    pub fn from_ints<I: IntoIterator<Item = (K, i64)>>(entries: I) -> Self {
        Self::from_rationals(entries.into_iter().map(|(k, v)| (k, Rational::from_integer(v.into()))))
    }

    /// Builds a row from unsorted integer entries, summing repeated columns.
    pub fn from_i64_unsorted(mut entries: Vec<(K, i64)>) -> Self {
        entries.sort_unstable_by_key(|a| a.0);
        let mut cols = Vec::with_capacity(entries.len());
        let mut wide: Vec<i128> = Vec::with_capacity(entries.len());
        for (k, v) in entries {
            match cols.last() {
                Some(&lk) if lk == k => *wide.last_mut().unwrap() += v as i128,
                _ => {
                    cols.push(k);
                    wide.push(v as i128);
                }
            }
        }
        let keep: Vec<bool> = wide.iter().map(|&v| v != 0).collect();
        let mut ci = keep.iter();
        cols.retain(|_| *ci.next().unwrap());
        wide.retain(|&v| v != 0);
        let vals = if wide.iter().all(|&v| i64::try_from(v).is_ok()) {
            Vals::Small(wide.into_iter().map(|v| v as i64).collect())
        } else {
            Vals::Big(wide.into_iter().map(BigInt::from).collect())
        };
        let mut row = IntRow { cols, vals };
        row.normalize();
        row
    }

    pub fn from_big_unsorted(mut entries: Vec<(K, BigInt)>) -> Self {
        entries.sort_by_key(|a| a.0);
        let mut merged: Vec<(K, BigInt)> = Vec::with_capacity(entries.len());
        for (k, v) in entries {
            match merged.last_mut() {
                Some((lk, lv)) if *lk == k => *lv += v,
                _ => merged.push((k, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        Self::from_big_sorted(merged)
    }

    /// `i64` entries when the row is stored compactly.
    pub fn small_vals(&self) -> Option<&[i64]> {
        match &self.vals {
            Vals::Small(v) => Some(v),
            Vals::Big(_) => None,
        }
    }

    pub fn to_rationals(&self) -> Vec<(K, Rational)> {
        self.entries().into_iter().map(|(k, v)| (k, Rational::from_integer(v))).collect()
    }

    /// Rebuilds the row after relabelling each column; `f` may merge columns.
    pub fn map_cols<J: Column>(&self, f: impl Fn(K) -> J) -> IntRow<J> {
        match &self.vals {
            Vals::Small(v) => IntRow::from_i64_unsorted(self.cols.iter().zip(v).map(|(&k, &x)| (f(k), x)).collect()),
            Vals::Big(v) => IntRow::from_big_unsorted(self.cols.iter().zip(v).map(|(&k, x)| (f(k), x.clone())).collect()),
        }
    }

    fn from_big_sorted(ints: Vec<(K, BigInt)>) -> Self {
        let (cols, vals): (Vec<K>, Vec<BigInt>) = ints.into_iter().unzip();
        let mut row = IntRow { cols, vals: Vals::Big(vals) };
        row.normalize();
        row
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn len(&self) -> usize {
        self.cols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn lead(&self) -> Option<K> {
        self.cols.first().copied()
    }

    pub fn cols(&self) -> &[K] {
        &self.cols
    }

    fn big_at(&self, i: usize) -> BigInt {
        match &self.vals {
            Vals::Small(v) => BigInt::from(v[i]),
            Vals::Big(v) => v[i].clone(),
        }
    }

    pub fn entries(&self) -> Vec<(K, BigInt)> {
        (0..self.cols.len()).map(|i| (self.cols[i], self.big_at(i))).collect()
    }

    fn position(&self, col: K) -> Option<usize> {
        self.cols.binary_search(&col).ok()
    }

    /// Divide by content, make the leading entry positive, and demote to
    /// `i64` storage when every entry fits.
    fn normalize(&mut self) {
        if self.cols.is_empty() {
            self.vals = Vals::Small(Vec::new());
            return;
        }
        match &mut self.vals {
            Vals::Small(v) => {
                let mut g = 0i64;
                for &x in v.iter() {
                    g = g.gcd(&x);
                    if g == 1 {
                        break;
                    }
                }
                if v[0] < 0 {
                    g = -g;
                }
                if g != 1 {
                    for x in v.iter_mut() {
                        *x /= g;
                    }
                }
            }
            Vals::Big(v) => {
                let mut g = BigInt::zero();
                for x in v.iter() {
                    g = g.gcd(x);
                    if g.is_one() {
                        break;
                    }
                }
                if v[0].is_negative() {
                    g = -g;
                }
                if !g.is_one() {
                    for x in v.iter_mut() {
                        *x = &*x / &g;
                    }
                }
                if v.iter().all(|x| x.bits() < 63) {
                    let small = v.iter().map(|x| x.to_i64().unwrap()).collect();
                    self.vals = Vals::Small(small);
                }
            }
        }
    }

    /// `self <- a*self - b*pivot`, where both share the column `col`, chosen
    /// so the entry at `col` cancels.
    fn eliminate(&mut self, pivot: &IntRow<K>, col: K) {
        let i = self.position(col).expect("column present in row");
        let j = pivot.position(col).expect("column present in pivot");
        if let (Vals::Small(sv), Vals::Small(pv)) = (&self.vals, &pivot.vals) {
            let g = sv[i].gcd(&pv[j]);
            let a = pv[j] / g;
            let b = sv[i] / g;
            if let Some(out) = combine_small(&self.cols, sv, &pivot.cols, pv, a, b) {
                self.cols = out.0;
                self.vals = Vals::Small(out.1);
                self.normalize();
                return;
            }
        }
        let s = self.big_at(i);
        let p = pivot.big_at(j);
        let g = s.gcd(&p);
        let a = &p / &g;
        let b = &s / &g;
        let mut cols = Vec::with_capacity(self.cols.len() + pivot.cols.len());
        let mut vals = Vec::with_capacity(cols.capacity());
        let (mut x, mut y) = (0, 0);
        while x < self.cols.len() || y < pivot.cols.len() {
            let take_x = y >= pivot.cols.len() || (x < self.cols.len() && self.cols[x] < pivot.cols[y]);
            let take_y = x >= self.cols.len() || (y < pivot.cols.len() && pivot.cols[y] < self.cols[x]);
            let (c, v) = if take_x {
                x += 1;
                (self.cols[x - 1], &a * self.big_at(x - 1))
            } else if take_y {
                y += 1;
                (pivot.cols[y - 1], -(&b * pivot.big_at(y - 1)))
            } else {
                x += 1;
                y += 1;
                (self.cols[x - 1], &a * self.big_at(x - 1) - &b * pivot.big_at(y - 1))
            };
            if !v.is_zero() {
                cols.push(c);
                vals.push(v);
            }
        }
        self.cols = cols;
        self.vals = Vals::Big(vals);
        self.normalize();
    }
}

fn combine_small<K: Column>(
    xc: &[K],
    xv: &[i64],
    yc: &[K],
    yv: &[i64],
    a: i64,
    b: i64,
) -> Option<(Vec<K>, Vec<i64>)> {
    let mut cols = Vec::with_capacity(xc.len() + yc.len());
    let mut vals = Vec::with_capacity(cols.capacity());
    let (mut x, mut y) = (0, 0);
    while x < xc.len() || y < yc.len() {
        let (c, v) = if y >= yc.len() || (x < xc.len() && xc[x] < yc[y]) {
            x += 1;
            (xc[x - 1], a.checked_mul(xv[x - 1])?)
        } else if x >= xc.len() || yc[y] < xc[x] {
            y += 1;
            (yc[y - 1], b.checked_mul(yv[y - 1])?.checked_neg()?)
        } else {
            x += 1;
            y += 1;
            let l = a.checked_mul(xv[x - 1])?;
            let r = b.checked_mul(yv[y - 1])?;
            (xc[x - 1], l.checked_sub(r)?)
        };
        if v != 0 {
            cols.push(c);
            vals.push(v);
        }
    }
    Some((cols, vals))
}

/// Semi-echelon basis of a growing subspace: every stored row has a distinct
/// leading column, and entries after the lead are unrestricted.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    rows: Vec<IntRow<K>>,
    pivots: HashMap<K, usize>,
}

impl<K: Column> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Column> Echelon<K> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new(), pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[IntRow<K>] {
        &self.rows
    }

    pub fn is_pivot(&self, col: &K) -> bool {
        self.pivots.contains_key(col)
    }

    /// Reduces until the leading column is not a pivot column.
    pub fn reduce_lead(&self, mut v: IntRow<K>) -> IntRow<K> {
        while let Some(c) = v.lead() {
            match self.pivots.get(&c) {
                Some(&r) => v.eliminate(&self.rows[r], c),
                None => break,
            }
        }
        v
    }

    /// Normal form: no entry of the result sits in a pivot column. Two vectors
    /// have equal normal forms (up to a positive scalar) iff they differ by
    /// an element of the span.
    pub fn reduce_full(&self, mut v: IntRow<K>) -> IntRow<K> {
        let mut idx = 0;
        while idx < v.cols.len() {
            let c = v.cols[idx];
            match self.pivots.get(&c) {
                Some(&r) => {
                    v.eliminate(&self.rows[r], c);
                    // entries before `c` are untouched by the elimination
                    idx = v.cols.partition_point(|x| *x <= c);
                }
                None => idx += 1,
            }
        }
        v
    }

    pub fn into_rows(self) -> Vec<IntRow<K>> {
        self.rows
    }

    /// Inserts many rows. Each batch is first reduced against the current
    /// basis in parallel; the survivors are then inserted one by one.
    /// Returns the number of rows that raised the rank.
    pub fn extend_batched(&mut self, rows: Vec<IntRow<K>>) -> usize {
        use crate::par::*;
        const BATCH: usize = 256;
        let mut added = 0;
        let mut rest = rows;
        while !rest.is_empty() {
            let tail = rest.split_off(rest.len().min(BATCH));
            let reduced: Vec<IntRow<K>> = {
                let this = &*self;
                rest.into_par_iter().map(|r| this.reduce_lead(r)).filter(|r| !r.is_zero()).collect()
            };
            for r in reduced {
                if self.insert(r) {
                    added += 1;
                }
            }
            rest = tail;
        }
        added
    }

    pub fn contains(&self, v: IntRow<K>) -> bool {
        self.reduce_lead(v).is_zero()
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: IntRow<K>) -> bool {
        let r = self.reduce_lead(v);
        match r.lead() {
            None => false,
            Some(c) => {
                self.pivots.insert(c, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }
}

/// Echelon form over ℚ that remembers how each stored row is built from the
/// independent vectors that were inserted, so arbitrary vectors in the span
/// can be written in terms of those originals.
#[derive(Clone, Debug)]
pub struct TrackedEchelon<K> {
    rows: Vec<Vec<(K, Rational)>>,
    transforms: Vec<Vec<Rational>>,
    pivots: HashMap<K, usize>,
}

impl<K: Column> Default for TrackedEchelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

fn axpy<K: Column>(v: &[(K, Rational)], c: &Rational, w: &[(K, Rational)]) -> Vec<(K, Rational)> {
    // v - c*w
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        if j >= w.len() || (i < v.len() && v[i].0 < w[j].0) {
            out.push(v[i].clone());
            i += 1;
        } else if i >= v.len() || w[j].0 < v[i].0 {
            out.push((w[j].0, -(c * &w[j].1)));
            j += 1;
        } else {
            let x = &v[i].1 - c * &w[j].1;
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<K: Column> TrackedEchelon<K> {
    pub fn new() -> Self {
        TrackedEchelon { rows: Vec::new(), transforms: Vec::new(), pivots: HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn sorted(mut v: Vec<(K, Rational)>) -> Vec<(K, Rational)> {
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(K, Rational)> = Vec::with_capacity(v.len());
        for (k, q) in v {
            match out.last_mut() {
                Some((lk, lq)) if *lk == k => *lq += q,
                _ => out.push((k, q)),
            }
        }
        out.retain(|(_, q)| !q.is_zero());
        out
    }

    /// Reduces `v`; returns the remainder and the combination of stored
    /// originals that was subtracted.
    fn reduce(&self, v: Vec<(K, Rational)>) -> (Vec<(K, Rational)>, Vec<Rational>) {
        let mut v = Self::sorted(v);
        let mut coeffs = vec![Rational::zero(); self.rows.len()];
        let mut idx = 0;
        while idx < v.len() {
            let c = v[idx].0;
            if let Some(&r) = self.pivots.get(&c) {
                let factor = v[idx].1.clone();
                v = axpy(&v, &factor, &self.rows[r]);
                for (k, t) in self.transforms[r].iter().enumerate() {
                    if !t.is_zero() {
                        coeffs[k] += &factor * t;
                    }
                }
                idx = v.partition_point(|x| x.0 <= c);
            } else {
                idx += 1;
            }
        }
        (v, coeffs)
    }

    /// Inserts `v`; returns `true` if it was independent of the span.
    pub fn insert(&mut self, v: Vec<(K, Rational)>) -> bool {
        let (rem, coeffs) = self.reduce(v);
        let Some((lead, lc)) = rem.first().cloned() else {
            return false;
        };
        let k = self.rows.len();
        let inv = lc.recip();
        let row: Vec<(K, Rational)> = rem.into_iter().map(|(c, q)| (c, q * &inv)).collect();
        // row = (v - sum coeffs_j orig_j) / lc
        let mut t: Vec<Rational> = coeffs.into_iter().map(|c| -c * &inv).collect();
        t.push(inv);
        for old in self.transforms.iter_mut() {
            old.push(Rational::zero());
        }
        self.transforms.push(t);
        self.pivots.insert(lead, k);
        self.rows.push(row);
        true
    }

    /// Remainder of `v` after full reduction: no entry sits in a pivot column.
    pub fn remainder(&self, v: Vec<(K, Rational)>) -> Vec<(K, Rational)> {
        self.reduce(v).0
    }

    pub fn is_pivot(&self, col: &K) -> bool {
        self.pivots.contains_key(col)
    }

    /// Coefficients of `v` over the inserted independent vectors, or `None`
    /// when `v` is outside the span.
    pub fn decompose(&self, v: Vec<(K, Rational)>) -> Option<Vec<Rational>> {
        let (rem, coeffs) = self.reduce(v);
        rem.is_empty().then_some(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn rank_of_dependent_rows() {
        let mut e = Echelon::new();
        assert!(e.insert(IntRow::from_ints([(0u32, 1), (1, 2)])));
        assert!(!e.insert(IntRow::from_ints([(0u32, 2), (1, 4)])));
        assert!(e.insert(IntRow::from_ints([(1u32, 3)])));
        assert_eq!(e.rank(), 2);
    }

    #[test]
    fn overflow_promotes_to_bigint() {
        let big = i64::MAX / 2 + 7;
        let mut e = Echelon::new();
        e.insert(IntRow::from_ints([(0u32, big), (1, 3)]));
        let v = IntRow::from_ints([(0u32, big - 1), (1, 5)]);
        assert!(e.insert(v));
        let w = IntRow::from_rationals([(0u32, int(big) * int(3)), (1, int(9))]);
        assert!(!e.insert(w));
    }

    #[test]
    fn unsorted_construction_merges_and_normalises() {
        let r = IntRow::from_i64_unsorted(vec![(2u32, 4), (0, -2), (2, 2), (1, 0)]);
        assert_eq!(r.cols(), &[0, 2]);
        assert_eq!(r.small_vals().unwrap(), &[1, -3]);
        let s = IntRow::from_i64_unsorted(vec![(0u32, i64::MAX), (0, i64::MAX), (1, 2)]);
        assert_eq!(s.cols(), &[0, 1]);
    }

    #[test]
    fn batched_extend_matches_sequential() {
        let rows: Vec<IntRow<u32>> = (0..600u32)
            .map(|i| IntRow::from_ints([(i % 37, 1 + (i as i64 % 5)), ((i * 7) % 41, 2), ((i * 13) % 43, -3)]))
            .collect();
        let mut a = Echelon::new();
        for r in rows.clone() {
            a.insert(r);
        }
        let mut b = Echelon::new();
        assert_eq!(b.extend_batched(rows), a.rank());
        assert_eq!(a.rank(), b.rank());
    }

    #[test]
    fn full_reduction_is_canonical() {
        let mut e = Echelon::new();
        e.insert(IntRow::from_ints([(0u32, 1), (2, 1)]));
        let a = e.reduce_full(IntRow::from_ints([(0u32, 1), (1, 1)]));
        let b = e.reduce_full(IntRow::from_ints([(1u32, 1), (2, -1)]));
        assert_eq!(a, b);
        assert!(a.cols().iter().all(|c| !e.is_pivot(c)));
    }

    #[test]
    fn tracked_decomposition() {
        let mut t = TrackedEchelon::new();
        assert!(t.insert(vec![(0u32, int(1)), (1, int(1))]));
        assert!(t.insert(vec![(1u32, int(2)), (2, int(1))]));
        assert!(!t.insert(vec![(0u32, int(1)), (1, int(3)), (2, int(1))]));
        let c = t.decompose(vec![(0u32, int(2)), (1, int(3)), (2, rat(1, 2))]).unwrap();
        assert_eq!(c, vec![int(2), rat(1, 2)]);
        assert!(t.decompose(vec![(2u32, int(1))]).is_none());
    }
}
