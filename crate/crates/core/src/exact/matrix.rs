use std::collections::BTreeMap;

use num_traits::Zero;

use super::echelon::{Echelon, IntRow};
use super::rational::Rational;

/// Sparse rational matrix; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::new(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, q) in row.iter().enumerate() {
                m.set(i, j, q.clone());
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, q: Rational) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        if q.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), q);
        }
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    fn row_entries(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut rows = vec![Vec::new(); self.rows];
        for (&(i, j), q) in &self.entries {
            rows[i].push((j, q.clone()));
        }
        rows
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for row in self.row_entries() {
            e.insert(IntRow::from_rationals(row));
        }
        e.rank()
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Rational::zero(); self.rows];
        for (&(i, j), q) in &self.entries {
            out[i] += q * &v[j];
        }
        out
    }

    /// Basis of the right kernel `{v : M v = 0}` from the reduced row echelon
    /// form: one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let rref = self.rref();
        let pivot_cols: Vec<usize> = rref.iter().map(|r| r[0].0).collect();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::from_integer(1.into());
            for row in &rref {
                if let Some((_, q)) = row.iter().find(|(c, _)| *c == free) {
                    v[row[0].0] = -q.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Reduced row echelon form as sparse rows with leading coefficient one.
    pub fn rref(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
        for mut v in self.row_entries() {
            for r in &rows {
                let lead = r[0].0;
                if let Some(pos) = v.iter().position(|(c, _)| *c == lead) {
                    let f = v[pos].1.clone();
                    v = sub_scaled(&v, &f, r);
                }
            }
            if v.is_empty() {
                continue;
            }
            let inv = v[0].1.recip();
            for e in v.iter_mut() {
                e.1 = &e.1 * &inv;
            }
            let lead = v[0].0;
            for r in rows.iter_mut() {
                if let Some(pos) = r.iter().position(|(c, _)| *c == lead) {
                    let f = r[pos].1.clone();
                    *r = sub_scaled(r, &f, &v);
                }
            }
            let at = rows.partition_point(|r| r[0].0 < lead);
            rows.insert(at, v);
        }
        rows
    }
}

fn sub_scaled(v: &[(usize, Rational)], f: &Rational, w: &[(usize, Rational)]) -> Vec<(usize, Rational)> {
    let mut acc: BTreeMap<usize, Rational> = v.iter().cloned().collect();
    for (c, q) in w {
        let e = acc.entry(*c).or_insert_with(Rational::zero);
        *e -= f * q;
    }
    acc.into_iter().filter(|(_, q)| !q.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(&rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn identity_has_full_rank() {
        let id = SparseMatrix::identity(2);
        assert_eq!(id.rank(), 2);
        assert!(id.kernel_basis().is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        let z = SparseMatrix::new(3, 4);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel_basis().len(), 4);
        assert_eq!(z.nnz(), 0);
    }

    #[test]
    fn rank_one_example() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 1);
        // hand elimination: x + 2y = 0, spanned by (2, -1)
        let v = &k[0];
        assert_eq!(&v[0] * int(-1), &v[1] * int(2));
        assert!(a.apply(v).iter().all(Zero::is_zero));
    }

    #[test]
    fn stored_zero_is_removed() {
        let mut a = SparseMatrix::new(1, 1);
        a.set(0, 0, int(3));
        a.set(0, 0, int(0));
        assert_eq!(a.nnz(), 0);
    }
}
