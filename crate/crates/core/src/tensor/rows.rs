//! Integer-row arithmetic on tensor words. A row is a scalar multiple of an
//! element; these helpers are used wherever only spans matter.

use super::generators::GeneratorSet;
use super::word::Word;
use crate::error::{Error, Result};
use crate::exact::IntRow;

fn overflow(w: Word, extra: usize) -> Error {
    Error::TruncationOverflow { degree: w.len() + extra, truncation: super::word::MAX_LEN }
}

/// `[x_g, b]` for `b` homogeneous of degree `deg_b`.
pub fn bracket_letter(gens: &GeneratorSet, g: usize, row: &IntRow<Word>, deg_b: usize) -> Result<IntRow<Word>> {
    let lg = Word::letter(g);
    // [g,b] = g b - (-1)^{|g||b|} b g
    let same = (gens.parity(gens.degree(g)) * gens.parity(deg_b)) % 2 == 1;
    if let Some(vals) = row.small_vals() {
        let mut out = Vec::with_capacity(2 * vals.len());
        for (&w, &c) in row.cols().iter().zip(vals) {
            out.push((lg.concat(w).ok_or_else(|| overflow(w, 1))?, c));
            out.push((w.concat(lg).ok_or_else(|| overflow(w, 1))?, if same { c } else { -c }));
        }
        if vals.iter().all(|c| c.checked_neg().is_some()) {
            return Ok(IntRow::from_i64_unsorted(out));
        }
    }
    let mut out = Vec::with_capacity(2 * row.len());
    for (w, c) in row.entries() {
        out.push((lg.concat(w).ok_or_else(|| overflow(w, 1))?, c.clone()));
        out.push((w.concat(lg).ok_or_else(|| overflow(w, 1))?, if same { c } else { -c }));
    }
    Ok(IntRow::from_big_unsorted(out))
}
