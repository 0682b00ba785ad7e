use std::fmt;

use crate::error::{Error, Result};

/// Word in the free group on `x1..xn`: letters are `(index, ±1)` with
/// 0-based indices. Adjacent inverse pairs are kept as written.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupWord {
    n: usize,
    letters: Vec<(usize, i8)>,
}

impl GroupWord {
    pub fn new(n: usize, letters: Vec<(usize, i8)>) -> Result<Self> {
        for &(i, e) in &letters {
            if i >= n {
                return Err(Error::InvalidInput(format!("letter x{} outside x1..x{n}", i + 1)));
            }
            if e != 1 && e != -1 {
                return Err(Error::InvalidInput(format!("letter exponent {e} is not ±1")));
            }
        }
        Ok(GroupWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        GroupWord { n, letters: Vec::new() }
    }

    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Self::new(n, vec![(i, 1)])
    }

    /// Parses whitespace-separated tokens `x<i>` or `x<i>^<k>`, with `i` in
    /// `1..=n` and `k` a nonzero integer (expanded into `|k|` letters). An
    /// empty string or `1` is the identity.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let bad = || Error::InvalidInput(format!("bad word token {tok:?}"));
            let body = tok.strip_prefix('x').ok_or_else(bad)?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let idx: usize = idx.parse().map_err(|_| bad())?;
            if idx == 0 || exp == 0 {
                return Err(bad());
            }
            let sign = if exp > 0 { 1 } else { -1 };
            letters.extend(std::iter::repeat_n((idx - 1, sign), exp.unsigned_abs() as usize));
        }
        Self::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GroupWord { n: self.n, letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect() }
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "words over different alphabets");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GroupWord { n: self.n, letters }
    }

    /// `a b a^-1 b^-1`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    /// Total exponent of `x_(i+1)`.
    pub fn exponent_sum(&self, i: usize) -> i64 {
        self.letters.iter().filter(|l| l.0 == i).map(|l| l.1 as i64).sum()
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|&(i, e)| if e > 0 { format!("x{}", i + 1) } else { format!("x{}^-1", i + 1) })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w = GroupWord::parse("x1 x2 x1^-1 x2^-1", 2).unwrap();
        assert_eq!(w.letters(), &[(0, 1), (1, 1), (0, -1), (1, -1)]);
        assert_eq!(w.to_string(), "x1 x2 x1^-1 x2^-1");
        assert_eq!(GroupWord::parse(&w.to_string(), 2).unwrap(), w);
    }

    #[test]
    fn powers_expand() {
        let w = GroupWord::parse("x2^3 x1^-2", 2).unwrap();
        assert_eq!(w.len(), 5);
        assert_eq!(w.exponent_sum(1), 3);
        assert_eq!(w.exponent_sum(0), -2);
    }

    #[test]
    fn identity_forms() {
        assert!(GroupWord::parse("", 3).unwrap().is_empty());
        assert!(GroupWord::parse("1", 3).unwrap().is_empty());
        assert_eq!(GroupWord::identity(2).to_string(), "1");
    }

    #[test]
    fn rejects_bad_tokens() {
        for s in ["x0", "x3", "y1", "x1^0", "x1^a", "x"] {
            assert!(GroupWord::parse(s, 2).is_err(), "{s}");
        }
        assert!(GroupWord::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn inverse_and_commutator() {
        let a = GroupWord::parse("x1 x2", 2).unwrap();
        assert_eq!(a.inverse().to_string(), "x2^-1 x1^-1");
        let c = GroupWord::commutator(&GroupWord::generator(2, 0).unwrap(), &GroupWord::generator(2, 1).unwrap());
        assert_eq!(c.to_string(), "x1 x2 x1^-1 x2^-1");
        assert_eq!(c.exponent_sum(0), 0);
    }
}
