use std::cmp::Ordering;
use std::fmt;

/// Squarefree monomial `e_{i_1} ... e_{i_d}` (`i_1 < ... < i_d`) in an exterior
/// algebra on at most 64 generators. Ordered by degree, then
/// lexicographically on the sorted index tuple.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_bits(bits: u64) -> Self {
        Monomial(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn generator(i: usize) -> Self {
        assert!(i < 64, "exterior generator index {i} out of range");
        Monomial(1 << i)
    }

    /// Sorts an index list into a monomial; returns the sign of the sorting
    /// permutation, or `None` when an index repeats (the product vanishes).
    pub fn from_indices(indices: &[usize]) -> Option<(Monomial, bool)> {
        let mut acc = Monomial::ONE;
        let mut negative = false;
        for &i in indices {
            let (m, neg) = acc.mul(Monomial::generator(i))?;
            acc = m;
            negative ^= neg;
        }
        Some((acc, negative))
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                i
            })
        })
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    /// `self * other = ±(union)`; the flag is `true` for a minus sign.
    pub fn mul(self, other: Monomial) -> Option<(Monomial, bool)> {
        if self.0 & other.0 != 0 {
            return None;
        }
        // each index of `other` passes the larger indices of `self`
        let swaps: u32 = other.indices().map(|j| (self.0 >> j).count_ones()).sum();
        Some((Monomial(self.0 | other.0), swaps % 2 == 1))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().map(|i| format!("e{}", i + 1)).collect();
        write!(f, "{}", parts.join(""))
    }
}

/// All degree-`d` monomials on `n` generators in increasing order.
pub fn monomials(n: usize, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..d).collect();
    if d > n {
        return out;
    }
    loop {
        out.push(Monomial(idx.iter().fold(0u64, |b, &i| b | 1 << i)));
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] < n - d + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..d {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
