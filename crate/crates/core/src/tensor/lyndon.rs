use super::dims::GradedLieDims;
use super::generators::{GeneratorSet, SignConvention};
use crate::error::{Error, Result};

/// Lyndon words of length `<= max_len` over `n` letters in lexicographic
/// order (Duval's successor algorithm).
pub fn lyndon_words(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 || max_len == 0 {
        return out;
    }
    let mut w = vec![0usize];
    loop {
        out.push(w.clone());
        let m = w.len();
        while w.len() < max_len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&(n - 1)) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    out
}

/// Free Lie dimensions by counting Lyndon words of each length. Needs all
/// generators in one degree, and that degree even unless the bracket is
/// unsigned.
pub fn free_lie_dims_lyndon(gens: &GeneratorSet, n: usize) -> Result<GradedLieDims> {
    if gens.is_empty() {
        return Ok(GradedLieDims::new(n));
    }
    let d0 = gens.degree(0);
    if gens.degrees().iter().any(|&d| d != d0) {
        return Err(Error::UnsupportedSignedCase(format!("mixed degrees {:?}", gens.degrees())));
    }
    if gens.convention() == SignConvention::Graded && d0 % 2 == 1 {
        return Err(Error::UnsupportedSignedCase(format!("odd degree {d0} with Koszul signs")));
    }
    let mut dims = GradedLieDims::new(n);
    let mut counts = vec![0u64; n / d0 + 1];
    for w in lyndon_words(gens.len(), n / d0) {
        counts[w.len()] += 1;
    }
    for (len, &c) in counts.iter().enumerate().skip(1) {
        dims.set(len * d0, c);
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_letters() {
        let g = GeneratorSet::ungraded(2);
        assert_eq!(free_lie_dims_lyndon(&g, 5).unwrap().to_vec(), vec![2, 1, 2, 3, 6]);
    }

    #[test]
    fn one_letter() {
        let g = GeneratorSet::ungraded(1);
        assert_eq!(free_lie_dims_lyndon(&g, 3).unwrap().to_vec(), vec![1, 0, 0]);
    }

    #[test]
    fn three_letters() {
        let g = GeneratorSet::ungraded(3);
        assert_eq!(free_lie_dims_lyndon(&g, 3).unwrap().to_vec(), vec![3, 3, 8]);
    }

    #[test]
    fn words_are_lyndon() {
        let ws = lyndon_words(2, 4);
        let shown: Vec<String> = ws.iter().map(|w| w.iter().map(|c| c.to_string()).collect()).collect();
        assert_eq!(shown, ["0", "0001", "001", "0011", "01", "011", "0111", "1"]);
    }

    #[test]
    fn even_degree_graded_is_supported() {
        let g = GeneratorSet::graded(&[2, 2]).unwrap();
        assert_eq!(free_lie_dims_lyndon(&g, 6).unwrap().to_vec(), vec![0, 2, 0, 1, 0, 2]);
    }

    #[test]
    fn odd_or_mixed_degrees_rejected() {
        let odd = GeneratorSet::graded(&[3, 3]).unwrap();
        assert!(matches!(free_lie_dims_lyndon(&odd, 6), Err(Error::UnsupportedSignedCase(_))));
        let mixed = GeneratorSet::graded(&[2, 4]).unwrap();
        assert!(matches!(free_lie_dims_lyndon(&mixed, 6), Err(Error::UnsupportedSignedCase(_))));
    }
}
