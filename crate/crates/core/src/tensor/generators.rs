use std::sync::Arc;

use super::word::{Word, MAX_LETTERS};
use crate::error::{Error, Result};

/// How brackets pick up signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// Koszul signs from the degrees: `[a,b] = ab - (-1)^{|a||b|} ba`.
    Graded,
    /// Ordinary Lie algebra graded by bracket length: `[a,b] = ab - ba`.
    Unsigned,
}

/// Named free generators with positive degrees and an auxiliary positive
/// weight (a second grading preserved by every map we build).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    names: Vec<String>,
    degrees: Vec<usize>,
    weights: Vec<usize>,
    convention: SignConvention,
}

impl GeneratorSet {
    pub fn new(
        names: Vec<String>,
        degrees: Vec<usize>,
        weights: Vec<usize>,
        convention: SignConvention,
    ) -> Result<Arc<Self>> {
        if names.len() != degrees.len() || names.len() != weights.len() {
            return Err(Error::InvalidInput("names, degrees and weights differ in length".into()));
        }
        if names.len() > MAX_LETTERS {
            return Err(Error::InvalidInput(format!("at most {MAX_LETTERS} generators are supported")));
        }
        if degrees.iter().chain(&weights).any(|&d| d == 0) {
            return Err(Error::InvalidInput("generator degrees and weights must be positive".into()));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(Error::InvalidInput("generator names must be distinct".into()));
        }
        Ok(Arc::new(GeneratorSet { names, degrees, weights, convention }))
    }

    /// `n` generators `x1..xn` of degree one, unsigned bracket.
    pub fn ungraded(n: usize) -> Arc<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), vec![1; n], vec![1; n], SignConvention::Unsigned)
            .expect("valid generator set")
    }

    /// Generators `x1..xn` with the given degrees and Koszul signs.
    pub fn graded(degrees: &[usize]) -> Result<Arc<Self>> {
        let n = degrees.len();
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), degrees.to_vec(), vec![1; n], SignConvention::Graded)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn weight(&self, i: usize) -> usize {
        self.weights[i]
    }

    pub fn convention(&self) -> SignConvention {
        self.convention
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn word_degree(&self, w: Word) -> usize {
        w.letters().map(|l| self.degrees[l]).sum()
    }

    pub fn word_weight(&self, w: Word) -> usize {
        w.letters().map(|l| self.weights[l]).sum()
    }

    /// Parity used for signs: always even in the unsigned convention.
    pub fn parity(&self, degree: usize) -> usize {
        match self.convention {
            SignConvention::Graded => degree % 2,
            SignConvention::Unsigned => 0,
        }
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(1)
    }
}
