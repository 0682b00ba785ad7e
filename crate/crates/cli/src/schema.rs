//! Input problem descriptions. Generator, vertex and letter indices are
//! 1-based in JSON.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rescale_core::algebra::AlgebraPresentation;
use rescale_core::exact::{rational, PowerSeries, Rational};
use rescale_core::geometry::{ArrangementSpec, WeightedLinkingGraph};
use rescale_core::malcev::{GroupWord, MalcevElement};
use rescale_core::tensor::{left_normed, GeneratorSet, LieElement, TensorElement, Word};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Deserialize, Debug, Default, Clone)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub command: Option<String>,
    pub description: Option<String>,
    pub truncate: Option<usize>,
    pub k: Option<usize>,
    pub mode: Option<String>,
    pub p_max: Option<usize>,
    pub weight_max: Option<usize>,
    pub order: Option<usize>,
    pub algebra: Option<AlgebraInput>,
    pub series: Option<Vec<RationalInput>>,
    pub dims: Option<Vec<u64>>,
    pub m: Option<usize>,
    pub generators: Option<usize>,
    pub x: Option<Vec<BracketTerm>>,
    pub y: Option<Vec<BracketTerm>>,
    pub word: Option<String>,
    pub longitudes: Option<Vec<String>>,
    pub link: Option<LinkInput>,
    pub arrangement: Option<ArrangementInput>,
}

/// Exact rational: an integer, a string `"p/q"`, or `{"n": p, "d": q}`.
#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
pub enum RationalInput {
    Number(serde_json::Number),
    Text(String),
    Pair { n: serde_json::Number, d: serde_json::Number },
}

impl RationalInput {
    pub fn to_rational(&self) -> Result<Rational, CliError> {
        let int = |x: &serde_json::Number| {
            BigInt::from_str(&x.to_string()).map_err(|_| CliError::schema(format!("{x} is not an integer")))
        };
        match self {
            RationalInput::Number(x) => Ok(Rational::from_integer(int(x)?)),
            RationalInput::Text(s) => rational::parse_rational(s).map_err(|e| CliError::schema(e.to_string())),
            RationalInput::Pair { n, d } => {
                let d = int(d)?;
                if d.is_zero() {
                    return Err(CliError::schema("zero denominator"));
                }
                Ok(Rational::new(int(n)?, d))
            }
        }
    }
}

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
pub enum AlgebraInput {
    Family(FamilyInput),
    Explicit(ExplicitAlgebra),
}

#[derive(Deserialize, Debug, Clone)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FamilyInput {
    Wedge { n: usize },
    Torus { n: usize },
    Surface { genus: usize },
    Generic { n: usize, l: usize },
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct ExplicitAlgebra {
    pub generators: usize,
    #[serde(default)]
    pub relations: Vec<Vec<TermInput>>,
    pub top_degree: Option<usize>,
}

#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct TermInput {
    pub monomial: Vec<usize>,
    pub coefficient: RationalInput,
}

impl AlgebraInput {
    pub fn build(&self) -> Result<AlgebraPresentation, CliError> {
        let out = match self {
            AlgebraInput::Family(FamilyInput::Wedge { n }) => AlgebraPresentation::wedge(*n),
            AlgebraInput::Family(FamilyInput::Torus { n }) => AlgebraPresentation::torus(*n),
            AlgebraInput::Family(FamilyInput::Surface { genus }) => AlgebraPresentation::surface(*genus),
            AlgebraInput::Family(FamilyInput::Generic { n, l }) => {
                if !(n > l && *l >= 1) {
                    return Err(CliError::schema("generic arrangement needs n > l >= 1"));
                }
                AlgebraPresentation::generic_arrangement(*n, *l)
            }
            AlgebraInput::Explicit(e) => {
                let mut rels = Vec::with_capacity(e.relations.len());
                for r in &e.relations {
                    let mut terms = Vec::with_capacity(r.len());
                    for t in r {
                        terms.push((one_based(&t.monomial, e.generators)?, t.coefficient.to_rational()?));
                    }
                    rels.push(terms);
                }
                AlgebraPresentation::new(e.generators, rels, e.top_degree)
            }
        };
        out.map_err(CliError::from)
    }
}

fn one_based(idx: &[usize], n: usize) -> Result<Vec<usize>, CliError> {
    idx.iter()
        .map(|&i| {
            if i == 0 || i > n {
                Err(CliError::schema(format!("index {i} outside 1..={n}")))
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

/// Left-normed bracket of generators, e.g. `{"bracket": [1, 2]}` for
/// `[x1, x2]`, with an optional coefficient.
#[derive(Deserialize, Debug, Clone)]
#[serde(deny_unknown_fields)]
pub struct BracketTerm {
    pub bracket: Vec<usize>,
    pub coefficient: Option<RationalInput>,
}

/// Sum of left-normed brackets over `n` ungraded generators.
pub fn malcev_element(terms: &[BracketTerm], n: usize, r: usize) -> Result<MalcevElement, CliError> {
    let gens = GeneratorSet::ungraded(n);
    let mut acc = TensorElement::zero(&gens, r);
    for t in terms {
        let letters = one_based(&t.bracket, n)?;
        if letters.is_empty() {
            return Err(CliError::schema("empty bracket"));
        }
        if letters.len() > r {
            continue;
        }
        let w = Word::from_letters(&letters);
        let c = match &t.coefficient {
            Some(c) => c.to_rational()?,
            None => rational::int(1),
        };
        acc = acc.add(&left_normed(&gens, r, w)?.scale(&c));
    }
    Ok(MalcevElement::new(LieElement::from_tensor_unchecked(acc)))
}

#[derive(Deserialize, Debug, Clone)]
#[serde(untagged)]
pub enum LinkInput {
    Weights { weights: Vec<Vec<i64>> },
    Edges { n: usize, edges: Vec<(usize, usize, i64)> },
    Family { family: LinkFamily, n: usize },
}

#[derive(Deserialize, Debug, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
pub enum LinkFamily {
    Hopf,
    Unlink,
}

impl LinkInput {
    pub fn build(&self) -> Result<WeightedLinkingGraph, CliError> {
        let g = match self {
            LinkInput::Weights { weights } => WeightedLinkingGraph::new(weights.clone()),
            LinkInput::Edges { n, edges } => {
                let mut e = Vec::with_capacity(edges.len());
                for &(i, j, l) in edges {
                    let ij = one_based(&[i, j], *n)?;
                    e.push((ij[0], ij[1], l));
                }
                WeightedLinkingGraph::from_edges(*n, &e)
            }
            LinkInput::Family { family: LinkFamily::Hopf, n } => WeightedLinkingGraph::hopf(*n),
            LinkInput::Family { family: LinkFamily::Unlink, n } => WeightedLinkingGraph::unlink(*n),
        };
        g.map_err(CliError::from)
    }
}

#[derive(Deserialize, Debug, Clone)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ArrangementInput {
    Supersolvable { exponents: Vec<u64> },
    Generic { n: usize, l: usize },
    Boolean { n: usize },
}

impl ArrangementInput {
    pub fn build(&self) -> Result<ArrangementSpec, CliError> {
        let spec = match self {
            ArrangementInput::Supersolvable { exponents } => ArrangementSpec::Supersolvable { exponents: exponents.clone() },
            ArrangementInput::Generic { n, l } => ArrangementSpec::Generic { n: *n, l: *l },
            ArrangementInput::Boolean { n } => ArrangementSpec::Boolean { n: *n },
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn series(coeffs: &[RationalInput], order: usize) -> Result<PowerSeries, CliError> {
    let cs = coeffs.iter().map(RationalInput::to_rational).collect::<Result<Vec<_>, _>>()?;
    Ok(PowerSeries::from_coeffs(cs, order))
}

pub fn words(ls: &[String]) -> Result<Vec<GroupWord>, CliError> {
    ls.iter().map(|l| GroupWord::parse(l, ls.len()).map_err(CliError::from)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> Result<ProblemSpec, serde_json::Error> {
        serde_json::from_str(s)
    }

    #[test]
    fn rational_forms() {
        let parse = |s: &str| serde_json::from_str::<RationalInput>(s).unwrap().to_rational();
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(parse("3").unwrap(), Rational::from_integer(BigInt::from(3)));
        assert_eq!(parse("\"2/4\"").unwrap(), half);
        assert_eq!(parse(r#"{"n": 1, "d": 2}"#).unwrap(), half);
        assert!(parse(r#"{"n": 1, "d": 0}"#).is_err());
        assert!(parse("1.5").is_err());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        assert!(spec(r#"{"command": "hilbert", "extra": 1}"#).is_err());
        assert!(spec(r#"{"algebra": {"family": "torus", "n": 2, "g": 1}}"#).is_err());
    }

    #[test]
    fn families_build() {
        let p = spec(r#"{"algebra": {"family": "surface", "genus": 2}}"#).unwrap();
        assert_eq!(p.algebra.unwrap().build().unwrap().n(), 4);
        let p = spec(r#"{"algebra": {"generators": 2, "relations": [[{"monomial": [1, 2], "coefficient": 1}]]}}"#).unwrap();
        assert_eq!(p.algebra.unwrap().build().unwrap().hilbert(2).coeff(2), Rational::from_integer(BigInt::from(0)));
    }

    #[test]
    fn link_edges_are_one_based() {
        let p = spec(r#"{"link": {"n": 2, "edges": [[1, 2, 3]]}}"#).unwrap();
        assert_eq!(p.link.unwrap().build().unwrap().weight(0, 1), 3);
        let p = spec(r#"{"link": {"n": 2, "edges": [[0, 1, 3]]}}"#).unwrap();
        assert!(matches!(p.link.unwrap().build(), Err(CliError::Schema(_))));
    }

    #[test]
    fn generic_arrangement_needs_n_above_l() {
        let p = spec(r#"{"arrangement": {"kind": "generic", "n": 2, "l": 2}}"#).unwrap();
        assert!(matches!(p.arrangement.unwrap().build(), Err(CliError::Schema(_))));
    }
}
