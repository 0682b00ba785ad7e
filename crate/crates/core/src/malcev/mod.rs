//! Truncated Campbell–Hausdorff calculus, the Campbell–Hausdorff
//! representation of free groups, link derivations, exponential groups of
//! nilpotent Lie algebras and the loop-sphere Hom bracket.

pub mod coalgebra;
pub mod nilpotent;
pub mod representation;
pub mod series;
pub mod word;

pub use coalgebra::{
    free_lie_samples, hom_lie_bracket, lemma_constants, lemma_map, rebracket, verify_lemma_exp3, HomMap,
    LemmaCheck, LoopCoalgebra, TargetLie,
};
pub use nilpotent::{exp_group, exp_group_inverse, GroupProduct, NilpotentLie};
pub use representation::{
    ch_invariant_raw, ch_representation, link_derivation, linking_from_exponents, ChInvariant, LinkDerivation,
};
pub use series::{bch, exp_series, log_series, MalcevElement};
pub use word::GroupWord;
