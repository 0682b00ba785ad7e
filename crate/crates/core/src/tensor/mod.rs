//! Graded Lie calculus inside the truncated free tensor algebra.

pub mod basis;
pub mod derivation;
pub mod dims;
pub mod element;
pub mod generators;
pub mod lyndon;
pub mod rows;
pub mod span;
pub mod word;

pub use basis::{commutator, quotient_basis, LieBasis, RatVec};
pub use derivation::{extend_derivation, Derivation};
pub use dims::{rescale_lie_dims, GradedLieDims};
pub use element::{is_lie_element, left_normed, LieElement, TensorElement};
pub use generators::{GeneratorSet, SignConvention};
pub use lyndon::{free_lie_dims_lyndon, lyndon_words};
pub use span::{lie_span_dims, quotient_dims, quotient_spans, BlockKey, Grading, LieSpan};
pub use word::Word;
