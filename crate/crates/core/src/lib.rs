//! Exact computational algebra for rescaled rational homotopy: truncated
//! series, graded Lie algebras in the tensor algebra, presented
//! graded-commutative algebras, Quillen models, lower central series,
//! Malcev calculus and link/arrangement front-ends.

pub mod algebra;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod lcs;
pub mod malcev;
pub mod par;
pub mod quillen;
pub mod tensor;

pub use error::{Error, Result};
