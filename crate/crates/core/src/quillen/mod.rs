//! Quillen models of rescaled algebras and the two structural Koszul tests.

pub mod ce;
pub mod homology;
pub mod model;

pub use ce::{ce_boundary, ce_homology, holonomy_basis, koszul_ce_test, CeTest};
pub use homology::{koszul_quillen_test, quillen_homology_dims, QuillenHomology, QuillenTest};
pub use model::{build_quillen_model, QuillenModel};
