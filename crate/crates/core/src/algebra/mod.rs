//! Graded-commutative algebras presented as exterior-algebra quotients.

pub mod dual;
pub mod exterior;
pub mod families;
pub mod groebner;
pub mod holonomy;
pub mod presentation;
pub mod rescale;
pub mod verdict;

pub use dual::{koszul_series_test, quadratic_dual, QuadraticDual};
pub use exterior::Monomial;
pub use holonomy::{holonomy_lie, Holonomy};
pub use presentation::{AlgebraPresentation, ExteriorElement, Quotient};
pub use rescale::{rescale_algebra, RescaledAlgebra};
pub use verdict::Verdict;
