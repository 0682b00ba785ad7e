//! Exact scalars, truncated power series and sparse linear algebra over ℚ.

pub mod echelon;
pub mod matrix;
pub mod rational;
pub mod series;

pub use echelon::{Column, Echelon, IntRow, TrackedEchelon};
pub use matrix::SparseMatrix;
pub use rational::Rational;
pub use series::PowerSeries;
