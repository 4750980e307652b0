//! Normal forms and multiplication in `R(a, phi)`, gradings, and the x-y symmetry.

mod algebra;
mod element;
mod grading;
mod symmetry;

pub use algebra::{AlgebraLabel, GwaAlgebra};
pub use element::GwaElement;
pub use grading::{Grading, Homogeneity};
pub use symmetry::{mirror_algebra, xy_symmetry};

use thiserror::Error;

use crate::arith::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GwaError {
    #[error("q = {0} is not allowed: need q not in {{0, 1, -1}}")]
    InvalidQ(Rat),
    #[error("invalid algebra: {0}")]
    Invalid(String),
    #[error("invalid grading: {0}")]
    Grading(String),
}
