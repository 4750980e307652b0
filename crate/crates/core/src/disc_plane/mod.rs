//! The quantum disc (`a = 1 - h`) and quantum plane (`a = h`), both with
//! `phi(h) = q h`, in the basis `y^m x^n`.

mod basis;
mod lemma;
mod prop51;
mod sigma_q;

pub use basis::{from_yx_basis, to_yx_basis, YxCoeffs};
pub use lemma::{lemma52_check, lemma52_residuals};
pub use prop51::{build_prop51, Prop51Data};
pub use sigma_q::{
    build_sigma_q, classify_sigma_q, read_sigma_q, sigma_q_dimension, SigmaQData, SigmaQViolation,
};

use thiserror::Error;

use crate::arith::Rat;
use crate::deriv::DerivError;
use crate::gwa::{AlgebraLabel, GwaAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiscPlaneError {
    #[error("expected the disc or plane algebra, got {0}")]
    NotDiscOrPlane(String),
    #[error("expected mu = q = {q}, got mu = {mu}")]
    MuMismatch { mu: Rat, q: Rat },
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error(transparent)]
    Deriv(#[from] DerivError),
}

fn require_disc_or_plane(alg: &GwaAlgebra) -> Result<(), DiscPlaneError> {
    match alg.label() {
        AlgebraLabel::Disc | AlgebraLabel::Plane => Ok(()),
        AlgebraLabel::Custom => Err(DiscPlaneError::NotDiscOrPlane(alg.to_string())),
    }
}
