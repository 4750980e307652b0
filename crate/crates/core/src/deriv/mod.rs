//! Skew derivations of `R(a, phi)` twisted by the degree-counting
//! automorphism `sigma_mu` (identity on `R`).

mod analysis;
mod skew;
mod theorem;
mod twisted;

pub use analysis::{
    classify_positive, degree_profile, inner_derivation, inner_witness, q_check, transport,
    NotOfThisForm, QCheckResult,
};
pub use skew::{check_relations, relation_residuals, Relation, RelationViolation, SkewDerivation};
pub use theorem::{
    elementary, finite_order_family, from_theorem_data, Elementary, FiniteOrderData, TheoremData,
};
pub use twisted::{DegreeCountingAuto, TwistedPolyDerivation};

use thiserror::Error;

use crate::arith::{ArithError, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivError {
    #[error("mu must be nonzero")]
    ZeroMu,
    #[error("derivation has not been verified")]
    Unverified,
    #[error("derivation was verified against a different algebra")]
    AlgebraMismatch,
    #[error("alpha_{weight} o phi != mu phi o alpha_{weight}: residual {residual}")]
    Commutation { weight: i64, residual: Poly },
    #[error("a = {a} does not divide alpha_0(a) = {alpha0_a}")]
    NotDivisible { a: Poly, alpha0_a: Poly },
    #[error("expected twist exponent {expected}, found {found}")]
    TwistMismatch { expected: i64, found: i64 },
    #[error("phi^{order} is not the identity")]
    NotFiniteOrder { order: u32 },
    #[error("constructed map fails a relation: {0}")]
    Construction(RelationViolation),
    #[error("invalid data: {0}")]
    InvalidData(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
