//! Orthogonal systems of skew derivations: certificates, their verification
//! and construction from coprimality, and the disc-algebra pairs.

mod certificate;
mod construct;
mod pairs;
mod qnum;

pub use certificate::{
    verify_certificate, verify_three_set, CertificateEntry, OrthoCertificate, OrthoFailure,
    OrthoReport, Pair, ThreeSetCertificate, ThreeSetEntry, Triple,
};
pub use construct::{build_certificate, certificate_from_ideal, CertificateBuild};
pub use pairs::{
    disc_pair, prop42_hypotheses, prop42_pair, HypothesisCheck, Prop42Pair, Prop42Report,
};
pub use qnum::{kl_conditions, q_int, qkl, PairConditionReport};

use thiserror::Error;

use crate::arith::{ArithError, Poly, Rat};
use crate::deriv::DerivError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrthoError {
    #[error(transparent)]
    Deriv(#[from] DerivError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("index {index}: the landed polynomials {left} and {right} have gcd {gcd}")]
    NotCoprime {
        index: usize,
        gcd: Poly,
        left: Poly,
        right: Poly,
    },
    #[error("derivation {k} does not vanish on the generator chosen for derivation {i}")]
    CrossTerm { i: usize, k: usize },
    #[error("index {index}: {value} is not a single term r(h) X^k")]
    NotMonomial { index: usize, value: String },
    #[error("index {index}: the values cannot be brought to a common degree")]
    Misaligned { index: usize },
    #[error("expected {expected} generators, got {found}")]
    GeneratorCount { expected: usize, found: usize },
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("1 - [{k}]_q [{l}]_q vanishes at q = {q}")]
    ZeroDenominator { k: i64, l: i64, q: Rat },
    #[error("precondition violated: {0}")]
    Precondition(String),
}
