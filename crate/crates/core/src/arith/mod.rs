//! Exact scalar and polynomial arithmetic over `Q`.

mod auto;
mod gcd;
mod poly;
pub mod rat;

pub use auto::AffineAuto;
pub use gcd::{extended_gcd, BezoutWitness};
pub use poly::Poly;
pub use rat::{int, is_root_of_unity, parse_rat, rat, rat_pow, Rat};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("extended gcd of two zero polynomials")]
    BothZero,
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("affine map h -> u*h + v needs u != 0")]
    NotInvertible,
    #[error("malformed rational {0:?}, expected \"num\" or \"num/den\"")]
    ParseRat(String),
}
