//! Skew derivations of generalized Weyl algebras over Q[h], with exact rational arithmetic.

pub mod arith;
pub mod cli;
pub mod deriv;
pub mod disc_plane;
pub mod gwa;
pub mod linsolve;
pub mod ortho;
