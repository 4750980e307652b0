use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::DerivError;
use crate::arith::{rat_pow, AffineAuto, Poly, Rat};
use crate::gwa::GwaElement;

/// `sigma_mu`: the identity on `R`, `x -> mu^-1 x`, `y -> mu y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DegreeCountingAuto {
    mu: Rat,
}

impl DegreeCountingAuto {
    pub fn new(mu: Rat) -> Result<Self, DerivError> {
        if mu.is_zero() {
            return Err(DerivError::ZeroMu);
        }
        Ok(DegreeCountingAuto { mu })
    }

    pub fn mu(&self) -> &Rat {
        &self.mu
    }

    /// Scales the `X^k` component by `mu^(-k)`.
    pub fn apply(&self, e: &GwaElement) -> GwaElement {
        self.apply_pow(1, e)
    }

    pub fn apply_inverse(&self, e: &GwaElement) -> GwaElement {
        self.apply_pow(-1, e)
    }

    /// `sigma_mu^n`.
    pub fn apply_pow(&self, n: i64, e: &GwaElement) -> GwaElement {
        if self.mu.is_one() {
            return e.clone();
        }
        e.map_coeffs(|k, r| r.scale(&rat_pow(&self.mu, -k * n)))
    }
}

/// The `(phi^i)`-twisted derivation `alpha` of `Q[h]` with `alpha(h) = on_h`:
/// `alpha(fg) = alpha(f) phi^i(g) + f alpha(g)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistedPolyDerivation {
    pub twist_exp: i64,
    pub on_h: Poly,
}

impl TwistedPolyDerivation {
    pub fn new(twist_exp: i64, on_h: Poly) -> Self {
        TwistedPolyDerivation { twist_exp, on_h }
    }

    pub fn zero(twist_exp: i64) -> Self {
        Self::new(twist_exp, Poly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.on_h.is_zero()
    }

    pub fn apply(&self, phi: &AffineAuto, r: &Poly) -> Poly {
        if self.on_h.is_zero() {
            return Poly::zero();
        }
        let shifted_h = phi.image_of_h(self.twist_exp);
        // alpha(h^j) built up from alpha(h^(j-1)) phi^i(h) + h^(j-1) alpha(h)
        let mut h_prev = Poly::one();
        let mut alpha_prev = Poly::zero();
        let mut out = Poly::zero();
        for (j, c) in r.coeffs().iter().enumerate() {
            if j > 0 {
                alpha_prev = &(&alpha_prev * &shifted_h) + &(&h_prev * &self.on_h);
                h_prev = &h_prev * &Poly::h();
            }
            if !c.is_zero() {
                out += &alpha_prev.scale(c);
            }
        }
        out
    }

    /// `alpha(phi(h)) - mu phi(alpha(h))`; zero exactly when
    /// `alpha o phi = mu phi o alpha` on all of `Q[h]`.
    pub fn commutation_residual(&self, phi: &AffineAuto, mu: &Rat) -> Poly {
        &self.on_h.scale(phi.u()) - &phi.apply(1, &self.on_h).scale(mu)
    }
}
