use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::basis::poly_in;
use super::{require_disc_or_plane, DiscPlaneError};
use crate::arith::rat::{serde_rat, serde_rat_vec};
use crate::arith::{rat_pow, Poly, Rat};
use crate::deriv::SkewDerivation;
use crate::gwa::{GwaAlgebra, GwaElement};

/// The two families of `sigma_mu`-derivations of the disc and plane with
/// `mu` arbitrary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case", deny_unknown_fields)]
pub enum Prop51Data {
    /// `d(x) = f(h) x`, `d(y) = -mu f(q^-1 h) y`; these are exactly the
    /// derivations killing `h`.
    ZeroOnH {
        f: Poly,
        #[serde(with = "serde_rat")]
        mu: Rat,
    },
    /// `d(x) = h^d b(y)`, `d(y) = h^d a(x)` with `mu = q^(1-d)`.
    MuPower {
        d: u32,
        #[serde(with = "serde_rat_vec")]
        a: Vec<Rat>,
        #[serde(with = "serde_rat_vec")]
        b: Vec<Rat>,
    },
}

impl Prop51Data {
    pub fn mu(&self, q: &Rat) -> Rat {
        match self {
            Prop51Data::ZeroOnH { mu, .. } => mu.clone(),
            Prop51Data::MuPower { d, .. } => rat_pow(q, 1 - i64::from(*d)),
        }
    }
}

pub fn build_prop51(data: &Prop51Data, alg: &GwaAlgebra) -> Result<SkewDerivation, DiscPlaneError> {
    require_disc_or_plane(alg)?;
    let q = alg.q();
    let mu = data.mu(q);
    let (on_x, on_y) = match data {
        Prop51Data::ZeroOnH { f, mu } => {
            let f_shift = alg.phi_pow(-1, f);
            (
                GwaElement::term(f.clone(), 1),
                GwaElement::term(f_shift.scale(&-mu), -1),
            )
        }
        Prop51Data::MuPower { d, a, b } => {
            let hd = Poly::monomial(num_traits::One::one(), *d as usize);
            (
                poly_in(alg, b, &GwaElement::y()).left_mul_poly(&hd),
                poly_in(alg, a, &GwaElement::x()).left_mul_poly(&hd),
            )
        }
    };
    if mu.is_zero() {
        return Err(DiscPlaneError::InvalidData("mu must be nonzero".into()));
    }
    Ok(SkewDerivation::from_xy(alg, mu, on_x, on_y)?)
}
