//! Affine automorphisms `h -> u*h + v` of `Q[h]`.
//!
//! Every automorphism of a univariate polynomial ring over a field has this
//! shape, so nothing is lost by restricting to it.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rat::{int, rat_pow, serde_rat, Rat};
use super::ArithError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AutoRepr", into = "AutoRepr")]
pub struct AffineAuto {
    u: Rat,
    v: Rat,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutoRepr {
    #[serde(with = "serde_rat")]
    u: Rat,
    #[serde(with = "serde_rat")]
    v: Rat,
}

impl TryFrom<AutoRepr> for AffineAuto {
    type Error = ArithError;
    fn try_from(r: AutoRepr) -> Result<Self, ArithError> {
        AffineAuto::new(r.u, r.v)
    }
}

impl From<AffineAuto> for AutoRepr {
    fn from(a: AffineAuto) -> Self {
        AutoRepr { u: a.u, v: a.v }
    }
}

impl AffineAuto {
    pub fn new(u: Rat, v: Rat) -> Result<Self, ArithError> {
        if u.is_zero() {
            return Err(ArithError::NotInvertible);
        }
        Ok(AffineAuto { u, v })
    }

    pub fn identity() -> Self {
        AffineAuto {
            u: Rat::one(),
            v: Rat::zero(),
        }
    }

    /// `h -> q*h`.
    pub fn scaling(q: Rat) -> Result<Self, ArithError> {
        Self::new(q, Rat::zero())
    }

    pub fn u(&self) -> &Rat {
        &self.u
    }

    pub fn v(&self) -> &Rat {
        &self.v
    }

    pub fn is_identity(&self) -> bool {
        self.u.is_one() && self.v.is_zero()
    }

    /// The `k`-th power, `k` of either sign, in closed form:
    /// `u^k h + v (u^k - 1)/(u - 1)`, or `h + k v` when `u = 1`.
    pub fn pow(&self, k: i64) -> AffineAuto {
        let uk = rat_pow(&self.u, k);
        let shift = if self.u.is_one() {
            &self.v * int(k)
        } else {
            &self.v * (&uk - Rat::one()) / (&self.u - Rat::one())
        };
        AffineAuto { u: uk, v: shift }
    }

    pub fn inverse(&self) -> AffineAuto {
        self.pow(-1)
    }

    /// Image of `h` under the `k`-th power.
    pub fn image_of_h(&self, k: i64) -> Poly {
        let p = self.pow(k);
        Poly::from_coeffs(vec![p.v, p.u])
    }

    /// `p(phi^k(h))`.
    pub fn apply(&self, k: i64, p: &Poly) -> Poly {
        if k == 0 || p.degree().unwrap_or(0) == 0 {
            return p.clone();
        }
        p.compose(&self.image_of_h(k))
    }

    /// True when `phi^order` is the identity.
    pub fn has_order_dividing(&self, order: u32) -> bool {
        self.pow(order as i64).is_identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::rat;
    use proptest::prelude::*;

    #[test]
    fn closed_form_powers() {
        let phi = AffineAuto::scaling(int(2)).unwrap();
        assert_eq!(phi.apply(3, &Poly::h()), Poly::from_ints(&[0, 8]));
        assert_eq!(
            phi.apply(1, &Poly::from_ints(&[1, -1])),
            Poly::from_ints(&[1, -2])
        );
        assert_eq!(
            phi.apply(-1, &Poly::h()),
            Poly::from_coeffs(vec![int(0), rat(1, 2)])
        );
        let id = AffineAuto::identity();
        let p = Poly::from_ints(&[3, 1, 4]);
        assert_eq!(id.apply(-7, &p), p);
    }

    #[test]
    fn shifted_maps() {
        // h -> h + 1 has infinite order; h -> -h + 3 has order 2.
        let t = AffineAuto::new(int(1), int(1)).unwrap();
        assert_eq!(t.image_of_h(5), Poly::from_ints(&[5, 1]));
        assert_eq!(t.image_of_h(-2), Poly::from_ints(&[-2, 1]));
        let r = AffineAuto::new(int(-1), int(3)).unwrap();
        assert!(r.has_order_dividing(2));
        assert!(!r.has_order_dividing(1));
    }

    #[test]
    fn zero_scale_rejected() {
        assert_eq!(AffineAuto::scaling(int(0)), Err(ArithError::NotInvertible));
        let bad: Result<AffineAuto, _> = serde_json::from_str(r#"{"u":"0","v":"1"}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn json_form() {
        let a = AffineAuto::new(rat(1, 2), int(-1)).unwrap();
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"u":"1/2","v":"-1"}"#);
        assert_eq!(serde_json::from_str::<AffineAuto>(&s).unwrap(), a);
    }

    fn arb_auto() -> impl Strategy<Value = AffineAuto> {
        (prop_oneof![-3i64..=-1, 1i64..=3], 1i64..=3, -2i64..=2)
            .prop_map(|(n, d, v)| AffineAuto::new(rat(n, d), int(v)).unwrap())
    }

    proptest! {
        #[test]
        fn powers_compose(phi in arb_auto(), k in -4i64..=4, m in -4i64..=4,
                          c in prop::collection::vec(-4i64..=4, 0..5)) {
            let p = Poly::from_ints(&c);
            prop_assert_eq!(phi.apply(k, &phi.apply(m, &p)), phi.apply(k + m, &p));
            prop_assert_eq!(phi.apply(-k, &phi.apply(k, &p)), p);
        }
    }
}
