use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::twisted::DegreeCountingAuto;
use super::DerivError;
use crate::arith::rat::serde_rat;
use crate::arith::{rat_pow, Poly, Rat};
use crate::gwa::{GwaAlgebra, GwaElement};

/// A `sigma_mu`-skew derivation, given by its values on `h`, `x`, `y`.
///
/// Values are only meaningful once [`check_relations`] has confirmed that
/// they respect the defining relations; the algebra used for that check is
/// remembered and evaluation against any other algebra is refused.
#[derive(Clone)]
pub struct SkewDerivation {
    auto: DegreeCountingAuto,
    on_h: GwaElement,
    on_x: GwaElement,
    on_y: GwaElement,
    verified_for: Option<GwaAlgebra>,
}

/// Which defining relation a candidate failed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "xy - phi(a)")]
    XyPhiA,
    #[serde(rename = "yx - a")]
    YxA,
    #[serde(rename = "xh - phi(h)x")]
    XhPhiHx,
    #[serde(rename = "yh - phi^-1(h)y")]
    YhPhiInvHy,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::XyPhiA => "xy - phi(a)",
            Relation::YxA => "yx - a",
            Relation::XhPhiHx => "xh - phi(h)x",
            Relation::YhPhiInvHy => "yh - phi^-1(h)y",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationViolation {
    pub relation: Relation,
    pub residual: GwaElement,
}

impl fmt::Display for RelationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d({}) = {} != 0", self.relation, self.residual)
    }
}

impl std::error::Error for RelationViolation {}

impl SkewDerivation {
    /// An unverified candidate.
    pub fn new(
        mu: Rat,
        on_h: GwaElement,
        on_x: GwaElement,
        on_y: GwaElement,
    ) -> Result<Self, DerivError> {
        Ok(SkewDerivation {
            auto: DegreeCountingAuto::new(mu)?,
            on_h,
            on_x,
            on_y,
            verified_for: None,
        })
    }

    /// Builds the derivation with the given values on `x` and `y` when `a`
    /// is linear, reading `d(h)` off `d(a) = d(y) sigma(x) + y d(x)`.
    /// The result is verified.
    pub fn from_xy(
        alg: &GwaAlgebra,
        mu: Rat,
        on_x: GwaElement,
        on_y: GwaElement,
    ) -> Result<Self, DerivError> {
        let cand = Self::candidate_from_xy(alg, mu, on_x, on_y)?;
        check_relations(&cand, alg).map_err(DerivError::Construction)
    }

    /// As [`SkewDerivation::from_xy`], without the check. Linear in
    /// `(on_x, on_y)`.
    pub fn candidate_from_xy(
        alg: &GwaAlgebra,
        mu: Rat,
        on_x: GwaElement,
        on_y: GwaElement,
    ) -> Result<Self, DerivError> {
        let slope = match alg.a().degree() {
            Some(1) => alg.a().coeff(1),
            _ => {
                return Err(DerivError::InvalidData(format!(
                    "a = {} is not linear",
                    alg.a()
                )))
            }
        };
        let auto = DegreeCountingAuto::new(mu)?;
        let da = &alg.mul(&on_y, &auto.apply(&GwaElement::x())) + &alg.mul(&GwaElement::y(), &on_x);
        Ok(SkewDerivation {
            auto,
            on_h: da.scale(&slope.recip()),
            on_x,
            on_y,
            verified_for: None,
        })
    }

    pub fn zero(mu: Rat) -> Result<Self, DerivError> {
        Self::new(
            mu,
            GwaElement::zero(),
            GwaElement::zero(),
            GwaElement::zero(),
        )
    }

    pub fn mu(&self) -> &Rat {
        self.auto.mu()
    }

    pub fn sigma(&self) -> &DegreeCountingAuto {
        &self.auto
    }

    pub fn on_h(&self) -> &GwaElement {
        &self.on_h
    }

    pub fn on_x(&self) -> &GwaElement {
        &self.on_x
    }

    pub fn on_y(&self) -> &GwaElement {
        &self.on_y
    }

    /// Values on `(h, x, y)`.
    pub fn values(&self) -> [&GwaElement; 3] {
        [&self.on_h, &self.on_x, &self.on_y]
    }

    pub fn is_zero(&self) -> bool {
        self.values().iter().all(|v| v.is_zero())
    }

    pub fn verified_for(&self) -> Option<&GwaAlgebra> {
        self.verified_for.as_ref()
    }

    pub fn is_verified(&self) -> bool {
        self.verified_for.is_some()
    }

    /// Forgets any earlier verification.
    pub fn unverified(&self) -> Self {
        SkewDerivation {
            verified_for: None,
            ..self.clone()
        }
    }

    /// Checks the candidate against `alg`, returning a verified copy.
    pub fn verify(&self, alg: &GwaAlgebra) -> Result<Self, RelationViolation> {
        check_relations(self, alg)
    }

    fn require(&self, alg: &GwaAlgebra) -> Result<(), DerivError> {
        match &self.verified_for {
            None => Err(DerivError::Unverified),
            Some(a) if a != alg => Err(DerivError::AlgebraMismatch),
            Some(_) => Ok(()),
        }
    }

    pub fn evaluate(&self, alg: &GwaAlgebra, e: &GwaElement) -> Result<GwaElement, DerivError> {
        self.require(alg)?;
        Ok(Evaluator::new(self, alg).element(e))
    }

    /// `d(a) sigma(b) + a d(b)`, the right-hand side of the twisted Leibniz rule.
    pub fn leibniz(
        &self,
        alg: &GwaAlgebra,
        a: &GwaElement,
        b: &GwaElement,
    ) -> Result<GwaElement, DerivError> {
        let da = self.evaluate(alg, a)?;
        let db = self.evaluate(alg, b)?;
        Ok(&alg.mul(&da, &self.auto.apply(b)) + &alg.mul(a, &db))
    }

    /// Pointwise sum on generators; the result is unverified.
    pub fn try_add(&self, other: &SkewDerivation) -> Result<SkewDerivation, DerivError> {
        if self.mu() != other.mu() {
            return Err(DerivError::InvalidData(format!(
                "cannot add derivations with mu = {} and mu = {}",
                self.mu(),
                other.mu()
            )));
        }
        SkewDerivation::new(
            self.mu().clone(),
            &self.on_h + &other.on_h,
            &self.on_x + &other.on_x,
            &self.on_y + &other.on_y,
        )
    }

    pub fn scale(&self, c: &Rat) -> SkewDerivation {
        SkewDerivation {
            auto: self.auto.clone(),
            on_h: self.on_h.scale(c),
            on_x: self.on_x.scale(c),
            on_y: self.on_y.scale(c),
            verified_for: None,
        }
    }
}

/// Equality of the underlying maps; verification state is ignored.
impl PartialEq for SkewDerivation {
    fn eq(&self, other: &Self) -> bool {
        self.auto == other.auto
            && self.on_h == other.on_h
            && self.on_x == other.on_x
            && self.on_y == other.on_y
    }
}

impl Eq for SkewDerivation {}

impl fmt::Debug for SkewDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewDerivation")
            .field("mu", &self.mu().to_string())
            .field("on_h", &self.on_h)
            .field("on_x", &self.on_x)
            .field("on_y", &self.on_y)
            .field("verified", &self.is_verified())
            .finish()
    }
}

impl fmt::Display for SkewDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mu = {}", self.mu())?;
        writeln!(f, "d(h) = {}", self.on_h)?;
        writeln!(f, "d(x) = {}", self.on_x)?;
        write!(f, "d(y) = {}", self.on_y)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DerivRepr {
    #[serde(with = "serde_rat")]
    mu: Rat,
    on_h: GwaElement,
    on_x: GwaElement,
    on_y: GwaElement,
    #[serde(default)]
    verified: bool,
}

impl Serialize for SkewDerivation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DerivRepr {
            mu: self.mu().clone(),
            on_h: self.on_h.clone(),
            on_x: self.on_x.clone(),
            on_y: self.on_y.clone(),
            verified: self.is_verified(),
        }
        .serialize(s)
    }
}

/// The `verified` flag is informational only: a parsed derivation always
/// starts unverified and must go through [`check_relations`] again.
impl<'de> Deserialize<'de> for SkewDerivation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = DerivRepr::deserialize(d)?;
        SkewDerivation::new(r.mu, r.on_h, r.on_x, r.on_y).map_err(serde::de::Error::custom)
    }
}

/// Extends the generator values by the twisted Leibniz rule, caching powers.
pub(crate) struct Evaluator<'a> {
    d: &'a SkewDerivation,
    alg: &'a GwaAlgebra,
    /// `d(h^j)`
    h_pows: Vec<GwaElement>,
    /// `d(x^k)`
    x_pows: Vec<GwaElement>,
    /// `d(y^k)`
    y_pows: Vec<GwaElement>,
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(d: &'a SkewDerivation, alg: &'a GwaAlgebra) -> Self {
        Evaluator {
            d,
            alg,
            h_pows: vec![GwaElement::zero()],
            x_pows: vec![GwaElement::zero()],
            y_pows: vec![GwaElement::zero()],
        }
    }

    fn d_h_pow(&mut self, j: usize) -> &GwaElement {
        let h = GwaElement::h();
        while self.h_pows.len() <= j {
            let i = self.h_pows.len();
            let prev = &self.h_pows[i - 1];
            let next = &self.alg.mul(prev, &h)
                + &self
                    .d
                    .on_h
                    .left_mul_poly(&Poly::monomial(Rat::one(), i - 1));
            self.h_pows.push(next);
        }
        &self.h_pows[j]
    }

    fn d_mono(&mut self, k: i64) -> &GwaElement {
        let (cache, gen_val, step, sig) = if k >= 0 {
            (&mut self.x_pows, &self.d.on_x, 1i64, self.d.mu().recip())
        } else {
            (&mut self.y_pows, &self.d.on_y, -1i64, self.d.mu().clone())
        };
        let n = k.unsigned_abs() as usize;
        while cache.len() <= n {
            let i = cache.len() as i64;
            // d(X^i) = d(X^(i-1)) sigma(X) + X^(i-1) d(X)
            let prev = &cache[cache.len() - 1];
            let gen = GwaElement::term(Poly::constant(sig.clone()), step);
            let next = &self.alg.mul(prev, &gen)
                + &self
                    .alg
                    .mul(&GwaElement::term(Poly::one(), (i - 1) * step), gen_val);
            cache.push(next);
        }
        &cache[n]
    }

    pub(crate) fn poly(&mut self, r: &Poly) -> GwaElement {
        let mut out = GwaElement::zero();
        for (j, c) in r.coeffs().iter().enumerate().skip(1) {
            if !c.is_zero() {
                out = &out + &self.d_h_pow(j).scale(c);
            }
        }
        out
    }

    /// `d(r X^k) = d(r) sigma(X^k) + r d(X^k)`.
    fn term(&mut self, k: i64, r: &Poly) -> GwaElement {
        let dr = self.poly(r);
        let twisted = if dr.is_zero() {
            GwaElement::zero()
        } else {
            let s = rat_pow(self.d.mu(), -k);
            self.alg.mul(&dr, &GwaElement::term(Poly::constant(s), k))
        };
        let dmono = self.d_mono(k).left_mul_poly(r);
        &twisted + &dmono
    }

    pub(crate) fn element(&mut self, e: &GwaElement) -> GwaElement {
        let mut out = GwaElement::zero();
        for (k, r) in e.terms() {
            out = &out + &self.term(k, r);
        }
        out
    }
}

/// The four relation residuals `d(xy - phi(a))`, `d(yx - a)`,
/// `d(xh - phi(h)x)`, `d(yh - phi^-1(h)y)`, computed at the word level.
///
/// The `r`-relations are taken at `r = h` only: both sides are twisted
/// derivations in `r` and `h` generates `R`.
pub fn relation_residuals(cand: &SkewDerivation, alg: &GwaAlgebra) -> [(Relation, GwaElement); 4] {
    let mut ev = Evaluator::new(cand, alg);
    let mu = cand.mu();
    let (x, y, h) = (GwaElement::x(), GwaElement::y(), GwaElement::h());
    let sx = x.scale(&mu.recip());
    let sy = y.scale(mu);
    let (dh, dx, dy) = (&cand.on_h, &cand.on_x, &cand.on_y);
    let u = alg.phi().u().clone();
    [
        (
            Relation::XyPhiA,
            &(&alg.mul(dx, &sy) + &alg.mul(&x, dy)) - &ev.poly(&alg.shifted_a(1)),
        ),
        (
            Relation::YxA,
            &(&alg.mul(dy, &sx) + &alg.mul(&y, dx)) - &ev.poly(alg.a()),
        ),
        (
            Relation::XhPhiHx,
            &(&alg.mul(dx, &h) + &alg.mul(&x, dh))
                - &(&alg.mul(dh, &sx).scale(&u) + &dx.left_mul_poly(&alg.phi().image_of_h(1))),
        ),
        (
            Relation::YhPhiInvHy,
            &(&alg.mul(dy, &h) + &alg.mul(&y, dh))
                - &(&alg.mul(dh, &sy).scale(&u.recip())
                    + &dy.left_mul_poly(&alg.phi().image_of_h(-1))),
        ),
    ]
}

/// Verifies a candidate, reporting the first nonzero residual in the order
/// of [`relation_residuals`].
pub fn check_relations(
    cand: &SkewDerivation,
    alg: &GwaAlgebra,
) -> Result<SkewDerivation, RelationViolation> {
    for (relation, residual) in relation_residuals(cand, alg) {
        if !residual.is_zero() {
            return Err(RelationViolation { relation, residual });
        }
    }
    Ok(SkewDerivation {
        verified_for: Some(alg.clone()),
        ..cand.clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn disc2() -> GwaAlgebra {
        GwaAlgebra::disc(int(2)).unwrap()
    }

    fn zero_on_h(f: Poly, mu: Rat, alg: &GwaAlgebra) -> SkewDerivation {
        let dy = GwaElement::term(alg.phi_pow(-1, &f).scale(&-mu.clone()), -1);
        SkewDerivation::new(mu, GwaElement::zero(), GwaElement::term(f, 1), dy).unwrap()
    }

    #[test]
    fn scaling_family_verifies() {
        let a = disc2();
        let d = zero_on_h(Poly::h(), int(2), &a);
        assert_eq!(d.on_y(), &GwaElement::term(Poly::from_ints(&[0, -1]), -1));
        let d = check_relations(&d, &a).unwrap();
        assert!(d.is_verified());
    }

    #[test]
    fn wrong_sign_rejected() {
        let a = disc2();
        let d = SkewDerivation::new(
            int(2),
            GwaElement::zero(),
            GwaElement::term(Poly::h(), 1),
            GwaElement::term(Poly::h(), -1),
        )
        .unwrap();
        let res = relation_residuals(&d, &a);
        // d(yx) = (h/2) yx + y h x = h a, while d(a) = 0
        let yx = &res[1];
        assert_eq!(yx.0, Relation::YxA);
        assert_eq!(yx.1, GwaElement::from_poly(Poly::from_ints(&[0, 1, -1])));
        assert!(check_relations(&d, &a).is_err());
    }

    #[test]
    fn zero_map_verifies() {
        let a = disc2();
        let z = SkewDerivation::zero(rat(3, 7)).unwrap();
        let z = check_relations(&z, &a).unwrap();
        let e = a.mul(&GwaElement::x(), &GwaElement::h());
        assert!(z.evaluate(&a, &e).unwrap().is_zero());
    }

    #[test]
    fn h_is_constant_for_scaling_family() {
        // h = 1 - yx in the disc, and d(x) = x, d(y) = -2y kill it
        let a = disc2();
        let d = check_relations(&zero_on_h(Poly::one(), int(2), &a), &a).unwrap();
        assert!(d.evaluate(&a, &GwaElement::h()).unwrap().is_zero());
        let yx = a.mul(&GwaElement::y(), &GwaElement::x());
        assert!(d.evaluate(&a, &yx).unwrap().is_zero());
    }

    #[test]
    fn evaluation_refuses_unverified_or_foreign() {
        let a = disc2();
        let d = zero_on_h(Poly::one(), int(2), &a);
        assert_eq!(
            d.evaluate(&a, &GwaElement::x()),
            Err(DerivError::Unverified)
        );
        let d = check_relations(&d, &a).unwrap();
        let other = GwaAlgebra::disc(int(3)).unwrap();
        assert_eq!(
            d.evaluate(&other, &GwaElement::x()),
            Err(DerivError::AlgebraMismatch)
        );
    }

    #[test]
    fn leibniz_on_xy() {
        let a = disc2();
        let d = check_relations(&zero_on_h(Poly::h(), int(2), &a), &a).unwrap();
        let (x, y) = (GwaElement::x(), GwaElement::y());
        let xy = a.mul(&x, &y);
        assert_eq!(d.evaluate(&a, &xy).unwrap(), d.leibniz(&a, &x, &y).unwrap());
    }

    #[test]
    fn json_round_trip_drops_verification() {
        let a = disc2();
        let d = check_relations(&zero_on_h(Poly::one(), int(2), &a), &a).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert!(s.contains(r#""verified":true"#));
        let back: SkewDerivation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(!back.is_verified());
    }
}
