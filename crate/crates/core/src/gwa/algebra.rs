use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::GwaElement;
use super::GwaError;
use crate::arith::{is_root_of_unity, AffineAuto, Poly, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraLabel {
    Disc,
    Plane,
    Custom,
}

impl fmt::Display for AlgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgebraLabel::Disc => "disc",
            AlgebraLabel::Plane => "plane",
            AlgebraLabel::Custom => "custom",
        })
    }
}

/// The degree-one generalized Weyl algebra `R(a, phi)` over `R = Q[h]`:
/// `xy = phi(a)`, `yx = a`, `xr = phi(r)x`, `yr = phi^-1(r)y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GwaAlgebra {
    label: AlgebraLabel,
    a: Poly,
    phi: AffineAuto,
}

fn check_q(q: &Rat) -> Result<(), GwaError> {
    if is_root_of_unity(q).map_err(|_| GwaError::InvalidQ(q.clone()))? {
        return Err(GwaError::InvalidQ(q.clone()));
    }
    Ok(())
}

impl GwaAlgebra {
    /// Quantum disc: `a = 1 - h`, `phi(h) = qh`.
    pub fn disc(q: Rat) -> Result<Self, GwaError> {
        check_q(&q)?;
        Ok(GwaAlgebra {
            label: AlgebraLabel::Disc,
            a: Poly::from_ints(&[1, -1]),
            phi: AffineAuto::scaling(q).expect("q checked nonzero"),
        })
    }

    /// Quantum plane: `a = h`, `phi(h) = qh`.
    pub fn plane(q: Rat) -> Result<Self, GwaError> {
        check_q(&q)?;
        Ok(GwaAlgebra {
            label: AlgebraLabel::Plane,
            a: Poly::h(),
            phi: AffineAuto::scaling(q).expect("q checked nonzero"),
        })
    }

    pub fn custom(a: Poly, phi: AffineAuto) -> Self {
        GwaAlgebra {
            label: AlgebraLabel::Custom,
            a,
            phi,
        }
    }

    /// Preset by label; `custom` is rejected because it needs `a` and `phi`.
    pub fn preset(label: AlgebraLabel, q: Rat) -> Result<Self, GwaError> {
        match label {
            AlgebraLabel::Disc => Self::disc(q),
            AlgebraLabel::Plane => Self::plane(q),
            AlgebraLabel::Custom => Err(GwaError::Invalid(
                "custom algebra needs explicit a and phi".into(),
            )),
        }
    }

    pub fn label(&self) -> AlgebraLabel {
        self.label
    }

    pub fn a(&self) -> &Poly {
        &self.a
    }

    pub fn phi(&self) -> &AffineAuto {
        &self.phi
    }

    /// Linear coefficient of `phi`, the `q` of the presets.
    pub fn q(&self) -> &Rat {
        self.phi.u()
    }

    /// `phi^k(r)`.
    pub fn phi_pow(&self, k: i64, r: &Poly) -> Poly {
        self.phi.apply(k, r)
    }

    /// `phi^k(a)`.
    pub fn shifted_a(&self, k: i64) -> Poly {
        self.phi.apply(k, &self.a)
    }

    /// `X^i X^j = P * X^(i+j)`; returns `P`.
    pub fn monomial_product(&self, i: i64, j: i64) -> Poly {
        if i >= 0 && j >= 0 || i <= 0 && j <= 0 {
            return Poly::one();
        }
        let mut p = Poly::one();
        if i > 0 {
            // x^m y^n
            let t = i.min(-j);
            for s in 0..t {
                p = &p * &self.shifted_a(i - s);
            }
        } else {
            // y^n x^m
            let t = (-i).min(j);
            for s in 1..=t {
                p = &p * &self.shifted_a(i + s);
            }
        }
        p
    }

    /// Product of two normal-form elements.
    pub fn mul(&self, lhs: &GwaElement, rhs: &GwaElement) -> GwaElement {
        let mut out = GwaElement::zero();
        for (i, r) in lhs.terms() {
            for (j, s) in rhs.terms() {
                let c = &(r * &self.phi_pow(i, s)) * &self.monomial_product(i, j);
                out.add_term(i + j, &c);
            }
        }
        out
    }

    /// Left-to-right product of a sequence; the empty product is `1`.
    pub fn product<'a, I: IntoIterator<Item = &'a GwaElement>>(&self, it: I) -> GwaElement {
        it.into_iter()
            .fold(GwaElement::one(), |acc, e| self.mul(&acc, e))
    }

    pub fn pow(&self, e: &GwaElement, n: u32) -> GwaElement {
        let mut acc = GwaElement::one();
        for _ in 0..n {
            acc = self.mul(&acc, e);
        }
        acc
    }

    /// `x^k` for `k >= 0`, `y^-k` otherwise.
    pub fn monomial(&self, k: i64) -> GwaElement {
        GwaElement::term(Poly::one(), k)
    }
}

impl fmt::Display for GwaAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} Q[h]({}, h -> {})",
            self.label,
            self.a,
            self.phi.image_of_h(1)
        )
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraRepr {
    label: AlgebraLabel,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "opt_rat")]
    q: Option<Rat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<Poly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phi: Option<AffineAuto>,
}

mod opt_rat {
    use crate::arith::rat::serde_rat;
    use crate::arith::Rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(r) => serde_rat::serialize(r, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rat>, D::Error> {
        #[derive(Deserialize)]
        struct W(#[serde(with = "serde_rat")] Rat);
        Ok(Option::<W>::deserialize(d)?.map(|w| w.0))
    }
}

impl TryFrom<AlgebraRepr> for GwaAlgebra {
    type Error = GwaError;
    fn try_from(r: AlgebraRepr) -> Result<Self, GwaError> {
        let alg = match r.label {
            AlgebraLabel::Custom => {
                let (Some(a), Some(phi)) = (r.a.clone(), r.phi.clone()) else {
                    return Err(GwaError::Invalid(
                        "custom algebra needs both \"a\" and \"phi\"".into(),
                    ));
                };
                GwaAlgebra::custom(a, phi)
            }
            label => {
                let q =
                    r.q.clone()
                        .or_else(|| r.phi.as_ref().map(|p| p.u().clone()))
                        .ok_or_else(|| GwaError::Invalid(format!("{label} algebra needs \"q\"")))?;
                GwaAlgebra::preset(label, q)?
            }
        };
        if r.a.as_ref().is_some_and(|a| a != &alg.a) {
            return Err(GwaError::Invalid(format!(
                "\"a\" does not match the {} preset",
                alg.label
            )));
        }
        if r.phi.as_ref().is_some_and(|p| p != &alg.phi) {
            return Err(GwaError::Invalid(format!(
                "\"phi\" does not match the {} preset",
                alg.label
            )));
        }
        if r.q.as_ref().is_some_and(|q| q != alg.q()) {
            return Err(GwaError::Invalid("\"q\" disagrees with phi.u".into()));
        }
        Ok(alg)
    }
}

impl Serialize for GwaAlgebra {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        AlgebraRepr {
            label: self.label,
            q: Some(self.q().clone()),
            a: Some(self.a.clone()),
            phi: Some(self.phi.clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GwaAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = AlgebraRepr::deserialize(d)?;
        GwaAlgebra::try_from(repr).map_err(serde::de::Error::custom)
    }
}
