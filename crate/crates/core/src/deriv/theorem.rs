use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::skew::{check_relations, SkewDerivation};
use super::twisted::TwistedPolyDerivation;
use super::DerivError;
use crate::arith::rat::serde_rat;
use crate::arith::{Poly, Rat};
use crate::gwa::{GwaAlgebra, GwaElement};

/// Data `(alpha_i, b, c, mu)` for the general constructor: `alpha_i` is the
/// `phi^i`-twisted derivation of `R` with the stored value on `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremData {
    pub mu: Rat,
    alphas: BTreeMap<i64, Poly>,
    pub b: Poly,
    pub c: Poly,
}

impl TheoremData {
    pub fn new(mu: Rat) -> Self {
        TheoremData {
            mu,
            alphas: BTreeMap::new(),
            b: Poly::zero(),
            c: Poly::zero(),
        }
    }

    /// Sets `alpha_weight(h)`; a zero value removes the weight.
    pub fn with_alpha(mut self, weight: i64, on_h: Poly) -> Self {
        self.set_alpha(weight, on_h);
        self
    }

    pub fn with_b(mut self, b: Poly) -> Self {
        self.b = b;
        self
    }

    pub fn with_c(mut self, c: Poly) -> Self {
        self.c = c;
        self
    }

    pub fn set_alpha(&mut self, weight: i64, on_h: Poly) {
        if on_h.is_zero() {
            self.alphas.remove(&weight);
        } else {
            self.alphas.insert(weight, on_h);
        }
    }

    pub fn alpha(&self, weight: i64) -> TwistedPolyDerivation {
        TwistedPolyDerivation::new(
            weight,
            self.alphas.get(&weight).cloned().unwrap_or_else(Poly::zero),
        )
    }

    /// Nonzero `(weight, alpha(h))` pairs in increasing weight.
    pub fn alphas(&self) -> impl Iterator<Item = (i64, &Poly)> + '_ {
        self.alphas.iter().map(|(&k, p)| (k, p))
    }

    pub fn is_zero(&self) -> bool {
        self.alphas.is_empty() && self.b.is_zero() && self.c.is_zero()
    }

    /// Componentwise sum; both sides must share `mu`.
    pub fn try_add(&self, other: &TheoremData) -> Result<TheoremData, DerivError> {
        if self.mu != other.mu {
            return Err(DerivError::InvalidData("mu differs".into()));
        }
        let mut out = self.clone();
        for (w, p) in other.alphas() {
            let sum = &out.alpha(w).on_h + p;
            out.set_alpha(w, sum);
        }
        out.b = &out.b + &other.b;
        out.c = &out.c + &other.c;
        Ok(out)
    }

    /// Checks `alpha_i o phi = mu phi o alpha_i` for each weight and
    /// `a | alpha_0(a)`; returns `alpha_0(a) / a`.
    pub fn validate(&self, alg: &GwaAlgebra) -> Result<Poly, DerivError> {
        if self.mu.is_zero() {
            return Err(DerivError::ZeroMu);
        }
        for (w, _) in self.alphas() {
            let residual = self.alpha(w).commutation_residual(alg.phi(), &self.mu);
            if !residual.is_zero() {
                return Err(DerivError::Commutation {
                    weight: w,
                    residual,
                });
            }
        }
        let alpha0_a = self.alpha(0).apply(alg.phi(), alg.a());
        if alpha0_a.is_zero() {
            return Ok(Poly::zero());
        }
        let quotient = if alg.a().is_zero() {
            None
        } else {
            alpha0_a.div_exact(alg.a())?
        };
        quotient.ok_or_else(|| DerivError::NotDivisible {
            a: alg.a().clone(),
            alpha0_a,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlphaEntry {
    weight: i64,
    on_h: Poly,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TheoremRepr {
    #[serde(with = "serde_rat")]
    mu: Rat,
    #[serde(default)]
    alphas: Vec<AlphaEntry>,
    #[serde(default)]
    b: Poly,
    #[serde(default)]
    c: Poly,
}

impl Serialize for TheoremData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TheoremRepr {
            mu: self.mu.clone(),
            alphas: self
                .alphas()
                .map(|(weight, p)| AlphaEntry {
                    weight,
                    on_h: p.clone(),
                })
                .collect(),
            b: self.b.clone(),
            c: self.c.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TheoremData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = TheoremRepr::deserialize(d)?;
        let mut out = TheoremData::new(r.mu).with_b(r.b).with_c(r.c);
        for e in r.alphas {
            if out.alphas.contains_key(&e.weight) {
                return Err(serde::de::Error::custom(format!(
                    "weight {} listed twice",
                    e.weight
                )));
            }
            out.set_alpha(e.weight, e.on_h);
        }
        Ok(out)
    }
}

/// Builds the derivation with
///
/// ```text
/// d(h) = sum_i alpha_i(h) X^i
/// d(x) = (c - phi(b) + mu^-1 b) x + sum_n phi(alpha_-n(a)) y^(n-1)
/// d(y) = mu (alpha_0(a)/a - phi^-1(c + mu^-1 b) + b) y + sum_m mu alpha_m(a) x^(m-1)
/// ```
///
/// and verifies it. The inner part `b r - r b` of `d(r)` vanishes because
/// `R` is commutative.
pub fn from_theorem_data(
    data: &TheoremData,
    alg: &GwaAlgebra,
) -> Result<SkewDerivation, DerivError> {
    let quotient = data.validate(alg)?;
    let mu = &data.mu;
    let mu_inv = mu.recip();
    let phi = alg.phi();
    let b_over_mu = data.b.scale(&mu_inv);

    let mut on_h = GwaElement::zero();
    let mut on_x = GwaElement::term(&(&data.c - &phi.apply(1, &data.b)) + &b_over_mu, 1);
    let mut on_y = GwaElement::term(
        (&(&quotient - &phi.apply(-1, &(&data.c + &b_over_mu))) + &data.b).scale(mu),
        -1,
    );
    for (w, p) in data.alphas() {
        on_h.add_term(w, p);
        let alpha = data.alpha(w);
        if w > 0 {
            on_y.add_term(w - 1, &alpha.apply(phi, alg.a()).scale(mu));
        } else if w < 0 {
            on_x.add_term(w + 1, &phi.apply(1, &alpha.apply(phi, alg.a())));
        }
    }
    let cand = SkewDerivation::new(mu.clone(), on_h, on_x, on_y)?;
    check_relations(&cand, alg).map_err(DerivError::Construction)
}

/// One of the four elementary families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elementary {
    /// Weight `i = alpha.twist_exp`; `c` is only allowed at weight 0.
    Weighted {
        alpha: TwistedPolyDerivation,
        c: Poly,
    },
    /// The family driven by `b` alone.
    Inner { b: Poly },
}

impl Elementary {
    pub fn weight(alpha: TwistedPolyDerivation) -> Self {
        Elementary::Weighted {
            alpha,
            c: Poly::zero(),
        }
    }

    pub fn to_data(&self, mu: Rat) -> Result<TheoremData, DerivError> {
        Ok(match self {
            Elementary::Weighted { alpha, c } => {
                if alpha.twist_exp != 0 && !c.is_zero() {
                    return Err(DerivError::InvalidData(
                        "c is only meaningful at weight 0".into(),
                    ));
                }
                TheoremData::new(mu)
                    .with_alpha(alpha.twist_exp, alpha.on_h.clone())
                    .with_c(c.clone())
            }
            Elementary::Inner { b } => TheoremData::new(mu).with_b(b.clone()),
        })
    }
}

pub fn elementary(
    kind: &Elementary,
    alg: &GwaAlgebra,
    mu: Rat,
) -> Result<SkewDerivation, DerivError> {
    from_theorem_data(&kind.to_data(mu)?, alg)
}

/// Data for the finite-order family: `phi^order = id`, each `alpha` an
/// ordinary (untwisted) derivation of `R`. Entry `m` of `positive`
/// (counting from 1) is `(alpha_m(h), b_m)`, entry `n` of `negative` is
/// `(alpha_-n(h), c_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteOrderData {
    pub order: u32,
    pub mu: Rat,
    pub positive: Vec<(Poly, Poly)>,
    pub negative: Vec<(Poly, Poly)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosEntry {
    on_h: Poly,
    #[serde(default)]
    b: Poly,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct NegEntry {
    on_h: Poly,
    #[serde(default)]
    c: Poly,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FiniteRepr {
    #[serde(rename = "D")]
    order: u32,
    #[serde(with = "serde_rat")]
    mu: Rat,
    #[serde(default)]
    alphas_pos: Vec<PosEntry>,
    #[serde(default)]
    alphas_neg: Vec<NegEntry>,
}

impl Serialize for FiniteOrderData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FiniteRepr {
            order: self.order,
            mu: self.mu.clone(),
            alphas_pos: self
                .positive
                .iter()
                .map(|(on_h, b)| PosEntry {
                    on_h: on_h.clone(),
                    b: b.clone(),
                })
                .collect(),
            alphas_neg: self
                .negative
                .iter()
                .map(|(on_h, c)| NegEntry {
                    on_h: on_h.clone(),
                    c: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FiniteOrderData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = FiniteRepr::deserialize(d)?;
        Ok(FiniteOrderData {
            order: r.order,
            mu: r.mu,
            positive: r.alphas_pos.into_iter().map(|e| (e.on_h, e.b)).collect(),
            negative: r.alphas_neg.into_iter().map(|e| (e.on_h, e.c)).collect(),
        })
    }
}

/// Builds the finite-order family:
///
/// ```text
/// d(h) = sum_m alpha_m(h) x^(mD) + sum_n alpha_-n(h) y^(nD)
/// d(x) = sum_m b_m x^(mD+1) + mu^-1 sum_n (alpha_-n(phi(a)) - phi(c_n) a) y^(nD-1)
/// d(y) = mu sum_m (alpha_m(a) - phi^-1(b_m) a) x^(mD-1) + sum_n c_n y^(nD+1)
/// ```
pub fn finite_order_family(
    data: &FiniteOrderData,
    alg: &GwaAlgebra,
) -> Result<SkewDerivation, DerivError> {
    if data.mu.is_zero() {
        return Err(DerivError::ZeroMu);
    }
    if data.order == 0 {
        return Err(DerivError::InvalidData("order must be positive".into()));
    }
    let phi = alg.phi();
    if !phi.has_order_dividing(data.order) {
        return Err(DerivError::NotFiniteOrder { order: data.order });
    }
    let d = data.order as i64;
    let a = alg.a();
    let mu = &data.mu;
    let (mut on_h, mut on_x, mut on_y) =
        (GwaElement::zero(), GwaElement::zero(), GwaElement::zero());
    for (idx, (p, b)) in data.positive.iter().enumerate() {
        let m = idx as i64 + 1;
        let alpha = TwistedPolyDerivation::new(0, p.clone());
        let residual = alpha.commutation_residual(phi, mu);
        if !residual.is_zero() {
            return Err(DerivError::Commutation {
                weight: m,
                residual,
            });
        }
        on_h.add_term(m * d, p);
        on_x.add_term(m * d + 1, b);
        let coeff = &alpha.apply(phi, a) - &(&phi.apply(-1, b) * a);
        on_y.add_term(m * d - 1, &coeff.scale(mu));
    }
    for (idx, (p, c)) in data.negative.iter().enumerate() {
        let n = idx as i64 + 1;
        let alpha = TwistedPolyDerivation::new(0, p.clone());
        let residual = alpha.commutation_residual(phi, mu);
        if !residual.is_zero() {
            return Err(DerivError::Commutation {
                weight: -n,
                residual,
            });
        }
        on_h.add_term(-n * d, p);
        on_y.add_term(-(n * d + 1), c);
        let coeff = &alpha.apply(phi, &alg.shifted_a(1)) - &(&phi.apply(1, c) * a);
        on_x.add_term(-(n * d - 1), &coeff.scale(&mu.recip()));
    }
    let cand = SkewDerivation::new(mu.clone(), on_h, on_x, on_y)?;
    check_relations(&cand, alg).map_err(DerivError::Construction)
}

impl Default for FiniteOrderData {
    fn default() -> Self {
        FiniteOrderData {
            order: 1,
            mu: Rat::one(),
            positive: Vec::new(),
            negative: Vec::new(),
        }
    }
}
