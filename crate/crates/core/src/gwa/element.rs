use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{Poly, Rat};

/// An element `sum_k r_k X^k` in normal form, coefficients on the left.
///
/// `X^k` means `x^k` for `k > 0`, `y^(-k)` for `k < 0` and `1` for `k = 0`.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GwaElement {
    terms: BTreeMap<i64, Poly>,
}

impl GwaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    /// `r * X^deg`.
    pub fn term(r: Poly, deg: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(deg, r);
        }
        GwaElement { terms }
    }

    pub fn from_poly(r: Poly) -> Self {
        Self::term(r, 0)
    }

    pub fn scalar(c: Rat) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        Self::term(Poly::one(), 1)
    }

    pub fn y() -> Self {
        Self::term(Poly::one(), -1)
    }

    pub fn h() -> Self {
        Self::from_poly(Poly::h())
    }

    /// Builds from `(deg, coefficient)` pairs, summing repeated degrees.
    pub fn from_terms<I: IntoIterator<Item = (i64, Poly)>>(it: I) -> Self {
        let mut e = GwaElement::zero();
        for (k, r) in it {
            e.add_term(k, &r);
        }
        e
    }

    pub fn add_term(&mut self, deg: i64, r: &Poly) {
        if r.is_zero() {
            return;
        }
        let slot = self.terms.entry(deg).or_insert_with(Poly::zero);
        *slot += r;
        if slot.is_zero() {
            self.terms.remove(&deg);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `X^deg`.
    pub fn coeff(&self, deg: i64) -> Poly {
        self.terms.get(&deg).cloned().unwrap_or_else(Poly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Poly)> + '_ {
        self.terms.iter().map(|(&k, r)| (k, r))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// The degree-zero part if nothing else is present.
    pub fn as_poly(&self) -> Option<Poly> {
        match self.terms.len() {
            0 => Some(Poly::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, r)| (k, r.scale(c))))
    }

    /// Left multiplication by `r` in `R`; no twisting is involved.
    pub fn left_mul_poly(&self, r: &Poly) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, p)| (k, r * p)))
    }

    /// Applies `f(k, r_k)` to each coefficient.
    pub fn map_coeffs(&self, mut f: impl FnMut(i64, &Poly) -> Poly) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, p)| (k, f(k, p))))
    }

    /// Same coefficients at negated degrees.
    pub fn negate_degrees(&self) -> Self {
        GwaElement {
            terms: self.terms.iter().map(|(&k, r)| (-k, r.clone())).collect(),
        }
    }
}

impl Add for &GwaElement {
    type Output = GwaElement;
    fn add(self, rhs: &GwaElement) -> GwaElement {
        let mut out = self.clone();
        for (&k, r) in &rhs.terms {
            out.add_term(k, r);
        }
        out
    }
}

impl Sub for &GwaElement {
    type Output = GwaElement;
    fn sub(self, rhs: &GwaElement) -> GwaElement {
        self + &(-rhs)
    }
}

impl Neg for &GwaElement {
    type Output = GwaElement;
    fn neg(self) -> GwaElement {
        GwaElement {
            terms: self.terms.iter().map(|(&k, r)| (k, -r)).collect(),
        }
    }
}

impl Add for GwaElement {
    type Output = GwaElement;
    fn add(self, rhs: GwaElement) -> GwaElement {
        &self + &rhs
    }
}

impl Sub for GwaElement {
    type Output = GwaElement;
    fn sub(self, rhs: GwaElement) -> GwaElement {
        &self - &rhs
    }
}

impl Neg for GwaElement {
    type Output = GwaElement;
    fn neg(self) -> GwaElement {
        -&self
    }
}

impl Zero for GwaElement {
    fn zero() -> Self {
        GwaElement::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl From<Poly> for GwaElement {
    fn from(r: Poly) -> Self {
        GwaElement::from_poly(r)
    }
}

fn monomial_name(k: i64) -> String {
    match k {
        1 => "x".into(),
        -1 => "y".into(),
        k if k > 0 => format!("x^{k}"),
        k => format!("y^{}", -k),
    }
}

impl fmt::Display for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&k, r)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (k, r.is_one()) {
                (0, _) => write!(f, "{r}")?,
                (_, true) => write!(f, "{}", monomial_name(k))?,
                _ if r.coeffs().len() == 1 || r.single_exponent().is_some() => {
                    write!(f, "{r}*{}", monomial_name(k))?
                }
                _ => write!(f, "({r})*{}", monomial_name(k))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GwaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GwaElement({self})")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermRepr {
    deg: i64,
    poly: Poly,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementRepr {
    terms: Vec<TermRepr>,
}

impl Serialize for GwaElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElementRepr {
            terms: self
                .terms
                .iter()
                .map(|(&deg, poly)| TermRepr {
                    deg,
                    poly: poly.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GwaElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(d)?;
        Ok(GwaElement::from_terms(
            repr.terms.into_iter().map(|t| (t.deg, t.poly)),
        ))
    }
}
