use serde::{Deserialize, Serialize};

use super::element::GwaElement;
use super::{GwaAlgebra, GwaError};
use crate::arith::Poly;

/// A `Z`-grading with `deg h = w`, `deg x = k`, `deg y = d - k`, where `a` is
/// homogeneous of degree `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading {
    d: i64,
    k: i64,
    w: i64,
}

/// Outcome of asking for the degree of an element or map.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Homogeneity {
    Degree(i64),
    /// The zero element: homogeneous of every degree.
    Zero,
    Inhomogeneous,
}

impl Homogeneity {
    pub fn degree(self) -> Option<i64> {
        match self {
            Homogeneity::Degree(l) => Some(l),
            _ => None,
        }
    }
}

impl Grading {
    /// Checks that `a` and `phi(h)` are homogeneous of degrees `d` and `w`.
    pub fn new(alg: &GwaAlgebra, d: i64, k: i64, w: i64) -> Result<Self, GwaError> {
        let g = Grading { d, k, w };
        if g.poly_degree(alg.a()) != Homogeneity::Degree(d) {
            return Err(GwaError::Grading(format!(
                "a = {} is not homogeneous of degree {d} when deg h = {w}",
                alg.a()
            )));
        }
        let phi_h = alg.phi().image_of_h(1);
        if g.poly_degree(&phi_h) != Homogeneity::Degree(w) {
            return Err(GwaError::Grading(format!(
                "phi(h) = {phi_h} is not homogeneous of degree {w}"
            )));
        }
        Ok(g)
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn w(&self) -> i64 {
        self.w
    }

    /// Degree of `X^j`.
    pub fn monomial_degree(&self, j: i64) -> i64 {
        if j >= 0 {
            j * self.k
        } else {
            -j * (self.d - self.k)
        }
    }

    pub fn poly_degree(&self, r: &Poly) -> Homogeneity {
        let mut degs = r.support().map(|e| e as i64 * self.w);
        let Some(first) = degs.next() else {
            return Homogeneity::Zero;
        };
        if degs.all(|d| d == first) {
            Homogeneity::Degree(first)
        } else {
            Homogeneity::Inhomogeneous
        }
    }

    pub fn degree(&self, e: &GwaElement) -> Homogeneity {
        let mut out = Homogeneity::Zero;
        for (j, r) in e.terms() {
            let Homogeneity::Degree(pd) = self.poly_degree(r) else {
                return Homogeneity::Inhomogeneous;
            };
            let td = pd + self.monomial_degree(j);
            match out {
                Homogeneity::Zero => out = Homogeneity::Degree(td),
                Homogeneity::Degree(prev) if prev != td => return Homogeneity::Inhomogeneous,
                _ => {}
            }
        }
        out
    }
}
