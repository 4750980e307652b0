use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arith::Rat;
use crate::gwa::{GwaAlgebra, GwaElement};

/// Coefficients on the monomials `y^m x^n`, keyed by `(m, n)`.
pub type YxCoeffs = BTreeMap<(u32, u32), Rat>;

/// `y^m x^n` in normal form.
pub fn yx_monomial(alg: &GwaAlgebra, m: u32, n: u32) -> GwaElement {
    alg.mul(&alg.monomial(-i64::from(m)), &alg.monomial(i64::from(n)))
}

/// Rewrites `e` in the basis `y^m x^n`.
///
/// In degree `k` the monomials `y^(j + max(0,-k)) x^(j + max(0,k))` equal
/// `c_j(h) X^k` with `deg c_j = j` (as `a` is linear), so each coefficient
/// is peeled off from the top.
pub fn to_yx_basis(alg: &GwaAlgebra, e: &GwaElement) -> YxCoeffs {
    let mut out = YxCoeffs::new();
    for (k, r) in e.terms() {
        let (ym, xn) = (
            u32::try_from((-k).max(0)).unwrap(),
            u32::try_from(k.max(0)).unwrap(),
        );
        let mut rest = r.clone();
        while let Some(j) = rest.degree() {
            let j = j as u32;
            let c = yx_monomial(alg, ym + j, xn + j).coeff(k);
            let lead = rest.leading_coeff().unwrap() / c.leading_coeff().unwrap();
            rest = &rest - &c.scale(&lead);
            out.insert((ym + j, xn + j), lead);
        }
    }
    out
}

pub fn from_yx_basis(alg: &GwaAlgebra, coeffs: &YxCoeffs) -> GwaElement {
    let mut out = GwaElement::zero();
    for (&(m, n), c) in coeffs {
        if !c.is_zero() {
            out = &out + &yx_monomial(alg, m, n).scale(c);
        }
    }
    out
}

/// `sum_j c_j v^j` for `v` a monomial element.
pub(crate) fn poly_in(alg: &GwaAlgebra, coeffs: &[Rat], v: &GwaElement) -> GwaElement {
    let mut out = GwaElement::zero();
    let mut p = GwaElement::one();
    for c in coeffs {
        if !c.is_zero() {
            out = &out + &p.scale(c);
        }
        p = alg.mul(&p, v);
    }
    out
}

pub(crate) fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}
