use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::qnum::q_int;
use super::OrthoError;
use crate::arith::{extended_gcd, rat_pow, Poly, Rat};
use crate::deriv::{elementary, DerivError, Elementary, SkewDerivation, TwistedPolyDerivation};
use crate::gwa::{GwaAlgebra, GwaElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub name: String,
    pub passed: bool,
    /// The gcd found, for coprimality checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gcd: Option<Poly>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prop42Report {
    pub checks: Vec<HypothesisCheck>,
    /// Every check passed, so the pair is orthogonal.
    pub guaranteed: bool,
    /// One of the twisted derivations is zero.
    pub degenerate: bool,
}

impl Prop42Report {
    pub fn failed(&self) -> impl Iterator<Item = &HypothesisCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prop42Pair {
    /// Weight `m + 1`: `d(x) = 0`, `d(y) = mu alpha(a) x^m`.
    pub first: SkewDerivation,
    /// Weight `-n - 1`: `d(x) = phi(alpha_bar(a)) y^n`, `d(y) = 0`.
    pub second: SkewDerivation,
    pub report: Prop42Report,
}

fn coprime(name: String, p: &Poly, q: &Poly) -> HypothesisCheck {
    let gcd = extended_gcd(p, q)
        .map(|w| w.gcd)
        .unwrap_or_else(|_| Poly::zero());
    HypothesisCheck {
        name,
        passed: gcd.is_one(),
        gcd: Some(gcd),
    }
}

fn check_twist(alpha: &TwistedPolyDerivation, expected: i64) -> Result<(), DerivError> {
    if alpha.twist_exp != expected {
        return Err(DerivError::TwistMismatch {
            expected,
            found: alpha.twist_exp,
        });
    }
    Ok(())
}

/// Runs every hypothesis for the pair built from `alpha` (twist `m + 1`)
/// and `alpha_bar` (twist `-n - 1`).
pub fn prop42_hypotheses(
    m: u32,
    n: u32,
    alpha: &TwistedPolyDerivation,
    alpha_bar: &TwistedPolyDerivation,
    alg: &GwaAlgebra,
    mu: &Rat,
    mu_bar: &Rat,
) -> Result<Prop42Report, OrthoError> {
    let (m, n) = (i64::from(m), i64::from(n));
    check_twist(alpha, m + 1)?;
    check_twist(alpha_bar, -n - 1)?;
    let phi = alg.phi();
    let a = alg.a();
    let mut checks = Vec::new();

    let big_n = m.max(n).max(1);
    for i in 1..2 * big_n {
        checks.push(coprime(
            format!("a coprime to phi^{i}(a)"),
            a,
            &alg.shifted_a(i),
        ));
    }

    let alpha_a = alpha.apply(phi, a);
    for j in (-m - 1..=0).chain(m + 1..=2 * m) {
        checks.push(coprime(
            format!("alpha(a) coprime to phi^{j}(a)"),
            &alpha_a,
            &alg.shifted_a(j),
        ));
    }
    checks.push(coprime(
        format!("alpha(a) coprime to phi^{}(alpha(a))", -m),
        &alpha_a,
        &alg.phi_pow(-m, &alpha_a),
    ));
    checks.push(HypothesisCheck {
        name: "alpha o phi = mu phi o alpha".into(),
        passed: alpha.commutation_residual(phi, mu).is_zero(),
        gcd: None,
    });

    let bar_a = alpha_bar.apply(phi, a);
    let lifted = alg.phi_pow(n + 1, &bar_a);
    for j in (-n - 1..=0).chain(n + 1..=2 * n) {
        checks.push(coprime(
            format!("phi^{}(alpha_bar(a)) coprime to phi^{j}(a)", n + 1),
            &lifted,
            &alg.shifted_a(j),
        ));
    }
    checks.push(coprime(
        format!("phi^{}(alpha_bar(a)) coprime to phi(alpha_bar(a))", n + 1),
        &lifted,
        &alg.phi_pow(1, &bar_a),
    ));
    checks.push(HypothesisCheck {
        name: "alpha_bar o phi = mu_bar phi o alpha_bar".into(),
        passed: alpha_bar.commutation_residual(phi, mu_bar).is_zero(),
        gcd: None,
    });

    let guaranteed = checks.iter().all(|c| c.passed);
    Ok(Prop42Report {
        checks,
        guaranteed,
        degenerate: alpha.is_zero() || alpha_bar.is_zero(),
    })
}

/// The elementary pair of weights `m + 1` and `-n - 1` with its hypothesis
/// report. Hypothesis failures do not stop construction; a twisted
/// derivation that fails to commute with `phi` does, since the maps then
/// violate the defining relations.
pub fn prop42_pair(
    m: u32,
    n: u32,
    alpha: &TwistedPolyDerivation,
    alpha_bar: &TwistedPolyDerivation,
    alg: &GwaAlgebra,
    mu: &Rat,
    mu_bar: &Rat,
) -> Result<Prop42Pair, OrthoError> {
    let report = prop42_hypotheses(m, n, alpha, alpha_bar, alg, mu, mu_bar)?;
    let first = elementary(&Elementary::weight(alpha.clone()), alg, mu.clone())?;
    let second = elementary(&Elementary::weight(alpha_bar.clone()), alg, mu_bar.clone())?;
    Ok(Prop42Pair {
        first,
        second,
        report,
    })
}

/// The pair of `sigma_q`-derivations of the disc algebra
/// `d(x) = c x^n`, `d(y) = -q [n]_q c (1 - h) x^(n-2)` and
/// `d'(x) = -q^-1 [m]_q c' (1 - q^(2-m) h) y^(m-2)`, `d'(y) = c' y^m`.
pub fn disc_pair(
    m: u32,
    n: u32,
    c: &Rat,
    c_bar: &Rat,
    q: &Rat,
) -> Result<(SkewDerivation, SkewDerivation), OrthoError> {
    if m <= 1 || n <= 1 {
        return Err(OrthoError::Precondition(format!(
            "m and n must exceed 1 (got m = {m}, n = {n})"
        )));
    }
    if c.is_zero() || c_bar.is_zero() {
        return Err(OrthoError::Precondition(
            "c and c_bar must be nonzero".into(),
        ));
    }
    let alg = GwaAlgebra::disc(q.clone()).map_err(|e| OrthoError::Precondition(e.to_string()))?;
    let (mi, ni) = (i64::from(m), i64::from(n));
    let one_minus_h = Poly::from_coeffs(vec![Rat::one(), -Rat::one()]);

    let dx = GwaElement::term(Poly::constant(c.clone()), ni);
    let dy = GwaElement::term(one_minus_h.scale(&(-(q * q_int(n, q) * c))), ni - 2);
    let first = SkewDerivation::from_xy(&alg, q.clone(), dx, dy)?;

    let shifted = Poly::from_coeffs(vec![Rat::one(), -rat_pow(q, 2 - mi)]);
    let bx = GwaElement::term(shifted.scale(&(-(q_int(m, q) * c_bar / q))), -(mi - 2));
    let by = GwaElement::term(Poly::constant(c_bar.clone()), -mi);
    let second = SkewDerivation::from_xy(&alg, q.clone(), bx, by)?;
    Ok((first, second))
}
