use num_traits::{One, Zero};

use super::DiscPlaneError;
use crate::arith::{rat_pow, AffineAuto, Poly, Rat};
use crate::gwa::{GwaAlgebra, GwaElement};

/// `x y^n - q^n y^n x - (1 - q^n) y^(n-1)` and
/// `x^n y - q^n y x^n - (1 - q^n) x^(n-1)` in the disc algebra.
///
/// Any nonzero `q` is accepted, so the algebra is built directly from
/// `a = 1 - h` and `h -> q h`.
pub fn lemma52_residuals(n: u32, q: &Rat) -> Result<[GwaElement; 2], DiscPlaneError> {
    if n == 0 {
        return Err(DiscPlaneError::InvalidData("n must be at least 1".into()));
    }
    let phi = AffineAuto::scaling(q.clone())
        .map_err(|_| DiscPlaneError::InvalidData("q must be nonzero".into()))?;
    let alg = GwaAlgebra::custom(Poly::from_coeffs(vec![Rat::one(), -Rat::one()]), phi);
    let (x, y) = (GwaElement::x(), GwaElement::y());
    let qn = rat_pow(q, i64::from(n));
    let c = Rat::one() - &qn;
    let n = i64::from(n);
    let (yn, yn1) = (alg.monomial(-n), alg.monomial(-(n - 1)));
    let (xn, xn1) = (alg.monomial(n), alg.monomial(n - 1));
    let first = &(&alg.mul(&x, &yn) - &alg.mul(&yn, &x).scale(&qn)) - &yn1.scale(&c);
    let second = &(&alg.mul(&xn, &y) - &alg.mul(&y, &xn).scale(&qn)) - &xn1.scale(&c);
    Ok([first, second])
}

pub fn lemma52_check(n: u32, q: &Rat) -> Result<bool, DiscPlaneError> {
    Ok(lemma52_residuals(n, q)?.iter().all(Zero::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn identities() {
        for q in [int(2), int(3), int(-2), rat(1, 2)] {
            for n in 1..=12 {
                assert!(lemma52_check(n, &q).unwrap(), "n = {n}, q = {q}");
            }
        }
    }

    #[test]
    fn perturbed_identity_fails() {
        let [r, _] = lemma52_residuals(1, &int(2)).unwrap();
        assert!(!(&r + &GwaElement::one()).is_zero());
    }

    #[test]
    fn bad_input() {
        assert!(lemma52_check(0, &int(2)).is_err());
        assert!(lemma52_check(1, &int(0)).is_err());
    }
}
