use super::element::GwaElement;
use super::GwaAlgebra;

/// The isomorphism `R(a, phi) -> R(phi(a), phi^-1)` swapping `x` and `y` and
/// fixing `R`. Left coefficients are unchanged, so only degrees flip sign.
pub fn xy_symmetry(alg: &GwaAlgebra, e: &GwaElement) -> (GwaAlgebra, GwaElement) {
    (mirror_algebra(alg), e.negate_degrees())
}

/// `R(phi(a), phi^-1)`. Applying this twice returns an algebra equal to the
/// original up to its label.
pub fn mirror_algebra(alg: &GwaAlgebra) -> GwaAlgebra {
    GwaAlgebra::custom(alg.shifted_a(1), alg.phi().inverse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, Poly};

    #[test]
    fn swaps_generators() {
        let a = GwaAlgebra::disc(int(2)).unwrap();
        let (b, img) = xy_symmetry(&a, &GwaElement::x());
        assert_eq!(img, GwaElement::y());
        assert_eq!(b.a(), &Poly::from_ints(&[1, -2]));
        assert_eq!(b.phi(), &a.phi().inverse());
        let r = GwaElement::from_poly(Poly::from_ints(&[3, 0, 1]));
        assert_eq!(xy_symmetry(&a, &r).1, r);
    }

    #[test]
    fn multiplicative_on_xy() {
        let a = GwaAlgebra::disc(int(2)).unwrap();
        let b = mirror_algebra(&a);
        let (x, y) = (GwaElement::x(), GwaElement::y());
        let lhs = xy_symmetry(&a, &a.mul(&x, &y)).1;
        let rhs = b.mul(&xy_symmetry(&a, &x).1, &xy_symmetry(&a, &y).1);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, GwaElement::from_poly(Poly::from_ints(&[1, -2])));
    }

    #[test]
    fn involutive_up_to_label() {
        let a = GwaAlgebra::plane(int(3)).unwrap();
        let back = mirror_algebra(&mirror_algebra(&a));
        assert_eq!(back.a(), a.a());
        assert_eq!(back.phi(), a.phi());
    }
}
