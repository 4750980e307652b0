//! Products in the quantum disc and quantum plane, and the x-y symmetry.
use gwa_skew::arith::{int, rat};
use gwa_skew::gwa::{xy_symmetry, GwaAlgebra, GwaElement};

fn main() {
    let disc = GwaAlgebra::disc(int(2)).unwrap();
    let (x, y) = (GwaElement::x(), GwaElement::y());

    println!("disc, q = 2");
    println!("  x y   = {}", disc.mul(&x, &y));
    println!("  y x   = {}", disc.mul(&y, &x));
    let y2 = disc.pow(&y, 2);
    let x3 = disc.pow(&x, 3);
    println!("  y^2 x^3 = {}", disc.mul(&y2, &x3));

    // xy - q yx = 1 - q
    let lhs = &disc.mul(&x, &y) - &disc.mul(&y, &x).scale(&int(2));
    println!("  xy - 2yx = {lhs}");

    let plane = GwaAlgebra::plane(rat(3, 5)).unwrap();
    let hx = GwaElement::term(gwa_skew::arith::Poly::h(), 1);
    println!("plane, q = 3/5");
    println!(
        "  (h x)(h y) = {}",
        plane.mul(&hx, &GwaElement::term(gwa_skew::arith::Poly::h(), -1))
    );

    let (mirror, image) = xy_symmetry(&disc, &hx);
    println!(
        "symmetry sends h x to {image}, over a = {}, phi(h) = {}",
        mirror.a(),
        mirror.phi().image_of_h(1)
    );
}
