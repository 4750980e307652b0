//! Builds a skew derivation from twisted derivations of K[h], checks the
//! defining relations and evaluates it on a product.
use gwa_skew::arith::{int, Poly};
use gwa_skew::deriv::{from_theorem_data, TheoremData};
use gwa_skew::gwa::{GwaAlgebra, GwaElement};

fn main() {
    let q = int(2);
    let plane = GwaAlgebra::plane(q).unwrap();

    // alpha_i(h) = c h^d needs mu = q^(1-d); here d = 0
    let data = TheoremData::new(int(2))
        .with_alpha(1, Poly::constant(int(3)))
        .with_alpha(-2, Poly::constant(int(-1)))
        .with_b(Poly::h());
    let d = from_theorem_data(&data, &plane).expect("admissible data");

    println!("d(h) = {}", d.on_h());
    println!("d(x) = {}", d.on_x());
    println!("d(y) = {}", d.on_y());

    let xy2 = plane.mul(&GwaElement::x(), &plane.pow(&GwaElement::y(), 2));
    let value = d.evaluate(&plane, &xy2).unwrap();
    let leibniz = d
        .leibniz(&plane, &GwaElement::x(), &plane.pow(&GwaElement::y(), 2))
        .unwrap();
    println!("d(x y^2) = {value}");
    assert_eq!(value, leibniz);

    // inadmissible: a constant alpha needs mu = q
    let bad = TheoremData::new(int(3)).with_alpha(1, Poly::constant(int(1)));
    println!("mu = 3: {}", from_theorem_data(&bad, &plane).unwrap_err());
}
