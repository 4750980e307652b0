//! Searching for a witness b with d = b sigma(-) - (-) b.
use gwa_skew::arith::{int, Poly};
use gwa_skew::deriv::{
    elementary, inner_derivation, inner_witness, Elementary, TwistedPolyDerivation,
};
use gwa_skew::gwa::{GwaAlgebra, GwaElement};

fn main() {
    let disc = GwaAlgebra::disc(int(2)).unwrap();

    let b = &GwaElement::term(Poly::h(), 1) + &GwaElement::scalar(int(3));
    let d = inner_derivation(&b, &disc, int(2)).unwrap();
    let found = inner_witness(&d, &disc, 3, 3).unwrap();
    println!("commutator with {b}: witness {}", found.expect("inner"));

    // alpha(r) = s (phi(r) - r) is inner, so its elementary derivation is too
    let s = Poly::constant(int(5));
    let on_h = &s * &(&disc.phi().apply(1, &Poly::h()) - &Poly::h());
    let d = elementary(
        &Elementary::weight(TwistedPolyDerivation::new(1, on_h)),
        &disc,
        int(1),
    )
    .unwrap();
    println!(
        "inner alpha: witness {}",
        inner_witness(&d, &disc, 3, 3).unwrap().expect("inner")
    );

    // a constant alpha is not
    let d = elementary(
        &Elementary::weight(TwistedPolyDerivation::new(1, Poly::one())),
        &disc,
        int(2),
    )
    .unwrap();
    println!(
        "constant alpha: {:?}",
        inner_witness(&d, &disc, 5, 5).unwrap()
    );
}
