//! Recovering constructor data from one-sided derivations.
use gwa_skew::arith::{int, Poly};
use gwa_skew::deriv::{classify_positive, from_theorem_data, TheoremData};
use gwa_skew::gwa::GwaAlgebra;

fn main() {
    let plane = GwaAlgebra::plane(int(3)).unwrap();
    // d = 1: mu = q^0
    let data = TheoremData::new(int(1))
        .with_alpha(0, Poly::monomial(int(2), 1))
        .with_alpha(2, Poly::monomial(int(-1), 1));
    let d = from_theorem_data(&data, &plane).unwrap();
    let back = classify_positive(&d, &plane).unwrap().unwrap();
    println!("recovered alphas: {:?}", back.alphas().collect::<Vec<_>>());
    assert_eq!(back, data);

    let mixed = TheoremData::new(int(1))
        .with_alpha(1, Poly::h())
        .with_alpha(-1, Poly::h());
    let d = from_theorem_data(&mixed, &plane).unwrap();
    match classify_positive(&d, &plane).unwrap() {
        Ok(_) => unreachable!(),
        Err(why) => println!("two-sided: {why}"),
    }
}
