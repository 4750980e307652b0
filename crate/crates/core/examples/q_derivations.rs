//! Q-derivation test and graded degree of elementary derivations.
use gwa_skew::arith::{int, rat, Poly};
use gwa_skew::deriv::{degree_profile, elementary, q_check, Elementary, TwistedPolyDerivation};
use gwa_skew::gwa::{Grading, GwaAlgebra};

fn main() {
    // alpha(h) = h^2 is admissible at every weight when mu = q^-1
    let plane = GwaAlgebra::plane(rat(1, 2)).unwrap();
    let grading = Grading::new(&plane, 1, 1, 1).unwrap();
    let mu = int(2);
    for i in -3..=3 {
        let alpha = TwistedPolyDerivation::new(i, Poly::from_ints(&[0, 0, 1]));
        let d = elementary(&Elementary::weight(alpha), &plane, mu.clone()).unwrap();
        let r = q_check(&d);
        println!(
            "weight {i:>2}: Q = {:<5} degree {:?}",
            r.q.map(|q| q.to_string()).unwrap_or_default(),
            degree_profile(&d, &grading)
        );
    }

    let w1 = elementary(
        &Elementary::weight(TwistedPolyDerivation::new(1, Poly::from_ints(&[0, 0, 1]))),
        &plane,
        mu.clone(),
    )
    .unwrap();
    let w2 = elementary(
        &Elementary::weight(TwistedPolyDerivation::new(2, Poly::from_ints(&[0, 0, 1]))),
        &plane,
        mu,
    )
    .unwrap();
    let sum = w1.try_add(&w2).unwrap();
    println!("weights 1 + 2: {:?}", q_check(&sum));
}
