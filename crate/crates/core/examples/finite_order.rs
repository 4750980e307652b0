//! The finite-order family on K[h](h^2, h -> -h).
use gwa_skew::arith::{int, AffineAuto, Poly};
use gwa_skew::deriv::{finite_order_family, FiniteOrderData};
use gwa_skew::gwa::GwaAlgebra;

fn main() {
    let alg = GwaAlgebra::custom(
        Poly::from_ints(&[0, 0, 1]),
        AffineAuto::new(int(-1), int(0)).unwrap(),
    );
    let data = FiniteOrderData {
        order: 2,
        mu: int(1),
        positive: vec![(Poly::h(), Poly::zero())],
        negative: vec![(Poly::from_ints(&[0, 0, 0, 1]), Poly::one())],
    };
    let d = finite_order_family(&data, &alg).unwrap();
    println!("d(h) = {}", d.on_h());
    println!("d(x) = {}", d.on_x());
    println!("d(y) = {}", d.on_y());

    let wrong = FiniteOrderData { order: 3, ..data };
    println!(
        "order 3: {}",
        finite_order_family(&wrong, &alg).unwrap_err()
    );
}
