//! sigma_mu-derivations of the quantum disc and plane.
use gwa_skew::arith::{int, rat, Poly};
use gwa_skew::disc_plane::{
    build_prop51, build_sigma_q, classify_sigma_q, lemma52_check, sigma_q_dimension, Prop51Data,
    SigmaQData,
};
use gwa_skew::gwa::GwaAlgebra;

fn main() {
    let q = int(2);
    let disc = GwaAlgebra::disc(q.clone()).unwrap();

    let d = build_prop51(
        &Prop51Data::ZeroOnH {
            f: Poly::one(),
            mu: q.clone(),
        },
        &disc,
    )
    .unwrap();
    println!(
        "f = 1: d(x) = {}, d(y) = {}, d(h) = {}",
        d.on_x(),
        d.on_y(),
        d.on_h()
    );

    let d = build_prop51(
        &Prop51Data::MuPower {
            d: 1,
            a: vec![int(1)],
            b: vec![int(0), rat(1, 2)],
        },
        &disc,
    )
    .unwrap();
    println!("mu = 1: d(x) = {}, d(y) = {}", d.on_x(), d.on_y());

    let data = SigmaQData::new(2, 2)
        .with_alpha(0, 1, int(1))
        .unwrap()
        .with_alpha(1, 2, rat(-1, 2))
        .unwrap()
        .with_f(vec![int(1), int(0), int(3)])
        .unwrap()
        .with_g(vec![int(0), int(2)])
        .unwrap();
    let d = build_sigma_q(&data, &disc).unwrap();
    println!("sigma_q: d(x) = {}", d.on_x());
    println!("         d(y) = {}", d.on_y());
    let back = classify_sigma_q(&d, &disc).unwrap().unwrap();
    assert_eq!(back, data.normalized());
    for ((m, n), b) in data.beta(&q) {
        println!("  beta_{m}{n} = {b}");
    }

    for (m, n) in [(1, 1), (2, 2), (1, 3)] {
        println!(
            "dim at ({m}, {n}) = {}",
            sigma_q_dimension(&disc, m, n).unwrap()
        );
    }
    println!(
        "x y^n identities hold for n <= 12: {}",
        (1..=12).all(|n| lemma52_check(n, &q).unwrap())
    );
}
