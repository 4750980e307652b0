//! Exact polynomial arithmetic over Q: division, gcd and Bezout witnesses.
use gwa_skew::arith::{extended_gcd, int, AffineAuto, Poly};

fn main() {
    let p = Poly::from_ints(&[1, -1]); // 1 - h
    let phi = AffineAuto::scaling(int(2)).unwrap();
    for i in 1..4 {
        let shifted = phi.apply(i, &p);
        let w = extended_gcd(&p, &shifted).unwrap();
        println!("gcd({p}, {shifted}) = {}; s = {}, t = {}", w.gcd, w.s, w.t);
        assert!(w.holds());
    }

    let h = Poly::h();
    let w = extended_gcd(&h, &phi.apply(1, &h)).unwrap();
    println!("gcd(h, 2h) = {}", w.gcd);

    let (quot, rem) = Poly::from_ints(&[1, 0, 0, 1])
        .divrem(&Poly::from_ints(&[1, 1]))
        .unwrap();
    println!("(1 + h^3) / (1 + h) = {quot} rem {rem}");
}
