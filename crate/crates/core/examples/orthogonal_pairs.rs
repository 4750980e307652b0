//! Orthogonality certificates for pairs of skew derivations.
use gwa_skew::arith::{int, rat, Poly};
use gwa_skew::deriv::TwistedPolyDerivation;
use gwa_skew::gwa::{GwaAlgebra, GwaElement};
use gwa_skew::ortho::{
    build_certificate, disc_pair, kl_conditions, prop42_pair, verify_certificate, OrthoError,
};

fn main() {
    let gens = [GwaElement::y(), GwaElement::x()];

    for q in [int(2), rat(1, 2)] {
        let disc = GwaAlgebra::disc(q.clone()).unwrap();
        let [r, _] = kl_conditions(3, 3, &q).unwrap();
        let (d, db) = disc_pair(3, 3, &int(1), &int(1), &q).unwrap();
        let system = [d, db];
        let build = build_certificate(&gens, &system, &disc).unwrap();
        let report = verify_certificate(&build.certificate, &system, &disc).unwrap();
        println!(
            "disc q = {q}: q_33 = {}, certificate ok = {}",
            r.q_kl, report.ok
        );
        for (i, e) in build.certificate.entries.iter().enumerate() {
            for p in &e.pairs {
                println!("  {}: a = {}, b = {}", i + 1, p.a, p.b);
            }
        }
    }

    let plane = GwaAlgebra::plane(int(2)).unwrap();
    let one = |w| TwistedPolyDerivation::new(w, Poly::one());
    for m in 0..2 {
        let pair = prop42_pair(
            m,
            0,
            &one(i64::from(m) + 1),
            &one(-1),
            &plane,
            &int(2),
            &int(2),
        )
        .unwrap();
        let system = [pair.first, pair.second];
        match build_certificate(&gens, &system, &plane) {
            Ok(b) => println!(
                "plane m = {m}: {} pairs",
                b.certificate
                    .entries
                    .iter()
                    .map(|e| e.pairs.len())
                    .sum::<usize>()
            ),
            Err(OrthoError::NotCoprime { gcd, .. }) => {
                println!("plane m = {m}: not coprime, gcd {gcd}")
            }
            Err(e) => println!("plane m = {m}: {e}"),
        }
    }
}
