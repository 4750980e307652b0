use num_traits::Zero;

use super::certificate::{
    verify_certificate, verify_three_set, OrthoCertificate, ThreeSetCertificate, ThreeSetEntry,
    Triple,
};
use super::OrthoError;
use crate::arith::{extended_gcd, rat_pow, BezoutWitness, Poly};
use crate::deriv::SkewDerivation;
use crate::gwa::{GwaAlgebra, GwaElement};

/// Everything produced on the way to a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateBuild {
    pub three_set: ThreeSetCertificate,
    pub certificate: OrthoCertificate,
    /// One per derivation, in order: `s * left + t * right = 1`.
    pub bezout: Vec<BezoutWitness>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    /// `u d(g)`, multiplier on the left.
    Left,
    /// `d(g) w`, multiplier on the right.
    Right,
}

fn single_term(index: usize, e: &GwaElement) -> Result<Option<(i64, Poly)>, OrthoError> {
    let mut it = e.terms();
    match (it.next(), it.next()) {
        (None, _) => Ok(None),
        (Some((k, r)), None) => Ok(Some((k, r.clone()))),
        _ => Err(OrthoError::NotMonomial {
            index,
            value: e.to_string(),
        }),
    }
}

/// Multipliers `(r_j, e_j)` (standing for `r_j X^e_j`) such that the
/// combination of `d_i(g_j)` with them lands in `R`, while the same
/// combination of `d_k(g_j)` (twisted by `sigma_k sigma_i^-1` on the right
/// side) vanishes.
struct Combination {
    multipliers: Vec<Option<(Poly, i64)>>,
    landed: Poly,
}

fn combine(
    alg: &GwaAlgebra,
    index: usize,
    gens: &[GwaElement],
    own: &SkewDerivation,
    other: Option<&SkewDerivation>,
    side: Side,
) -> Result<Combination, OrthoError> {
    let mut own_vals = Vec::new();
    let mut other_vals = Vec::new();
    for g in gens {
        own_vals.push(single_term(index, &own.evaluate(alg, g)?)?);
        other_vals.push(match other {
            Some(d) => single_term(index, &d.evaluate(alg, g)?)?,
            None => None,
        });
    }
    let mut exps: Vec<Option<i64>> = own_vals
        .iter()
        .map(|v| v.as_ref().map(|(f, _)| -f))
        .collect();

    // all killed terms must sit in one degree
    let mut target = None;
    for (e, w) in exps.iter().zip(&other_vals) {
        if let (Some(e), Some((d, _))) = (e, w) {
            match target {
                None => target = Some(e + d),
                Some(t) if t != e + d => return Err(OrthoError::Misaligned { index }),
                _ => {}
            }
        }
    }
    if let Some(t) = target {
        for (e, w) in exps.iter_mut().zip(&other_vals) {
            if let (None, Some((d, _))) = (&e, w) {
                *e = Some(t - d);
            }
        }
    }

    // coefficient of X^target contributed by each generator, per unit multiplier
    let twist = |e: i64| match (side, other) {
        (Side::Right, Some(k)) => rat_pow(k.mu(), -e) * rat_pow(own.mu(), e),
        _ => num_traits::One::one(),
    };
    let mut kill: Vec<Option<Poly>> = Vec::new();
    for (e, w) in exps.iter().zip(&other_vals) {
        kill.push(match (e, w, target) {
            (Some(e), Some((d, p)), Some(t)) => {
                let w = GwaElement::term(p.clone(), *d);
                let unit = alg.monomial(*e);
                let prod = match side {
                    Side::Left => alg.mul(&unit, &w),
                    Side::Right => alg.mul(&w, &unit),
                };
                let c = prod.coeff(t).scale(&twist(*e));
                (!c.is_zero()).then_some(c)
            }
            _ => None,
        });
    }

    let active: Vec<usize> = (0..gens.len()).filter(|&j| kill[j].is_some()).collect();
    // the (twisted) polynomial standing in front of each generator
    let mut coeffs: Vec<Poly> = vec![Poly::zero(); gens.len()];
    match active.as_slice() {
        [] => {}
        [j] => {
            // its own term cannot be cancelled, so it is left out
            coeffs[*j] = Poly::zero();
        }
        [j1, j2] => {
            let (q1, q2) = (kill[*j1].as_ref().unwrap(), kill[*j2].as_ref().unwrap());
            let g = extended_gcd(q1, q2)?.gcd;
            coeffs[*j1] = q2.div_exact(&g)?.expect("gcd divides");
            coeffs[*j2] = -&q1.div_exact(&g)?.expect("gcd divides");
        }
        _ => {
            return Err(OrthoError::GeneratorCount {
                expected: 2,
                found: active.len(),
            })
        }
    }
    if active.len() < 2 {
        if let Some(j) = (0..gens.len()).find(|&j| own_vals[j].is_some() && !active.contains(&j)) {
            coeffs[j] = Poly::one();
        }
    }

    let mut multipliers = Vec::with_capacity(gens.len());
    let mut landed = GwaElement::zero();
    for (j, g) in gens.iter().enumerate() {
        let (Some(e), false) = (exps[j], coeffs[j].is_zero()) else {
            multipliers.push(None);
            continue;
        };
        let r = match (side, &other_vals[j]) {
            // on the right the multiplier is seen through phi^d
            (Side::Right, Some((d, _))) if active.len() == 2 => alg.phi_pow(-d, &coeffs[j]),
            _ => coeffs[j].clone(),
        };
        let m = GwaElement::term(r.clone(), e);
        let v = own.evaluate(alg, g)?;
        landed = &landed
            + &match side {
                Side::Left => alg.mul(&m, &v),
                Side::Right => alg.mul(&v, &m),
            };
        multipliers.push(Some((r, e)));
    }
    let landed = landed.as_poly().ok_or(OrthoError::Misaligned { index })?;
    Ok(Combination {
        multipliers,
        landed,
    })
}

fn bezout(index: usize, left: &Poly, right: &Poly) -> Result<BezoutWitness, OrthoError> {
    let not_coprime = |gcd: Poly| OrthoError::NotCoprime {
        index,
        gcd,
        left: left.clone(),
        right: right.clone(),
    };
    if let Some(c) = left.as_constant().filter(|c| !c.is_zero()) {
        return Ok(BezoutWitness {
            gcd: Poly::one(),
            s: Poly::constant(c.recip()),
            t: Poly::zero(),
            lhs: left.clone(),
            rhs: right.clone(),
        });
    }
    let w = extended_gcd(left, right).map_err(|_| not_coprime(Poly::zero()))?;
    if !w.is_coprime() || !w.holds() {
        return Err(not_coprime(w.gcd));
    }
    Ok(w)
}

/// Builds a certificate for `system` from one generator per derivation.
///
/// If `b_i` is killed by every other derivation the two landed polynomials
/// are `X^-f d_i(b_i)` and `d_i(b_i) X^-f`. Otherwise (pairs only) both
/// generators are combined so that the other derivation cancels. Either way
/// a Bezout identity between the two landed polynomials gives the entry.
pub fn build_certificate(
    b_list: &[GwaElement],
    system: &[SkewDerivation],
    alg: &GwaAlgebra,
) -> Result<CertificateBuild, OrthoError> {
    if b_list.len() != system.len() {
        return Err(OrthoError::GeneratorCount {
            expected: system.len(),
            found: b_list.len(),
        });
    }
    let mut entries = Vec::new();
    let mut witnesses = Vec::new();
    for (i0, di) in system.iter().enumerate() {
        let index = i0 + 1;
        let mut cross = None;
        for (k0, dk) in system.iter().enumerate() {
            if k0 != i0 && !dk.evaluate(alg, &b_list[i0])?.is_zero() {
                cross = Some(k0);
                break;
            }
        }
        let (gens, other) = match cross {
            None => (vec![b_list[i0].clone()], None),
            Some(k0) if system.len() == 2 => (
                vec![b_list[i0].clone(), b_list[k0].clone()],
                Some(&system[k0]),
            ),
            Some(k0) => {
                return Err(OrthoError::CrossTerm {
                    i: index,
                    k: k0 + 1,
                })
            }
        };
        let left = combine(alg, index, &gens, di, other, Side::Left)?;
        let right = combine(alg, index, &gens, di, other, Side::Right)?;
        let w = bezout(index, &left.landed, &right.landed)?;

        let mut triples = Vec::new();
        for (g, m) in gens.iter().zip(&left.multipliers) {
            if let Some((r, e)) = m {
                triples.push(Triple {
                    a: GwaElement::term(&w.s * r, *e),
                    b: g.clone(),
                    c: GwaElement::one(),
                });
            }
        }
        if !w.t.is_zero() {
            for (g, m) in gens.iter().zip(&right.multipliers) {
                if let Some((r, e)) = m {
                    triples.push(Triple {
                        a: GwaElement::from_poly(w.t.clone()),
                        b: g.clone(),
                        c: GwaElement::term(r.clone(), *e),
                    });
                }
            }
        }
        entries.push(ThreeSetEntry { index, triples });
        witnesses.push(w);
    }
    let three_set = ThreeSetCertificate { entries };
    let certificate = three_set.to_two_set(system, alg)?;
    for report in [
        verify_three_set(&three_set, system, alg)?,
        verify_certificate(&certificate, system, alg)?,
    ] {
        if let Some(f) = report.failure {
            return Err(OrthoError::InvalidCertificate(format!(
                "constructed certificate fails at (i, k) = ({}, {}): residual {}",
                f.i, f.k, f.residual
            )));
        }
    }
    Ok(CertificateBuild {
        three_set,
        certificate,
        bezout: witnesses,
    })
}

pub fn certificate_from_ideal(
    b_list: &[GwaElement],
    system: &[SkewDerivation],
    alg: &GwaAlgebra,
) -> Result<OrthoCertificate, OrthoError> {
    Ok(build_certificate(b_list, system, alg)?.certificate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn plane_zero_pair_is_minimal() {
        let alg = GwaAlgebra::plane(int(2)).unwrap();
        let d =
            SkewDerivation::from_xy(&alg, int(2), GwaElement::zero(), GwaElement::one()).unwrap();
        let db =
            SkewDerivation::from_xy(&alg, int(2), GwaElement::one(), GwaElement::zero()).unwrap();
        let cert =
            certificate_from_ideal(&[GwaElement::y(), GwaElement::x()], &[d, db], &alg).unwrap();
        let pairs: Vec<_> = cert.entries.iter().map(|e| e.pairs.clone()).collect();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].len(), 1);
        assert_eq!(pairs[0][0].a, GwaElement::one());
        assert_eq!(pairs[0][0].b, GwaElement::y());
        assert_eq!(pairs[1][0].b, GwaElement::x());
    }

    #[test]
    fn plane_shifted_pair_has_gcd_h() {
        let alg = GwaAlgebra::plane(int(2)).unwrap();
        let d = SkewDerivation::from_xy(&alg, int(2), GwaElement::zero(), GwaElement::x()).unwrap();
        let db =
            SkewDerivation::from_xy(&alg, int(2), GwaElement::y(), GwaElement::zero()).unwrap();
        let err = certificate_from_ideal(&[GwaElement::y(), GwaElement::x()], &[d, db], &alg);
        match err {
            Err(OrthoError::NotCoprime { index: 1, gcd, .. }) => assert_eq!(gcd, Poly::h()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_derivation_generates_nothing() {
        let alg = GwaAlgebra::disc(int(2)).unwrap();
        let d = SkewDerivation::zero(int(2)).unwrap().verify(&alg).unwrap();
        assert!(matches!(
            certificate_from_ideal(&[GwaElement::y()], &[d], &alg),
            Err(OrthoError::NotCoprime { .. })
        ));
    }

    #[test]
    fn wrong_generator_count() {
        let alg = GwaAlgebra::disc(int(2)).unwrap();
        assert!(matches!(
            certificate_from_ideal(&[GwaElement::y()], &[], &alg),
            Err(OrthoError::GeneratorCount { .. })
        ));
    }
}
