//! Extended Euclidean algorithm on `Q[h]` with explicit Bezout witnesses.

use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::ArithError;

/// `s * lhs + t * rhs = gcd`, with `gcd` monic (or zero).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BezoutWitness {
    pub gcd: Poly,
    pub s: Poly,
    pub t: Poly,
    pub lhs: Poly,
    pub rhs: Poly,
}

impl BezoutWitness {
    /// Re-checks the identity by multiplication.
    pub fn holds(&self) -> bool {
        &(&self.s * &self.lhs) + &(&self.t * &self.rhs) == self.gcd
    }

    pub fn is_coprime(&self) -> bool {
        self.gcd.is_one()
    }
}

pub fn extended_gcd(p: &Poly, q: &Poly) -> Result<BezoutWitness, ArithError> {
    if p.is_zero() && q.is_zero() {
        return Err(ArithError::BothZero);
    }
    let (mut r0, mut r1) = (p.clone(), q.clone());
    let (mut s0, mut s1) = (Poly::one(), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (quo, rem) = r0.divrem(&r1)?;
        let s2 = &s0 - &(&quo * &s1);
        let t2 = &t0 - &(&quo * &t1);
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let lc = r0.leading_coeff().expect("nonzero gcd").recip();
    Ok(BezoutWitness {
        gcd: r0.scale(&lc),
        s: s0.scale(&lc),
        t: t0.scale(&lc),
        lhs: p.clone(),
        rhs: q.clone(),
    })
}
