use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::OrthoError;
use crate::arith::rat::serde_rat;
use crate::arith::{rat_pow, Rat};

/// `[m]_q = 1 + q + ... + q^(m-1)`; total, so `[m]_1 = m`.
pub fn q_int(m: u32, q: &Rat) -> Rat {
    let mut sum = Rat::zero();
    let mut p = Rat::one();
    for _ in 0..m {
        sum += &p;
        p *= q;
    }
    sum
}

/// `q_kl = (1 - [k]_q [l]_q q^(1-k)) / (1 - [k]_q [l]_q)`.
pub fn qkl(k: u32, l: u32, q: &Rat) -> Result<Rat, OrthoError> {
    let kl = q_int(k, q) * q_int(l, q);
    let den = Rat::one() - &kl;
    if den.is_zero() {
        return Err(OrthoError::ZeroDenominator {
            k: k.into(),
            l: l.into(),
            q: q.clone(),
        });
    }
    let num = Rat::one() - kl * rat_pow(q, 1 - i64::from(k));
    let value = num / den;
    if k == l && q != &Rat::one() && !q.is_zero() {
        // q_kk = q^-k [k+1]_q / ([k]_q + 1)
        let reduced = rat_pow(q, -i64::from(k)) * q_int(k + 1, q) / (q_int(k, q) + Rat::one());
        debug_assert_eq!(value, reduced);
        if value != reduced {
            return Err(OrthoError::Precondition(format!(
                "q_kk disagrees with its reduced form at k = {k}, q = {q}"
            )));
        }
    }
    Ok(value)
}

/// The conditions on the ordered pair `(k, l)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairConditionReport {
    pub k: u32,
    pub l: u32,
    #[serde(with = "serde_rat")]
    pub q_kl: Rat,
    #[serde(with = "serde_rat")]
    pub q_lk: Rat,
    /// Exponents `i` from the forbidden range with `q_kl = q^i`.
    pub violated_exponents: Vec<i64>,
    /// `q_kl != q^(2l-2) q_lk`.
    pub condition2_ok: bool,
}

impl PairConditionReport {
    pub fn holds(&self) -> bool {
        self.violated_exponents.is_empty() && self.condition2_ok
    }

    fn compute(k: u32, l: u32, q: &Rat) -> Result<Self, OrthoError> {
        let q_kl = qkl(k, l, q)?;
        let q_lk = qkl(l, k, q)?;
        let (k_, l_) = (i64::from(k), i64::from(l));
        let exponents = (-2 * k_ + 3..=-k_ + 1)
            .chain(l_..=2 * l_ - 3)
            .chain(std::iter::once(2 * l_ - 1));
        let violated_exponents = exponents.filter(|&i| q_kl == rat_pow(q, i)).collect();
        let condition2_ok = q_kl != rat_pow(q, 2 * l_ - 2) * &q_lk;
        Ok(PairConditionReport {
            k,
            l,
            q_kl,
            q_lk,
            violated_exponents,
            condition2_ok,
        })
    }
}

/// Reports for `(k, l) = (m, n)` and `(n, m)`, in that order.
pub fn kl_conditions(m: u32, n: u32, q: &Rat) -> Result<[PairConditionReport; 2], OrthoError> {
    if m <= 1 || n <= 1 {
        return Err(OrthoError::Precondition(format!(
            "m and n must exceed 1 (got m = {m}, n = {n})"
        )));
    }
    if q.is_zero() || q == &Rat::one() || q == &-Rat::one() {
        return Err(OrthoError::Precondition(format!("q = {q} is 0 or a sign")));
    }
    Ok([
        PairConditionReport::compute(m, n, q)?,
        PairConditionReport::compute(n, m, q)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn q_integers() {
        assert_eq!(q_int(3, &int(2)), int(7));
        assert_eq!(q_int(4, &int(3)), int(40));
        assert_eq!(q_int(1, &rat(-5, 7)), int(1));
        assert_eq!(q_int(0, &int(2)), int(0));
        assert_eq!(q_int(5, &int(1)), int(5));
    }

    #[test]
    fn pascal_identity() {
        for q in [int(2), rat(3, 5), int(-2)] {
            for m in 0..=10 {
                assert_eq!(q_int(m + 1, &q), &q * q_int(m, &q) + Rat::one());
            }
        }
    }

    #[test]
    fn qkl_values() {
        assert_eq!(qkl(2, 2, &int(2)).unwrap(), rat(7, 16));
        assert!(matches!(
            qkl(1, 1, &int(2)),
            Err(OrthoError::ZeroDenominator { .. })
        ));
        // [2]_2 = 3, [3]_2 = 7: (1 - 21/2) / (1 - 21) = 19/40
        assert_eq!(qkl(2, 3, &int(2)).unwrap(), rat(19, 40));
    }

    #[test]
    fn conditions_hold_for_positive_q() {
        for q in [int(2), int(3), rat(1, 2)] {
            for n in 2..=4 {
                let [a, b] = kl_conditions(n, n, &q).unwrap();
                assert!(a.holds() && b.holds(), "q = {q}, n = {n}");
            }
        }
    }

    #[test]
    fn preconditions() {
        assert!(matches!(
            kl_conditions(2, 1, &int(2)),
            Err(OrthoError::Precondition(_))
        ));
        assert!(matches!(
            kl_conditions(2, 2, &int(-1)),
            Err(OrthoError::Precondition(_))
        ));
        // [2]_-2 = -1, so 1 - [2][2] = 0
        assert!(matches!(
            kl_conditions(2, 2, &int(-2)),
            Err(OrthoError::ZeroDenominator { .. })
        ));
        let [r, _] = kl_conditions(2, 3, &int(-2)).unwrap();
        assert_eq!((r.k, r.l), (2, 3));
    }

    proptest! {
        #[test]
        fn reduced_form_agrees(k in 2u32..8, num in 2i64..9, den in 1i64..9) {
            let q = rat(num, den);
            prop_assume!(q != Rat::one());
            let direct = qkl(k, k, &q).unwrap();
            let reduced = rat_pow(&q, -i64::from(k)) * q_int(k + 1, &q) / (q_int(k, &q) + Rat::one());
            prop_assert_eq!(direct, reduced);
        }
    }
}
