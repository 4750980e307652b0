use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::OrthoError;
use crate::deriv::SkewDerivation;
use crate::gwa::{GwaAlgebra, GwaElement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Pair {
    pub a: GwaElement,
    pub b: GwaElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateEntry {
    /// 1-based position of the derivation in the system.
    pub index: usize,
    pub pairs: Vec<Pair>,
}

/// Finite sets `{a_it}`, `{b_it}` with `sum_t a_it d_k(b_it) = delta_ik`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrthoCertificate {
    pub entries: Vec<CertificateEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Triple {
    pub a: GwaElement,
    pub b: GwaElement,
    pub c: GwaElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeSetEntry {
    pub index: usize,
    pub triples: Vec<Triple>,
}

/// Sets with `sum_t a_it d_k(b_it) sigma_k sigma_i^-1(c_it) = delta_ik`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeSetCertificate {
    pub entries: Vec<ThreeSetEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthoFailure {
    pub i: usize,
    pub k: usize,
    pub residual: GwaElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthoReport {
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<OrthoFailure>,
}

impl OrthoReport {
    fn pass() -> Self {
        OrthoReport {
            ok: true,
            failure: None,
        }
    }

    fn fail(i: usize, k: usize, residual: GwaElement) -> Self {
        OrthoReport {
            ok: false,
            failure: Some(OrthoFailure { i, k, residual }),
        }
    }
}

fn index_map<T>(
    entries: impl Iterator<Item = (usize, T)>,
    n: usize,
) -> Result<BTreeMap<usize, T>, OrthoError> {
    let mut map = BTreeMap::new();
    for (index, v) in entries {
        if index == 0 || index > n {
            return Err(OrthoError::InvalidCertificate(format!(
                "index {index} outside 1..={n}"
            )));
        }
        if map.insert(index, v).is_some() {
            return Err(OrthoError::InvalidCertificate(format!(
                "index {index} appears twice"
            )));
        }
    }
    Ok(map)
}

fn delta(i: usize, k: usize) -> GwaElement {
    if i == k {
        GwaElement::one()
    } else {
        GwaElement::zero()
    }
}

/// Evaluates every sum exactly; the first `(i, k)` whose sum differs from
/// `delta_ik` is reported together with the difference.
pub fn verify_certificate(
    cert: &OrthoCertificate,
    system: &[SkewDerivation],
    alg: &GwaAlgebra,
) -> Result<OrthoReport, OrthoError> {
    let n = system.len();
    let by_index = index_map(cert.entries.iter().map(|e| (e.index, &e.pairs)), n)?;
    for i in 1..=n {
        let pairs = by_index.get(&i).map(|p| p.as_slice()).unwrap_or(&[]);
        for (k, dk) in system.iter().enumerate() {
            let k = k + 1;
            let mut sum = GwaElement::zero();
            for p in pairs {
                sum = &sum + &alg.mul(&p.a, &dk.evaluate(alg, &p.b)?);
            }
            let residual = &sum - &delta(i, k);
            if !residual.is_zero() {
                return Ok(OrthoReport::fail(i, k, residual));
            }
        }
    }
    Ok(OrthoReport::pass())
}

pub fn verify_three_set(
    cert: &ThreeSetCertificate,
    system: &[SkewDerivation],
    alg: &GwaAlgebra,
) -> Result<OrthoReport, OrthoError> {
    let n = system.len();
    let by_index = index_map(cert.entries.iter().map(|e| (e.index, &e.triples)), n)?;
    for i in 1..=n {
        let triples = by_index.get(&i).map(|t| t.as_slice()).unwrap_or(&[]);
        let si = system[i - 1].sigma();
        for (k, dk) in system.iter().enumerate() {
            let k = k + 1;
            let mut sum = GwaElement::zero();
            for t in triples {
                let twisted_c = dk.sigma().apply(&si.apply_inverse(&t.c));
                let lhs = alg.mul(&t.a, &dk.evaluate(alg, &t.b)?);
                sum = &sum + &alg.mul(&lhs, &twisted_c);
            }
            let residual = &sum - &delta(i, k);
            if !residual.is_zero() {
                return Ok(OrthoReport::fail(i, k, residual));
            }
        }
    }
    Ok(OrthoReport::pass())
}

fn is_constant(e: &GwaElement) -> bool {
    e.as_poly()
        .is_some_and(|p| p.degree().is_none_or(|d| d == 0))
}

impl ThreeSetCertificate {
    /// `{a, -a b}`, `{b sigma_i^-1(c), sigma_i^-1(c)}`: the two-set form.
    ///
    /// Pairs with `a = 0` or constant `b` contribute nothing and are dropped.
    pub fn to_two_set(
        &self,
        system: &[SkewDerivation],
        alg: &GwaAlgebra,
    ) -> Result<OrthoCertificate, OrthoError> {
        let n = system.len();
        index_map(self.entries.iter().map(|e| (e.index, ())), n)?;
        let mut entries = Vec::with_capacity(self.entries.len());
        for entry in &self.entries {
            let si = system[entry.index - 1].sigma();
            let mut pairs = Vec::new();
            let mut push = |a: GwaElement, b: GwaElement| {
                if !a.is_zero() && !is_constant(&b) {
                    pairs.push(Pair { a, b });
                }
            };
            for t in &entry.triples {
                let c = si.apply_inverse(&t.c);
                push(t.a.clone(), alg.mul(&t.b, &c));
                push(-alg.mul(&t.a, &t.b), c);
            }
            entries.push(CertificateEntry {
                index: entry.index,
                pairs,
            });
        }
        Ok(OrthoCertificate { entries })
    }
}
