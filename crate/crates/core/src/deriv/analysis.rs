use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::skew::{check_relations, SkewDerivation};
use super::theorem::{from_theorem_data, TheoremData};
use super::DerivError;
use crate::arith::rat::serde_rat;
use crate::arith::{Poly, Rat};
use crate::gwa::{mirror_algebra, Grading, GwaAlgebra, GwaElement, Homogeneity};
use crate::linsolve::{solve, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCheckResult {
    pub is_q_derivation: bool,
    #[serde(
        rename = "Q",
        default,
        skip_serializing_if = "Option::is_none",
        with = "opt_rat"
    )]
    pub q: Option<Rat>,
}

mod opt_rat {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Rat>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(r) => serde_rat::serialize(r, s),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rat>, D::Error> {
        #[derive(Deserialize)]
        struct W(#[serde(with = "serde_rat")] Rat);
        Ok(Option::<W>::deserialize(d)?.map(|w| w.0))
    }
}

/// Looks for a scalar `Q` with `sigma o d o sigma^-1 = Q d` on `h`, `x`, `y`.
///
/// Each term `r X^k` of `d(g)` rescales by `s_g mu^-k`, where `s_g` is
/// `1`, `mu`, `mu^-1` for `g = h, x, y`. The zero map reports `Q = 1`.
pub fn q_check(d: &SkewDerivation) -> QCheckResult {
    let mu = d.mu();
    let scales = [Rat::one(), mu.clone(), mu.recip()];
    let mut q: Option<Rat> = None;
    for (val, s) in d.values().into_iter().zip(scales) {
        let twisted = d.sigma().apply(val).scale(&s);
        for (k, r) in val.terms() {
            let t = twisted.coeff(k);
            let ratio = t.leading_coeff().expect("nonzero") / r.leading_coeff().expect("nonzero");
            if r.scale(&ratio) != t {
                return QCheckResult {
                    is_q_derivation: false,
                    q: None,
                };
            }
            match &q {
                None => q = Some(ratio),
                Some(prev) if prev != &ratio => {
                    return QCheckResult {
                        is_q_derivation: false,
                        q: None,
                    }
                }
                _ => {}
            }
        }
    }
    QCheckResult {
        is_q_derivation: true,
        q: Some(q.unwrap_or_else(Rat::one)),
    }
}

/// The common value of `deg d(g) - deg g` over the generators.
///
/// Generators with `d(g) = 0` impose nothing; the zero map has degree 0.
pub fn degree_profile(d: &SkewDerivation, grading: &Grading) -> Homogeneity {
    let gen_deg = [grading.w(), grading.k(), grading.d() - grading.k()];
    let mut l = None;
    for (val, g) in d.values().into_iter().zip(gen_deg) {
        match grading.degree(val) {
            Homogeneity::Zero => {}
            Homogeneity::Inhomogeneous => return Homogeneity::Inhomogeneous,
            Homogeneity::Degree(dv) => match l {
                None => l = Some(dv - g),
                Some(prev) if prev != dv - g => return Homogeneity::Inhomogeneous,
                _ => {}
            },
        }
    }
    Homogeneity::Degree(l.unwrap_or(0))
}

/// The inner derivation `g -> b sigma(g) - g b`.
pub fn inner_derivation(
    b: &GwaElement,
    alg: &GwaAlgebra,
    mu: Rat,
) -> Result<SkewDerivation, DerivError> {
    let zero = SkewDerivation::zero(mu)?;
    let comm = |g: &GwaElement| &alg.mul(b, &zero.sigma().apply(g)) - &alg.mul(g, b);
    let cand = SkewDerivation::new(
        zero.mu().clone(),
        comm(&GwaElement::h()),
        comm(&GwaElement::x()),
        comm(&GwaElement::y()),
    )?;
    check_relations(&cand, alg).map_err(DerivError::Construction)
}

/// Searches for `b = sum_{|k| <= degree_bound} r_k X^k` with
/// `deg r_k <= poly_bound` whose inner derivation equals `d`.
///
/// Exact linear algebra; `None` means no witness exists inside the bounds.
/// When several witnesses exist the one with all free unknowns zero is returned.
pub fn inner_witness(
    d: &SkewDerivation,
    alg: &GwaAlgebra,
    degree_bound: u32,
    poly_bound: u32,
) -> Result<Option<GwaElement>, DerivError> {
    if !d.is_verified() {
        return Err(DerivError::Unverified);
    }
    if d.verified_for() != Some(alg) {
        return Err(DerivError::AlgebraMismatch);
    }
    let db = degree_bound as i64;
    let basis: Vec<(i64, usize)> = (-db..=db)
        .flat_map(|k| (0..=poly_bound as usize).map(move |e| (k, e)))
        .collect();
    let images: Vec<[GwaElement; 3]> = basis
        .iter()
        .map(|&(k, e)| {
            let b = GwaElement::term(Poly::monomial(Rat::one(), e), k);
            let inner = inner_derivation(&b, alg, d.mu().clone())?;
            Ok([
                inner.on_h().clone(),
                inner.on_x().clone(),
                inner.on_y().clone(),
            ])
        })
        .collect::<Result<_, DerivError>>()?;
    let target = d.values();

    // one equation per (generator, degree, power of h) that occurs anywhere
    let mut rows: BTreeMap<(usize, i64, usize), usize> = BTreeMap::new();
    let mut note = |g: usize, e: &GwaElement| {
        for (k, r) in e.terms() {
            for p in r.support() {
                let n = rows.len();
                rows.entry((g, k, p)).or_insert(n);
            }
        }
    };
    for img in &images {
        for (g, e) in img.iter().enumerate() {
            note(g, e);
        }
    }
    for (g, e) in target.iter().enumerate() {
        note(g, e);
    }
    let mut m = Matrix::zeros(rows.len(), basis.len());
    let mut rhs = vec![Rat::zero(); rows.len()];
    for (col, img) in images.iter().enumerate() {
        for (g, e) in img.iter().enumerate() {
            for (k, r) in e.terms() {
                for (p, c) in r.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        m.set(rows[&(g, k, p)], col, c.clone());
                    }
                }
            }
        }
    }
    for (g, e) in target.iter().enumerate() {
        for (k, r) in e.terms() {
            for (p, c) in r.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    rhs[rows[&(g, k, p)]] = c.clone();
                }
            }
        }
    }
    let Some(sol) = solve(&m, &rhs) else {
        return Ok(None);
    };
    let b = GwaElement::from_terms(
        basis
            .iter()
            .zip(sol)
            .map(|(&(k, e), c)| (k, Poly::monomial(c, e))),
    );
    let check = inner_derivation(&b, alg, d.mu().clone())?;
    if &check != d {
        return Err(DerivError::InvalidData(
            "solver witness failed the re-check".into(),
        ));
    }
    Ok(Some(b))
}

/// Why a derivation is not one of the one-sided forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotOfThisForm {
    pub reason: String,
    /// Offending `(deg, coefficient)` when there is a single culprit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub term: Option<(i64, Poly)>,
}

impl std::fmt::Display for NotOfThisForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.term {
            Some((k, r)) => write!(f, "{} (term {r} at degree {k})", self.reason),
            None => f.write_str(&self.reason),
        }
    }
}

fn not_form(reason: &str, term: Option<(i64, &Poly)>) -> NotOfThisForm {
    NotOfThisForm {
        reason: reason.into(),
        term: term.map(|(k, r)| (k, r.clone())),
    }
}

/// Recovers theorem data for derivations with `d(x) = 0` and `d(R)` in
/// nonnegative degrees, or (through the x-y symmetry) `d(y) = 0` and `d(R)`
/// in nonpositive degrees. The rebuilt derivation is compared with `d`.
pub fn classify_positive(
    d: &SkewDerivation,
    alg: &GwaAlgebra,
) -> Result<Result<TheoremData, NotOfThisForm>, DerivError> {
    if d.verified_for() != Some(alg) {
        return Err(if d.is_verified() {
            DerivError::AlgebraMismatch
        } else {
            DerivError::Unverified
        });
    }
    let positive_side = d.on_x().is_zero() && d.on_h().min_degree().is_none_or(|k| k >= 0);
    if positive_side {
        return Ok(classify_case_one(d, alg));
    }
    let negative_side = d.on_y().is_zero() && d.on_h().max_degree().is_none_or(|k| k <= 0);
    if !negative_side {
        if !d.on_x().is_zero() && !d.on_y().is_zero() {
            return Ok(Err(not_form(
                "both d(x) and d(y) are nonzero",
                d.on_x().terms().next(),
            )));
        }
        let culprit = if d.on_x().is_zero() {
            d.on_h().terms().find(|(k, _)| *k < 0)
        } else {
            d.on_h().terms().find(|(k, _)| *k > 0)
        };
        return Ok(Err(not_form("d(h) leaves the allowed half", culprit)));
    }
    let (mirror, md) = transport(d, alg)?;
    let mirrored = match classify_case_one(&md, &mirror) {
        Ok(data) => data,
        Err(e) => return Ok(Err(e)),
    };
    // weight m over the mirror is weight -m here; a weight-0 part needs the
    // c that cancels its contribution to d(y)
    let mut data = TheoremData::new(d.mu().clone());
    for (w, p) in mirrored.alphas() {
        data.set_alpha(-w, p.clone());
    }
    let alpha0_a = data.alpha(0).apply(alg.phi(), alg.a());
    if !alpha0_a.is_zero() {
        match alpha0_a.div_exact(alg.a())? {
            Some(q) => data.c = alg.phi_pow(1, &q),
            None => {
                return Ok(Err(not_form(
                    "a does not divide alpha_0(a)",
                    Some((0, &alpha0_a)),
                )))
            }
        }
    }
    Ok(rebuild_matches(d, alg, data))
}

fn classify_case_one(d: &SkewDerivation, alg: &GwaAlgebra) -> Result<TheoremData, NotOfThisForm> {
    let mut data = TheoremData::new(d.mu().clone());
    for (k, r) in d.on_h().terms() {
        data.set_alpha(k, r.clone());
    }
    rebuild_matches(d, alg, data)
}

fn rebuild_matches(
    d: &SkewDerivation,
    alg: &GwaAlgebra,
    data: TheoremData,
) -> Result<TheoremData, NotOfThisForm> {
    match from_theorem_data(&data, alg) {
        Ok(rebuilt) if &rebuilt == d => Ok(data),
        Ok(rebuilt) => {
            let diff = rebuilt.on_y() - d.on_y();
            let culprit = diff.terms().next();
            Err(not_form(
                "d(y) differs from the value forced by d(h)",
                culprit,
            ))
        }
        Err(e) => Err(NotOfThisForm {
            reason: format!("coefficients of d(h) are not admissible: {e}"),
            term: None,
        }),
    }
}

/// Pushes `d` through the x-y symmetry: the image lives on
/// `R(phi(a), phi^-1)` with coarseness `1/mu`, and its values on `x`, `y`
/// are the images of `d(y)`, `d(x)`.
pub fn transport(
    d: &SkewDerivation,
    alg: &GwaAlgebra,
) -> Result<(GwaAlgebra, SkewDerivation), DerivError> {
    let mirror = mirror_algebra(alg);
    let cand = SkewDerivation::new(
        d.mu().recip(),
        d.on_h().negate_degrees(),
        d.on_y().negate_degrees(),
        d.on_x().negate_degrees(),
    )?;
    let verified = check_relations(&cand, &mirror).map_err(DerivError::Construction)?;
    Ok((mirror, verified))
}
