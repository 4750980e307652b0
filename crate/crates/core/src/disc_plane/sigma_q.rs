use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::basis::{from_yx_basis, poly_in, to_yx_basis, trim, yx_monomial, YxCoeffs};
use super::{require_disc_or_plane, DiscPlaneError};
use crate::arith::rat::{serde_rat, serde_rat_vec};
use crate::arith::Rat;
use crate::deriv::{relation_residuals, DerivError, SkewDerivation};
use crate::gwa::{GwaAlgebra, GwaElement};
use crate::linsolve::Matrix;
use crate::ortho::q_int;

/// Free parameters of a `sigma_q`-derivation of the disc or plane:
///
/// `d(x) = g(y) + sum alpha_mn y^m x^n` (`0 <= m < M`, `1 <= n <= N`),
/// `d(y) = f(x) - q sum [n+1]_q/[m]_q alpha_(m-1)(n+1) y^m x^n`.
///
/// The `beta` coefficients of `d(y)` are always derived, never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SigmaQData {
    m_bound: u32,
    n_bound: u32,
    alpha: BTreeMap<(u32, u32), Rat>,
    f: Vec<Rat>,
    g: Vec<Rat>,
}

impl SigmaQData {
    pub fn new(m_bound: u32, n_bound: u32) -> Self {
        SigmaQData {
            m_bound,
            n_bound,
            ..Default::default()
        }
    }

    pub fn m_bound(&self) -> u32 {
        self.m_bound
    }

    pub fn n_bound(&self) -> u32 {
        self.n_bound
    }

    pub fn alpha(&self) -> &BTreeMap<(u32, u32), Rat> {
        &self.alpha
    }

    /// Coefficients of `f(x)`, lowest first.
    pub fn f(&self) -> &[Rat] {
        &self.f
    }

    /// Coefficients of `g(y)`, lowest first.
    pub fn g(&self) -> &[Rat] {
        &self.g
    }

    pub fn set_alpha(&mut self, m: u32, n: u32, value: Rat) -> Result<(), DiscPlaneError> {
        if m >= self.m_bound || n == 0 || n > self.n_bound {
            return Err(DiscPlaneError::InvalidData(format!(
                "alpha_({m},{n}) outside 0 <= m < {}, 1 <= n <= {}",
                self.m_bound, self.n_bound
            )));
        }
        if value.is_zero() {
            self.alpha.remove(&(m, n));
        } else {
            self.alpha.insert((m, n), value);
        }
        Ok(())
    }

    pub fn with_alpha(mut self, m: u32, n: u32, value: Rat) -> Result<Self, DiscPlaneError> {
        self.set_alpha(m, n, value)?;
        Ok(self)
    }

    pub fn with_f(mut self, f: Vec<Rat>) -> Result<Self, DiscPlaneError> {
        let f = trim(f);
        if f.len() > self.n_bound as usize + 1 {
            return Err(DiscPlaneError::InvalidData(format!(
                "f has degree {} > N = {}",
                f.len() - 1,
                self.n_bound
            )));
        }
        self.f = f;
        Ok(self)
    }

    pub fn with_g(mut self, g: Vec<Rat>) -> Result<Self, DiscPlaneError> {
        let g = trim(g);
        if g.len() > self.m_bound as usize + 1 {
            return Err(DiscPlaneError::InvalidData(format!(
                "g has degree {} > M = {}",
                g.len() - 1,
                self.m_bound
            )));
        }
        self.g = g;
        Ok(self)
    }

    /// The same parameters with the smallest bounds that hold them.
    pub fn normalized(&self) -> Self {
        let m_bound = self
            .alpha
            .keys()
            .map(|&(m, _)| m + 1)
            .chain((self.g.len() as u32).checked_sub(1))
            .max()
            .unwrap_or(0);
        let n_bound = self
            .alpha
            .keys()
            .map(|&(_, n)| n)
            .chain((self.f.len() as u32).checked_sub(1))
            .max()
            .unwrap_or(0);
        SigmaQData {
            m_bound,
            n_bound,
            ..self.clone()
        }
    }

    /// `beta_mn = -q [n+1]_q / [m]_q alpha_(m-1)(n+1)` for `m >= 1`.
    pub fn beta(&self, q: &Rat) -> BTreeMap<(u32, u32), Rat> {
        self.alpha
            .iter()
            .map(|(&(m, n), a)| ((m + 1, n - 1), beta_for(q, m, n, a)))
            .collect()
    }
}

/// The `beta` forced at `(m + 1, n - 1)` by `alpha_mn`.
fn beta_for(q: &Rat, m: u32, n: u32, alpha: &Rat) -> Rat {
    -(q * q_int(n, q) / q_int(m + 1, q)) * alpha
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlphaEntry {
    m: u32,
    n: u32,
    #[serde(with = "serde_rat")]
    value: Rat,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SigmaQRepr {
    #[serde(rename = "M")]
    m_bound: u32,
    #[serde(rename = "N")]
    n_bound: u32,
    #[serde(default)]
    alpha: Vec<AlphaEntry>,
    #[serde(default, with = "serde_rat_vec")]
    f: Vec<Rat>,
    #[serde(default, with = "serde_rat_vec")]
    g: Vec<Rat>,
}

impl Serialize for SigmaQData {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SigmaQRepr {
            m_bound: self.m_bound,
            n_bound: self.n_bound,
            alpha: self
                .alpha
                .iter()
                .map(|(&(m, n), v)| AlphaEntry {
                    m,
                    n,
                    value: v.clone(),
                })
                .collect(),
            f: self.f.clone(),
            g: self.g.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SigmaQData {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = SigmaQRepr::deserialize(d)?;
        let mut data = SigmaQData::new(r.m_bound, r.n_bound)
            .with_f(r.f)
            .and_then(|x| x.with_g(r.g))
            .map_err(serde::de::Error::custom)?;
        for e in r.alpha {
            if data.alpha.contains_key(&(e.m, e.n)) {
                return Err(serde::de::Error::custom(format!(
                    "alpha_({},{}) given twice",
                    e.m, e.n
                )));
            }
            data.set_alpha(e.m, e.n, e.value)
                .map_err(serde::de::Error::custom)?;
        }
        Ok(data)
    }
}

/// A coefficient of `d(y)` that does not match the one forced by `d(x)`.
/// `(m, n)` indexes the `alpha` whose `beta` at `(m + 1, n - 1)` is off.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaQViolation {
    pub m: u32,
    pub n: u32,
    #[serde(with = "serde_rat")]
    pub expected: Rat,
    #[serde(with = "serde_rat")]
    pub found: Rat,
}

impl std::fmt::Display for SigmaQViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "coefficient of y^{} x^{} in d(y) is {}, alpha_({},{}) forces {}",
            self.m + 1,
            self.n - 1,
            self.found,
            self.m,
            self.n,
            self.expected
        )
    }
}

pub fn build_sigma_q(
    data: &SigmaQData,
    alg: &GwaAlgebra,
) -> Result<SkewDerivation, DiscPlaneError> {
    require_disc_or_plane(alg)?;
    let q = alg.q();
    let alpha: YxCoeffs = data.alpha.clone();
    let on_x = &poly_in(alg, &data.g, &GwaElement::y()) + &from_yx_basis(alg, &alpha);
    let on_y = &poly_in(alg, &data.f, &GwaElement::x()) + &from_yx_basis(alg, &data.beta(q));
    Ok(SkewDerivation::from_xy(alg, q.clone(), on_x, on_y)?)
}

/// Reads the parameters back off a verified `sigma_q`-derivation, with the
/// smallest bounds. Any coefficient of `d(y)` not matching the one forced
/// by `d(x)` is reported instead.
pub fn classify_sigma_q(
    d: &SkewDerivation,
    alg: &GwaAlgebra,
) -> Result<Result<SigmaQData, SigmaQViolation>, DiscPlaneError> {
    require_disc_or_plane(alg)?;
    match d.verified_for() {
        None => return Err(DerivError::Unverified.into()),
        Some(v) if v != alg => return Err(DerivError::AlgebraMismatch.into()),
        _ => {}
    }
    let q = alg.q();
    if d.mu() != q {
        return Err(DiscPlaneError::MuMismatch {
            mu: d.mu().clone(),
            q: q.clone(),
        });
    }
    Ok(read_sigma_q(alg, d.on_x(), d.on_y()))
}

/// The coefficient reading behind [`classify_sigma_q`], on raw values of
/// `d(x)` and `d(y)`; nothing is assumed about them.
pub fn read_sigma_q(
    alg: &GwaAlgebra,
    on_x: &GwaElement,
    on_y: &GwaElement,
) -> Result<SigmaQData, SigmaQViolation> {
    let q = alg.q();
    let on_x = to_yx_basis(alg, on_x);
    let on_y = to_yx_basis(alg, on_y);

    let mut g = Vec::new();
    let mut alpha = BTreeMap::new();
    for (&(m, n), v) in &on_x {
        if n == 0 {
            if g.len() <= m as usize {
                g.resize(m as usize + 1, Rat::zero());
            }
            g[m as usize] = v.clone();
        } else {
            alpha.insert((m, n), v.clone());
        }
    }
    let mut f = Vec::new();
    let mut beta = BTreeMap::new();
    for (&(m, n), v) in &on_y {
        if m == 0 {
            if f.len() <= n as usize {
                f.resize(n as usize + 1, Rat::zero());
            }
            f[n as usize] = v.clone();
        } else {
            beta.insert((m - 1, n + 1), v.clone());
        }
    }
    let mut keys: Vec<_> = alpha.keys().chain(beta.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    for (m, n) in keys {
        let a = alpha.get(&(m, n)).cloned().unwrap_or_else(Rat::zero);
        let expected = beta_for(q, m, n, &a);
        let found = beta.get(&(m, n)).cloned().unwrap_or_else(Rat::zero);
        if expected != found {
            return Err(SigmaQViolation {
                m,
                n,
                expected,
                found,
            });
        }
    }
    let data = SigmaQData {
        m_bound: 0,
        n_bound: 0,
        alpha,
        f: trim(f),
        g: trim(g),
    };
    Ok(data.normalized())
}

/// Dimension of the space of `sigma_q`-derivations whose values on `x` and
/// `y` are spanned by `y^m x^n`, `m <= M`, `n <= N`, by exact linear algebra.
pub fn sigma_q_dimension(
    alg: &GwaAlgebra,
    m_bound: u32,
    n_bound: u32,
) -> Result<usize, DiscPlaneError> {
    require_disc_or_plane(alg)?;
    let q = alg.q();
    let mut columns: Vec<BTreeMap<(usize, i64, usize), Rat>> = Vec::new();
    for on_y in [false, true] {
        for m in 0..=m_bound {
            for n in 0..=n_bound {
                let unit = yx_monomial(alg, m, n);
                let (ex, ey) = if on_y {
                    (GwaElement::zero(), unit)
                } else {
                    (unit, GwaElement::zero())
                };
                let cand = SkewDerivation::candidate_from_xy(alg, q.clone(), ex, ey)?;
                let mut col = BTreeMap::new();
                for (r, (_, residual)) in relation_residuals(&cand, alg).iter().enumerate() {
                    for (k, p) in residual.terms() {
                        for (j, c) in p.coeffs().iter().enumerate() {
                            if !c.is_zero() {
                                col.insert((r, k, j), c.clone());
                            }
                        }
                    }
                }
                columns.push(col);
            }
        }
    }
    let mut rows: Vec<(usize, i64, usize)> =
        columns.iter().flat_map(|c| c.keys().copied()).collect();
    rows.sort_unstable();
    rows.dedup();
    let mut mat = Matrix::zeros(rows.len(), columns.len());
    for (ci, col) in columns.iter().enumerate() {
        for (key, v) in col {
            let ri = rows.binary_search(key).unwrap();
            mat.set(ri, ci, v.clone());
        }
    }
    Ok(mat.nullity())
}
