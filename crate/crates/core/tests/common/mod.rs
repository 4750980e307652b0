//! Oracles shared by the integration tests. None of them call the library's
//! normal-form multiplication of words or its relation checker.
#![allow(dead_code)]

use std::collections::BTreeMap;

use gwa_skew::arith::{int, Poly, Rat};
use gwa_skew::deriv::SkewDerivation;
use gwa_skew::gwa::{GwaAlgebra, GwaElement};
use num_traits::{One, Zero};
use rand::Rng;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Gen {
    X,
    Y,
}

/// `coefficient(h) * word`, coefficient on the left.
pub type Word = Vec<Gen>;

/// Rewrites `p(h) w` to normal form one step at a time: the leftmost `xy`
/// or `yx` becomes `phi(a)` or `a`, and the new polynomial is pushed left
/// through the prefix letter by letter.
pub fn rewrite(alg: &GwaAlgebra, p: &Poly, word: &[Gen]) -> GwaElement {
    let mut todo: Vec<(Poly, Word)> = vec![(p.clone(), word.to_vec())];
    let mut out = GwaElement::zero();
    while let Some((c, w)) = todo.pop() {
        if c.is_zero() {
            continue;
        }
        match w.windows(2).position(|pair| pair[0] != pair[1]) {
            None => {
                let deg = match w.first() {
                    None => 0,
                    Some(Gen::X) => w.len() as i64,
                    Some(Gen::Y) => -(w.len() as i64),
                };
                out.add_term(deg, &c);
            }
            Some(i) => {
                let mut r = match w[i] {
                    Gen::X => alg.phi().apply(1, alg.a()),
                    Gen::Y => alg.a().clone(),
                };
                for g in w[..i].iter().rev() {
                    r = match g {
                        Gen::X => alg.phi().apply(1, &r),
                        Gen::Y => alg.phi().apply(-1, &r),
                    };
                }
                let mut rest = w[..i].to_vec();
                rest.extend_from_slice(&w[i + 2..]);
                todo.push((&c * &r, rest));
            }
        }
    }
    out
}

pub fn word(y_pow: u32, x_pow: u32) -> Word {
    let mut w = vec![Gen::Y; y_pow as usize];
    w.extend(std::iter::repeat_n(Gen::X, x_pow as usize));
    w
}

/// An element as a sum of `r X^k` with `X^k` written out as a word.
pub fn as_words(e: &GwaElement) -> Vec<(Poly, Word)> {
    e.terms()
        .map(|(k, r)| {
            let w = if k >= 0 {
                vec![Gen::X; k as usize]
            } else {
                vec![Gen::Y; (-k) as usize]
            };
            (r.clone(), w)
        })
        .collect()
}

/// `sigma_mu` on a word: `x -> mu^-1 x`, `y -> mu y`.
fn sigma_factor(mu: &Rat, w: &[Gen]) -> Rat {
    w.iter().fold(Rat::one(), |acc, g| match g {
        Gen::X => acc / mu,
        Gen::Y => acc * mu,
    })
}

fn gen_element(g: Gen) -> GwaElement {
    match g {
        Gen::X => GwaElement::x(),
        Gen::Y => GwaElement::y(),
    }
}

fn word_element(alg: &GwaAlgebra, w: &[Gen]) -> GwaElement {
    w.iter()
        .fold(GwaElement::one(), |acc, &g| alg.mul(&acc, &gen_element(g)))
}

/// `d(p(h))` by the twisted Leibniz rule, using `sigma(h) = h`.
pub fn leibniz_poly(alg: &GwaAlgebra, d: &SkewDerivation, p: &Poly) -> GwaElement {
    let mut out = GwaElement::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for j in 0..k {
            let left = GwaElement::from_poly(Poly::monomial(c.clone(), j));
            let right = GwaElement::from_poly(Poly::monomial(Rat::one(), k - 1 - j));
            out = &out + &alg.mul(&alg.mul(&left, d.on_h()), &right);
        }
    }
    out
}

/// `d(p(h) w)` by the twisted Leibniz rule applied letter by letter.
pub fn leibniz(alg: &GwaAlgebra, d: &SkewDerivation, p: &Poly, w: &[Gen]) -> GwaElement {
    let mu = d.mu();
    let sigma_w = word_element(alg, w).scale(&sigma_factor(mu, w));
    let mut out = alg.mul(&leibniz_poly(alg, d, p), &sigma_w);
    for i in 0..w.len() {
        let prefix = word_element(alg, &w[..i]).left_mul_poly(p);
        let dg = match w[i] {
            Gen::X => d.on_x(),
            Gen::Y => d.on_y(),
        };
        let tail = &w[i + 1..];
        let sigma_tail = word_element(alg, tail).scale(&sigma_factor(mu, tail));
        out = &out + &alg.mul(&alg.mul(&prefix, dg), &sigma_tail);
    }
    out
}

/// `d` of each defining relation `xy - phi(a)`, `yx - a`, `xh - phi(h) x`,
/// `yh - phi^-1(h) y`, expanded by Leibniz.
pub fn relation_defects(alg: &GwaAlgebra, d: &SkewDerivation) -> [GwaElement; 4] {
    let phi = alg.phi();
    let one = Poly::one();
    let h = Poly::h();
    let dh_right = |g: Gen| {
        // d(g h) = d(g) sigma(h) + g d(h)
        let dg = match g {
            Gen::X => d.on_x(),
            Gen::Y => d.on_y(),
        };
        &alg.mul(dg, &GwaElement::h()) + &alg.mul(&gen_element(g), d.on_h())
    };
    [
        &leibniz(alg, d, &one, &[Gen::X, Gen::Y]) - &leibniz_poly(alg, d, &phi.apply(1, alg.a())),
        &leibniz(alg, d, &one, &[Gen::Y, Gen::X]) - &leibniz_poly(alg, d, alg.a()),
        &dh_right(Gen::X) - &leibniz(alg, d, &phi.apply(1, &h), &[Gen::X]),
        &dh_right(Gen::Y) - &leibniz(alg, d, &phi.apply(-1, &h), &[Gen::Y]),
    ]
}

pub fn defects_vanish(alg: &GwaAlgebra, d: &SkewDerivation) -> bool {
    relation_defects(alg, d).iter().all(GwaElement::is_zero)
}

pub fn small_rat<R: Rng>(rng: &mut R) -> Rat {
    let n = rng.gen_range(-6i64..=6);
    let den = rng.gen_range(1i64..=4);
    Rat::new(n.into(), den.into())
}

pub fn nonzero_rat<R: Rng>(rng: &mut R) -> Rat {
    loop {
        let r = small_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn random_poly<R: Rng>(rng: &mut R, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::from_coeffs((0..=deg).map(|_| small_rat(rng)).collect())
}

pub fn random_element<R: Rng>(rng: &mut R, span: i64, max_deg: usize) -> GwaElement {
    let n = rng.gen_range(1..=3);
    GwaElement::from_terms((0..n).map(|_| (rng.gen_range(-span..=span), random_poly(rng, max_deg))))
}

/// Rank of a dense rational matrix by fraction-exact elimination.
pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Elements of `<x, y | xy - q yx = k>` as coefficients of `y^m x^n`.
pub type YxPoly = BTreeMap<(u32, u32), Rat>;

/// Normal-orders `x^a y^b` in `<x, y | xy = q yx + k>` by repeated
/// rewriting of the leftmost `xy`.
pub fn qweyl_word(q: &Rat, k: &Rat, w: &[Gen]) -> YxPoly {
    let mut out = YxPoly::new();
    let mut todo: Vec<(Rat, Word)> = vec![(Rat::one(), w.to_vec())];
    while let Some((c, w)) = todo.pop() {
        if c.is_zero() {
            continue;
        }
        match w.windows(2).position(|p| p == [Gen::X, Gen::Y]) {
            None => {
                let m = w.iter().filter(|&&g| g == Gen::Y).count() as u32;
                let n = w.len() as u32 - m;
                *out.entry((m, n)).or_insert_with(Rat::zero) += c;
            }
            Some(i) => {
                let mut swapped = w.clone();
                swapped[i] = Gen::Y;
                swapped[i + 1] = Gen::X;
                todo.push((&c * q, swapped));
                let mut dropped = w[..i].to_vec();
                dropped.extend_from_slice(&w[i + 2..]);
                todo.push((&c * k, dropped));
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// The constant `k` in `xy - q yx = k` for the disc (`1 - q`) and plane (`0`).
pub fn qweyl_constant(disc: bool, q: &Rat) -> Rat {
    if disc {
        int(1) - q
    } else {
        Rat::zero()
    }
}

pub fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Runs every case in `tests/golden/cases.json` and compares stdout byte
/// for byte with `expected/<name>.out`. Returns the number of cases.
pub fn run_golden(bin: &str) -> Result<usize, String> {
    use std::io::Write;
    use std::process::{Command, Stdio};

    let dir = golden_dir();
    let manifest = std::fs::read_to_string(dir.join("cases.json")).map_err(|e| e.to_string())?;
    let cases: Vec<serde_json::Value> =
        serde_json::from_str(&manifest).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();
    for case in &cases {
        let name = case["name"].as_str().ok_or("case without name")?;
        let args: Vec<&str> = case["args"]
            .as_array()
            .ok_or("case without args")?
            .iter()
            .filter_map(|a| a.as_str())
            .collect();
        let mut child = Command::new(bin)
            .args(&args)
            .current_dir(&dir)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .map_err(|e| format!("{name}: {e}"))?;
        let stdin_text = case["stdin"].as_str().unwrap_or("");
        child
            .stdin
            .take()
            .expect("piped")
            .write_all(stdin_text.as_bytes())
            .map_err(|e| format!("{name}: {e}"))?;
        let out = child
            .wait_with_output()
            .map_err(|e| format!("{name}: {e}"))?;
        let expected = std::fs::read(dir.join("expected").join(format!("{name}.out")))
            .map_err(|e| format!("{name}: {e}"))?;
        let want_code = case["exit"].as_i64().ok_or("case without exit")?;
        if out.stdout != expected {
            failures.push(format!(
                "{name}: output differs\n  got:  {}\n  want: {}",
                String::from_utf8_lossy(&out.stdout).trim_end(),
                String::from_utf8_lossy(&expected).trim_end()
            ));
        }
        if out.status.code() != Some(want_code as i32) {
            failures.push(format!(
                "{name}: exit {:?}, want {want_code}",
                out.status.code()
            ));
        }
    }
    if failures.is_empty() {
        Ok(cases.len())
    } else {
        Err(failures.join("\n"))
    }
}
