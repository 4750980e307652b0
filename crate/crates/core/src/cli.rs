//! JSON-in, JSON-out front end. Exit codes: 0 success, 1 a verification
//! failed, 2 malformed input.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::arith::{parse_rat, Rat};
use crate::deriv::{
    check_relations, classify_positive, degree_profile, finite_order_family, from_theorem_data,
    inner_derivation, inner_witness, q_check, DerivError, FiniteOrderData, SkewDerivation,
    TheoremData, TwistedPolyDerivation,
};
use crate::disc_plane::{
    build_prop51, build_sigma_q, classify_sigma_q, lemma52_check, DiscPlaneError, Prop51Data,
    SigmaQData,
};
use crate::gwa::{AlgebraLabel, Grading, GwaAlgebra, GwaElement, GwaError, Homogeneity};
use crate::ortho::{
    build_certificate, disc_pair, prop42_pair, verify_certificate, OrthoCertificate, OrthoError,
};

#[derive(Parser)]
#[command(
    name = "gwa-skew",
    version,
    about = "Exact skew derivations on degree-one generalized Weyl algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Label {
    Disc,
    Plane,
    Custom,
}

#[derive(Args)]
struct Common {
    /// Preset algebra; an "algebra" key in the input takes precedence.
    #[arg(long, value_enum)]
    algebra: Option<Label>,
    #[arg(long, value_parser = rat_arg)]
    q: Option<Rat>,
    /// JSON document, a file path or `-` for standard input.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Theorem,
    SigmaQ,
}

#[derive(Subcommand)]
enum Cmd {
    /// Product of two elements.
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        lhs: Option<String>,
        #[arg(long)]
        rhs: Option<String>,
    },
    /// Checks a candidate derivation against the defining relations.
    CheckDerivation {
        #[command(flatten)]
        common: Common,
    },
    /// Builds a derivation from "theorem", "finite_order", "prop51" or "inner" data.
    BuildDerivation {
        #[command(flatten)]
        common: Common,
        /// Coarseness for "inner".
        #[arg(long, value_parser = rat_arg)]
        mu: Option<Rat>,
    },
    /// Builds the sigma_q-derivation described by "data".
    BuildSigmaQ {
        #[command(flatten)]
        common: Common,
    },
    /// Recovers the parameters of a derivation.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "theorem")]
        form: Form,
    },
    QCheck {
        #[command(flatten)]
        common: Common,
    },
    DegreeProfile {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_negative_numbers = true)]
        w: i64,
    },
    /// Searches for b with d = [b, -]_sigma inside the given bounds.
    InnerWitness {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        degree_bound: u32,
        #[arg(long, default_value_t = 3)]
        poly_bound: u32,
    },
    /// Builds an orthogonality certificate.
    OrthoBuild {
        #[command(flatten)]
        common: Common,
    },
    OrthoVerify {
        #[command(flatten)]
        common: Common,
    },
    /// Checks the commutation identities for x y^n and x^n y in the disc.
    Lemma52 {
        #[arg(long, value_parser = rat_arg)]
        q: Rat,
        #[arg(long)]
        n: u32,
    },
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

struct Failure {
    code: i32,
    kind: &'static str,
    detail: String,
}

impl Failure {
    fn malformed(kind: &'static str, detail: impl ToString) -> Self {
        Failure {
            code: 2,
            kind,
            detail: detail.to_string(),
        }
    }

    fn failed(kind: &'static str, detail: impl ToString) -> Self {
        Failure {
            code: 1,
            kind,
            detail: detail.to_string(),
        }
    }
}

impl From<GwaError> for Failure {
    fn from(e: GwaError) -> Self {
        Failure::malformed("invalid_input", e)
    }
}

impl From<DerivError> for Failure {
    fn from(e: DerivError) -> Self {
        match e {
            DerivError::Construction(_) => Failure::failed("construction", e),
            DerivError::Unverified | DerivError::AlgebraMismatch => {
                Failure::failed("verification", e)
            }
            _ => Failure::malformed("invalid_input", e),
        }
    }
}

impl From<DiscPlaneError> for Failure {
    fn from(e: DiscPlaneError) -> Self {
        match e {
            DiscPlaneError::Deriv(d) => d.into(),
            _ => Failure::malformed("invalid_input", e),
        }
    }
}

impl From<OrthoError> for Failure {
    fn from(e: OrthoError) -> Self {
        match e {
            OrthoError::Deriv(d) => d.into(),
            OrthoError::NotCoprime { .. } => Failure::failed("not_coprime", e),
            OrthoError::CrossTerm { .. }
            | OrthoError::NotMonomial { .. }
            | OrthoError::Misaligned { .. }
            | OrthoError::InvalidCertificate(_) => Failure::failed("certificate", e),
            _ => Failure::malformed("invalid_input", e),
        }
    }
}

struct Outcome {
    code: i32,
    value: Value,
}

fn ok(value: Value) -> Result<Outcome, Failure> {
    Ok(Outcome { code: 0, value })
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("library types serialize")
}

fn field<T: DeserializeOwned>(doc: &Value, key: &str) -> Result<T, Failure> {
    let v = doc
        .get(key)
        .ok_or_else(|| Failure::malformed("parse", format!("missing \"{key}\"")))?;
    T::deserialize(v).map_err(|e| Failure::malformed("parse", format!("\"{key}\": {e}")))
}

fn parse_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::malformed("parse", format!("{what}: {e}")))
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
}

impl Ctx<'_> {
    fn document(&mut self, common: &Common) -> Result<Value, Failure> {
        let text = match common.input.as_deref() {
            None | Some("-") => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::malformed("io", e))?;
                s
            }
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| Failure::malformed("io", format!("{path}: {e}")))?,
        };
        let doc: Value = parse_json(&text, "input")?;
        if !doc.is_object() {
            return Err(Failure::malformed("parse", "input must be a JSON object"));
        }
        Ok(doc)
    }
}

fn algebra(common: &Common, doc: Option<&Value>) -> Result<GwaAlgebra, Failure> {
    if let Some(v) = doc.and_then(|d| d.get("algebra")) {
        return GwaAlgebra::deserialize(v)
            .map_err(|e| Failure::malformed("parse", format!("\"algebra\": {e}")));
    }
    let label = match common.algebra {
        Some(Label::Disc) => AlgebraLabel::Disc,
        Some(Label::Plane) => AlgebraLabel::Plane,
        Some(Label::Custom) => {
            return Err(Failure::malformed(
                "usage",
                "a custom algebra must be given as \"algebra\" in the input",
            ))
        }
        None => return Err(Failure::malformed("usage", "no algebra given")),
    };
    let q = common
        .q
        .clone()
        .ok_or_else(|| Failure::malformed("usage", "--q is required with --algebra"))?;
    Ok(GwaAlgebra::preset(label, q)?)
}

fn verified(doc: &Value, key: &str, alg: &GwaAlgebra) -> Result<SkewDerivation, Failure> {
    let d: SkewDerivation = field(doc, key)?;
    check_relations(&d, alg).map_err(|v| Failure::failed("verification", v))
}

fn dispatch(cmd: Cmd, ctx: &mut Ctx) -> Result<Outcome, Failure> {
    match cmd {
        Cmd::Mul { common, lhs, rhs } => {
            let (alg, l, r) = match (lhs, rhs) {
                (Some(l), Some(r)) => (
                    algebra(&common, None)?,
                    parse_json::<GwaElement>(&l, "--lhs")?,
                    parse_json::<GwaElement>(&r, "--rhs")?,
                ),
                (None, None) => {
                    let doc = ctx.document(&common)?;
                    (
                        algebra(&common, Some(&doc))?,
                        field(&doc, "lhs")?,
                        field(&doc, "rhs")?,
                    )
                }
                _ => return Err(Failure::malformed("usage", "give both --lhs and --rhs")),
            };
            ok(to_value(&alg.mul(&l, &r)))
        }
        Cmd::CheckDerivation { common } => {
            let doc = ctx.document(&common)?;
            let alg = algebra(&common, Some(&doc))?;
            let d: SkewDerivation = field(&doc, "derivation")?;
            match check_relations(&d, &alg) {
                Ok(_) => ok(json!({ "ok": true })),
                Err(v) => Ok(Outcome {
                    code: 1,
                    value: json!({ "ok": false, "violation": to_value(&v) }),
                }),
            }
        }
        Cmd::BuildDerivation { common, mu } => {
            let doc = ctx.document(&common)?;
            let alg = algebra(&common, Some(&doc))?;
            let d = if doc.get("theorem").is_some() {
                from_theorem_data(&field::<TheoremData>(&doc, "theorem")?, &alg)?
            } else if doc.get("finite_order").is_some() {
                finite_order_family(&field::<FiniteOrderData>(&doc, "finite_order")?, &alg)?
            } else if doc.get("prop51").is_some() {
                build_prop51(&field::<Prop51Data>(&doc, "prop51")?, &alg)?
            } else if doc.get("inner").is_some() {
                let mu = mu
                    .ok_or_else(|| Failure::malformed("usage", "--mu is required for \"inner\""))?;
                inner_derivation(&field::<GwaElement>(&doc, "inner")?, &alg, mu)?
            } else {
                return Err(Failure::malformed(
                    "parse",
                    "expected one of \"theorem\", \"finite_order\", \"prop51\", \"inner\"",
                ));
            };
            ok(to_value(&d))
        }
        Cmd::BuildSigmaQ { common } => {
            let doc = ctx.document(&common)?;
            let alg = algebra(&common, Some(&doc))?;
            ok(to_value(&build_sigma_q(
                &field::<SigmaQData>(&doc, "data")?,
                &alg,
            )?))
        }
        Cmd::Classify { common, form } => {
            let doc = ctx.document(&common)?;
            let alg = algebra(&common, Some(&doc))?;
            let d = verified(&doc, "derivation", &alg)?;
            let (data, violation) = match form {
                Form::Theorem => match classify_positive(&d, &alg)? {
                    Ok(t) => (Some(to_value(&t)), None),
                    Err(n) => (None, Some(to_value(&n))),
                },
                Form::SigmaQ => match classify_sigma_q(&d, &alg)? {
                    Ok(s) => (Some(to_value(&s)), None),
                    Err(v) => (None, Some(to_value(&v))),
                },
            };
            match (data, violation) {
                (Some(data), _) => ok(json!({ "ok": true, "data": data })),
                (_, v) => Ok(Outcome {
                    code: 1,
                    value: json!({ "ok": false, "violation": v }),
                }),
            }
        }
        Cmd::QCheck { common } => {
            let doc = ctx.document(&common)?;
            let alg = algebra(&common, Some(&doc))?;
            let d = verified(&doc, "derivation", &alg)?;
            ok(to_value(&q_check(&d)))
        }
        Cmd::DegreeProfile { common, d, k, w } => {
            let doc = ctx.document(&common)?;
            let alg = algebra(&common, Some(&doc))?;
            let der = verified(&doc, "derivation", &alg)?;
            let grading = Grading::new(&alg, d, k, w)?;
            ok(match degree_profile(&der, &grading) {
                Homogeneity::Degree(l) => json!({ "homogeneous": true, "degree": l }),
                Homogeneity::Zero => json!({ "homogeneous": true, "zero": true }),
                Homogeneity::Inhomogeneous => json!({ "homogeneous": false }),
            })
        }
        Cmd::InnerWitness {
            common,
            degree_bound,
            poly_bound,
        } => {
            let doc = ctx.document(&common)?;
            let alg = algebra(&common, Some(&doc))?;
            let d = verified(&doc, "derivation", &alg)?;
            ok(match inner_witness(&d, &alg, degree_bound, poly_bound)? {
                Some(b) => json!({ "found": true, "b": to_value(&b) }),
                None => json!({ "found": false }),
            })
        }
        Cmd::OrthoBuild { common } => {
            let doc = ctx.document(&common)?;
            ortho_build(&common, &doc)
        }
        Cmd::OrthoVerify { common } => {
            let doc = ctx.document(&common)?;
            let alg = algebra(&common, Some(&doc))?;
            let system = system(&doc, &alg)?;
            let cert: OrthoCertificate = field(&doc, "certificate")?;
            let report = verify_certificate(&cert, &system, &alg)?;
            Ok(Outcome {
                code: if report.ok { 0 } else { 1 },
                value: to_value(&report),
            })
        }
        Cmd::Lemma52 { q, n } => {
            let holds = lemma52_check(n, &q)?;
            Ok(Outcome {
                code: if holds { 0 } else { 1 },
                value: json!({ "ok": holds }),
            })
        }
    }
}

fn system(doc: &Value, alg: &GwaAlgebra) -> Result<Vec<SkewDerivation>, Failure> {
    let raw: Vec<SkewDerivation> = field(doc, "system")?;
    raw.iter()
        .map(|d| check_relations(d, alg).map_err(|v| Failure::failed("verification", v)))
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DiscPairSpec {
    m: u32,
    n: u32,
    #[serde(with = "crate::arith::rat::serde_rat")]
    c: Rat,
    #[serde(with = "crate::arith::rat::serde_rat")]
    c_bar: Rat,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Prop42Spec {
    m: u32,
    n: u32,
    alpha: TwistedPolyDerivation,
    alpha_bar: TwistedPolyDerivation,
    #[serde(with = "crate::arith::rat::serde_rat")]
    mu: Rat,
    #[serde(with = "crate::arith::rat::serde_rat")]
    mu_bar: Rat,
}

/// Input is one of `{"system", "b_list"}`, `{"disc_pair"}` (with `--q` or
/// a disc "algebra") or `{"prop42"}`.
fn ortho_build(common: &Common, doc: &Value) -> Result<Outcome, Failure> {
    let alg;
    let mut extra = serde_json::Map::new();
    let (system, b_list) = if doc.get("disc_pair").is_some() {
        let spec: DiscPairSpec = field(doc, "disc_pair")?;
        alg = match doc.get("algebra") {
            Some(_) => algebra(common, Some(doc))?,
            None => {
                let q = common
                    .q
                    .clone()
                    .ok_or_else(|| Failure::malformed("usage", "--q is required"))?;
                GwaAlgebra::disc(q)?
            }
        };
        if alg.label() != AlgebraLabel::Disc {
            return Err(Failure::malformed(
                "invalid_input",
                "disc_pair needs the disc algebra",
            ));
        }
        let (d, db) = disc_pair(spec.m, spec.n, &spec.c, &spec.c_bar, alg.q())?;
        (vec![d, db], vec![GwaElement::y(), GwaElement::x()])
    } else if doc.get("prop42").is_some() {
        alg = algebra(common, Some(doc))?;
        let s: Prop42Spec = field(doc, "prop42")?;
        let pair = prop42_pair(s.m, s.n, &s.alpha, &s.alpha_bar, &alg, &s.mu, &s.mu_bar)?;
        extra.insert("hypotheses".into(), to_value(&pair.report));
        (
            vec![pair.first, pair.second],
            vec![GwaElement::y(), GwaElement::x()],
        )
    } else {
        alg = algebra(common, Some(doc))?;
        (system(doc, &alg)?, field::<Vec<GwaElement>>(doc, "b_list")?)
    };
    let build = build_certificate(&b_list, &system, &alg);
    let build = match build {
        Ok(b) => b,
        Err(e) if !extra.is_empty() => {
            let f = Failure::from(e);
            extra.insert(
                "error".into(),
                json!({ "kind": f.kind, "detail": f.detail }),
            );
            return Ok(Outcome {
                code: f.code,
                value: Value::Object(extra),
            });
        }
        Err(e) => return Err(e.into()),
    };
    extra.insert("algebra".into(), to_value(&alg));
    extra.insert("system".into(), to_value(&system));
    extra.insert("certificate".into(), to_value(&build.certificate));
    extra.insert("three_set".into(), to_value(&build.three_set));
    ok(Value::Object(extra))
}

/// Parses `args` (program name first), reads any `-` input from `stdin`,
/// writes one JSON document to `out` and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let result = match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(cli.cmd, &mut Ctx { stdin }),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                let _ = write!(out, "{e}");
                return 0;
            }
            _ => Err(Failure::malformed("usage", e.to_string().trim_end())),
        },
    };
    let (code, value) = match result {
        Ok(o) => (o.code, o.value),
        Err(f) => (
            f.code,
            json!({ "error": { "kind": f.kind, "detail": f.detail } }),
        ),
    };
    let text = serde_json::to_string(&value).expect("values serialize");
    if writeln!(out, "{text}").is_err() {
        return 2;
    }
    code
}
