mod common;

use gwa_skew::arith::Poly;
use gwa_skew::deriv::SkewDerivation;
use gwa_skew::disc_plane::SigmaQData;
use gwa_skew::gwa::{GwaAlgebra, GwaElement};
use gwa_skew::ortho::{OrthoCertificate, OrthoReport, ThreeSetCertificate};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> (i32, String) {
    let mut input = stdin.as_bytes();
    let mut out = Vec::new();
    let argv = std::iter::once("gwa-skew").chain(args.iter().copied());
    let code = gwa_skew::cli::run(argv, &mut input, &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn golden_input(name: &str) -> String {
    std::fs::read_to_string(common::golden_dir().join("inputs").join(name)).unwrap()
}

/// Parses `v` as `T` and checks that serializing it again gives `v` back.
fn reparses<T: Serialize + DeserializeOwned>(v: &Value) {
    let parsed: T = serde_json::from_value(v.clone()).unwrap();
    assert_eq!(&serde_json::to_value(&parsed).unwrap(), v);
}

#[test]
fn golden_corpus() {
    let n = common::run_golden(env!("CARGO_BIN_EXE_gwa-skew")).unwrap_or_else(|e| panic!("{e}"));
    assert!(n >= 15);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let doc = golden_input("ortho_disc_pair.json");
    let first = run(&["ortho-build", "--q", "3"], &doc);
    for _ in 0..3 {
        assert_eq!(run(&["ortho-build", "--q", "3"], &doc), first);
    }
    assert_eq!(first.0, 0);
}

#[test]
fn derivation_outputs_round_trip() {
    for (args, input) in [
        (vec!["build-derivation"], "theorem_plane.json"),
        (vec!["build-derivation"], "finite_order.json"),
        (
            vec!["build-derivation", "--algebra", "disc", "--q", "2"],
            "direct.json",
        ),
        (
            vec!["build-sigma-q", "--algebra", "disc", "--q", "2"],
            "sigma_q.json",
        ),
    ] {
        let (code, out) = run(&args, &golden_input(input));
        assert_eq!(code, 0, "{out}");
        let v: Value = serde_json::from_str(&out).unwrap();
        // the "verified" flag is output only; the rest must survive a parse
        let mut stripped = v.clone();
        stripped.as_object_mut().unwrap().remove("verified");
        let parsed: SkewDerivation = serde_json::from_value(v).unwrap();
        let mut again = serde_json::to_value(&parsed).unwrap();
        again.as_object_mut().unwrap().remove("verified");
        assert_eq!(again, stripped);
    }
}

#[test]
fn certificate_outputs_round_trip() {
    for (args, input) in [
        (vec!["ortho-build", "--q", "2"], "ortho_disc_pair.json"),
        (vec!["ortho-build"], "ortho_plane_zero.json"),
        (vec!["ortho-build"], "ortho_twisted_pair.json"),
    ] {
        let (code, out) = run(&args, &golden_input(input));
        assert_eq!(code, 0, "{out}");
        let v: Value = serde_json::from_str(&out).unwrap();
        reparses::<OrthoCertificate>(&v["certificate"]);
        reparses::<ThreeSetCertificate>(&v["three_set"]);
        reparses::<GwaAlgebra>(&v["algebra"]);

        // feeding the output back through ortho-verify succeeds
        let (code, verdict) = run(&["ortho-verify"], &out);
        assert_eq!(code, 0, "{verdict}");
        reparses::<OrthoReport>(&serde_json::from_str(&verdict).unwrap());
    }
}

#[test]
fn classifier_output_round_trips() {
    let (code, out) = run(
        &[
            "classify",
            "--form",
            "sigma-q",
            "--algebra",
            "disc",
            "--q",
            "2",
        ],
        &golden_input("derivation_sigma_q.json"),
    );
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    reparses::<SigmaQData>(&v["data"]);
    // and rebuilding from it gives the derivation we started from
    let rebuilt = run(
        &["build-sigma-q", "--algebra", "disc", "--q", "2"],
        &serde_json::json!({ "data": v["data"] }).to_string(),
    );
    let original: Value = serde_json::from_str(&golden_input("derivation_sigma_q.json")).unwrap();
    assert_eq!(
        serde_json::from_str::<Value>(&rebuilt.1).unwrap(),
        original["derivation"]
    );
}

#[test]
fn scalars_are_fraction_strings() {
    let (_, out) = run(
        &[
            "mul",
            "--algebra",
            "plane",
            "--q",
            "3/5",
            "--lhs",
            r#"{"terms":[{"deg":2,"poly":["1/3"]}]}"#,
            "--rhs",
            r#"{"terms":[{"deg":-1,"poly":["0","7"]}]}"#,
        ],
        "",
    );
    let v: Value = serde_json::from_str(&out).unwrap();
    let e: GwaElement = serde_json::from_value(v.clone()).unwrap();
    assert!(!out.contains('.'), "{out}");
    reparses::<GwaElement>(&v);
    // (1/3) x^2 * 7h y = (7/3) q^4 h^2 x in the plane
    assert_eq!(
        e,
        GwaElement::term(Poly::monomial(gwa_skew::arith::rat(189, 625), 2), 1)
    );
}

#[test]
fn malformed_inputs_exit_two() {
    for (args, stdin) in [
        (vec!["mul", "--algebra", "disc", "--q", "2"], "[1, 2]"),
        (
            vec!["check-derivation", "--algebra", "disc", "--q", "2"],
            r#"{"derivation": {"mu": "0.5"}}"#,
        ),
        (vec!["lemma52", "--q", "0", "--n", "2"], ""),
        (vec!["frobnicate"], ""),
    ] {
        let (code, out) = run(&args, stdin);
        assert_eq!(code, 2, "{args:?}: {out}");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(
            v["error"]["kind"].is_string() && v["error"]["detail"].is_string(),
            "{out}"
        );
    }
}

#[test]
fn library_values_can_cross_threads() {
    fn check<T: Send + Sync>() {}
    check::<GwaAlgebra>();
    check::<GwaElement>();
    check::<SkewDerivation>();
    check::<OrthoCertificate>();
    check::<SigmaQData>();
}
