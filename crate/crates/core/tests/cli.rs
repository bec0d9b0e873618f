use std::process::{Command, Output};

use gspin_bessel::bessel::{bessel_value, s_delta};
use gspin_bessel::characters::DominantWeight;
use gspin_bessel::exactalg::{LaurentPoly, PolyJson, RationalFunctionJson};
use gspin_bessel::rankinselberg::zeta_local_series;
use gspin_bessel::{RationalFunction, SatakeSpec};
use serde_json::Value;

fn gspin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gspin")).args(args).output().expect("binary runs")
}

fn gspin_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gspin"))
        .env("GSPIN_THREADS", threads)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

fn value_of(out: &Output) -> RationalFunction {
    let v: RationalFunctionJson = serde_json::from_value(json(out)["value"].clone()).unwrap();
    RationalFunction::from_json(&v).unwrap()
}

fn dw(parts: &[i32]) -> DominantWeight {
    DominantWeight::new(parts.to_vec()).unwrap()
}

#[test]
fn compute_identity_value_is_one() {
    let out = gspin(&["compute", "bessel", "--n", "2", "--torus", "nonsplit", "--delta", "0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let value = value_of(&out);
    assert_eq!(value, RationalFunction::one(SatakeSpec::nonsplit(2).vars()));
}

#[test]
fn compute_matches_library() {
    let out = gspin(&["compute", "bessel", "--n", "1", "--torus", "split", "--delta", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let spec = SatakeSpec::split(1);
    assert_eq!(value_of(&out), bessel_value(&dw(&[1]), &spec).unwrap());

    let out = gspin(&["compute", "sdelta", "--n", "2", "--torus", "split", "--delta", "1,0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(value_of(&out), s_delta(&dw(&[1, 0]), &SatakeSpec::split(2)).unwrap());
}

#[test]
fn compute_rejects_bad_delta() {
    for delta in ["0,1", "1", "a,b", "1,-1"] {
        let out = gspin(&["compute", "bessel", "--n", "2", "--delta", delta]);
        assert_eq!(out.status.code(), Some(2), "delta {delta}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn verify_exit_codes() {
    let ok = gspin(&["verify", "a8", "--n", "2", "--torus", "split", "--order", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    let report = json(&ok);
    assert_eq!(report["identity"], "a8");
    assert_eq!(report["coefficients"].as_array().unwrap().len(), 5);
    assert!(report["coefficients"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let claim = gspin(&["verify", "claim", "--n", "2", "--torus", "nonsplit", "--order", "4"]);
    assert_eq!(claim.status.code(), Some(0));

    let trivial = gspin(&["verify", "a8", "--n", "2", "--order", "0"]);
    assert_eq!(trivial.status.code(), Some(0));
    assert_eq!(json(&trivial)["coefficients"].as_array().unwrap().len(), 1);

    let failed = gspin(&["verify", "bfg1-perturbed", "--n", "2", "--order", "3"]);
    assert_eq!(failed.status.code(), Some(1));
    let coeffs = json(&failed)["coefficients"].as_array().unwrap().clone();
    assert_eq!(coeffs[0]["pass"], true);
    assert_eq!(coeffs[1]["pass"], false);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["verify", "a8", "--n", "2", "--torus", "diagonal", "--order", "1"],
        &["verify", "a8", "--n", "2"],
        &["verify", "corollary", "--n", "2", "--l", "2", "--order", "1"],
        &["verify", "a8", "--n", "0", "--order", "1"],
        &["verify", "a8", "--n", "1", "--order", "1", "--mode", "fast", "--prime", "15"],
        &["series", "unknown", "--n", "1", "--order", "1"],
        &["frobnicate"],
    ];
    for args in cases {
        assert_eq!(gspin(args).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(gspin_threads(&["series", "d", "--n", "1", "--order", "1"], "0").status.code(), Some(2));
}

#[test]
fn series_rows() {
    let out = gspin(&["series", "d", "--n", "1", "--order", "0", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "degree,coefficient\n0,1\n");

    let out = gspin(&["series", "d", "--n", "2", "--order", "3", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 5);

    let out = gspin(&["series", "zeta", "--n", "1", "--torus", "split", "--order", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = zeta_local_series(&SatakeSpec::split(1), 2).unwrap();
    let coeffs = json(&out)["coefficients"].as_array().unwrap().clone();
    assert_eq!(coeffs.len(), 3);
    for (k, c) in coeffs.iter().enumerate() {
        let poly: PolyJson = serde_json::from_value(c["value"].clone()).unwrap();
        assert_eq!(&LaurentPoly::from_json(&poly).unwrap(), expected.coeff(k));
    }
}

#[test]
fn output_is_deterministic_across_threads() {
    let args = ["verify", "claim", "--n", "2", "--order", "3", "--mode", "fast", "--seed", "7"];
    let one = gspin_threads(&args, "1");
    let four = gspin_threads(&args, "4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);

    let report = ["report", "--max-n", "3", "--max-total", "2", "--series-n", "2", "--series-order", "2"];
    let a = gspin_threads(&report, "1");
    let b = gspin_threads(&report, "3");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.csv");
    let out = gspin(&["series", "d", "--n", "1", "--order", "1", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("degree,coefficient\n0,1\n1,"));
}
