use std::process::{Command, Output};

fn jetlaw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jetlaw"))
        .args(args)
        .env_remove("JETLAW_JOBS")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

const ZETA: &str = "exp(x + t)*F(a*t + y)";

#[test]
fn verify_y_multiplier_law() {
    let out = jetlaw(&[
        "--json",
        "--fn",
        "M/1",
        "verify",
        "--eq",
        "gir(a=a, f=f)",
        "--rho",
        "M(y)*u[0,0]",
        "--sigma",
        "(u[3,0] + a*u[0,1] + f(u[0,0],u[1,0]))*M(y)",
        "--zeta",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["cases"][0]["verdict"], "zero");
    assert_eq!(v["cases"][0]["residual"], "0");
}

#[test]
fn verify_concrete_exponential_law() {
    // h = u^2, c_1 = 1, c_0 = 0: q = u^2 + u, K_1 = 1
    let sigma = format!("(u[3,0] - u[2,0] + u[1,0] + a*u[0,1] + 2*u[0,0]*u[1,0] - u[0,0])*{ZETA}");
    let out = jetlaw(&[
        "--fn",
        "F/1",
        "verify",
        "--eq",
        "gir(a=a, f=2*u[0,0]*u[1,0] + u[0,0]^2)",
        "--rho",
        &format!("{ZETA}*u[0,0]"),
        "--sigma",
        &sigma,
        "--zeta",
        &format!("-a*u[0,0]*{ZETA}"),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}

#[test]
fn failed_verification_exits_one() {
    let out = jetlaw(&[
        "--json",
        "cosym",
        "--eq",
        "gir(a=1, f=u[1,0]^2)",
        "--gamma",
        "x",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["cases"][0]["residual"], "-2*u[2,0]");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["cosym", "--eq", "gir(a=1, f=u[1,0]^2)", "--gamma", "g(x)"][..],
        &["cosym", "--eq", "gir(a=1 f=u[0,0])", "--gamma", "x"][..],
        &["euler", "u[1,0"][..],
        &["--fn", "g", "euler", "x"][..],
        &["frobnicate"][..],
    ] {
        let out = jetlaw(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn euler_and_symmetry_commands() {
    let out = jetlaw(&["--json", "euler", "u[1,0]^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["cases"][0]["residual"], "-2*u[2,0]");

    let out = jetlaw(&["sym", "--eq", "gir(a=a, f=f)", "--char", "u[0,1]"]);
    assert_eq!(out.status.code(), Some(0));
    let out = jetlaw(&["sym", "--eq", "gir(a=a, f=f)", "--char", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn small_noether_scan() {
    let out = jetlaw(&[
        "--json",
        "noether-scan",
        "--rmax",
        "1",
        "--smax",
        "1",
        "--order",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["cases"][0]["verdict"], "forced-zero");
    let out = jetlaw(&[
        "--json",
        "noether-scan",
        "--eq",
        "rhs=u[3,0]",
        "--rmax",
        "1",
        "--smax",
        "0",
        "--order",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn suite_report_is_deterministic() {
    let first = jetlaw(&["--json", "--no-timing", "--jobs", "2", "suite", "ir"]);
    let second = jetlaw(&["--json", "--no-timing", "--jobs", "1", "suite", "ir"]);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);

    let v = json(&first);
    assert_eq!(v["suite"], "ir");
    let cases = v["cases"].as_array().unwrap();
    let ids: Vec<&str> = cases.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    for c in cases {
        for key in ["id", "verdict", "residual", "millis"] {
            assert!(c.get(key).is_some());
        }
    }
    assert!(!v["notes"].as_array().unwrap().is_empty());
}

#[test]
fn jobs_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_jetlaw"))
        .args(["suite", "ir"])
        .env("JETLAW_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_jetlaw"))
        .args(["suite", "ir"])
        .env("JETLAW_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
