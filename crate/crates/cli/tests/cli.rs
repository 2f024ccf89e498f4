use std::process::{Command, Output};

fn qsl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsl"))
        .args(args)
        .env_remove("QSL_KMAX")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn expect(args: &[&str], want: &str) {
    let o = qsl(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(stdout(&o), want, "{args:?}");
}

#[test]
fn imm_examples() {
    expect(
        &["imm", "--m", "1", "--n", "1", "--lambda", "1", "--rows", "1"],
        "x_{11}",
    );
    expect(
        &["imm", "--m", "1", "--n", "1", "--lambda", "2,2", "--rows", "1,1,2,2"],
        "0",
    );
    expect(
        &["imm", "--m", "1", "--n", "1", "--lambda", "1", "--rows", "2"],
        "-x_{22}",
    );
    expect(&["imm", "--lambda", "1", "--rows", "1", "--cols", "2"], "x_{12}");
}

#[test]
fn schur_and_series_examples() {
    expect(&["schur", "--m", "1", "--n", "1", "--lambda", "1"], "x1 + y1");
    expect(&["schur", "--m", "1", "--n", "1", "--lambda", "2,2"], "0");
    expect(
        &["series", "--kind", "gamma", "--k", "1", "--m", "1", "--n", "1"],
        "x_{11} - x_{22}",
    );
    expect(
        &["series", "--kind", "alpha", "--k", "1", "--m", "2", "--n", "1"],
        "x_{11} + x_{22} - x_{33}",
    );
}

#[test]
fn verify_examples_pass() {
    for args in [
        &["verify", "ybe", "--m", "2", "--n", "1"][..],
        &["verify", "macmahon", "--m", "1", "--n", "1", "--order", "4"],
        &["verify", "ch11"],
        &["verify", "confluence", "--m", "2", "--n", "1", "--seed", "3"],
    ] {
        let o = qsl(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
    }
}

#[test]
fn json_report_schema() {
    let o = qsl(&["verify", "gt", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "gt");
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["name"].is_string());
        assert!(c["params"].is_object());
        assert_eq!(c["status"], "pass");
        assert!(c.get("witness").is_none());
    }
    let adj = checks.iter().find(|c| c["name"] == "gt-bracket-adjudication").unwrap();
    let notes: Vec<&str> = adj["notes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n.as_str().unwrap())
        .collect();
    assert!(
        notes.iter().any(|n| n.starts_with("q-integer reading passes")),
        "{notes:?}"
    );
}

#[test]
fn polynomial_json() {
    let o = qsl(&["imm", "--lambda", "1,1", "--rows", "1,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m"], 1);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    assert_eq!(v["terms"][0]["word"], serde_json::json!([[1, 1], [2, 2]]));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["imm", "--lambda", "2", "--rows", "1"][..],
        &["imm", "--lambda", "1", "--rows", "3"],
        &["imm", "--lambda", "1,2", "--rows", "1,1"],
        &["verify", "nonsense"],
        &["verify", "ybe", "--m", "0", "--n", "0"],
        &["series", "--kind", "delta", "--k", "1"],
        &["schur", "--lambda", "1", "--q", "0"],
        &[],
    ] {
        assert_eq!(qsl(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn kmax_caps_series() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_qsl"))
            .args(["series", "--kind", "beta", "--k", "3"])
            .env("QSL_KMAX", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("2").status.code(), Some(2));
    assert_eq!(run("3").status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify", "all", "--m", "1", "--n", "1", "--format", "json", "--seed", "11",
    ];
    let a = qsl(&args);
    let b = qsl(&args);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn specialized_output() {
    expect(
        &["series", "--kind", "alpha", "--k", "2", "--q", "1"],
        "-x_{11}x_{22} + x_{12}x_{21} + x_{22}^2",
    );
    let latex = qsl(&["series", "--kind", "alpha", "--k", "2", "--format", "latex"]);
    assert_eq!(stdout(&latex), "-x_{11}x_{22} + q^{-1} x_{12}x_{21} + x_{22}^{2}");
}

#[test]
fn experimental_residual_is_reported_not_asserted() {
    let o = qsl(&["verify", "ch11", "--experimental-ch21", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["cayley-hamilton", "cayley-hamilton-21-residual"]);
}
