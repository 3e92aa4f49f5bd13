use std::path::PathBuf;
use std::process::{Command, Output};

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn fmcheck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fmcheck")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_temp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("fmcheck-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn family1_passes_and_reports_unstable_radical() {
    let o = fmcheck(&["check", spec("family1_n3.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("radical NOT Poisson stable, witness {y2 - t3, y3} = 1"), "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn family1_constants_form_agrees() {
    let o = fmcheck(&["check", spec("family1_n3_constants.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("witness {y2 - t3, y3} = 1"));
}

#[test]
fn family2_passes() {
    let o = fmcheck(&["check", spec("family2_n4.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("nilradical 3, powers [3, 1, 0]"));
}

#[test]
fn corrupted_fails_with_defect_quadruple() {
    for route in ["identity", "both"] {
        let o = fmcheck(&["--route", route, "check", spec("corrupted.json").to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(1));
        assert!(stdout(&o).contains("nonzero defect at quadruple"));
    }
    let o = fmcheck(&["--route", "spectral", "check", spec("corrupted.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("NOT Poisson stable"));
}

#[test]
fn bundled_family_specs_match_example_output() {
    let f1 = fmcheck(&["example", "--family", "1", "--n", "3", "--rho", "t3", "--rho", "0"]);
    assert_eq!(stdout(&f1), std::fs::read_to_string(spec("family1_n3.json")).unwrap());
    let f2 = fmcheck(&["example", "--family", "2", "--n", "4"]);
    assert_eq!(stdout(&f2), std::fs::read_to_string(spec("family2_n4.json")).unwrap());
}

#[test]
fn example_generators() {
    let o = fmcheck(&["example", "--family", "2", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"(y2 - t3*y1)^2\""));
    let v: serde_json::Value = serde_json::from_str(&stdout(&fmcheck(&["example", "--family", "1", "--n", "3", "--rho", "t3", "--rho", "0"]))).unwrap();
    assert_eq!(v["ideal"].as_array().unwrap().len(), 4);
}

#[test]
fn example_rejects_bad_parameters() {
    assert_eq!(fmcheck(&["example", "--family", "2", "--n", "2"]).status.code(), Some(2));
    assert_eq!(fmcheck(&["example", "--family", "3", "--n", "3"]).status.code(), Some(2));
    assert_eq!(fmcheck(&["example", "--family", "1", "--n", "3", "--rho", "t3"]).status.code(), Some(2));
    assert_eq!(fmcheck(&["example", "--family", "1", "--n", "3", "--rho", "t1", "--rho", "0"]).status.code(), Some(2));
}

#[test]
fn euler_examples() {
    let o = fmcheck(&["euler", spec("euler_surface.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("commutator: 0"));
    assert!(out.contains("proportional: true"));
    let o = fmcheck(&["euler", spec("euler_odd_class.json").to_str().unwrap()]);
    assert!(stdout(&o).contains("proportional: false"));
    let empty = write_temp("empty_grading.json", r#"{"gradings": {"bidegrees": []}, "seed": 0}"#);
    assert_eq!(fmcheck(&["euler", empty.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn super_algebra_witnesses() {
    let o = fmcheck(&["fiber", spec("exterior_two.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("odd witness").count(), 2);
}

#[test]
fn stability_subcommands() {
    let f1 = spec("family1_n3.json");
    let o = fmcheck(&["radical-stable", f1.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness {y2 - t3, y3} = 1"));
    assert_eq!(fmcheck(&["poisson-stable", f1.to_str().unwrap()]).status.code(), Some(0));
    assert_eq!(fmcheck(&["poisson-stable", spec("corrupted.json").to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn parse_errors_exit_2() {
    let bad = write_temp("bad_expr.json", r#"{"n": 2, "mode": "ideal", "ideal": ["y1 - ", "y2"], "seed": 0}"#);
    assert_eq!(fmcheck(&["check", bad.to_str().unwrap()]).status.code(), Some(2));
    let unknown = write_temp("unknown_field.json", r#"{"n": 2, "mode": "ideal", "ideal": ["y1"], "sed": 0}"#);
    assert_eq!(fmcheck(&["check", unknown.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(fmcheck(&["check", "/nonexistent/spec.json"]).status.code(), Some(2));
    assert_eq!(fmcheck(&["--route", "sideways", "check", "x.json"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = fmcheck(&["--budget", "3", "check", spec("family2_n4.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn reports_are_reproducible() {
    for format in ["text", "json"] {
        for name in ["family1_n3.json", "corrupted.json", "family2_n4.json"] {
            let p = spec(name);
            let a = fmcheck(&["--format", format, "check", p.to_str().unwrap()]);
            let b = fmcheck(&["--format", format, "check", p.to_str().unwrap()]);
            assert_eq!(a.stdout, b.stdout);
        }
    }
}

#[test]
fn json_report_shape() {
    let o = fmcheck(&["--format", "json", "check", spec("corrupted.json").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "check");
    assert_eq!(v["passed"], false);
    let checks = v["checks"].as_array().unwrap();
    let failed = checks.iter().find(|c| c["status"] == "fail").unwrap();
    assert_eq!(failed["name"], "f-manifold (identity)");
    assert!(failed["witness"]["defect"].is_string());
    assert!(v["groebner"]["pairs_examined"].as_u64().unwrap() > 0);
}

#[test]
fn seed_changes_sample_points() {
    let p = spec("family1_n3.json");
    let a = stdout(&fmcheck(&["check", p.to_str().unwrap()]));
    let b = stdout(&fmcheck(&["--seed", "7", "check", p.to_str().unwrap()]));
    assert_ne!(a, b);
    let c = stdout(&fmcheck(&["--samples", "2", "check", p.to_str().unwrap()]));
    assert_eq!(c.matches("fiber at").count(), 2);
}
