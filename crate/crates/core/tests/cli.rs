use std::process::{Command, Output};

fn rmatrix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rmatrix"))
        .args(args)
        .env_remove("RMATRIX_MAX_CELLS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn triangular_suite_passes() {
    let o = rmatrix(&["--suite", "triangular", "--max-n", "8", "--max-m", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("64 checks, 64 passed, 0 failed\n"));
}

#[test]
fn no_suites_is_an_empty_success() {
    let o = rmatrix(&["--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
}

#[test]
fn ybe_json_lines() {
    let o = rmatrix(&["--suite", "ybe", "--max-n", "5", "--max-m", "5", "--max-l", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 125);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["check_name"], "ybe");
        assert_eq!(v["pass"], true);
        assert_eq!(v["permutation_path"], v["matrix_path"]);
        assert!(v.get("elapsed_ms").is_none());
    }
}

#[test]
fn output_is_reproducible_across_job_counts() {
    let base = ["--suite", "hexagons", "--suite", "counit", "--max-n", "3", "--max-m", "3", "--max-l", "3", "--json"];
    let one = rmatrix(&[&base[..], &["--jobs", "1"]].concat());
    let three = rmatrix(&[&base[..], &["--jobs", "3"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
}

#[test]
fn injected_identity_r_fails_the_intertwiner_suite() {
    let o = rmatrix(&["--suite", "intertwiner", "--max-n", "3", "--max-m", "3", "--json", "--inject-identity-r"]);
    assert_eq!(o.status.code(), Some(1));
    let failing: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .filter(|v: &serde_json::Value| v["pass"] == false)
        .collect();
    let at_23 = failing
        .iter()
        .find(|v| v["params"]["n"] == 2 && v["params"]["m"] == 3)
        .expect("(2,3) fails");
    assert_eq!(at_23["counterexample"]["indices"], serde_json::json!([2, 2]));
}

#[test]
fn usage_and_resource_errors_exit_two() {
    assert_eq!(rmatrix(&["--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(rmatrix(&["--dump", "chi:2,9,1"]).status.code(), Some(2));
    assert_eq!(rmatrix(&["--dump", "delta:3,4,1"]).status.code(), Some(2));
    assert_eq!(rmatrix(&["--jobs", "0", "--suite", "counit"]).status.code(), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_rmatrix"))
        .args(["--suite", "intertwiner", "--max-n", "4", "--max-m", "4"])
        .env("RMATRIX_MAX_CELLS", "100")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("resource cap"));
}

#[test]
fn dumps() {
    let chi = rmatrix(&["--dump", "chi:2,3"]);
    assert_eq!(chi.status.code(), Some(0));
    assert!(stdout(&chi).contains("[[1,2],[2,1]]"));
    let r = stdout(&rmatrix(&["--dump", "rmatrix:1,4"]));
    let v: serde_json::Value = serde_json::from_str(&r).unwrap();
    for pair in v["perm"].as_array().unwrap() {
        assert_eq!(pair[0], pair[1]);
    }
    let d = stdout(&rmatrix(&["--dump", "delta:6,2,2"]));
    let v: serde_json::Value = serde_json::from_str(&d).unwrap();
    let shapes: Vec<_> = v["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| (b["n"].as_u64().unwrap(), b["m"].as_u64().unwrap()))
        .collect();
    assert_eq!(shapes, vec![(1, 6), (2, 3), (3, 2), (6, 1)]);
    assert_eq!(stdout(&rmatrix(&["--dump", "P:2,3,2"])), stdout(&rmatrix(&["--dump", "Q:2,3,2"])));
}

#[test]
fn every_suite_passes_at_small_bounds() {
    let o = rmatrix(&["--suite", "all", "--max-n", "3", "--max-m", "3", "--max-l", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
