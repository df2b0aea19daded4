use std::fs;
use std::process::{Command, Output};

use tempfile::TempDir;

fn umfb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umfb")).args(args).env_remove("UMFB_TERM_CAP").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = umfb(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn compute_appendix_pair() {
    let text = ok(&["compute", "-i", "1,1", "-n", "2", "-m", "2", "--format", "text"]);
    assert_eq!(
        text.trim_end(),
        "f[0,1]*g2[1,1] + f[1,0]*g1[1,1] + f[0,2]*g2[0,1]*g2[1,0] + f[1,1]*g1[0,1]*g2[1,0] \
         + f[1,1]*g1[1,0]*g2[0,1] + f[2,0]*g1[0,1]*g1[1,0]"
    );
    assert_eq!(ok(&["compute", "-i", "1"]), "f[1]*g1[1]\n");
}

#[test]
fn compute_json_has_four_terms() {
    let json = ok(&["compute", "-i", "2,1", "-n", "1", "-m", "2", "--format", "json"]);
    let poly: umfb::FormulaPoly = umfb::FormulaPoly::from_json(&json).unwrap();
    assert_eq!(poly.term_count(), 4);
    assert_eq!(json.matches("\"coeff\"").count(), 4);
}

#[test]
fn compute_writes_output_file() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("out.tex");
    let printed = ok(&["compute", "-i", "2", "--format", "latex", "-o", path.to_str().unwrap()]);
    assert!(printed.is_empty());
    assert_eq!(fs::read_to_string(path).unwrap(), "f_{1} g^{(1)}_{2} + f_{2} (g^{(1)}_{1})^{2}\n");
}

#[test]
fn compute_modes() {
    assert_eq!(ok(&["compute", "-i", "2", "--mode", "bell"]), "g1[2]*x1 + g1[1]^2*x1^2\n");
    assert_eq!(ok(&["compute", "-i", "2", "--mode", "uni-outer"]), "f[1]*g1[2] + f[2]*g1[1]^2\n");
    assert_eq!(
        ok(&["compute", "-i", "1,1", "-n", "2", "--mode", "shared-inner"]),
        "f[0,1]*g1[1,1] + f[1,0]*g1[1,1] + f[0,2]*g1[0,1]*g1[1,0] + 2*f[1,1]*g1[0,1]*g1[1,0] + f[2,0]*g1[0,1]*g1[1,0]\n"
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["compute", "-i", "1,1", "-m", "3"],
        vec!["compute", "-i", "1, 1"],
        vec!["compute", "-i", "2", "--mode", "uni-outer", "-n", "2"],
        vec!["compute", "-i", "x"],
        vec!["compute"],
        vec!["partitions", "-i", "0,0"],
        vec!["--threads", "0", "compute", "-i", "1"],
    ] {
        let out = umfb(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn term_cap_exits_3() {
    let out = Command::new(env!("CARGO_BIN_EXE_umfb"))
        .args(["compute", "-i", "1,1", "-n", "2"])
        .env("UMFB_TERM_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
    let out = Command::new(env!("CARGO_BIN_EXE_umfb"))
        .args(["compute", "-i", "1,1", "-n", "2"])
        .env("UMFB_TERM_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn partitions_listing_and_counts() {
    assert_eq!(ok(&["partitions", "-i", "2,1"]), "[2; 1]\n[0 2; 1 0]\n[1 1; 0 1]\n[0 1 1; 1 0 0]\n");
    assert_eq!(ok(&["partitions", "-i", "3", "--count-only"]), "3\n");
    assert_eq!(ok(&["partitions", "-i", "2,2", "--count-only"]), "9\n");
}

#[test]
fn verify_paths() {
    assert!(ok(&["verify"]).starts_with("ok: "));
    assert!(ok(&["verify", "--max-order", "0"]).starts_with("ok: "));
    let out = umfb(&["verify", "--max-order", "2", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("monomial f[1]*g1[1]"), "{err}");
}

#[test]
fn bench_rows_file() {
    let dir = TempDir::new().unwrap();
    let rows = dir.path().join("rows.txt");
    fs::write(&rows, "1,1;2\n2,1;1\n").unwrap();
    let csv = dir.path().join("out.csv");
    ok(&["bench", "--rows", rows.to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    let text = fs::read_to_string(csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "i;n;m;terms;umfb_ms;oracle_ms");
    assert!(lines[1].starts_with("1,1;2;2;6;"));
    assert!(lines[2].starts_with("2,1;1;2;4;"));

    let out = Command::new(env!("CARGO_BIN_EXE_umfb"))
        .args(["bench", "--rows", rows.to_str().unwrap()])
        .env("UMFB_TERM_CAP", "5")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning: skipping row 1,1;2"));
}

fn write_table(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn table_commands() {
    let dir = TempDir::new().unwrap();
    let mom = write_table(
        &dir,
        "mom.json",
        r#"{"n": 2, "K": 2, "values": [
            {"index": [1, 0], "value": "2"}, {"index": [0, 1], "value": "1"},
            {"index": [2, 0], "value": "9/2"}, {"index": [1, 1], "value": "5"}, {"index": [0, 2], "value": "1"}]}"#,
    );
    assert_eq!(ok(&["cumulants", "--table", &mom, "-i", "1,1"]), "3\n");
    assert_eq!(ok(&["cumulants", "--table", &mom, "-i", "2,0"]), "1/2\n");
    let converted = ok(&["cumulants", "--table", &mom]);
    let cum = write_table(&dir, "cum.json", &converted);
    assert_eq!(ok(&["moments", "--table", &cum, "-i", "2,0"]), "9/2\n");

    let zero = write_table(
        &dir,
        "zero.json",
        r#"{"n": 1, "K": 3, "values": [{"index": [1], "value": "0"}, {"index": [2], "value": "0"}, {"index": [3], "value": "0"}]}"#,
    );
    assert_eq!(ok(&["moments", "--table", &zero, "-i", "3"]), "0\n");

    let ones1 = write_table(&dir, "a.json", r#"{"n": 1, "K": 2, "values": [{"index": [1], "value": "1"}, {"index": [2], "value": "1"}]}"#);
    let ones2 = write_table(
        &dir,
        "g.json",
        r#"{"n": 2, "K": 2, "values": [{"index": [1, 0], "value": "1"}, {"index": [0, 1], "value": "1"},
            {"index": [2, 0], "value": "1"}, {"index": [1, 1], "value": "1"}, {"index": [0, 2], "value": "1"}]}"#,
    );
    assert_eq!(ok(&["poisson", "--count", &ones1, "--summands", &ones2, "-i", "1,1"]), "2\n");

    let incomplete = write_table(&dir, "bad.json", r#"{"n": 1, "K": 2, "values": [{"index": [1], "value": "1"}]}"#);
    assert_eq!(umfb(&["cumulants", "--table", &incomplete]).status.code(), Some(2));
    assert_eq!(umfb(&["cumulants", "--table", &mom, "-i", "3,0"]).status.code(), Some(2));
}

#[test]
fn hermite_command() {
    assert_eq!(ok(&["hermite", "-i", "3", "--sigma", "1", "-x", "2"]), "2\n");
    assert_eq!(ok(&["hermite", "-i", "0", "--sigma", "1", "-x", "2"]), "1\n");
    for route in ["umbral", "bell", "series"] {
        assert_eq!(ok(&["hermite", "-i", "2,1", "--sigma", "2,1;1,3", "-x", "1,-1/2", "--route", route]), ok(&[
            "hermite", "-i", "2,1", "--sigma", "2,1;1,3", "-x", "1,-1/2"
        ]));
    }
    let f: f64 = ok(&["hermite", "-i", "3", "--sigma", "1", "-x", "2", "--float"]).trim().parse().unwrap();
    assert!((f - 2.0).abs() < 1e-9);
    assert_eq!(umfb(&["hermite", "-i", "1,1", "--sigma", "1,1;1,1", "-x", "0,0"]).status.code(), Some(2));
    assert_eq!(umfb(&["hermite", "-i", "1,1", "--sigma", "1,2;3", "-x", "0,0"]).status.code(), Some(2));
}

#[test]
fn output_is_identical_across_thread_counts() {
    for args in [["-i", "3,2,1", "-n", "2"], ["-i", "4,3", "-n", "3"]] {
        let mut a = vec!["--threads", "1", "compute"];
        a.extend(args);
        let mut b = vec!["--threads", "8", "compute"];
        b.extend(args);
        assert_eq!(ok(&a), ok(&b));
    }
}
