use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gkagc").chain(args.iter().copied());
    let code = gkagc_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn points_csv_has_one_line_per_point() {
    let (code, out, _) = run(&["points", "--qbar", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "index,x,y,z,orbit");
    assert_eq!(lines.len() - 1, 225);
    assert_eq!(lines[1], "0,inf,inf,inf,O1");
}

#[test]
fn code_table_rows_and_schema() {
    let rows = json(&["code-table", "--qbar", "2", "--orbit", "O2"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 29);
    for key in ["n", "k", "ell", "rho", "nu", "d_ord"] {
        assert!(rows.iter().all(|r| r.get(key).is_some()), "missing {key}");
    }
    let r = rows.iter().find(|r| r["rho"] == 29).unwrap();
    assert_eq!((r["k"].as_u64(), r["d_ord"].as_u64()), (Some(204), Some(13)));
}

#[test]
fn improved_tables() {
    let rows = json(&["improved-table", "--qbar", "2", "--orbit", "O1"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 18);
    let r13 = rows.iter().find(|r| r["d"] == 13).unwrap();
    assert_eq!((r13["r_d"].as_u64(), r13["k_lb"].as_u64()), (Some(21), Some(203)));
    let best = json(&["improved-table", "--qbar", "3"]);
    let best = best.as_array().unwrap();
    assert_eq!(best.len(), 161);
    assert_eq!(best[0]["k"], 6074);
}

#[test]
fn improvements_count() {
    let (code, out, _) = run(&["improvements", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count() - 1, 70);
    assert!(out.lines().any(|l| l.starts_with("210,187,15,")));
}

#[test]
fn semigroup_and_nu_table() {
    let s = json(&["semigroup", "--qbar", "3", "--orbit", "O2"]);
    assert_eq!(s["genus"], 99);
    let custom = json(&["semigroup", "--generators", "3,5"]);
    assert_eq!(custom["gaps"], serde_json::json!([1, 2, 4, 7]));
    let nu = json(&["nu-table", "--generators", "6,8,9", "--max-rho", "8"]);
    assert_eq!(nu.as_array().unwrap().len(), 3);
    let (code, _, err) = run(&["semigroup", "--generators", "4,6"]);
    assert_eq!(code, 2);
    assert!(err.contains("infinite"), "{err}");
}

#[test]
fn matrices() {
    let (code, out, _) = run(&["matrix", "--qbar", "2", "--orbit", "O2", "--ell", "20", "--format", "gkmat"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "GKMAT/1");
    assert!(lines[1].ends_with("kind=cl/20 n=224 rows=20"), "{}", lines[1]);
    assert_eq!(lines.len(), 22);
    let m = json(&["improved-matrix", "--qbar", "2", "--orbit", "O2", "--d", "13"]);
    assert_eq!((m["rows"].as_u64(), m["rank"].as_u64()), (Some(20), Some(20)));
    // without --big only the parameters of a GF(729) matrix are printed
    let m3 = json(&["matrix", "--qbar", "3", "--orbit", "O1", "--ell", "5"]);
    assert_eq!(m3["n"], 6075);
    assert!(m3.get("entries").is_none());
    let (code, _, _) = run(&["matrix", "--qbar", "2", "--ell", "3", "--format", "gkmat", "--point", "z,z,1"]);
    assert_eq!(code, 2, "(0, 0, 1) is not on the curve");
}

#[test]
fn explicit_point_and_orbit_consistency() {
    let (code, out, err) = run(&["verify-function", "--qbar", "3", "--point", "11,280,88", "--format", "csv"]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("gammabar"));
    assert!(out.contains("M = 19"));
    let (code, _, _) = run(&["verify-function", "--qbar", "3", "--point", "11,280,88", "--orbit", "O1"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_function_certificates() {
    let v = json(&["verify-function", "--qbar", "2"]);
    let beta = &v["functions"][3];
    assert_eq!(beta["name"], "betabar");
    assert_eq!(beta["certificate"]["intersection"], 5);
    assert_eq!(beta["certificate"]["pole_order"], 13);
    let o1 = json(&["verify-function", "--qbar", "2", "--orbit", "O1"]);
    assert_eq!(o1["base_point"], "Xinf");
}

#[test]
fn imult_subcommand() {
    assert_eq!(json(&["imult", "Y^2 + Z^3", "Y"])["multiplicity"], "3");
    assert_eq!(json(&["imult", "Y*Z", "Z"])["multiplicity"], "INFINITE");
    let (code, _, err) = run(&["imult", "Y + ", "Z"]);
    assert_eq!(code, 2);
    assert!(err.contains("parse"));
}

#[test]
fn search_nongap_subcommand() {
    let rows = json(&["search-nongap", "--qbar", "2"]);
    let ns: Vec<i64> = rows.as_array().unwrap().iter().map(|r| r["n"].as_i64().unwrap()).collect();
    assert_eq!(ns, vec![13, 14, 15, 16]);
    let (code, _, err) = run(&["search-nongap", "--monomials", "Z,Z"]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn selftest_passes() {
    let (code, out, _) = run(&["selftest", "--qbar", "2", "--format", "csv"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 12);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["points", "--bogus"]).0, 2);
    assert_eq!(run(&["points", "--qbar", "4"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["improvements", "--format", "gkmat"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    for args in [&["improvements", "--format", "csv"][..], &["matrix", "--ell", "7", "--format", "gkmat"][..]] {
        assert_eq!(run(args).1, run(args).1);
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("gkagc-test-{}.gkmat", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["matrix", "--ell", "3", "--format", "gkmat", "--out", p]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("GKMAT/1\n"));
}

#[test]
fn field_polynomial_override() {
    let bin = env!("CARGO_BIN_EXE_gkagc");
    // X^6 + X + 1 is irreducible over GF(2)
    let out = Command::new(bin)
        .args(["code-table", "--qbar", "2", "--orbit", "O1", "--format", "csv"])
        .env("GKAGC_FIELD_POLY", "1,1,0,0,0,0,1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let default =
        Command::new(bin).args(["code-table", "--qbar", "2", "--orbit", "O1", "--format", "csv"]).output().unwrap();
    assert_eq!(out.stdout, default.stdout);
    let pts = Command::new(bin)
        .args(["selftest", "--qbar", "2", "--format", "csv"])
        .env("GKAGC_FIELD_POLY", "1,1,0,0,0,0,1")
        .output()
        .unwrap();
    assert!(pts.status.success(), "{}", String::from_utf8_lossy(&pts.stdout));
    let bad = Command::new(bin).args(["points"]).env("GKAGC_FIELD_POLY", "1,0,0,0,0,0,1").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("not irreducible"));
}
