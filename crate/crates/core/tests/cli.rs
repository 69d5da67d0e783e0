//! Integration tests driving the compiled `legprod` binary.

use std::process::{Command, Output};

fn legprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_legprod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn product_triangle_example() {
    let o = legprod(&["product", "--form", "1,0,1", "--region", "triangle", "--prime", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("value = -1") && s.contains("skipped = 0"), "{s}");
    // p = 5: one skipped pair, empty product
    let o = legprod(&["product", "--form", "1,0,1", "--prime", "5"]);
    let s = stdout(&o);
    assert!(s.contains("value = +1") && s.contains("skipped = 1"), "{s}");
}

#[test]
fn linear_product_defaults_to_square_region() {
    let o = legprod(&["product", "--linear", "2,-1", "--prime", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("value = +1") && s.contains("skipped = 1"), "{s}");
    // an explicit triangle region is still rejected
    let o = legprod(&["product", "--linear", "2,-1", "--region", "triangle", "--prime", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn product_methods_agree() {
    for region in ["triangle", "square"] {
        let naive = legprod(&[
            "product", "--form", "2,5,2", "--region", region, "--method", "naive", "--prime", "97",
        ]);
        let grouped = legprod(&[
            "product", "--form", "2,5,2", "--region", region, "--method", "grouped", "--prime", "97",
        ]);
        assert_eq!(naive.status.code(), Some(0));
        assert_eq!(stdout(&naive), stdout(&grouped), "{region}");
    }
}

#[test]
fn charsum_and_intervals() {
    let o = legprod(&["charsum", "--shifts", "0,1,2", "--prime", "5"]);
    assert!(stdout(&o).contains("sum = 2"), "{}", stdout(&o));
    let o = legprod(&["intervals", "--n", "4", "--r", "1", "--prime", "11"]);
    assert!(stdout(&o).contains("S_1^4 = 0"), "{}", stdout(&o));
    let o = legprod(&["intervals", "--lo", "0", "--hi", "1/2", "--prime", "7"]);
    assert!(stdout(&o).contains("product = -1"), "{}", stdout(&o));
}

#[test]
fn classnum_modes() {
    let o = legprod(&["classnum", "--d", "-23"]);
    assert!(stdout(&o).contains("h = 3"), "{}", stdout(&o));
    let o = legprod(&["classnum", "--prime", "7"]);
    let s = stdout(&o);
    assert!(s.contains("h(-p) = 1") && s.contains("mordell_parity = 1"), "{s}");
    let o = legprod(&["classnum", "--prime", "17"]);
    assert!(stdout(&o).contains("h(-4p) = 4"), "{}", stdout(&o));
}

#[test]
fn verify_json_pass_and_exit_codes() {
    let o = legprod(&["verify", "--theorem", "T4.3", "--primes", "5..1000", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "PASS");
    assert_eq!(v["range"], "5..1000");
    // audit-class discrepancies exit 0
    let o = legprod(&["verify", "--theorem", "R3.5", "--primes", "5..300", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "FAIL");
    // usage errors exit 2
    let o = legprod(&["verify", "--theorem", "T9.9", "--primes", "5..10"]);
    assert_eq!(o.status.code(), Some(2));
    let o = legprod(&["verify", "--theorem", "T4.3", "--primes", "oops"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_catalog_id_reachable() {
    for (id, _, _) in legendre_products::list_theorems() {
        let o = legprod(&["verify", "--theorem", id, "--primes", "5..60", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "id {id}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["theorem"], id);
    }
}

#[test]
fn audit_subcommand() {
    let o = legprod(&[
        "audit", "--form", "1,1,1", "--region", "triangle", "--prime-hi", "600", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "PASS");
    // i^2+j^2 over the square is periodic mod 8, so a tiny modulus suffices
    let o = legprod(&[
        "audit", "--form", "1,0,1", "--region", "square", "--modulus", "8", "--prime-hi", "600",
        "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "PASS");
}

#[test]
fn repeated_runs_identical() {
    let args = ["verify", "--theorem", "C4.6", "--primes", "5..500", "--format", "json"];
    let a = stdout(&legprod(&args));
    let b = stdout(&legprod(&args));
    assert_eq!(a, b);
    // jobs flag does not change serialized output
    let mut with_jobs1 = args.to_vec();
    with_jobs1.extend(["--jobs", "1"]);
    let mut with_jobs8 = args.to_vec();
    with_jobs8.extend(["--jobs", "8"]);
    assert_eq!(stdout(&legprod(&with_jobs1)), stdout(&legprod(&with_jobs8)));
}

#[test]
fn output_file_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let o = legprod(&[
        "verify", "--theorem", "R2.4-conj71", "--primes", "5..40", "--format", "csv",
        "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.starts_with("theorem,p,params,claimed,computed"), "{body}");
    assert!(body.lines().count() > 1, "audit rows expected: {body}");
}

#[test]
fn list_subcommand() {
    let o = legprod(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("T4.3") && s.contains("R3.5") && s.contains("audit"), "{s}");
    let o = legprod(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.as_array().unwrap().len() >= 25);
}

#[test]
fn jobs_env_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_legprod"))
        .env("LEGPROD_JOBS", "2")
        .args(["verify", "--theorem", "L4.5", "--primes", "5..500", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
