use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubic-clifford"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_ok(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn reduce_relation_gives_zero_vector() {
    let v = json_ok(&["reduce", "--field", "Qw", "--expr", "x^3*y - y*x^3"]);
    let coords = v["coords"].as_array().unwrap();
    assert_eq!(coords.len(), 18);
    assert!(coords.iter().all(|c| c == "0"));
}

#[test]
fn verify_identities_all_pass() {
    let v = json_ok(&["verify-identities", "--field", "Fp", "--p", "7", "--omega", "2"]);
    assert_eq!(v["report"]["passed"], 4);
    assert_eq!(v["report"]["total"], 4);
}

#[test]
fn orbits_csv_is_deterministic() {
    let args = ["orbits", "--field", "Fp", "--p", "7", "--nondegenerate"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("representative,size,stabilizer_order,delta,delta_class6,has_point")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 9);
    for row in rows {
        let cols: Vec<&str> = row.split(',').collect();
        let size: usize = cols[1].parse().unwrap();
        let stab: usize = cols[2].parse().unwrap();
        assert_eq!(size * stab, 2016);
        assert_eq!(cols[5], "true");
    }
}

#[test]
fn form_commands() {
    let d = json_ok(&["disc", "--field", "Q", "--coeffs", "1,0,0,1"]);
    assert_eq!(d["delta"], -27);
    let a = json_ok(&["act", "--field", "Q", "--coeffs", "1,2,3,4", "--matrix", "0,1,1,0"]);
    assert_eq!(a["image"]["coeffs"], serde_json::json!([4, 3, 2, 1]));
    let g = json_ok(&["diagonalize", "--field", "Fp", "--p", "7", "--coeffs", "0,1,1,0"]);
    assert_eq!(g["diagonal"]["coeffs"][1], 0);
    assert_eq!(g["diagonal"]["coeffs"][2], 0);
    let s = json_ok(&["stab", "--field", "Fp", "--p", "7", "--coeffs", "1,0,0,1"]);
    assert_eq!(s["order"], 18);
    let t = json_ok(&["stab", "--field", "Qw", "--coeffs", "1,0,0,2"]);
    assert_eq!(t["order"], 9);
    let th = json_ok(&["disc", "--field", "Q", "--coeffs", "0,1,1,0", "--threes"]);
    assert_eq!(th["delta"], 81);
}

#[test]
fn curve_commands() {
    let j = json_ok(&["jacobian", "--field", "Fp", "--p", "7", "--coeffs", "1,0,0,1"]);
    assert_eq!(j["A"], 2);
    assert_eq!(j["j"], 0);
    let t = json_ok(&["torsion", "--field", "Fp", "--p", "7", "--a", "2"]);
    assert_eq!(t["size"], 3);
    let q = json_ok(&["torsion", "--field", "Q", "--a", "2"]);
    assert_eq!(q["points"], serde_json::json!(["infinity"]));
    let k = json_ok(&["lambda-kernel", "--field", "Fp", "--p", "13", "--coeffs", "1,0,0,1"]);
    assert_eq!(k["agrees_with_torsion"], true);
    let p = json_ok(&["point-search", "--field", "Q", "--coeffs", "1,0,0,1", "--budget", "5"]);
    assert_eq!(p["point"], serde_json::json!({"u": 1, "v": 0, "w": 1}));
    let none = json_ok(&["point-search", "--field", "Q", "--coeffs", "75,0,0,100", "--budget", "8"]);
    assert_eq!(none["status"], "AbsentWithinBudget");
    let c = json_ok(&["cover-point", "--field", "Fp", "--p", "7", "--coeffs", "1,1,1,1", "--which", "3"]);
    assert_eq!(c["verified"], true);
}

#[test]
fn clifford_commands() {
    let iso = json_ok(&["clifford-iso", "--field", "Fp", "--p", "13", "--coeffs", "1,2,0,5", "--seed", "3"]);
    assert_eq!(iso["gamma_factor"], iso["det_squared"]);
    assert_eq!(iso["report"]["passed"], 5);
    let s = json_ok(&["symbol-check", "--field", "Qw", "--coeffs", "1,0,0,1"]);
    assert_eq!(s["report"]["passed"], 3);
    let b = json_ok(&["brauer-probe", "--field", "Q", "--coeffs", "1,0,0,1"]);
    assert_eq!(b["result"]["status"], "TrivialWithWitness");
    let g = json_ok(&["gamma-free", "--field", "Fp", "--p", "7", "--coeffs", "1,0,0,1", "--budget", "1"]);
    assert_eq!(g["independent"], true);
}

#[test]
fn domain_errors_exit_one_with_code() {
    let out = run(&["jacobian", "--field", "Q", "--coeffs", "1,0,0,0"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["code"], "DegenerateForm");
    let out = run(&["gamma-free", "--field", "Q", "--coeffs", "0,1,1,0"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["code"], "HypothesisNotMet");
    let out = run(&["act", "--field", "Q", "--coeffs", "1,0,0,1", "--matrix", "1,2,2,4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two_naming_the_flag() {
    for (args, flag) in [
        (vec!["disc", "--field", "Q"], "--coeffs"),
        (vec!["disc", "--field", "Q", "--coeffs", "1,2,x,4"], "--coeffs"),
        (vec!["reduce", "--expr", "x*(y"], "--expr"),
        (vec!["verify-identities", "--field", "Fp", "--p", "5"], "--p"),
        (vec!["cover-point", "--field", "Fp", "--p", "7", "--coeffs", "1,0,0,1"], "--which"),
        (vec!["disc", "--field", "Q", "--coeffs", "1,0,0,1", "--format", "csv"], "--format"),
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains(flag), "{args:?}");
    }
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}
