use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qclrc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qclrc"))
        .args(args)
        .output()
        .expect("run qclrc")
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn structured(args: &[&str]) -> Value {
    let mut all = vec!["--format", "structured"];
    all.extend_from_slice(args);
    let o = qclrc(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("one JSON document")
}

#[test]
fn factor_lists_x_minus_one_last() {
    let o = qclrc(&["factor", "--m", "7", "--q", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[2].contains("[1,1]"));

    let v = structured(&["factor", "--m", "11", "--q", "5"]);
    assert_eq!(v["command"], "factor");
    let polys: Vec<&str> = v["result"]["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["poly"].as_str().unwrap())
        .collect();
    assert_eq!(polys, ["[4,3,1,4,4,1]", "[4,1,1,4,2,1]", "[4,1]"]);

    let v = structured(&["factor", "--m", "1", "--q", "3"]);
    assert_eq!(v["result"]["factors"].as_array().unwrap().len(), 1);
}

#[test]
fn factor_rejects_shared_prime() {
    let o = qclrc(&["factor", "--m", "10", "--q", "5"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("gcd"));
}

#[test]
fn analyze_small_binary_code() {
    let v = structured(&["analyze", &data("almost-optimal-f2-m7.qc"), "--seed", "7"]);
    let r = &v["result"]["report"];
    assert_eq!((r["n"].as_u64(), r["k"].as_u64()), (Some(21), Some(15)));
    assert_eq!(r["d_go"], 4);
    assert_eq!(r["d_s"], 5);
    assert_eq!(r["r_upper"], 6);
    assert_eq!(r["status"], "almost-optimal");
    let rec = &v["result"]["recovery"]["recovery"];
    assert_eq!(rec["recovered"], rec["actual"]);
    assert!(rec["set"].as_array().unwrap().len() <= 6);
}

#[test]
fn analyze_quinary_base_code() {
    let v = structured(&["analyze", &data("optimal-family-f5-m11.qc"), "--seed", "1"]);
    let r = &v["result"]["report"];
    assert_eq!(r["d_go"], 10);
    assert_eq!(r["d_s"], 26);
    assert_eq!(r["status"], "gap-16");
    assert_eq!(r["d_certified"], 4);
    // D is the whole space, so there is no column repair to demonstrate
    assert!(v["result"]["recovery"]["recovery"].is_null());
}

#[test]
fn text_and_structured_carry_the_same_numbers() {
    let file = data("almost-optimal-f2-m7.qc");
    let text = stdout(&qclrc(&["analyze", &file]));
    let v = structured(&["analyze", &file]);
    let r = &v["result"]["report"];
    for (key, label) in [
        ("d_s", "d_S"),
        ("r_upper", "r_upper"),
        ("d_go", "d_GO"),
        ("d_certified", "d_certified"),
    ] {
        assert!(
            text.contains(&format!("{label} = {}", r[key])),
            "{label} missing from text"
        );
    }
    assert!(text.contains(&format!("n = {}, k = {}", r["n"], r["k"])));
    for t in r["terms"].as_array().unwrap() {
        assert!(text.contains(&format!("= {}", t["value"])));
    }
}

#[test]
fn scan_finds_the_optimal_member() {
    let v = structured(&["scan", &data("optimal-family-f5-m11.qc"), "--jmax", "22"]);
    let s = &v["result"];
    assert_eq!(s["j0"], 14);
    assert_eq!(s["chain_condition"], true);
    let row = &s["rows"][14];
    assert_eq!(
        (
            &row["n"],
            &row["k"],
            &row["d_s"],
            &row["d_go"],
            &row["status"]
        ),
        (
            &Value::from(231),
            &Value::from(202),
            &Value::from(10),
            &Value::from(10),
            &Value::from("optimal")
        )
    );
}

#[test]
fn scan_with_jmax_zero_matches_analyze() {
    let file = data("almost-optimal-f2-m7.qc");
    let s = structured(&["scan", &file, "--jmax", "0"]);
    let a = structured(&["analyze", &file]);
    let rows = s["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    for key in ["n", "k", "d_s", "d_go", "status"] {
        assert_eq!(rows[0][key], a["result"]["report"][key], "{key}");
    }
}

#[test]
fn reproduce_exit_status() {
    for id in ["4.1", "4.4", "4.6"] {
        let o = qclrc(&["reproduce", id]);
        assert!(o.status.success(), "{id}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
    let o = qclrc(&["reproduce", "4.2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn extend_keeps_distance() {
    let v = structured(&[
        "extend",
        "--q",
        "5",
        "--j",
        "1",
        "--row",
        "1 0 0 1 1",
        "--row",
        "0 1 0 1 2",
        "--row",
        "0 0 1 1 3",
    ]);
    let r = &v["result"];
    assert_eq!(
        (r["n"].as_u64(), r["k"].as_u64(), r["d"].as_u64()),
        (Some(6), Some(4), Some(3))
    );

    // no [8, 6, 3] code over F_5: at most q + 1 = 6 columns pairwise independent
    let o = qclrc(&[
        "extend",
        "--q",
        "5",
        "--j",
        "3",
        "--row",
        "1 0 0 1 1",
        "--row",
        "0 1 0 1 2",
        "--row",
        "0 0 1 1 3",
    ]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("existence not established"));
}

#[test]
fn extend_over_extension_field() {
    let v = structured(&[
        "extend",
        "--q",
        "4",
        "--j",
        "2",
        "--row",
        "1 0 [0,1]",
        "--row",
        "0 1 [1,1]",
    ]);
    let r = &v["result"];
    assert_eq!(
        (r["n"].as_u64(), r["k"].as_u64(), r["d"].as_u64()),
        (Some(5), Some(4), Some(2))
    );
}

#[test]
fn mindist_exact_and_budgeted() {
    let v = structured(&["mindist", "--q", "2", "--row", "1 1 1 1 1 1 1"]);
    assert_eq!(v["result"]["distance"], 7);
    assert_eq!(v["result"]["exact"], true);

    let exact = structured(&["mindist", "--q", "2", "--random", "40", "20", "--seed", "1"]);
    assert_eq!(exact["result"]["exact"], true);
    let cheap = structured(&[
        "mindist", "--q", "2", "--random", "40", "20", "--seed", "1", "--budget", "1000",
    ]);
    assert_eq!(cheap["result"]["exact"], false);
    // the randomized search only ever gives an upper bound
    assert!(cheap["result"]["distance"].as_u64() >= exact["result"]["distance"].as_u64());
}

#[test]
fn parse_errors_name_the_line() {
    let dir = std::env::temp_dir().join(format!("qclrc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.qc");
    std::fs::write(
        &path,
        "q: 2\nm: 7\nell: 3\nconstituents:\n  u=1\n    [1] [1]\n",
    )
    .unwrap();
    let o = qclrc(&["analyze", path.to_str().unwrap()]);
    assert!(!o.status.success());
    assert!(
        String::from_utf8_lossy(&o.stderr).contains("line 6"),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );

    std::fs::write(&path, "q: 2\nm: 7\nell: 3\nconstituents:\n").unwrap();
    let o = qclrc(&["analyze", path.to_str().unwrap()]);
    assert!(!o.status.success());
    std::fs::remove_dir_all(&dir).unwrap();
}
