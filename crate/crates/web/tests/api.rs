use qclrc_web::api;
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).expect("valid JSON")
}

fn example_spec(id: &str) -> String {
    let list = parse(&api::examples());
    list.as_array()
        .unwrap()
        .iter()
        .find(|e| e["id"] == id)
        .map(|e| e["spec"].as_str().unwrap().to_string())
        .unwrap()
}

#[test]
fn factor_returns_data_and_text() {
    let v = parse(&api::factor(7, 2).unwrap());
    assert_eq!(v["data"]["factors"].as_array().unwrap().len(), 3);
    assert_eq!(v["data"]["factors"][2]["poly"], "[1,1]");
    assert!(v["text"].as_str().unwrap().contains("x^7 - 1 over F_2"));
    assert!(api::factor(10, 5).unwrap_err().contains("gcd"));
    assert!(api::factor(7, 6).is_err());
}

#[test]
fn examples_are_listed() {
    let list = parse(&api::examples());
    let ids: Vec<&str> = list
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["4.1", "4.4", "4.6"]);
}

#[test]
fn analyze_example() {
    let v = parse(&api::analyze(&example_spec("4.1")).unwrap());
    assert_eq!(v["data"]["d_go"], 4);
    assert_eq!(v["data"]["d_s"], 5);
    assert!(api::analyze("q: 2\nm: 7\n").is_err());
}

#[test]
fn scan_series_for_the_chart() {
    let v = parse(&api::scan_family(&example_spec("4.6"), 22).unwrap());
    let rows = v["data"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 20);
    for (j, row) in rows.iter().enumerate() {
        assert_eq!(row["j"], j);
        assert_eq!(row["d_go"], 10);
    }
    assert_eq!(v["data"]["j0"], 14);
    assert!(api::scan_family(&example_spec("4.6"), api::MAX_JMAX + 1).is_err());
}
