use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fischer-lab"))
        .args(args)
        .env_remove("FISCHER_LAB_CACHE_DIR")
        .output()
        .expect("spawn fischer-lab")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_s4() {
    let v = json(&["analyze", "symmetric:n=4", "--json"]);
    assert_eq!(v["group"]["order"], 24);
    assert_eq!(v["fischer"]["transpositions"], 6);
    assert_eq!(v["fischer"]["components"][0]["valency"], 4);
    assert_eq!(v["fischer"]["symplectic_type"], "symplectic");
    assert_eq!(v["fischer"]["h_triple"], Value::Null);
    let m = &v["matsuo"];
    assert_eq!(m["form_diagonal"], "1/4");
    assert_eq!(m["form_adjacent"], "1/32");
    assert_eq!(m["unity"][0]["coefficient"], "2/3");
    assert_eq!(m["radical_dim"], 0);
    assert_eq!(m["spectra"][0]["dim_alpha"], 2);
    for check in ["axioms", "unity_verdict", "quotient", "spectra_verdict", "miyamoto"] {
        assert_eq!(m[check]["status"], "pass", "{check}");
    }
    assert_eq!(m["sigma"]["kernel_order"], 1);
    assert_eq!(m["pair_types"]["count_2a"], 12);
    assert_eq!(m["pair_types"]["count_2b"], 3);
}

#[test]
fn json_is_canonical() {
    let out = run(&["analyze", "weyl:type=D,rank=4", "--json"]);
    let text = stdout(&out);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    assert_eq!(v["group"]["center_order"], 2);
    assert_eq!(v["matsuo"]["sigma"]["kernel_order"], 2);
}

#[test]
fn h_witness_in_orthogonal_f3() {
    let v = json(&["analyze", "orthogonal-f3:dim=5", "--json"]);
    assert_eq!(v["group"]["order"], 51840);
    assert_eq!(v["fischer"]["transpositions"], 45);
    assert_eq!(v["fischer"]["h_subgroup_order"], 54);
    assert_eq!(v["fischer"]["h_center_order"], 3);
    assert_eq!(v["fischer"]["h_subgroup"]["status"], "pass");
}

#[test]
fn degenerate_alpha_skips_spectra() {
    let v = json(&["analyze", "symmetric:n=3", "--alpha", "2", "--json"]);
    assert_eq!(v["matsuo"]["spectra_verdict"]["status"], "not-run");
    assert_eq!(v["matsuo"]["pair_types"]["verdict"]["status"], "not-run");
    let v = json(&["analyze", "symmetric:n=6", "--alpha", "-2", "--json"]);
    assert_eq!(v["matsuo"]["radical_dim"], 5);
    assert_eq!(v["matsuo"]["quotient_dim"], 10);
}

#[test]
fn exports() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let out = run(&[
        "analyze",
        "symmetric:n=3",
        "--dot",
        &p("g.dot"),
        "--gram",
        &p("gram.csv"),
        "--structure",
        &p("sc.json"),
        "--json",
        &p("report.json"),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("check axioms"));
    let dot = fs::read_to_string(p("g.dot")).unwrap();
    assert!(dot.starts_with("graph") && dot.matches("--").count() == 3);
    let gram = fs::read_to_string(p("gram.csv")).unwrap();
    assert_eq!(gram.lines().next().unwrap(), "1/4,1/32,1/32");
    let sc: Value = serde_json::from_str(&fs::read_to_string(p("sc.json")).unwrap()).unwrap();
    assert_eq!(sc.as_array().unwrap().len(), 12);
    let report: Value = serde_json::from_str(&fs::read_to_string(p("report.json")).unwrap()).unwrap();
    assert_eq!(report["descriptor"], "symmetric:n=3");
}

#[test]
fn fusion_and_sakuma() {
    let v = json(&["fusion", "--m", "1", "--left", "2,2", "--right", "2,2", "--json"]);
    let terms = v["product"]["terms"].as_array().unwrap();
    let weights: Vec<&str> = terms.iter().map(|t| t["weight"].as_str().unwrap()).collect();
    assert_eq!(weights, ["0/1", "1/2"]);
    let v = json(&["fusion", "--m", "2", "--weight", "7/10", "--json"]);
    assert_eq!(v["weight_query"]["exists"], false);
    assert_eq!(v["central_charge_is_weight"], false);

    let v = json(&["sakuma", "3A", "--json"]);
    assert_eq!(v["records"][0]["inner_product"], "13/1024");
    let v = json(&["sakuma", "--inner", "1/256", "--json"]);
    assert_eq!(v["ambiguous"], true);
    assert_eq!(v["records"].as_array().unwrap().len(), 2);
}

#[test]
fn catalog_listing() {
    let v = json(&["catalog", "list", "--json"]);
    assert_eq!(v.as_array().unwrap().len(), 5);
    let out = run(&["catalog", "list"]);
    assert!(stdout(&out).contains("orthogonal-f3"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", "symmetric:n=99"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "symmetric:n=4", "--alpha", "x"]).status.code(), Some(2));
    assert_eq!(run(&["fusion", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["sakuma", "9Z"]).status.code(), Some(2));
    assert_eq!(run(&["--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["analyze", "symmetric:n=8", "--max-order", "100"]).status.code(), Some(3));
    assert_eq!(run(&["analyze", "symmetric:n=4", "--max-axes", "5"]).status.code(), Some(3));
}

/// Every object in the report has exactly the keys the schema requires.
fn check_keys(value: &Value, schema: &Value, root: &Value, path: &str) {
    let schema = match schema.get("$ref").and_then(Value::as_str) {
        Some(r) => &root["$defs"][r.trim_start_matches("#/$defs/")],
        None => schema,
    };
    match value {
        Value::Object(map) => {
            let required: Vec<&str> = schema["required"]
                .as_array()
                .map(|r| r.iter().filter_map(Value::as_str).collect())
                .unwrap_or_default();
            let mut have: Vec<&str> = map.keys().map(String::as_str).collect();
            let mut want = required.clone();
            have.sort_unstable();
            want.sort_unstable();
            assert_eq!(have, want, "keys at {path}");
            for (k, v) in map {
                check_keys(v, &schema["properties"][k], root, &format!("{path}.{k}"));
            }
        }
        Value::Array(items) => {
            if let Some(item) = schema.get("items") {
                for v in items {
                    check_keys(v, item, root, &format!("{path}[]"));
                }
            }
        }
        _ => {}
    }
}

#[test]
fn report_matches_the_schema() {
    let schema: Value =
        serde_json::from_str(include_str!("../../../docs/analyze-report.schema.json")).unwrap();
    for d in ["symmetric:n=4", "orthogonal-f3:dim=5", "orthogonal-f2:dim=4,eps=+"] {
        check_keys(&json(&["analyze", d, "--json"]), &schema, &schema, d);
    }
}
