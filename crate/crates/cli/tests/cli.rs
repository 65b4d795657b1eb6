use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn kpasep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kpasep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn schema(name: &str) -> Value {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../book/src/schemas")
        .join(name);
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_valid(schema_name: &str, out: &Output) -> Value {
    let value: Value = serde_json::from_str(&stdout(out)).unwrap();
    let validator = jsonschema::validator_for(&schema(schema_name)).unwrap();
    let errors: Vec<String> = validator.iter_errors(&value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}");
    value
}

#[test]
fn count_classes_four_one() {
    let out = kpasep(&["count", "classes", "--n", "4", "--r", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "240");
}

#[test]
fn weight_of_de() {
    let out = kpasep(&["tableaux", "weight", "--word", "de"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "alpha^2*beta + alpha*beta^2 + alpha*beta*q");
}

#[test]
fn tilings_of_de_pass() {
    let out = kpasep(&["verify", "tilings", "--word", "de"]);
    assert_eq!(out.status.code(), Some(0));
    let v = assert_valid("verify-tilings.schema.json", &out);
    assert_eq!(v["tilings"], 1);
    assert_eq!(v["agree"], true);
}

#[test]
fn stationary_json_and_csv_agree() {
    let base = [
        "stationary",
        "--k",
        "2",
        "--n",
        "3",
        "--sector",
        "1",
        "--alpha",
        "1/2",
        "--beta",
        "1/3",
        "--q",
        "1/5",
    ];
    let json = kpasep(&[&base[..], &["--format", "json"]].concat());
    assert_eq!(json.status.code(), Some(0));
    let v = assert_valid("stationary.schema.json", &json);
    let csv = kpasep(&[&base[..], &["--format", "csv"]].concat());
    let lines: Vec<String> = stdout(&csv).lines().skip(1).map(String::from).collect();
    let from_json: Vec<String> = v["stationary"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| format!("{},{}", e["word"].as_str().unwrap(), e["prob"].as_str().unwrap()))
        .collect();
    assert_eq!(lines, from_json);
    assert_eq!(lines.len(), 12);
}

#[test]
fn stationary_is_deterministic() {
    let args = [
        "stationary",
        "--k",
        "3",
        "--n",
        "3",
        "--sector",
        "1,1",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--q",
        "0",
    ];
    assert_eq!(kpasep(&args).stdout, kpasep(&args).stdout);
}

#[test]
fn qmatrix_overrides_swap_rates() {
    let dir = std::env::temp_dir().join(format!("kpasep-qm-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q.json");
    let text = r#"{"q0inf": "1/5", "q0i": {"1": "1/2", "2": "1/3"}, "qiinf": {"1": "1/4"}, "qij": {"2,1": "1/7"}}"#;
    let value: Value = serde_json::from_str(text).unwrap();
    assert!(jsonschema::validator_for(&schema("qmatrix.schema.json"))
        .unwrap()
        .is_valid(&value));
    fs::write(&path, text).unwrap();
    let out = kpasep(&[
        "stationary",
        "--k",
        "3",
        "--n",
        "3",
        "--sector",
        "1,1",
        "--alpha",
        "1/2",
        "--beta",
        "1/3",
        "--q",
        "1/5",
        "--qmatrix",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = assert_valid("stationary.schema.json", &out);
    assert_eq!(v["params"]["qij"]["2,1"], "1/7");
    assert_eq!(v["params"]["qiinf"]["2"], "1/5");
    fs::write(&path, r#"{"qij": {"1,2": "1/7"}}"#).unwrap();
    let bad = kpasep(&[
        "stationary",
        "--k",
        "3",
        "--n",
        "3",
        "--sector",
        "1,1",
        "--alpha",
        "1/2",
        "--beta",
        "1/3",
        "--q",
        "1/5",
        "--qmatrix",
        path.to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(2));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_dae() {
    let out = kpasep(&["tableaux", "enumerate", "--word", "dae", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = assert_valid("tableaux.schema.json", &out);
    assert_eq!(v["count"], 7);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 7);
}

#[test]
fn ansatz_passes_with_one_and_fails_with_alpha_beta() {
    let ok = kpasep(&["verify", "ansatz", "--k", "2", "--window", "4,3"]);
    assert_eq!(ok.status.code(), Some(0));
    let v = assert_valid("verify-ansatz.schema.json", &ok);
    assert!(v["relations"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["residual_count"] == 0));
    let bad = kpasep(&[
        "verify",
        "ansatz",
        "--k",
        "2",
        "--window",
        "4,3",
        "--lambda",
        "alpha*beta",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert_valid("verify-ansatz.schema.json", &bad);
}

#[test]
fn weights_and_chain_pass() {
    let out = kpasep(&["verify", "weights", "--k", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_valid("verify-weights.schema.json", &out);
    let out = kpasep(&["verify", "chain", "--n", "3", "--r", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = assert_valid("verify-chain.schema.json", &out);
    assert_eq!(v["states"], 36);
}

#[test]
fn three_species_tilings_are_exploratory() {
    let out = kpasep(&["verify", "tilings", "--word", "a2da1e"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(assert_valid("verify-tilings.schema.json", &out)["exploratory"], true);
}

#[test]
fn render_writes_svg() {
    let path = std::env::temp_dir().join(format!("kpasep-{}.svg", std::process::id()));
    let out = kpasep(&["render", "--word", "daaddedae", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let svg = fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    fs::remove_file(path).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["tableaux", "weight", "--word", "dxe"][..],
        &[
            "stationary",
            "--k",
            "2",
            "--n",
            "2",
            "--sector",
            "1",
            "--alpha",
            "3/2",
            "--beta",
            "1",
            "--q",
            "1",
        ],
        &[
            "stationary",
            "--k",
            "2",
            "--n",
            "2",
            "--sector",
            "3",
            "--alpha",
            "1",
            "--beta",
            "1",
            "--q",
            "1",
        ],
        &[
            "stationary",
            "--k",
            "2",
            "--n",
            "2",
            "--sector",
            "1,1",
            "--alpha",
            "1",
            "--beta",
            "1",
            "--q",
            "1",
        ],
        &["tableaux", "enumerate", "--word", "a2de", "--k", "2"],
        &["count", "classes", "--n", "2"],
        &["frobnicate"],
    ] {
        assert_eq!(kpasep(args).status.code(), Some(2), "{args:?}");
    }
}
