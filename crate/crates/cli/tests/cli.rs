use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = bhx::run(std::iter::once("bhx").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.push("--json");
    let (code, out, _) = run(&full);
    (code, serde_json::from_str(&out).expect("stdout is JSON"))
}

#[test]
fn gen_writes_header_and_edges() {
    let (code, out, _) = run(&["gen", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("p 16 32"));
    assert_eq!(out.lines().filter(|l| !l.starts_with(['c', 'p'])).count(), 32);
}

#[test]
fn neighbors_of_origin() {
    let (code, v) = json(&["neighbors", "--n", "2", "--vertex", "0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["equivalent"], "2,0");
    assert_eq!(v["neighbors"].as_array().unwrap().len(), 4);
}

#[test]
fn girth_of_quotients() {
    let (_, v) = json(&["girth", "--n", "2"]);
    assert_eq!(v["girth"], 8);
    let (_, v) = json(&["girth", "--n", "3"]);
    assert_eq!(v["girth"], 6);
}

#[test]
fn eg_exact_and_dense() {
    let (code, v) = json(&["eg", "--n", "3", "--g", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["edges"], 8);
    assert_eq!(v["certification"], "exact");
    let (_, v) = json(&["eg", "--n", "5", "--g", "9"]);
    assert!(v["edges"].as_u64().unwrap() >= 17);
}

#[test]
fn lambda_brute_and_pipeline() {
    let (code, v) = json(&["lambda", "--n", "2", "--g", "3", "--method", "brute"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], 8);
    let (_, v) = json(&["lambda", "--n", "5", "--g", "9"]);
    assert_eq!(v["upper"], 66);
    assert_eq!(v["contingent"], true);
}

#[test]
fn pipeline_verdicts() {
    let (_, v) = json(&["pipeline", "--n", "3", "--g", "3"]);
    assert_eq!(v["verdict"], "equals_conjecture");
    let (_, v) = json(&["pipeline", "--n", "5", "--g", "9"]);
    assert_eq!(v["verdict"], "below_conjecture");
    assert_eq!(v["conjecture_value"], 68);
}

#[test]
fn verify_small_suite_passes() {
    let (code, out, _) = run(&["verify", "--max-n", "2", "--no-timings"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["neighbors", "--n", "2", "--vertex", "4,0"]).0, 2);
    assert_eq!(run(&["construct", "--n", "1", "--g", "8", "--kind", "k2-star"]).0, 3);
    assert_eq!(run(&["lambda", "--n", "3", "--g", "2", "--method", "brute"]).0, 3);
    let (code, v) = json(&["gen", "--n", "0"]);
    assert_eq!(code, 3);
    assert_eq!(v["exit_code"], 3);
}

#[test]
fn check_witness_rejects_tampering() {
    let dir = std::env::temp_dir().join(format!("bhx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.json");
    let file = path.to_str().unwrap();
    assert_eq!(run(&["construct", "--n", "4", "--g", "5", "--kind", "k2-star", "--json", "--out", file]).0, 0);
    assert_eq!(run(&["check-witness", file]).0, 0);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    v["edges"] = Value::from(9);
    std::fs::write(&path, v.to_string()).unwrap();
    assert_ne!(run(&["check-witness", file]).0, 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn config_file_sets_budget() {
    let dir = std::env::temp_dir().join(format!("bhx-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("budget.conf");
    std::fs::write(&path, "subsets = 10\n").unwrap();
    let cfg = path.to_str().unwrap();
    assert_eq!(run(&["--config", cfg, "eg", "--n", "2", "--g", "5", "--method", "brute"]).0, 3);
    std::fs::write(&path, "subsets = ten\n").unwrap();
    assert_eq!(run(&["--config", cfg, "gen", "--n", "1"]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}
