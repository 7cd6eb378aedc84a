use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const WORKED: &str = "(e^-4,1)*x1 + (1,8)*x1' + (e^-1,8)*x1''";

fn tropdiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tropdiff")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn validator() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schemas/output.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(v: &Value) {
    let validator = validator();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema errors: {errors:?}\n{v:#}");
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn check_reports_terms_and_yes() {
    let out = tropdiff(&["check", "--pair", "T2", "--eq", WORKED, "--sol", "1 + t^2", "--deg", "16"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_valid(&v);
    assert_eq!(v["verdict"], "yes");
    let values: Vec<&str> =
        v["equations"][0]["terms"].as_array().unwrap().iter().map(|t| t["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["(e^-4, 1)", "(e^-1, 4)", "(e^-1, 4)"]);
    assert!(!validator().is_valid(&serde_json::json!({ "verb": "check", "verdict": "maybe" })));
}

#[test]
fn check_exit_codes_follow_verdicts() {
    let no = tropdiff(&["check", "--eq", WORKED, "--sol", "1 + t^3"]);
    assert_eq!(code(&no), 1);
    assert_valid(&json(&no));
    // x = 1 + O(t^2): x'' cannot be formed
    let unknown = tropdiff(&["check", "--eq", WORKED, "--sol", "1 + O(t^2)"]);
    assert_eq!(code(&unknown), 2);
    let v = json(&unknown);
    assert_valid(&v);
    assert_eq!(v["verdict"], "unknown");
    assert!(v["equations"][0]["sum"].is_null());
    // x = 1 + t^3 + O(t^4): π(x'') is 0 up to order ≥ 2, which cannot reach e^-1
    let decided = tropdiff(&["check", "--eq", WORKED, "--sol", "1 + t^3 + O(t^4)"]);
    assert_eq!(code(&decided), 1);
    let v = json(&decided);
    assert_valid(&v);
}

#[test]
fn usage_errors_exit_3() {
    let bad_pair = tropdiff(&["check", "--pair", "Q", "--eq", "x1", "--sol", "1"]);
    assert_eq!(code(&bad_pair), 3);
    assert!(String::from_utf8_lossy(&bad_pair.stderr).contains("unknown pair"));
    let bad_literal = tropdiff(&["check", "--eq", "x1 +", "--sol", "1"]);
    assert_eq!(code(&bad_literal), 3);
    assert!(String::from_utf8_lossy(&bad_literal.stderr).contains("position"));
    assert_eq!(code(&tropdiff(&["frobnicate"])), 3);
    assert_eq!(code(&tropdiff(&["check", "--eq", "x1", "--sol", "1", "--colour", "red"])), 3);
    assert_eq!(code(&tropdiff(&["scan", "--paper-demo", "--prime", "4"])), 3);
    assert_eq!(code(&tropdiff(&["verify", "--suite", "nonsense"])), 3);
}

#[test]
fn engine_errors_exit_4() {
    let out = tropdiff(&["enumerate", "--eq", "x1 + x1'", "--max-deg", "40"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn enumerate_matches_brute_force() {
    let out = tropdiff(&["enumerate", "--eq", "x1 + x1'", "--max-deg", "5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_valid(&v);
    let got: Vec<Vec<u64>> = serde_json::from_value(v["solutions"].clone()).unwrap();
    let mut want: Vec<Vec<u64>> = (0u64..64)
        .map(|mask| (0..6).filter(|i| mask >> i & 1 == 1).collect::<Vec<u64>>())
        .filter(|s| s.is_empty() || (s.contains(&0) && s.contains(&1)))
        .collect();
    want.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    assert_eq!(got, want);
}

#[test]
fn demo_flag_prints_the_cascade() {
    let out = tropdiff(&["scan", "--paper-demo"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_valid(&v);
    let verdicts: Vec<&str> = v["slots"].as_array().unwrap().iter().map(|s| s["verdict"].as_str().unwrap()).collect();
    assert_eq!(verdicts, ["none", "all_positive_c", "none", "all_positive_c", "single_value"]);
    assert_eq!(v["slots"][4]["c"], "1/8");
    assert_eq!(v["slots"][1]["witness_terms"][1], "(e^-1, 4β)");
    let text = tropdiff(&["scan", "--paper-demo", "--output", "text"]);
    assert_eq!(String::from_utf8_lossy(&text.stdout).lines().filter(|l| l.contains(": ")).count(), 5);
}

#[test]
fn solve_coeff_reports_witness() {
    let out = tropdiff(&["solve-coeff", "--eq", WORKED, "--slot", "5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_valid(&v);
    assert_eq!(v["solution"]["verdict"], "single_value");
    assert_eq!(v["solution"]["c"], "1/8");
    assert_eq!(v["solution"]["spot_check"], true);
    let none = tropdiff(&["solve-coeff", "--eq", WORKED, "--slot", "3"]);
    assert_eq!(code(&none), 1);
    assert_valid(&json(&none));
}

#[test]
fn tropicalize_and_classical_solve() {
    let t = tropdiff(&["tropicalize", "--eq", "x1'' - x1", "--prime", "2"]);
    assert_eq!(code(&t), 0);
    let v = json(&t);
    assert_valid(&v);
    assert_eq!(v["tropical_equation"], "x1 + x1''");

    let c = tropdiff(&["classical-solve", "--eq", "x1'' + x1", "--init", "0,1", "--deg", "9"]);
    assert_eq!(code(&c), 0);
    let v = json(&c);
    assert_valid(&v);
    assert_eq!(v["verdict"], "yes");
    assert_eq!(v["solution"], "t - (1/6)t^3 + (1/120)t^5 - (1/5040)t^7 + (1/362880)t^9 + O(t^10)");

    let g = tropdiff(&["classical-solve", "--pair", "B", "--eq", "x1' - x1", "--init", "1", "--deg", "6"]);
    assert_eq!(code(&g), 0);
    let v = json(&g);
    assert_valid(&v);
    assert_eq!(v["point"][0]["enhanced"], "1 + t + t^2 + t^3 + t^4 + t^5 + t^6 + O(t^7)");
}

#[test]
fn verify_reports_counts() {
    let out = tropdiff(&["verify", "--suite", "axioms", "--cases", "40"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_valid(&v);
    assert_eq!(v["ok"], true);
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["passed"] == 40));
}

#[test]
fn json_is_byte_identical_across_runs_and_strategies() {
    let args = ["verify", "--suite", "leibniz", "--pair", "T2", "--cases", "60"];
    let a = tropdiff(&args);
    let b = tropdiff(&args);
    assert_eq!(a.stdout, b.stdout);
    let mut seq = args.to_vec();
    seq.extend(["--strategy", "sequential"]);
    assert_eq!(tropdiff(&seq).stdout, a.stdout);
    let e1 = tropdiff(&["enumerate", "--eq", "x1 + e^-1*x1''", "--max-deg", "7"]);
    let e2 = tropdiff(&["enumerate", "--eq", "x1 + e^-1*x1''", "--max-deg", "7", "--strategy", "seq"]);
    assert_eq!(e1.stdout, e2.stdout);
}

#[test]
fn config_file_supplies_defaults() {
    let dir = std::env::temp_dir().join(format!("tropdiff-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.conf");
    std::fs::write(&path, "# run settings\npair = B\noutput = text\n").unwrap();
    let p = path.to_str().unwrap();
    let out = tropdiff(&["--config", p, "check", "--eq", "x1 + x1'", "--sol", "1 + t"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("verdict: yes"));
    // flags win over the file
    let out = tropdiff(&["--config", p, "--output", "json", "check", "--eq", "x1 + x1'", "--sol", "1 + t"]);
    assert_eq!(json(&out)["pair"], "B");
    std::fs::write(&path, "prime = 6\n").unwrap();
    assert_eq!(code(&tropdiff(&["--config", p, "scan", "--paper-demo"])), 3);
    std::fs::remove_dir_all(&dir).unwrap();
}
