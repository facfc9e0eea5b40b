use std::process::Command;

use serde_json::Value;
use srt_cli::{cmd_analyze, cmd_table, cmd_verify, parse_range, to_sorted_json, Config, Grid, ReductionReport, Suite};
use srt_core::geometry::HilbertChowModel;
use srt_core::{GroupKind, VerdictCase};

fn srt(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_srt"))
        .args(args)
        .env_remove("SRT_CACHE")
        .output()
        .expect("binary runs")
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../report.schema.json")).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).expect("schema compiles")
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| format!("{e} at {}", e.instance_path)).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

#[test]
fn gl_3_4_is_the_unique_case_with_an_eight_dimensional_model() {
    let r = cmd_analyze(GroupKind::GeneralLinear, 3, 4, &Config::default()).unwrap();
    assert_eq!(r.verdict.case, VerdictCase::SymplecticUniqueDesing);
    let HilbertChowModel::Known(models) = r.model.as_ref().unwrap() else { panic!("model known") };
    assert_eq!(models.len(), 1);
    assert_eq!(models[0].total_dim(), 8);
    assert_eq!(r.quotient.as_ref().unwrap().dim(), 8);
    assert!(r.passed());
}

#[test]
fn gl_1_1_is_trivial() {
    let r = cmd_analyze(GroupKind::GeneralLinear, 1, 1, &Config::default()).unwrap();
    let q = r.quotient.as_ref().unwrap();
    assert_eq!(q.dim(), 0);
    assert_eq!(q.strata.len(), 1);
    assert!(r.passed());
}

#[test]
fn sp_2_2_has_two_components_everywhere() {
    let config = Config { seed: 5, ..Config::default() };
    let r = cmd_analyze(GroupKind::Symplectic, 2, 2, &config).unwrap();
    assert_eq!(r.zero_fiber.as_ref().unwrap().len(), 2);
    assert_eq!(r.quotient.as_ref().unwrap().components.len(), 2);
    assert_eq!(r.hilb_inventory.components.len(), 2);
    assert!(r.verification.iter().any(|c| c.name.starts_with("zero_fiber.predicates/sp")));
    assert!(r.passed(), "{:#?}", r.verification);
}

#[test]
fn orthogonal_reports_are_verdict_only() {
    let r = cmd_analyze(GroupKind::Orthogonal, 5, 3, &Config::default()).unwrap();
    assert_eq!(r.verdict.case, VerdictCase::SymplecticUniqueDesing);
    assert!(r.quotient.is_none() && r.zero_fiber.is_none() && r.model.is_none());
}

#[test]
fn reports_round_trip_and_are_deterministic() {
    let config = Config { seed: 11, ..Config::default() };
    let a = cmd_analyze(GroupKind::Symplectic, 4, 2, &config).unwrap();
    let b = cmd_analyze(GroupKind::Symplectic, 4, 2, &config).unwrap();
    let json = to_sorted_json(&a);
    assert_eq!(json, to_sorted_json(&b));
    let back: ReductionReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, a);
}

#[test]
fn json_keys_are_sorted() {
    let r = cmd_analyze(GroupKind::GeneralLinear, 2, 2, &Config::default()).unwrap();
    let json = to_sorted_json(&r);
    let top: Vec<&str> = json
        .lines()
        .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = top.clone();
    sorted.sort_unstable();
    assert_eq!(top, sorted);
    assert!(json.contains("\"schemaVersion\": \"1.0.0\""));
}

#[test]
fn reports_validate_against_the_schema() {
    let v = schema();
    let config = Config { weight_bound: 2, ..Config::default() };
    for (g, n, m) in [
        (GroupKind::GeneralLinear, 1, 1),
        (GroupKind::GeneralLinear, 3, 4),
        (GroupKind::GeneralLinear, 2, 5),
        (GroupKind::Symplectic, 2, 2),
        (GroupKind::Symplectic, 4, 3),
        (GroupKind::Orthogonal, 3, 2),
    ] {
        let r = cmd_analyze(g, n, m, &config).unwrap();
        assert_valid(&v, &serde_json::to_value(&r).unwrap());
    }
    let report = cmd_verify(Suite::Springer, Grid::default(), &config).unwrap();
    assert_valid(&v, &serde_json::to_value(&report).unwrap());
}

#[test]
fn binary_output_is_byte_identical_across_runs() {
    let args = ["analyze", "--group", "sp", "--n", "2", "--m", "3", "--seed", "7", "--format", "json"];
    let a = srt(&args);
    let b = srt(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_valid(&schema(), &serde_json::from_slice(&a.stdout).unwrap());
}

#[test]
fn exit_codes() {
    assert_eq!(srt(&["analyze", "--group", "gl", "--n", "2", "--m", "4"]).status.code(), Some(0));
    assert_eq!(srt(&["analyze", "--group", "sp", "--n", "3", "--m", "2"]).status.code(), Some(2));
    assert_eq!(srt(&["analyze", "--group", "gl", "--n", "0", "--m", "2"]).status.code(), Some(2));
    assert_eq!(srt(&["analyze", "--group", "xx", "--n", "1", "--m", "2"]).status.code(), Some(2));
    assert_eq!(srt(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(srt(&["analyze", "--group", "gl", "--n", "2", "--m", "4", "--weight-bound", "7"]).status.code(), Some(4));
    assert_eq!(srt(&["verify", "cauchy", "--degree-bound", "9"]).status.code(), Some(4));
    let out = srt(&["verify", "ks"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("PASS ks/n=3"));
}

#[test]
fn usage_errors_name_the_violated_constraint() {
    let out = srt(&["analyze", "--group", "sp", "--n", "3", "--m", "2"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("even --n"));
}

#[test]
fn gl_table_has_eighteen_rows() {
    let rows = cmd_table(GroupKind::GeneralLinear, 1..=3, 1..=6, &Config::default()).unwrap();
    assert_eq!(rows.len(), 18);
    let r = rows.iter().find(|r| (r.n, r.m) == (3, 4)).unwrap();
    assert_eq!(r.quotient_dim, Some(8));
    assert_eq!(r.verdict.as_deref(), Some("SymplecticUniqueDesing"));
    assert_eq!(r.model_dim, Some(8));
}

#[test]
fn sp_table_marks_odd_n_invalid() {
    let rows = cmd_table(GroupKind::Symplectic, 2..=4, 2..=6, &Config::default()).unwrap();
    assert_eq!(rows.len(), 15);
    assert!(rows.iter().filter(|r| r.n == 3).all(|r| !r.valid));
    assert_eq!(rows.iter().find(|r| (r.n, r.m) == (2, 3)).unwrap().model_dim, Some(6));
    let csv = String::from_utf8(srt(&["table", "--group", "sp", "--n", "2..4", "--m", "2-6", "--format", "csv"]).stdout)
        .unwrap();
    assert_eq!(csv.lines().count(), 16);
    assert!(csv.lines().any(|l| l == "2,3,2,6,DesingStrictlyDominates,2,6"));
    assert!(csv.lines().any(|l| l.starts_with("3,2,—,—,invalid")));
}

#[test]
fn range_syntax() {
    assert_eq!(parse_range("3").unwrap(), 3..=3);
    assert_eq!(parse_range("1..3").unwrap(), 1..=3);
    assert_eq!(parse_range("1..=3").unwrap(), 1..=3);
    assert_eq!(parse_range("2-5").unwrap(), 2..=5);
    assert!(parse_range("4..2").is_err());
    assert!(parse_range("a").is_err());
}

#[test]
fn verify_suites_pass() {
    let config = Config::default();
    for suite in [Suite::Ks, Suite::Theorems, Suite::Springer, Suite::Cauchy] {
        let r = cmd_verify(suite, Grid::default(), &config).unwrap();
        let failed: Vec<_> = r.checks.iter().filter(|c| !c.passed).collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }
    let r = cmd_verify(Suite::Dims, Grid { n_max: 3, m_max: 6 }, &config).unwrap();
    assert!(r.passed);
    let names: Vec<&str> = r.checks.iter().map(|c| c.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort_unstable();
    assert_eq!(names, sorted);
}

#[test]
fn cache_env_var_is_a_fallback_and_never_changes_results() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let args = ["analyze", "--group", "gl", "--n", "3", "--m", "2", "--format", "json"];
    let plain = srt(&args);
    let cached = Command::new(env!("CARGO_BIN_EXE_srt")).args(args).env("SRT_CACHE", &path).output().unwrap();
    assert!(cached.status.success());
    assert!(path.exists(), "cache file written via SRT_CACHE");
    assert_eq!(plain.stdout, cached.stdout);
    let warm = Command::new(env!("CARGO_BIN_EXE_srt")).args(args).env("SRT_CACHE", &path).output().unwrap();
    assert_eq!(plain.stdout, warm.stdout);
}
