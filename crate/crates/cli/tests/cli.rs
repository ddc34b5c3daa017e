use pinhowe::orthogonal::Family;
use pinhowe_cli::{run, ExpectedTable, PairRequest, ResolvedPair, RunConfig, Task, Verdict};
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pinhowe"))
}

fn config_for(family: &str, params: &[usize]) -> RunConfig {
    RunConfig {
        pairs: Some(vec![PairRequest { family: family.into(), params: Some(params.to_vec()) }]),
        ..RunConfig::default()
    }
}

fn run_task(cfg: &RunConfig, task: Task) -> pinhowe_cli::Report {
    let pairs = cfg.resolve(task).unwrap();
    run(&pairs, task, cfg, &ExpectedTable::builtin())
}

#[test]
fn shipped_table_covers_every_family_at_minimal_size() {
    let table = ExpectedTable::builtin();
    for f in Family::ALL {
        let id = ResolvedPair { family: f, params: f.minimal_params() }.id();
        let row = table.get(&id).unwrap_or_else(|| panic!("no row for {id}"));
        assert!(!row.basis.is_empty());
    }
    for row in table.rows() {
        assert!(Family::from_tag(&row.family).is_some(), "{}", row.family);
    }
}

#[test]
fn circle_pair_has_the_determinant_cover_and_howe_equality() {
    let report = run_task(&config_for("unitary", &[1, 0, 1, 0]), Task::All);
    let rec = &report.pairs[0];
    assert_eq!(rec.verdict, Verdict::Match, "{:?}", rec.mismatches);
    let ext = rec.extension.as_ref().unwrap();
    assert_eq!(ext.label, "det^1/2");
    assert!(ext.loops.values().all(|&s| s == -1));
    let howe = rec.howe.as_ref().unwrap();
    assert!(howe.equal && howe.reverse_equal && howe.mult_free);
    assert_eq!(rec.signature, Some([2, 0]));
}

#[test]
fn side_condition_failures_are_reported_per_pair() {
    let mut cfg = config_for("complex-orthogonal-real", &[1, 2]);
    cfg.pairs.as_mut().unwrap().push(PairRequest { family: "gl-real".into(), params: None });
    let report = run_task(&cfg, Task::VerifyCommute);
    assert_eq!(report.pairs.len(), 2);
    let bad = report.pairs.iter().find(|p| p.family == "complex-orthogonal-real").unwrap();
    assert_eq!(bad.verdict, Verdict::Error);
    assert!(bad.error.as_ref().unwrap().contains("rejected by classification side-condition"));
    let good = report.pairs.iter().find(|p| p.family == "gl-real").unwrap();
    assert_eq!(good.verdict, Verdict::Match);
    assert!(!report.all_match());
}

#[test]
fn empty_pair_list_gives_an_empty_report() {
    let cfg = RunConfig { pairs: Some(Vec::new()), ..RunConfig::default() };
    let report = run_task(&cfg, Task::All);
    assert!(report.pairs.is_empty());
    assert!(report.all_match());
}

#[test]
fn wrong_prediction_is_flagged() {
    let table = ExpectedTable::parse(
        r#"
[[row]]
family = "gl-real"
params = [1, 1]
commute = false
label_g = "det^1/2"
basis = "deliberately wrong"
"#,
    )
    .unwrap();
    let cfg = config_for("gl-real", &[1, 1]);
    let pairs = cfg.resolve(Task::All).unwrap();
    let rec = &run(&pairs, Task::All, &cfg, &table).pairs[0];
    assert_eq!(rec.verdict, Verdict::Mismatch);
    assert_eq!(rec.mismatches.len(), 2);
}

#[test]
fn pairs_without_a_row_are_unchecked() {
    let report = run_task(&config_for("gl-real", &[1, 2]), Task::VerifyCommute);
    assert_eq!(report.pairs[0].verdict, Verdict::Unchecked);
    assert!(report.all_match());
}

#[test]
fn resolve_sorts_and_rejects_bad_configs() {
    let cfg = RunConfig {
        pairs: Some(vec![
            PairRequest { family: "unitary".into(), params: None },
            PairRequest { family: "gl-real".into(), params: None },
        ]),
        ..RunConfig::default()
    };
    let ids: Vec<String> = cfg.resolve(Task::All).unwrap().iter().map(|p| p.id()).collect();
    assert_eq!(ids, ["gl-real[1,1]", "unitary[1,0,1,0]"]);
    assert!(config_for("unitary", &[1, 0]).resolve(Task::All).is_err());
    assert!(config_for("no-such-family", &[1]).resolve(Task::All).is_err());
    assert!(config_for("quaternionic-skew", &[2, 2]).resolve(Task::HoweCheck).is_err());
    assert!(config_for("quaternionic-skew", &[2, 2]).resolve(Task::All).is_ok());
    assert!(RunConfig { steps: 0, ..RunConfig::default() }.resolve(Task::All).is_err());
}

#[test]
fn all_skips_unsupported_stages_but_howe_check_reports_them() {
    let rec = &run_task(&config_for("real-orthogonal", &[1, 0, 1, 0]), Task::All).pairs[0];
    assert!(rec.howe.is_none() && rec.error.is_none());
    let rec = &run_task(&config_for("real-orthogonal", &[1, 0, 1, 0]), Task::HoweCheck).pairs[0];
    assert_eq!(rec.verdict, Verdict::Error);
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let outs: Vec<_> = (0..2).map(|k| dir.path().join(format!("r{k}.json"))).collect();
    for out in &outs {
        let status = bin()
            .args(["all", "--family", "unitary", "--family", "gl-real", "--seed", "3", "--json", "--out"])
            .arg(out)
            .output()
            .unwrap();
        assert_eq!(status.status.code(), Some(0), "{}", String::from_utf8_lossy(&status.stderr));
    }
    let a = std::fs::read(&outs[0]).unwrap();
    assert_eq!(a, std::fs::read(&outs[1]).unwrap());
    let json: serde_json::Value = serde_json::from_slice(&a).unwrap();
    assert_eq!(json["seed"], 3);
    assert_eq!(json["pairs"].as_array().unwrap().len(), 2);
    for key in ["family", "params", "signature", "commutators", "extension", "howe"] {
        assert!(json["pairs"][0].get(key).is_some(), "{key}");
    }
    assert!(json["pairs"][0].get("timing_ms").is_none());
}

#[test]
fn exit_codes_distinguish_configuration_errors_and_failures() {
    let code = |args: &[&str]| bin().args(args).output().unwrap().status.code();
    assert_eq!(code(&["verify-commute", "--family", "gl-real"]), Some(0));
    assert_eq!(code(&["verify-commute", "--family", "bogus"]), Some(2));
    assert_eq!(code(&["verify-commute", "--params", "1,1"]), Some(2));
    assert_eq!(code(&["verify-commute", "--family", "gl-real", "--params", "x"]), Some(2));
    assert_eq!(code(&["verify-commute", "--family", "quaternionic-skew", "--params", "1,1"]), Some(1));
}

#[test]
fn config_file_with_no_pairs_exits_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.toml");
    std::fs::write(&path, "pairs = []\nseed = 5\n").unwrap();
    let out = bin().arg("all").arg("--config").arg(&path).arg("--json").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["seed"], 5);
    assert!(json["pairs"].as_array().unwrap().is_empty());
    std::fs::write(&path, "pairs = []\ncolour = 1\n").unwrap();
    let out = bin().arg("all").arg("--config").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exact_backend_lifts_diagonal_representatives() {
    let mut cfg = config_for("real-orthogonal", &[1, 0, 2, 0]);
    cfg.backend = pinhowe::pin::Backend::Exact;
    let rec = &run_task(&cfg, Task::VerifyCommute).pairs[0];
    assert_eq!(rec.verdict, Verdict::Match);
    assert!(rec.commutators.as_ref().unwrap().iter().any(|v| v.sign == -1));
}
