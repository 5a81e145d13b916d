use std::path::Path;
use std::process::{Command, Output};

use grwalk::experiment::presets::PRESETS;
use grwalk::experiment::ExperimentConfig;

fn grwalk(args: &[&str], out: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grwalk"))
        .args(args)
        .env("GRWALK_OUT", out)
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

#[test]
fn list_presets_names_every_preset() {
    let dir = tempfile::tempdir().unwrap();
    let o = grwalk(&["list-presets"], dir.path());
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    for p in PRESETS {
        assert!(text.contains(p.name), "{}", p.name);
    }
}

#[test]
fn preset_text_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = grwalk(&["preset", "regular-z"], dir.path());
    assert_eq!(code(&o), 0);
    let c = ExperimentConfig::parse(&String::from_utf8(o.stdout).unwrap(), dir.path().into()).unwrap();
    assert_eq!(c.name, "regular-z");
    assert_eq!(code(&grwalk(&["preset", "nope"], dir.path())), 1);
}

#[test]
fn passing_checks_exit_zero() {
    for preset in ["quotient-lemma", "regular-z", "kawada-ito-s3", "affine-folner"] {
        let dir = tempfile::tempdir().unwrap();
        let o = grwalk(&["check", preset], dir.path());
        assert_eq!(code(&o), 0, "{preset}: {}", String::from_utf8_lossy(&o.stderr));
        let verdict = std::fs::read_to_string(dir.path().join("verdict.json")).unwrap();
        assert!(verdict.contains("\"all_checks_passed\": true"));
    }
}

#[test]
fn malformed_config_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    std::fs::write(&cfg, "scenario = kawada-ito\nthis line is broken\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    assert_eq!(code(&grwalk(&["run", cfg], dir.path())), 1);
    assert_eq!(code(&grwalk(&["check", cfg], dir.path())), 1);
    assert_eq!(code(&grwalk(&["run", "/no/such/file.cfg"], dir.path())), 1);
    assert_eq!(code(&grwalk(&["frobnicate"], dir.path())), 1);
}

#[test]
fn missing_seed_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("noseed.cfg");
    std::fs::write(&cfg, "scenario = kawada-ito\ngroup = S3\nmeasure.uniform = e, (12)\nn_max = 5\n").unwrap();
    let o = grwalk(&["run", cfg.to_str().unwrap()], dir.path());
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("seed"));
}

#[test]
fn window_overflow_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("tight.cfg");
    std::fs::write(
        &cfg,
        "scenario = affine-folner\nseed = 0\nprime = 2\nunit_depth = 2\nwindow = -7, 0\nn_list = 3, 7\nu_list = 1/2\n",
    )
    .unwrap();
    assert_eq!(code(&grwalk(&["run", cfg.to_str().unwrap()], dir.path())), 2);
}

#[test]
fn failed_expectation_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("strict.cfg");
    std::fs::write(
        &cfg,
        "scenario = kawada-ito\nseed = 0\ngroup = S3\nmeasure.uniform = e, (12), (23)\nn_max = 10\n\
         expect.final_tv_below = 1e-9\n",
    )
    .unwrap();
    let cfg = cfg.to_str().unwrap();
    // run only reports, check enforces
    assert_eq!(code(&grwalk(&["run", cfg], dir.path())), 0);
    let o = grwalk(&["check", cfg], dir.path());
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL final tv"));
}

#[test]
fn env_var_overrides_config_output() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("out.cfg");
    let configured = dir.path().join("configured");
    std::fs::write(
        &cfg,
        format!(
            "scenario = kawada-ito\nseed = 0\ngroup = C3\nmeasure.uniform = 0, 1\nn_max = 4\noutput = {}\n",
            configured.display()
        ),
    )
    .unwrap();
    let env_dir = dir.path().join("from-env");
    assert_eq!(code(&grwalk(&["run", cfg.to_str().unwrap()], &env_dir)), 0);
    assert!(env_dir.join("curves.csv").is_file());
    assert!(!configured.exists());
}

#[test]
fn artifacts_carry_provenance() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&grwalk(&["run", "quotient-lemma"], dir.path())), 0);
    for csv in ["curves.csv", "ratios.csv"] {
        let text = std::fs::read_to_string(dir.path().join(csv)).unwrap();
        let first = text.lines().next().unwrap();
        assert!(first.starts_with("# preset=quotient-lemma scenario=quotient-lemma seed=11 grwalk="), "{first}");
    }
    for json in ["manifest.json", "verdict.json"] {
        let value: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(dir.path().join(json)).unwrap()).unwrap();
        assert_eq!(value["provenance"]["preset"], "quotient-lemma");
        assert_eq!(value["provenance"]["seed"], 11);
        assert!(value["provenance"]["modules"]["walk"].is_string());
    }
}

#[test]
fn table_groups_resolve_relative_to_the_config() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("c3.txt"), "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let cfg = dir.path().join("table.cfg");
    std::fs::write(
        &cfg,
        "scenario = kawada-ito\nseed = 0\ngroup = table:c3.txt\nmeasure.uniform = g0, g1\nn_max = 30\n\
         expect.final_tv_below = 1e-6\n",
    )
    .unwrap();
    let o = grwalk(&["check", cfg.to_str().unwrap()], &dir.path().join("out"));
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}
