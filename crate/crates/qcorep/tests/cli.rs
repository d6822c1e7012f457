//! End-to-end tests of the qcorep binary: formats, exit codes, cache
//! behaviour, and input validation. Every invocation pins the cache to a
//! fresh temporary directory via QCOREP_CACHE_DIR so tests stay isolated.

use std::path::Path;
use std::process::Command;

use qcorep::corep::corep_matrix;
use qcorep::serialize::parse_json;

fn qcorep(args: &[&str], cache: &Path) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qcorep"))
        .args(args)
        .env("QCOREP_CACHE_DIR", cache)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn corep_text_output() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = qcorep(&["corep", "--n", "2", "--k", "2"], dir.path());
    assert_eq!(code, 0);
    assert!(stdout.starts_with("T_{1} (N = 2, k = 2, dim = 3)\n"), "{stdout}");
    assert!(stdout.contains("t[-1,0] = (1 + q^-2)^(1/2) * u11*u12\n"));
    assert!(stdout.contains("t[0,0] = u11*u22 + q^-1*u12*u21\n"));
}

#[test]
fn corep_latex_output() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = qcorep(
        &["corep", "--n", "2", "--k", "2", "--format", "latex"],
        dir.path(),
    );
    assert_eq!(code, 0);
    assert!(stdout.starts_with("T_{1} = \\left(\\begin{array}{ccc}"));
    assert!(stdout.contains("(1 + q^{-2})^{1/2}u_{11}u_{12}"));
    assert!(stdout.contains("u_{11}u_{22} + q^{-1}u_{12}u_{21}"));
}

#[test]
fn corep_json_output_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = qcorep(
        &["corep", "--n", "3", "--k", "2", "--format", "json"],
        dir.path(),
    );
    assert_eq!(code, 0);
    let parsed = parse_json(&stdout).unwrap();
    assert_eq!(parsed, corep_matrix(3, 2).unwrap());
}

#[test]
fn corep_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("t.json");
    let (code, stdout, _) = qcorep(
        &[
            "corep", "--n", "2", "--k", "1", "--format", "json", "--output",
            out_path.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(out_path).unwrap();
    assert_eq!(parse_json(&text).unwrap(), corep_matrix(2, 1).unwrap());
}

#[test]
fn corep_survives_corrupt_cache() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["corep", "--n", "2", "--k", "2", "--format", "json"];
    let (code, cold, _) = qcorep(&args, dir.path());
    assert_eq!(code, 0);
    // Corrupt every cache file; the matrix must be recomputed, not trusted.
    for entry in std::fs::read_dir(dir.path()).unwrap() {
        std::fs::write(entry.unwrap().path(), b"garbage").unwrap();
    }
    let (code, recomputed, _) = qcorep(&args, dir.path());
    assert_eq!(code, 0);
    assert_eq!(recomputed, cold);
}

#[test]
fn corep_unwritable_cache_is_nonfatal() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, stderr) = qcorep(
        &[
            "corep", "--n", "2", "--k", "1", "--cache-dir", "/proc/nonexistent/qcorep",
        ],
        // QCOREP_CACHE_DIR overrides --cache-dir, so point the variable at
        // the bad location and use the flag as a decoy to cover priority.
        Path::new("/proc/nonexistent/qcorep"),
    );
    let _ = dir;
    assert_eq!(code, 0);
    assert!(stdout.contains("t[-1/2,-1/2] = u11\n"));
    assert!(stderr.contains("warning"), "stderr: {stderr}");
}

#[test]
fn cache_env_var_overrides_flag() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let (code, _, _) = qcorep(
        &[
            "corep", "--n", "2", "--k", "1", "--cache-dir",
            flag_dir.path().to_str().unwrap(),
        ],
        env_dir.path(),
    );
    assert_eq!(code, 0);
    let count = |p: &Path| std::fs::read_dir(p).unwrap().count();
    assert_eq!(count(env_dir.path()), 1, "env dir receives the cache file");
    assert_eq!(count(flag_dir.path()), 0, "flag dir stays empty");
}

#[test]
fn index_table_matches_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = qcorep(&["index", "--n", "3", "--k", "2"], dir.path());
    assert_eq!(code, 0);
    assert!(stdout.contains("ell = 5/2"));
    assert!(stdout.contains("(2,0,0) -> -5/2\n"));
    assert!(stdout.contains("(1,0,1) -> -1/2\n"));
    assert!(stdout.contains("(0,1,1) -> 3/2\n"));
    assert!(stdout.contains("(0,0,2) -> 5/2\n"));
    assert_eq!(stdout.lines().count(), 7);
}

#[test]
fn verify_default_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = qcorep(&["verify", "--n", "2", "--k", "2"], dir.path());
    assert_eq!(code, 0);
    for name in [
        "match", "coassoc", "counit", "det", "minors", "antipode", "confluence", "qbinom",
    ] {
        assert!(stdout.contains(&format!("check {name}: PASS\n")), "{stdout}");
    }
    assert_eq!(stdout.lines().count(), 8);
}

#[test]
fn verify_subset_and_order() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = qcorep(
        &[
            "verify", "--n", "3", "--k", "2", "--checks", "match,coassoc,counit",
        ],
        dir.path(),
    );
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "check match: PASS\ncheck coassoc: PASS\ncheck counit: PASS\n"
    );
}

#[test]
fn verify_without_k_runs_structure_checks_only() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = qcorep(&["verify", "--n", "3"], dir.path());
    assert_eq!(code, 0);
    assert!(!stdout.contains("check match"));
    assert!(stdout.contains("check det: PASS\n"));
    assert!(stdout.contains("check antipode: PASS\n"));
}

#[test]
fn verify_guard_violations_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    // det is capped at N <= 4.
    let (code, _, stderr) = qcorep(&["verify", "--n", "5", "--checks", "det"], dir.path());
    assert_eq!(code, 2, "stderr: {stderr}");
    // match needs k.
    let (code, _, _) = qcorep(&["verify", "--n", "2", "--checks", "match"], dir.path());
    assert_eq!(code, 2);
    // antipode is capped at N <= 3.
    let (code, _, _) = qcorep(&["verify", "--n", "4", "--checks", "antipode"], dir.path());
    assert_eq!(code, 2);
}

#[test]
fn invalid_flags_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = qcorep(&["corep", "--n", "2"], dir.path());
    assert_eq!(code, 2, "missing --k");
    let (code, _, _) = qcorep(&["frobnicate"], dir.path());
    assert_eq!(code, 2, "unknown subcommand");
    let (code, _, _) = qcorep(&["corep", "--n", "1", "--k", "2"], dir.path());
    assert_eq!(code, 2, "N below 2");
}

#[test]
fn eval_q_validation() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = qcorep(
        &["det", "--n", "2", "--eval-q", "1/2"],
        dir.path(),
    );
    assert_eq!(code, 0);
    assert_eq!(stdout, "1.000000*u11*u22 - 0.500000*u12*u21\n");
    // Out of range.
    let (code, _, _) = qcorep(&["det", "--n", "2", "--eval-q", "2"], dir.path());
    assert_eq!(code, 2);
    // Display-only: incompatible with json.
    let (code, _, _) = qcorep(
        &[
            "corep", "--n", "2", "--k", "1", "--eval-q", "1/2", "--format", "json",
        ],
        dir.path(),
    );
    assert_eq!(code, 2);
}

#[test]
fn det_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = qcorep(&["det", "--n", "2"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(stdout, "u11*u22 - q*u12*u21\n");
    let (code, stdout, _) = qcorep(&["det", "--n", "2", "--format", "latex"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(stdout, "u_{11}u_{22} - qu_{12}u_{21}\n");
    let (code, _, _) = qcorep(&["det", "--n", "2", "--format", "json"], dir.path());
    assert_eq!(code, 2, "json is not a det format");
}

#[test]
fn minor_outputs_and_validation() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = qcorep(
        &["minor", "--n", "3", "--rows", "1,2", "--cols", "1,3"],
        dir.path(),
    );
    assert_eq!(code, 0);
    assert_eq!(stdout, "u11*u23 - q*u13*u21\n");
    // Rows must be strictly increasing.
    let (code, _, _) = qcorep(
        &["minor", "--n", "3", "--rows", "2,1", "--cols", "1,2"],
        dir.path(),
    );
    assert_eq!(code, 2);
    // Sizes must agree.
    let (code, _, _) = qcorep(
        &["minor", "--n", "3", "--rows", "1", "--cols", "1,2"],
        dir.path(),
    );
    assert_eq!(code, 2);
    // Indices must stay within N.
    let (code, _, _) = qcorep(
        &["minor", "--n", "3", "--rows", "1,4", "--cols", "1,2"],
        dir.path(),
    );
    assert_eq!(code, 2);
}

#[test]
fn help_and_version_exit_0() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = qcorep(&["--help"], dir.path());
    assert_eq!(code, 0);
    let (code, _, _) = qcorep(&["--version"], dir.path());
    assert_eq!(code, 0);
}
