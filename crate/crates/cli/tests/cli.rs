use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn nilpairs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilpairs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nilpairs-cli-{name}-{}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn build_prints_invariants() {
    let o = nilpairs(&["build", "--type", "E6", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 78);
    assert_eq!(v["coxeter"], 12);
    assert_eq!(v["exponents"], serde_json::json!([1, 4, 5, 7, 8, 11]));
}

#[test]
fn analyze_sp6_catalog_entry() {
    let o = nilpairs(&["analyze", "--catalog", "sp6-denom"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("dim z(e) = 7"));
    assert!(text.contains("max denominator = 3"));
    assert!(text.contains("wonderful=true integral=false"));
}

#[test]
fn analyze_json_round_trips() {
    let o = nilpairs(&["analyze", "--catalog", "sl3-partition-2-1", "--json"]);
    assert!(o.status.success());
    let doc = nilpairs::report::ReportDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.flags.dim_z_e, 2);
    assert!(doc.passed());
}

#[test]
fn analyze_from_elements_solves_the_characteristic() {
    let o = nilpairs(&["analyze", "--type", "A3", "--e1", "e[a1]", "--e2", "e[a3]", "--grid"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("q\\p"));
}

#[test]
fn input_and_solver_errors_exit_with_two() {
    assert_eq!(
        nilpairs(&["analyze", "--type", "Q9", "--e1", "x", "--e2", "y"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        nilpairs(&["analyze", "--catalog", "no-such-entry"]).status.code(),
        Some(2)
    );
    assert_eq!(
        nilpairs(&["analyze", "--type", "A2", "--e1", "e[a1]"]).status.code(),
        Some(2)
    );
    // e1 = e2 forces [h1, e1] = e1 and [h2, e1] = 0 at once
    assert_eq!(
        nilpairs(&["analyze", "--type", "A2", "--e1", "e[a1]", "--e2", "e[a1]"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn wrong_labels_are_an_invariant_failure() {
    let o = nilpairs(&[
        "analyze",
        "--type",
        "A3",
        "--e1",
        "e[a1]",
        "--e2",
        "e[a3]",
        "--h1-labels",
        "1,0,0",
        "--h2-labels",
        "0,1,0",
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn non_wonderful_family_reports_its_failing_checks() {
    let o = nilpairs(&["analyze", "--catalog", "sl8-cross-ratio-2"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("ravno, sovpad, dimension-identity, xarak"), "{err}");
}

#[test]
fn zero_labels_give_a_single_cell() {
    let o = nilpairs(&["grid", "--type", "A2", "--h1-labels", "0,0", "--h2-labels", "0,0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "q\\p | 0\n  0 | 8\ntotal 8\n");
}

#[test]
fn principal_labels_give_the_height_row() {
    let o = nilpairs(&["grid", "--type", "A2", "--h1-labels", "1,1", "--h2-labels", "0,0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("  0 |  1  2  2  2  1"), "{text}");
    assert!(text.ends_with("total 8\n"));
}

#[test]
fn suite_passes_on_figures() {
    let o = nilpairs(&["suite", "--filter", "figures"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn corrupted_golden_directory_fails_the_suite() {
    let golden = nilpairs::suite::default_golden_dir();
    let dir = scratch("golden");
    for f in ["figure1.txt", "figure2.txt"] {
        fs::copy(golden.join(f), dir.join(f)).unwrap();
    }
    let text = fs::read_to_string(dir.join("figure1.txt")).unwrap();
    let corrupted = text.replacen(" 2*", "  2", 1);
    assert_ne!(text, corrupted);
    fs::write(dir.join("figure1.txt"), corrupted).unwrap();
    let o = nilpairs(&["suite", "--filter", "figures", "--golden-dir", dir.to_str().unwrap()]);
    assert_ne!(o.status.code(), Some(0));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unmatched_filter_is_an_input_error() {
    assert_eq!(nilpairs(&["suite", "--filter", "zzz"]).status.code(), Some(2));
}
