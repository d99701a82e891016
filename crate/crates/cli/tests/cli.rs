use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn shipped_fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn certify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_certify"))
        .args(args)
        .env_remove("CERT_FIXTURES")
        .output()
        .expect("run certify")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn copy_fixtures(to: &Path) {
    for e in std::fs::read_dir(shipped_fixtures()).unwrap() {
        let e = e.unwrap();
        std::fs::copy(e.path(), to.join(e.file_name())).unwrap();
    }
}

#[test]
fn single_stage_marks_others_skipped() {
    let o = certify(&["--stage", "obstruction"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("obstruction.status = pass"));
    assert!(text.contains("obstruction.tuples = 297"));
    for s in ["cyclotomic", "ring", "census", "center", "subcat"] {
        assert!(text.contains(&format!("{s}.status = skipped")), "{s}");
    }
}

#[test]
fn smoke_run_is_independent_of_jobs() {
    let a = certify(&["--stage", "center", "--smoke", "--jobs", "1", "--format", "both"]);
    let b = certify(&["--stage", "center", "--smoke", "--jobs", "4", "--format", "both"]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("center.solution_ranks = 24,36"));
    assert!(text.contains("config.smoke = true"));
}

#[test]
fn tampered_figure3_fails_with_diff() {
    let dir = tempfile::tempdir().unwrap();
    copy_fixtures(dir.path());
    let p = dir.path().join("figure3.tsv");
    let text = std::fs::read_to_string(&p).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let i = lines.iter().position(|l| l.starts_with("3\t")).unwrap();
    let mut cells: Vec<&str> = lines[i].split('\t').collect();
    let bumped = (cells[3].parse::<u32>().unwrap() + 1).to_string();
    cells[3] = &bumped;
    lines[i] = cells.join("\t");
    std::fs::write(&p, lines.join("\n") + "\n").unwrap();

    let o = certify(&["--stage", "census", "--fixtures", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("fixture.figure3.tsv.status = mismatch"));
    assert!(out.contains("fixture_diff.figure3.tsv."));
    assert!(out.contains("census.check.figure3_fixture = fail"));
}

#[test]
fn missing_fixture_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_certify"))
        .args(["--stage", "census"])
        .env("CERT_FIXTURES", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("fixture.figure3.tsv.status = missing"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(certify(&["--stage", "nonsense"]).status.code(), Some(2));
    let ring = shipped_fixtures().join("r.fring");
    let o = certify(&["--stage", "center", "--ring", ring.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(certify(&["--jobs", "0"]).status.code(), Some(2));
}

#[test]
fn ring_override_is_validated() {
    let dir = tempfile::tempdir().unwrap();
    let ring = shipped_fixtures().join("r.fring");
    let o = certify(&["--stage", "ring", "--ring", ring.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ring.builtin = true"));

    let p = dir.path().join("trivial.fring");
    std::fs::write(&p, "rank 1\ndual 0\n1\n").unwrap();
    let o = certify(&["--stage", "ring", "--ring", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("ring.builtin = false"));
    let o = certify(&["--stage", "obstruction", "--ring", p.to_str().unwrap()]);
    assert!(stdout(&o).contains("obstruction.applicable = false"));

    // break the unit row of X1
    let text = std::fs::read_to_string(&ring).unwrap().replacen("0 1 0 0 0 0\n0 0 1 0 0 0", "0 1 0 0 0 0\n0 0 1 1 0 0", 1);
    let bad = dir.path().join("bad.fring");
    std::fs::write(&bad, text).unwrap();
    let o = certify(&["--stage", "ring", "--ring", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("ring.check.axioms = fail"));
}

#[test]
fn out_dir_gets_both_renderings() {
    let dir = tempfile::tempdir().unwrap();
    let o = certify(&["--stage", "census", "--format", "both", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let md = std::fs::read_to_string(dir.path().join("certificate.md")).unwrap();
    let table_rows = md.lines().skip_while(|l| !l.starts_with("### figure3")).filter(|l| l.starts_with("| ") && !l.starts_with("| orbit")).count();
    assert_eq!(table_rows, 21);
    assert!(dir.path().join("certificate.txt").is_file());
    assert!(dir.path().join("timings.txt").is_file());
}
