use std::io::Write;
use std::process::{Command, Stdio};

use domgame::cli::SolveReport;
use domgame::enumeration::CountsRow;
use domgame::perfection::ClassificationReport;

fn domgame(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domgame"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn solve_reports() {
    let (code, out, _) = domgame(&["solve", "--graph6", "Ch", "--variant", "total", "--mover", "d"], "");
    assert_eq!(code, 0);
    assert!(out.contains("value: 3"), "{out}");

    let (code, out, _) = domgame(&["solve", "--name", "K5", "--json"], "");
    assert_eq!(code, 0);
    let r: SolveReport = serde_json::from_str(&out).unwrap();
    assert_eq!((r.value, r.gamma), (1, 1));
    assert_eq!(serde_json::from_str::<SolveReport>(&serde_json::to_string(&r).unwrap()).unwrap(), r);

    let (code, out, _) = domgame(&["solve", "--oracle"], "5; 0 1; 1 2; 2 3; 3 4\n");
    assert_eq!(code, 0);
    assert!(out.contains("gamma: 2") && out.contains("value: 3") && out.contains("oracle value: 3"), "{out}");
}

#[test]
fn errors_exit_nonzero() {
    let (code, _, err) = domgame(&["solve", "--graph6", "B!"], "");
    assert_eq!(code, 2);
    assert!(err.contains("graph6"), "{err}");
    let (code, _, err) = domgame(&["solve", "--variant", "total", "--edges", "2"], "");
    assert_eq!(code, 2);
    assert!(err.contains("isolated"), "{err}");
    let (code, _, _) = domgame(&["frobnicate"], "");
    assert_eq!(code, 2);
    let (code, _, err) = domgame(&["solve", "--oracle", "--name", "P8"], "");
    assert_eq!(code, 2, "{err}");
}

#[test]
fn classify_reports() {
    let (code, out, _) = domgame(&["classify", "--name", "co-domino"], "");
    assert_eq!(code, 0);
    assert!(out.contains("min-imperfect: yes"), "{out}");

    let (code, out, _) = domgame(&["classify", "--name", "KC3,2", "--certificate", "--oracle"], "");
    assert_eq!(code, 0);
    assert!(out.contains("gamma_g-perfect: yes") && out.contains("script:"), "{out}");
    assert!(out.contains("oracle agrees: yes"));

    let (code, out, _) = domgame(&["classify", "--json", "--graph6", "@"], "");
    assert_eq!(code, 0);
    let r: ClassificationReport = serde_json::from_str(&out).unwrap();
    assert!(r.gg_perfect && r.two_gg_perfect && r.gg_prime_perfect && !r.min_imperfect);
    assert_eq!(serde_json::from_str::<ClassificationReport>(&serde_json::to_string(&r).unwrap()).unwrap(), r);
}

#[test]
fn build_and_check_psc() {
    let (code, out, _) = domgame(&["build", "--verify"], "start\nunion 2\nextend 2\nextend 0;2\n");
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("recognized: yes"));
    let (code, _, err) = domgame(&["build"], "start\nunion 1\nunion 1\nextend 0;2\n");
    assert_eq!(code, 2);
    assert!(err.contains("step 3"), "{err}");

    let (_, out, _) = domgame(&["check-psc", "--name", "P4", "--family", "0;3"], "");
    assert_eq!(out.trim(), "psc: yes");
    let (_, out, _) = domgame(&["check-psc", "--name", "P5", "--family", "0;4"], "");
    assert!(out.starts_with("psc: no (distance"), "{out}");
}

#[test]
fn table1_rows_and_checks() {
    let (code, out, _) = domgame(&["table1", "--n", "6", "--check"], "");
    assert_eq!(code, 0);
    assert!(out.contains("6\t122\t81\t8") && out.contains("check: pass"), "{out}");
    let (code, out, _) = domgame(&["table1", "--n", "1"], "");
    assert_eq!(code, 0);
    assert!(out.contains("1\t1\t1\t0"));
    let (code, _, err) = domgame(&["table1", "--n", "2", "--check"], "");
    assert_eq!(code, 2);
    assert!(err.contains("no published counts"), "{err}");

    let file = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/graphs8.g6");
    let (code, out, _) = domgame(&["table1", "--graph6-file", file, "--check", "--json"], "");
    assert_eq!(code, 0);
    let row: CountsRow = serde_json::from_str(&out).unwrap();
    assert_eq!(row.tsv(), "8\t2754\t2102\t1");

    // A file whose counts differ from the published row fails the check.
    let seven = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/graphs7.g6");
    let text = std::fs::read_to_string(seven).unwrap();
    let partial = std::env::temp_dir().join(format!("domgame-partial-{}.g6", std::process::id()));
    std::fs::write(&partial, text.lines().take(100).collect::<Vec<_>>().join("\n")).unwrap();
    let (code, out, _) = domgame(&["table1", "--graph6-file", partial.to_str().unwrap(), "--check"], "");
    std::fs::remove_file(&partial).unwrap();
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("check: FAIL"));
}

#[test]
fn output_is_independent_of_jobs() {
    let (_, one, _) = domgame(&["hunt-imperfect", "--n", "6", "--jobs", "1"], "");
    let (_, four, _) = domgame(&["hunt-imperfect", "--n", "6", "--jobs", "4"], "");
    assert_eq!(one, four);
    assert_eq!(one.lines().count(), 8);
    let (_, a, _) = domgame(&["table1", "--n", "7", "--jobs", "1"], "");
    let (_, b, _) = domgame(&["table1", "--n", "7", "--jobs", "3"], "");
    assert_eq!(a, b);
}

#[test]
fn enumerate_and_iso() {
    let (code, out, _) = domgame(&["enumerate", "--n", "4"], "");
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 11);
    let (_, out, _) = domgame(&["iso", "DLo", "name:antihole5"], "");
    assert_eq!(out.trim(), "yes");
    let (_, out, _) = domgame(&["iso", "name:P5", "name:C5"], "");
    assert_eq!(out.trim(), "no");
    let (_, out, _) = domgame(&["contract", "--json", "--edges", "4; 0 1; 0 2; 1 2; 1 3; 2 3"], "");
    let r: domgame::perfection::ContractionReport = serde_json::from_str(&out).unwrap();
    assert_eq!(r.classes, vec![vec![0], vec![1, 2], vec![3]]);
}
