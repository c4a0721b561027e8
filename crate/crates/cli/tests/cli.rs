use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn monotrail(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monotrail"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn complete(n: usize, color_of: impl Fn(usize, usize) -> usize, k: usize) -> String {
    let mut text = format!("ecg 1\n{n} {k}\n");
    for u in 0..n {
        for v in u + 1..n {
            text.push_str(&format!("{u} {v} {}\n", color_of(u, v)));
        }
    }
    text
}

fn write_file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_extremal_writes_every_pair() {
    let dir = TempDir::new().unwrap();
    let out = monotrail(dir.path(), &["gen", "--family", "extremal", "--n", "9"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(&lines[..2], ["ecg 1", "9 2"]);
    assert_eq!(lines.len() - 2, 36);
    assert!(lines.contains(&"0 1 1"));
    assert!(lines.contains(&"0 3 0"));
    assert!(lines.contains(&"3 8 1"));
}

#[test]
fn gen_affine_reports_parameters() {
    let dir = TempDir::new().unwrap();
    let out = monotrail(dir.path(), &["gen", "--family", "affine", "--q", "3", "--m", "1", "-o", "a.ecg"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "n=9 k=4");
    let text = fs::read_to_string(dir.path().join("a.ecg")).unwrap();
    assert!(text.starts_with("ecg 1\n9 4\n"));
}

#[test]
fn gen_random_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let args = ["gen", "--family", "random", "--n", "30", "--k", "3", "--seed", "11"];
    let a = monotrail(dir.path(), &args);
    let b = monotrail(dir.path(), &args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = monotrail(dir.path(), &["gen", "--family", "random", "--n", "30", "--k", "3", "--seed", "12"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn gen_rejects_bad_parameters() {
    let dir = TempDir::new().unwrap();
    let composite = monotrail(dir.path(), &["gen", "--family", "affine", "--q", "4", "--m", "1"]);
    assert_eq!(composite.status.code(), Some(5));
    let missing = monotrail(dir.path(), &["gen", "--family", "random", "--n", "10"]);
    assert_eq!(missing.status.code(), Some(5));
    let unknown = monotrail(dir.path(), &["gen", "--family", "nope"]);
    assert_eq!(unknown.status.code(), Some(5));
}

#[test]
fn solve_all_red_k5() {
    let dir = TempDir::new().unwrap();
    let input = write_file(&dir, "k5.ecg", &complete(5, |_, _| 0, 2));
    let out = monotrail(dir.path(), &["solve", "-i", s(&input), "-c", "k5.cert"]);
    assert!(out.status.success());
    let fields: Vec<String> = stdout(&out).split_whitespace().map(String::from).collect();
    assert_eq!(fields[..2], ["0", "10"]);
    let cert = fs::read_to_string(dir.path().join("k5.cert")).unwrap();
    assert!(cert.starts_with("cert 1\n0 10 1\n"));
    let verified = monotrail(dir.path(), &["verify", "-i", s(&input), "-c", "k5.cert"]);
    assert_eq!(verified.status.code(), Some(0));
    assert_eq!(stdout(&verified).trim(), "ok length=10 closed=1");
}

#[test]
fn solve_trace_reports_forests_and_case() {
    let dir = TempDir::new().unwrap();
    let gen = monotrail(dir.path(), &["gen", "--family", "extremal", "--n", "9", "-o", "x.ecg"]);
    assert!(gen.status.success());
    let out = monotrail(dir.path(), &["solve", "-i", "x.ecg", "-c", "x.cert", "--trace"]);
    let text = stdout(&out);
    assert!(text.starts_with("0 12 0 pass\n"), "{text}");
    assert!(text.contains("forest color=0 size=6"));
    assert!(text.contains("case=B"));
}

#[test]
fn truncated_input_is_a_parse_error() {
    let dir = TempDir::new().unwrap();
    let full = complete(4, |_, _| 0, 2);
    let cut: String = full.lines().take(5).map(|l| format!("{l}\n")).collect();
    let input = write_file(&dir, "cut.ecg", &cut);
    let out = monotrail(dir.path(), &["solve", "-i", s(&input), "-c", "c.cert"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line"), "{err}");
}

#[test]
fn missing_file_is_an_io_error() {
    let dir = TempDir::new().unwrap();
    let out = monotrail(dir.path(), &["solve", "-i", "absent.ecg", "-c", "c.cert"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_rejects_tampered_certificates() {
    let dir = TempDir::new().unwrap();
    let input = write_file(&dir, "k5.ecg", &complete(5, |_, _| 0, 2));
    assert!(monotrail(dir.path(), &["solve", "-i", s(&input), "-c", "good.cert"]).status.success());
    let good = fs::read_to_string(dir.path().join("good.cert")).unwrap();
    let lines: Vec<&str> = good.lines().collect();

    let mut vertices: Vec<usize> = lines[2].split(' ').map(|t| t.parse().unwrap()).collect();
    vertices[3] = vertices[1];
    let joined: Vec<String> = vertices.iter().map(ToString::to_string).collect();
    write_file(&dir, "bad.cert", &format!("{}\n{}\n{}\n", lines[0], lines[1], joined.join(" ")));
    let bad = monotrail(dir.path(), &["verify", "-i", s(&input), "-c", "bad.cert"]);
    assert_eq!(bad.status.code(), Some(1));

    write_file(&dir, "color.cert", &format!("{}\n7 10 1\n{}\n", lines[0], lines[2]));
    let color = monotrail(dir.path(), &["verify", "-i", s(&input), "-c", "color.cert"]);
    assert_eq!(color.status.code(), Some(2));

    write_file(&dir, "blue.cert", &format!("{}\n1 10 1\n{}\n", lines[0], lines[2]));
    let blue = monotrail(dir.path(), &["verify", "-i", s(&input), "-c", "blue.cert"]);
    assert_eq!(blue.status.code(), Some(1));
}

#[test]
fn oracle_worst_case_small() {
    let dir = TempDir::new().unwrap();
    let out = monotrail(dir.path(), &["oracle", "--mode", "worstcase", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("value=2 "), "{text}");
    assert!(text.contains("3,trail,2,worstcase-n3-trail.ecg"));
    assert!(dir.path().join("worstcase-n3-trail.ecg").exists());
}

#[test]
fn oracle_worst_case_guard() {
    let dir = TempDir::new().unwrap();
    let eight = monotrail(dir.path(), &["oracle", "--mode", "worstcase", "--n", "8"]);
    assert_eq!(eight.status.code(), Some(4));
    let seven = monotrail(dir.path(), &["oracle", "--mode", "worstcase", "--n", "7"]);
    assert_eq!(seven.status.code(), Some(4));
}

#[test]
fn oracle_trail_on_red_k4() {
    let dir = TempDir::new().unwrap();
    let input = write_file(&dir, "k4.ecg", &complete(4, |_, _| 0, 2));
    let trail = monotrail(dir.path(), &["oracle", "--mode", "trail", "-i", s(&input)]);
    assert!(trail.status.success());
    assert!(stdout(&trail).starts_with("value=5 color=0"));
    assert!(stdout(&trail).contains("witness=0 1 2 0 3 1"));
    let circuit = monotrail(dir.path(), &["oracle", "--mode", "circuit", "-i", s(&input)]);
    assert!(stdout(&circuit).starts_with("value=4 color=0"));
}

#[test]
fn oracle_refuses_large_instances() {
    let dir = TempDir::new().unwrap();
    let input = write_file(&dir, "k9.ecg", &complete(9, |_, _| 0, 2));
    let out = monotrail(dir.path(), &["oracle", "--mode", "trail", "-i", s(&input)]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn diagnose_two_and_three_colors() {
    let dir = TempDir::new().unwrap();
    assert!(monotrail(dir.path(), &["gen", "--family", "extremal", "--n", "30", "-o", "x.ecg"]).status.success());
    let out = monotrail(dir.path(), &["diagnose", "-i", "x.ecg"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with("n1="), "{text}");
    assert!(text.contains("case="));

    let three = write_file(&dir, "k3.ecg", &complete(6, |u, v| (u + v) % 3, 3));
    let out = monotrail(dir.path(), &["diagnose", "-i", s(&three)]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn sweep_writes_csv() {
    let dir = TempDir::new().unwrap();
    let out = monotrail(
        dir.path(),
        &["sweep", "--family", "extremal", "--n-min", "9", "--n-max", "18", "--step", "9", "-o", "s.csv"],
    );
    assert!(out.status.success());
    let csv = fs::read_to_string(dir.path().join("s.csv")).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,k,family,seed,circuit_len,threshold,max_comp_edges,n1,case,runtime_ms");
    assert_eq!(lines[1], "9,2,extremal,0,12,0,18,5,B,0");
    assert_eq!(lines.len(), 3);
    assert!(stdout(&out).contains("rows=2"));
}
