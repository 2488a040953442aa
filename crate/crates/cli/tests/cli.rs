use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use semikit::corpus::VerificationReport;
use semikit::format::{parse_rms, parse_sg};
use semikit::greens::ClassReport;
use semikit::ideals::KernelReport;
use semikit::FiniteSemigroup;
use serde_json::Value;

fn semikit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semikit"))
        .args(args)
        .env_remove("SEMIKIT_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const Z3: &str = "3\n0 1 2\n1 2 0\n2 0 1\n";
const PB: &str = "4\n0 0 0 0\n1 1 1 1\n0 0 2 2\n1 1 3 3\n";

#[test]
fn validate() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = write(dir.path(), "z3.sg", Z3);
    let o = semikit(&["validate", &z3]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "associative, order 3\n");

    let bad = write(dir.path(), "bad.sg", "2\n1 0\n0 0\n");
    let o = semikit(&["validate", &bad]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not associative"));

    let o = semikit(&["validate", &dir.path().join("missing.sg").to_string_lossy()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn usage_errors_exit_two() {
    let o = semikit(&["validate", "--bogus", "x.sg"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--bogus"));
    assert_eq!(code(&semikit(&["frobnicate"])), 2);
    assert_eq!(code(&semikit(&["verify"])), 2);
    assert_eq!(code(&semikit(&["gen", "nonsense", "-o", "x.sg"])), 2);
}

#[test]
fn max_order_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let pb = write(dir.path(), "pb.sg", PB);
    let o = Command::new(env!("CARGO_BIN_EXE_semikit"))
        .args(["validate", &pb])
        .env("SEMIKIT_MAX_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds"));
}

#[test]
fn kernel_of_pb() {
    let dir = tempfile::tempdir().unwrap();
    let pb = write(dir.path(), "pb.sg", PB);
    let o = semikit(&["kernel", &pb]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("K = {0, 1}\n"));
    assert!(out.contains("minimal left ideals: {0, 1}\n"));
    assert!(out.contains("minimal right ideals: {0}, {1}\n"));

    let o = semikit(&["--format", "structured", "kernel", &pb]);
    let report: KernelReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.kernel.members(), &[0, 1]);
    assert_eq!(report.min_right.len(), 2);
}

#[test]
fn structured_output_is_stable_and_readable() {
    let dir = tempfile::tempdir().unwrap();
    let pb = write(dir.path(), "pb.sg", PB);
    for cmd in [
        "validate",
        "report",
        "greens",
        "kernel",
        "subsemigroups",
        "verify",
    ] {
        let a = semikit(&["--format", "structured", cmd, &pb]);
        let b = semikit(&["--format", "structured", cmd, &pb]);
        assert_eq!(code(&a), 0, "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        serde_json::from_slice::<Value>(&a.stdout).unwrap();
    }
    let o = semikit(&["--format", "structured", "greens", &pb]);
    let classes: ClassReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(classes.d_classes, vec![vec![0, 1], vec![2, 3]]);

    let o = semikit(&["--format", "structured", "validate", &pb]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows: Vec<Vec<usize>> = serde_json::from_value(v["table"].clone()).unwrap();
    let s = FiniteSemigroup::from_table(4, &rows).unwrap();
    assert_eq!(s.flat(), parse_sg(PB).unwrap().flat());
}

#[test]
fn greens_with_dot() {
    let dir = tempfile::tempdir().unwrap();
    let pb = write(dir.path(), "pb.sg", PB);
    let dot = dir.path().join("pb.dot");
    let o = semikit(&["greens", &pb, "--dot", dot.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("D-classes: {0, 1}, {2, 3}"));
    assert!(stdout(&o).contains("| 0* |"));
    let text = fs::read_to_string(dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("cluster_d0"));
}

#[test]
fn decompose_and_emit_rms() {
    let dir = tempfile::tempdir().unwrap();
    let rb = write(
        dir.path(),
        "rb22.sg",
        "4\n0 1 0 1\n0 1 0 1\n2 3 2 3\n2 3 2 3\n",
    );
    let rms_path = dir.path().join("rb22.rms");
    let o = semikit(&[
        "decompose",
        &rb,
        "--base-idempotent",
        "3",
        "--emit-rms",
        rms_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("base idempotent: 3"));
    assert!(stdout(&o).contains("round trip: ok"));
    let rms = parse_rms(&fs::read_to_string(&rms_path).unwrap()).unwrap();
    assert_eq!(
        (rms.i_size(), rms.lambda_size(), rms.group().order()),
        (2, 2, 1)
    );

    // The emitted presentation is itself a valid input.
    let o = semikit(&["validate", rms_path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "associative, order 4\n");

    let pb = write(dir.path(), "pb.sg", PB);
    let o = semikit(&["decompose", &pb]);
    assert_eq!(code(&o), 2);
    let o = semikit(&["decompose", &rb, "--base-idempotent", "9"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn quotient_output_parses() {
    let dir = tempfile::tempdir().unwrap();
    let pb = write(dir.path(), "pb.sg", PB);
    let o = semikit(&["quotient", &pb, "--ideal", "0,1"]);
    assert_eq!(code(&o), 0);
    let q = parse_sg(&stdout(&o)).unwrap();
    assert_eq!(q.order(), 3);
    assert!(q.elements().all(|x| q.mul(0, x) == 0 && q.mul(x, 0) == 0));
    assert_eq!(code(&semikit(&["quotient", &pb, "--ideal", "2"])), 2);
    assert_eq!(code(&semikit(&["quotient", &pb])), 2);
}

#[test]
fn subsemigroups_with_cap() {
    let dir = tempfile::tempdir().unwrap();
    let z3 = write(dir.path(), "z3.sg", Z3);
    let o = semikit(&["subsemigroups", &z3]);
    assert_eq!(stdout(&o), "2 subsemigroups\n{0}\n{0, 1, 2}\n");
    let o = semikit(&["subsemigroups", &z3, "--cap", "2"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn gen_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pb.sg");
    let o = semikit(&["gen", "paper_band", "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        parse_sg(&fs::read_to_string(&out).unwrap()).unwrap().flat(),
        parse_sg(PB).unwrap().flat()
    );

    let a = dir.path().join("a.sg");
    let b = dir.path().join("b.sg");
    semikit(&["gen", "transform:4:2:9", "-o", a.to_str().unwrap()]);
    semikit(&["gen", "transform:4:2:9", "-o", b.to_str().unwrap()]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let rms = dir.path().join("r.rms");
    let o = semikit(&["gen", "rees:2x2:z2:1", "-o", rms.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let parsed = parse_rms(&fs::read_to_string(&rms).unwrap()).unwrap();
    assert_eq!(parsed.realized().order(), 8);
}

#[test]
fn census_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = dir.path().join("c3");
    let o = semikit(&["census", "--max-order", "3", "-o", c3.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("order 2: 5 semigroups"));
    assert!(out.contains("order 3: 24 semigroups"));
    assert!(c3.join("manifest.json").exists());

    let o = semikit(&["verify", "--corpus", c3.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("30 instances, 420 checks: 420 passed, 0 failed, 0 skipped"));

    let o = semikit(&[
        "--format",
        "structured",
        "verify",
        "--corpus",
        c3.to_str().unwrap(),
    ]);
    let report: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report.summary.instances, 30);
    let raw: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let check = &raw["instances"][0]["checks"][0];
    assert!(check.get("check").is_some() && check.get("status").is_some());

    let o = semikit(&["census", "--max-order", "5", "-o", c3.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_single_file() {
    let dir = tempfile::tempdir().unwrap();
    let pb = write(dir.path(), "pb.sg", PB);
    let o = semikit(&["verify", &pb]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("1 instances, 14 checks: 14 passed"));
    let bad = write(dir.path(), "bad.sg", "2\n1 0\n0 0\n");
    assert_eq!(code(&semikit(&["verify", &bad])), 2);
}
