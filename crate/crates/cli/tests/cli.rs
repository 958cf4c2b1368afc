use std::process::{Command, Output};

fn pregerst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pregerst"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_mu2_example() {
    let o = pregerst(&[
        "eval", "--op", "mu2", "--expr", "1/1 * T(a,b)", "--gen", "a=1", "--gen", "b=1", "--view", "base",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1/1 * T(a,b) + 1/1 * T(b,a)\n");
}

#[test]
fn eval_delta_and_kappa() {
    let o = pregerst(&["eval", "--op", "delta", "--expr", "1/1 * T(a)", "--gen", "a=1"]);
    assert_eq!(stdout(&o), "0\n");
    let o = pregerst(&["eval", "--op", "kappa", "--expr", "1/1 * P(T(a,b); S())", "--gen", "a=2", "--gen", "b=2"]);
    assert_eq!(stdout(&o).lines().next().unwrap().matches(" # ").count(), 2);
}

#[test]
fn eval_on_forms() {
    let o = pregerst(&["eval", "--op", "zinf-d", "--expr", "1/1 * T(u1,u2)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1/1 * T(du1,u2) + 1/1 * T(u1,du2) + 1/1 * T(u1.du2)\n");
}

#[test]
fn eval_parse_error_exits_2() {
    let o = pregerst(&["eval", "--op", "mu", "--expr", "1/1 * T(a,", "--gen", "a=1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error at byte"));
}

#[test]
fn verify_exit_codes() {
    let ok = pregerst(&["verify", "--suite", "q-square", "--samples", "10"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("PASS: 30 checks"));
    let bad = pregerst(&["verify", "--suite", "aguiar", "--samples", "40"]);
    assert_eq!(bad.status.code(), Some(1));
    let capped = pregerst(&["verify", "--suite", "q-square", "--samples", "3", "--max-terms", "1"]);
    assert_eq!(capped.status.code(), Some(3));
    let unknown = pregerst(&["verify", "--suite", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
    let incompatible = pregerst(&["verify", "--suite", "r2-prelie", "--model", "formal"]);
    assert_eq!(incompatible.status.code(), Some(2));
}

#[test]
fn mutation_flag_breaks_a_passing_suite() {
    let clean = pregerst(&["verify", "--suite", "zinf-square", "--samples", "20"]);
    assert_eq!(clean.status.code(), Some(0));
    let broken = pregerst(&["verify", "--suite", "zinf-square", "--samples", "20", "--mutation", "zinf-prefix"]);
    assert_eq!(broken.status.code(), Some(1));
}

#[test]
fn structured_reports_are_byte_identical() {
    let args = [
        "verify", "--suite", "kappa-compat", "--n-coords", "2", "--max-tensor-len", "3", "--max-tail-factors", "2",
        "--samples", "25", "--seed", "9", "--report", "structured",
    ];
    let a = pregerst(&args);
    let b = pregerst(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().filter(|l| l.starts_with(r#"{"record":"check""#)).count(), 75);
    assert!(text.lines().last().unwrap().contains(r#""verdict":"pass""#));
}

#[test]
fn out_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("pregerst-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.jsonl");
    let o = pregerst(&[
        "verify", "--suite", "linf-square", "--samples", "5", "--report", "structured", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(body.lines().count(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn list_names_every_suite() {
    let o = pregerst(&["list"]);
    let text = stdout(&o);
    for s in ["zinbiel-axioms", "mu-shuffle-lemma", "q-coderiv-kappa", "mutation-sanity"] {
        assert!(text.contains(s), "{s}");
    }
}
