use rnmatrix::cli::{run, run_with_stdin, Record};

fn args(a: &[&str]) -> Vec<String> {
    a.iter().map(|s| s.to_string()).collect()
}

fn go(a: &[&str]) -> (i32, String) {
    run(&args(a))
}

fn go_stdin(a: &[&str], input: &str) -> (i32, String) {
    run_with_stdin(&args(a), &mut input.as_bytes())
}

#[test]
fn prove_exit_codes() {
    let (code, out) = go(&[
        "prove",
        "--logic",
        "C1",
        "--premise",
        "p",
        "--premise",
        "p -> q",
        "q",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("valid"));

    let (code, out) = go(&[
        "prove",
        "--logic",
        "Cila",
        "--premise",
        "p",
        "--premise",
        "!p",
        "q",
    ]);
    assert_eq!(code, 1, "{out}");
    assert!(out.starts_with("invalid") && out.contains("countermodel"));

    let (code, out) = go(&[
        "prove",
        "--logic",
        "Cn",
        "--level",
        "2",
        "--method",
        "tableau",
        "--derived-rules",
        "p | !p",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("method: tableau"));
}

#[test]
fn records_round_trip_through_verify() {
    let (code, out) = go(&[
        "prove",
        "--logic",
        "mbCciw",
        "--format",
        "records",
        "--premise",
        "p",
        "--premise",
        "!p",
        "q",
    ]);
    assert_eq!(code, 1);
    let rec: Record = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(rec.verdict, "invalid");
    assert!(!rec.countermodel.is_empty());

    let (code, msg) = go_stdin(
        &[
            "prove",
            "--logic",
            "mbCciw",
            "--premise",
            "p",
            "--premise",
            "!p",
            "--verify",
            "-",
            "q",
        ],
        &out,
    );
    assert_eq!(code, 0, "{msg}");

    // the same record does not refute a different conclusion it makes true
    let (code, _) = go_stdin(&["prove", "--logic", "mbCciw", "--verify", "-", "p"], &out);
    assert_eq!(code, 1);

    let mut bad = rec.clone();
    for a in bad.countermodel.iter_mut() {
        if a.formula == "!p" {
            a.value = "F".into();
        }
    }
    let text = serde_json::to_string(&bad).unwrap();
    let (code, _) = go_stdin(&["prove", "--logic", "mbCciw", "--verify", "-"], &text);
    assert_eq!(code, 1);
}

#[test]
fn conclusion_from_stdin() {
    let (code, out) = go_stdin(&["prove", "--logic", "CPL", "-"], "p | !p\n");
    assert_eq!(code, 0, "{out}");
}

#[test]
fn errors_exit_two() {
    assert_eq!(go(&["prove", "--logic", "CPL", "p &"]).0, 2);
    assert_eq!(go(&["prove", "--logic", "nope", "p"]).0, 2);
    assert_eq!(go(&["prove", "--logic", "Cn", "p"]).0, 2);
    assert_eq!(go(&["prove", "--logic", "bI", "!p"]).0, 2);
    assert_eq!(go(&["frobnicate"]).0, 2);
}

#[test]
fn other_commands() {
    let (code, out) = go(&["count", "--n", "2", "--m", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "enumerated=16 closed_form=16");

    let (code, out) = go(&["list-logics"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 18);
    assert!(out.contains("Cila"));

    assert_eq!(
        go(&["translate", "*p"]),
        (0, "p ^ !p\nimage: true\n".to_string())
    );
    assert_eq!(go(&["untranslate", "p ^ !p"]), (0, "*p\n".to_string()));
    assert_eq!(go(&["untranslate", "p ^ q"]).0, 1);

    let (code, out) = go(&["table", "--logic", "mbCcl", "p & !p"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 3);

    let (code, out) = go(&["tableau", "--logic", "bI", "(p ^ q) -> (q ^ p)"]);
    assert_eq!(code, 0, "{out}");

    let (code, out) = go(&["metacheck"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("PASS")));
}
