use std::process::{Command, Output};

use serde_json::Value;

fn parideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parideal"))
        .args(args)
        .env("PARIDEAL_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = parideal(&full);
    (
        serde_json::from_slice(&o.stdout).expect("valid json"),
        o.status.code().unwrap(),
    )
}

#[test]
fn roots_listing() {
    let (v, code) = json(&["roots", "--type", "A", "--rank", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "parideal/1");
    assert_eq!(v["count"], 3);
    assert_eq!(v["theta"], serde_json::json!([1, 1]));
    let (v, _) = json(&["roots", "--type", "F", "--rank", "4"]);
    assert_eq!(v["count"], 24);
    let o = parideal(&["roots", "--type", "B", "--rank", "3", "--epsilon"]);
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("(0,0,1)") && l.ends_with("ε3")));
}

#[test]
fn antichain_counts() {
    for (extra, count) in [
        (&[][..], 8),
        (&["--size", "1"][..], 6),
        (&["--J", "1"][..], 4),
    ] {
        let mut args = vec!["antichains", "--type", "A", "--rank", "3", "--abelian"];
        args.extend_from_slice(extra);
        let (v, code) = json(&args);
        assert_eq!(code, 0);
        assert_eq!(v["count"], count, "{extra:?}");
        let o = parideal(&args);
        assert_eq!(
            stdout(&o).lines().last().unwrap(),
            format!("count: {count}")
        );
    }
}

#[test]
fn verify_suites() {
    let (v, code) = json(&[
        "verify", "--suite", "peterson", "--type", "D", "--rank", "4",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert!(v["notes"][0].as_str().unwrap().contains(": 16 "));

    let (v, code) = json(&[
        "verify", "--suite", "theorem2", "--type", "B", "--rank", "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["claims"][0]["instances_checked"], 255);

    let (v, code) = json(&[
        "verify",
        "--suite",
        "corollary",
        "--type",
        "F",
        "--rank",
        "4",
    ]);
    assert_eq!(code, 0);
    let claims = v["claims"].as_array().unwrap();
    assert!(claims
        .iter()
        .any(|c| c["claim"].as_str().unwrap().contains("7ω₄")));
}

#[test]
fn classify_outputs() {
    let o = parideal(&["--format", "csv", "classify", "--type", "A", "--rank", "2"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,I,J,size,two_rho,two_rho_epsilon,all_conditions,roots"
    );
    // Ordered pairs of disjoint nonempty subsets of {1,2,3}.
    assert_eq!(lines.count(), 12);

    let (v, _) = json(&["classify", "--type", "G", "--rank", "2"]);
    assert!(v["sets"]
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["family"] == "long"));

    let (v, _) = json(&["classify", "--type", "C", "--rank", "3"]);
    let sets = v["sets"].as_array().unwrap();
    assert!(sets
        .iter()
        .any(|s| s["roots"] == serde_json::json!([[0, 0, 1]])));
    assert!(sets
        .iter()
        .all(|s| s["all_conditions"] == true && s["type"] == "C"));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| parideal(args).status.code().unwrap();
    assert_eq!(code(&["roots", "--type", "Q", "--rank", "2"]), 2);
    assert_eq!(code(&["roots", "--type", "B", "--rank", "1"]), 2);
    assert_eq!(
        code(&["antichains", "--type", "A", "--rank", "3", "--J", "4"]),
        2
    );
    assert_eq!(
        code(&["verify", "--suite", "nope", "--type", "A", "--rank", "2"]),
        2
    );
    assert_eq!(
        code(&["verify", "--suite", "theorem2", "--type", "B", "--rank", "3"]),
        3
    );
    assert_eq!(
        code(&[
            "verify",
            "--suite",
            "bijection",
            "--type",
            "A",
            "--rank",
            "7"
        ]),
        3
    );
    assert_eq!(code(&["classify", "--type", "E", "--rank", "8"]), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_parideal"))
        .args(["roots", "--type", "A", "--rank", "2"])
        .env("PARIDEAL_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "classify", "--type", "B", "--rank", "3"];
    let a = parideal(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_parideal"))
        .args(args)
        .env("PARIDEAL_THREADS", "4")
        .output()
        .unwrap();
    let c = parideal(&[&["--sequential"][..], &args[..]].concat());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}
