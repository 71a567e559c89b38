use std::process::{Command, Output};

fn fibdyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibdyn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn nblock_example() {
    let out = fibdyn(&["nblock", "--sub", "0->01;1->0", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1->12;2->3;3->12"), "{text}");
    assert!(text.contains("block: 01"), "{text}");
    assert!(text.contains("block: 10"), "{text}");
    assert!(text.contains("block: 00"), "{text}");
}

#[test]
fn decomposition_blocks_example() {
    let out = fibdyn(&["fib", "blocks", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("b0: 6123451234512"), "{text}");
    assert!(text.contains("b1: 61234512"), "{text}");
}

#[test]
fn sub_power_one_echoes_input() {
    let out = fibdyn(&["sub", "--sub", "0->01;1->0", "--power", "1", "--print"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("grammar: 0->01;1->0"), "{text}");
    assert!(text.contains("images: [01, 0]"), "{text}");
}

#[test]
fn json_output_is_deterministic() {
    let first = fibdyn(&["--format", "json", "classify3"]);
    let second = fibdyn(&["--format", "json", "classify3"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let parsed: serde_json::Value = serde_json::from_slice(&first.stdout).expect("valid json");
    assert_eq!(parsed["schema"], 1);
    assert_eq!(parsed["command"], "classify3");
    assert_eq!(parsed["results"]["reversal_same_language"], true);
    assert_eq!(parsed["results"]["classes"].as_array().unwrap().len(), 3);
}

#[test]
fn verify_paper_passes_all_checks() {
    let out = fibdyn(&["--format", "json", "verify-paper"]);
    assert!(out.status.success(), "verification suite must exit 0");
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    let checks = parsed["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 11);
    for check in checks {
        assert_eq!(check["pass"], true, "failed: {check}");
    }
    assert_eq!(parsed["results"]["passed"], 11);
    assert_eq!(parsed["results"]["failed"], 0);
}

#[test]
fn bad_grammar_exits_2() {
    let out = fibdyn(&["sub", "--sub", "0->0X;1->0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("position"), "{err}");
}

#[test]
fn unknown_arguments_exit_2() {
    let out = fibdyn(&["bogus-subcommand"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fibdyn(&["sub", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cyclic_pairs_of_fibonacci() {
    let out = fibdyn(&["--format", "json", "cyclic", "--sub", "0->01;1->0"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_slice(&out.stdout).expect("valid json");
    assert_eq!(parsed["results"]["uniform_power"], 2);
    assert_eq!(parsed["results"]["pairs"].as_array().unwrap().len(), 2);
}

#[test]
fn reshape_produces_expanding_member() {
    let out = fibdyn(&[
        "reshape",
        "--sub",
        "1->12;2->3;3->45;4->12;5->3",
        "--b0",
        "123",
        "--b1",
        "45",
        "--cuts0",
        "2,2,1",
        "--cuts1",
        "1,2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("grammar: 1->12;2->34;3->5;4->1;5->23"), "{text}");
    assert!(text.contains("language_equal_to_depth_8: true"), "{text}");
}
