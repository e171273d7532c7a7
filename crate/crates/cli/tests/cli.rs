use std::path::PathBuf;
use std::process::{Command, Output};

use chromsym::formulas::x_kpkp;
use chromsym::serial::{from_json, parse_text};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromsym"))
        .args(args)
        .output()
        .expect("failed to run chromsym")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    path.to_string_lossy().into_owned()
}

#[test]
fn expand_text() {
    let out = run(&["expand", "--family", "tw-cycle", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "50*e[5] + 6*e[4,1] + 4*e[3,2]");

    let out = run(&["expand", "--family", "lollipop", "--a", "3", "--l", "0"]);
    assert_eq!(stdout(&out).trim(), "6*e[3]");
}

#[test]
fn expand_agrees_with_oracle() {
    let args = [
        "--family", "kpkp", "--a", "3", "--g", "1", "--b", "3", "--h", "1",
    ];
    let expanded = run(&[&["expand"][..], &args].concat());
    let brute = run(&[&["oracle"][..], &args].concat());
    assert!(expanded.status.success() && brute.status.success());
    assert_eq!(stdout(&expanded), stdout(&brute));
    assert_eq!(
        parse_text(&stdout(&expanded)).unwrap(),
        x_kpkp(3, 1, 3, 1).unwrap()
    );
}

#[test]
fn structured_output_round_trips() {
    let out = run(&[
        "expand",
        "--family",
        "kayak",
        "--a",
        "3",
        "--b",
        "4",
        "--l",
        "1",
        "--format",
        "structured",
    ]);
    assert!(out.status.success());
    let parsed = from_json(&stdout(&out)).unwrap();
    let text = run(&[
        "expand", "--family", "kayak", "--a", "3", "--b", "4", "--l", "1",
    ]);
    assert_eq!(parse_text(&stdout(&text)).unwrap(), parsed);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["expand", "--family", "bowtie", "--n", "3"][..],
        &["expand", "--family", "tw-cycle", "--n", "2"],
        &["expand", "--family", "tw-cycle"],
        &["expand", "--family", "tw-cycle", "--n", "4", "--a", "1"],
        &["expand", "--family", "k-chain", "--parts", "3,0"],
        &["oracle", "--graph", &data("malformed.txt")],
        &["oracle", "--graph", &data("missing.txt")],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let out = run(&["oracle", "--graph", &data("malformed.txt")]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn budget_errors_exit_with_three() {
    let out = run(&["oracle", "--family", "complete", "--n", "8"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&[
        "oracle",
        "--family",
        "complete",
        "--n",
        "8",
        "--edge-budget",
        "28",
    ]);
    assert_eq!(stdout(&out).trim(), "40320*e[8]");
}

#[test]
fn oracle_reads_edge_lists() {
    let out = run(&["oracle", "--graph", &data("triangle.txt")]);
    assert_eq!(stdout(&out).trim(), "6*e[3]");
    let out = run(&["oracle", "--graph", &data("tadpole_twin_near.txt")]);
    assert!(stdout(&out).contains(" - 4*e[4,2]"));
    let out = run(&["oracle", "--graph", &data("tadpole_twin_far.txt")]);
    assert_eq!(
        stdout(&out).trim(),
        "60*e[6] + 40*e[5,1] + 12*e[4,2] + 6*e[3,3] + 2*e[3,2,1]"
    );
}

#[test]
fn positivity_reports() {
    let out = run(&["positivity", "--graph", &data("tadpole_twin_near.txt")]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "NOT e-positive (min coeff -4 at e[4,2])"
    );
    let out = run(&["positivity", "--graph", &data("tadpole_twin_far.txt")]);
    assert!(stdout(&out).starts_with("e-positive"));
    for l in 0..4 {
        let out = run(&[
            "positivity",
            "--family",
            "lollipop",
            "--a",
            "4",
            "--l",
            &l.to_string(),
        ]);
        assert!(stdout(&out).starts_with("e-positive"), "l={l}");
    }
}

#[test]
fn verify_grids() {
    let out = run(&["verify", "--family", "path", "--max-n", "8"]);
    assert!(out.status.success());
    assert!(stdout(&out).ends_with("path: 8 passed, 0 failed, 0 skipped\n"));

    let out = run(&["verify", "--family", "tw-cycle", "--max-n", "6"]);
    assert!(out.status.success());
    for n in 4..=6 {
        assert!(stdout(&out).contains(&format!("pass tw-cycle n={n}\n")));
    }

    let out = run(&["verify", "--family", "kpkp", "--max-n", "9"]);
    assert!(out.status.success());
    assert!(!stdout(&out).contains("FAIL"));

    let out = run(&["verify", "--family", "complete", "--max-n", "9"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("skip complete n=8"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn lists_every_family() {
    let out = run(&["list-families"]);
    let listing = stdout(&out);
    for tag in [
        "path",
        "k-chain",
        "kpkp-b3",
        "tw-lollipop",
        "kayak",
        "infinity",
    ] {
        assert!(listing.lines().any(|l| l.starts_with(tag)), "{tag}");
    }
}
