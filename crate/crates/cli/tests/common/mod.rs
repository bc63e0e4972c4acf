#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// The documented invocations, three per subcommand, and their golden names.
pub const DOCUMENTED: &[(&str, &[&str], i32)] = &[
    (
        "verify_default",
        &["verify", "--max-i", "12", "--max-n", "12"],
        0,
    ),
    (
        "verify_minimal",
        &["verify", "--max-i", "1", "--max-n", "1"],
        0,
    ),
    ("verify_flipped_b1", &["verify", "--inject-flipped-b1"], 1),
    (
        "chain_projective_space_4",
        &["chain", "projective_space", "4"],
        0,
    ),
    ("chain_quadric_5", &["chain", "quadric", "5"], 0),
    (
        "chain_grassmannian_2_5",
        &["chain", "grassmannian", "2", "5"],
        0,
    ),
    (
        "check_quadric_6_thm5",
        &["check", "quadric", "6", "--theorem", "thm5"],
        0,
    ),
    (
        "check_projective_space_7_thm4_m7",
        &[
            "check",
            "projective_space",
            "7",
            "--theorem",
            "thm4",
            "--m",
            "7",
        ],
        0,
    ),
    (
        "check_quadric_7_thm5_strong_m4",
        &[
            "check",
            "quadric",
            "7",
            "--theorem",
            "thm5-strong",
            "--m",
            "4",
        ],
        1,
    ),
];

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(args: &[&str]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_chern-descent"))
        .args(args)
        .output()
        .expect("spawn binary");
    Outcome {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

pub fn run_json(args: &[&str]) -> Outcome {
    let mut full: Vec<&str> = args.to_vec();
    full.push("--json");
    run(&full)
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(format!("{name}.json"))
}
