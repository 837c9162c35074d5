use std::path::{Path, PathBuf};
use std::process::Command;

/// (name, arguments with `@file` naming an input, expected exit code)
pub const CASES: &[(&str, &[&str], i32)] = &[
    (
        "member_two_squares",
        &[
            "member",
            "@two_squares",
            "y1^{x+1}",
            "y2^{x+1}",
            "1",
            "y1",
            "y1^x",
            "y2",
            "y2^x",
            "y1*y2",
        ],
        0,
    ),
    (
        "member_polynomial",
        &["member", "@two_squares", "y1^{x+1}", "y2^{2*x}"],
        0,
    ),
    ("closure_radical", &["closure", "@radical"], 0),
    ("closure_well_mixed", &["closure", "@two_squares"], 0),
    ("closure_rwm", &["closure", "@product"], 0),
    ("reduce_rwm", &["reduce", "@redundant"], 0),
    ("reduce_well_mixed", &["reduce", "@two_squares"], 0),
    ("decompose_product", &["decompose", "@product"], 0),
    ("decompose_worked", &["decompose", "@worked"], 0),
    ("decompose_perfect", &["decompose", "@perfect"], 0),
    ("dual_point", &["dual", "@product", "--point", "0,0"], 0),
    ("dual_default_point", &["dual", "@worked"], 0),
    (
        "check_prime",
        &["check", "@prime", "--property", "prime"],
        0,
    ),
    (
        "check_not_prime",
        &["check", "@delta_product", "--property", "prime"],
        0,
    ),
    (
        "check_rwm",
        &["check", "@delta_product", "--property", "rwm"],
        0,
    ),
    (
        "check_perfect",
        &["check", "@delta_product", "--property", "perfect"],
        0,
    ),
    (
        "check_radical",
        &["check", "@delta_var", "--property", "radical"],
        0,
    ),
    (
        "verify_small",
        &[
            "verify",
            "--arities",
            "1,2",
            "--max-degree",
            "2",
            "--max-coeff-sum",
            "2",
            "--sets",
            "3",
            "--seed",
            "1",
        ],
        0,
    ),
    ("error_decompose_delta", &["decompose", "@prime"], 3),
    (
        "error_not_dominating",
        &["dual", "@worked", "--point", "0,0"],
        3,
    ),
    ("error_parse", &["member", "@product", "y1^{x+"], 1),
    ("error_arity", &["reduce", "@bad_arity"], 1),
    (
        "error_check_needs_delta",
        &["check", "@product", "--property", "radical"],
        3,
    ),
];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run(args: &[&str]) -> (i32, String, String) {
    let inputs = golden_dir().join("inputs");
    let args: Vec<String> = args
        .iter()
        .map(|a| match a.strip_prefix('@') {
            Some(name) => inputs.join(format!("{name}.ideal")).display().to_string(),
            None => a.to_string(),
        })
        .collect();
    let out = Command::new(env!("CARGO_BIN_EXE_monodelta"))
        .args(&args)
        .output()
        .expect("binary runs");
    let stderr = String::from_utf8(out.stderr)
        .unwrap()
        .replace(&inputs.display().to_string(), "<inputs>");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        stderr,
    )
}
