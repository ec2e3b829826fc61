//! Golden-file case table and runner shared by the golden and acceptance suites.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const CASES: &[(&str, &[&str])] = &[
    ("resonance_1_2", &["resonance", "--weights", "1,2"]),
    ("resonance_1_2_3", &["resonance", "--weights", "1,2,3"]),
    (
        "resonance_1_2_3_index_3",
        &["resonance", "--weights", "1,2,3", "--index", "3"],
    ),
    ("resonance_2_3", &["resonance", "--weights", "2,3"]),
    ("resonance_1_1_1", &["resonance", "--weights", "1,1,1"]),
    ("partition_1_2_2_3", &["partition", "--weights", "1,2,2,3"]),
    ("partition_1_1", &["partition", "--weights", "1,1"]),
    (
        "sigma_random_1_2_4",
        &["sigma", "random", "--weights", "1,2,4", "--seed", "7"],
    ),
    (
        "sigma_random_pool",
        &[
            "sigma",
            "random",
            "--weights",
            "1,2,3",
            "--seed",
            "1",
            "--pool",
            "1/3,-5",
        ],
    ),
    (
        "sigma_random_equal",
        &["sigma", "random", "--weights", "1,1,1", "--seed", "3"],
    ),
    ("sigma_invert_1_2", &["sigma", "invert", "--map", "sigma_12.json"]),
    ("sigma_invert_1_2_4", &["sigma", "invert", "--map", "sigma_124.json"]),
    (
        "conjugate_diag",
        &[
            "conjugate",
            "--weights",
            "1,2",
            "--sigma",
            "sigma_12.json",
            "--linear",
            "diag23.json",
        ],
    ),
    (
        "conjugate_shear",
        &[
            "conjugate",
            "--weights",
            "1,2",
            "--sigma",
            "sigma_12.json",
            "--linear",
            "shear.json",
        ],
    ),
    (
        "conjugate_mixed3",
        &[
            "conjugate",
            "--weights",
            "1,2,4",
            "--sigma",
            "sigma_124.json",
            "--linear",
            "mixed3.json",
        ],
    ),
    (
        "violate_shear",
        &[
            "violate",
            "--weights",
            "1,2",
            "--linear",
            "shear.json",
            "--trials",
            "4",
            "--seed",
            "11",
        ],
    ),
    (
        "violate_not_found",
        &[
            "violate",
            "--weights",
            "2,3",
            "--linear",
            "shear.json",
            "--trials",
            "4",
            "--seed",
            "11",
        ],
    ),
    (
        "quasi_order_1_2",
        &["quasi-order", "--weights", "1,2", "--trials", "32", "--seed", "0"],
    ),
    (
        "quasi_order_1_1_1",
        &["quasi-order", "--weights", "1,1,1", "--trials", "4", "--seed", "0"],
    ),
    (
        "quasi_order_2_3",
        &["quasi-order", "--weights", "2,3", "--trials", "4", "--seed", "0"],
    ),
    ("solve_diag", &["solve", "--weights", "1,2", "--map", "f_diag.txt"]),
    ("solve_shear", &["solve", "--weights", "1,2", "--map", "f_shear.txt"]),
    (
        "solve_identity",
        &["solve", "--weights", "1,2", "--map", "f_identity.txt"],
    ),
    ("bergman_1_2", &["bergman", "--weights", "1,2"]),
    ("bergman_1_2_2", &["bergman", "--weights", "1,2,2"]),
    ("bergman_1_3_5", &["bergman", "--weights", "1,3,5"]),
    // domain errors
    ("err_empty_weights", &["resonance", "--weights="]),
    ("err_non_positive", &["resonance", "--weights", "0,1"]),
    ("err_unsorted", &["partition", "--weights", "2,1"]),
    ("err_not_coprime", &["resonance", "--weights", "2,4"]),
    ("err_index", &["resonance", "--weights", "1,2", "--index", "3"]),
    (
        "err_dimension",
        &[
            "conjugate",
            "--weights",
            "1,2",
            "--sigma",
            "sigma_12.json",
            "--linear",
            "identity3.json",
        ],
    ),
    (
        "err_fix_origin",
        &["solve", "--weights", "1,2", "--map", "f_affine.txt"],
    ),
    (
        "err_not_resonant",
        &["sigma", "invert", "--map", "sigma_not_resonant.json"],
    ),
    (
        "err_not_nonlinear",
        &["sigma", "invert", "--map", "sigma_not_nonlinear.json"],
    ),
    (
        "err_empty_pool",
        &["sigma", "random", "--weights", "1,2", "--seed", "0", "--pool="],
    ),
    (
        "err_weight_mismatch",
        &[
            "conjugate",
            "--weights",
            "1,3",
            "--sigma",
            "sigma_12.json",
            "--linear",
            "diag23.json",
        ],
    ),
    (
        "err_singular_map",
        &[
            "conjugate",
            "--weights",
            "1,2",
            "--sigma",
            "sigma_12.json",
            "--linear",
            "singular.json",
        ],
    ),
    (
        "err_singular_part",
        &["solve", "--weights", "1,2", "--map", "f_singular.txt"],
    ),
    (
        "err_block_diagonal",
        &[
            "violate",
            "--weights",
            "1,2",
            "--linear",
            "diag23.json",
            "--trials",
            "3",
            "--seed",
            "0",
        ],
    ),
    (
        "err_no_conjugacy",
        &["solve", "--weights", "1,2", "--map", "f_cubic.txt"],
    ),
    (
        "err_zero_trials",
        &["quasi-order", "--weights", "1,2", "--trials", "0", "--seed", "0"],
    ),
    // usage errors
    (
        "err_parse_poly",
        &["solve", "--weights", "1,2", "--map", "f_malformed.txt"],
    ),
    ("err_parse_json", &["sigma", "invert", "--map", "sigma_truncated.json"]),
];

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resonant"))
        .current_dir(fixtures())
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn render(out: &Output) -> String {
    format!(
        "exit: {}\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout)
    )
}

/// Compares every case against its golden file, or rewrites the files when
/// `UPDATE_GOLDEN` is set. Returns one message per mismatch.
pub fn golden_mismatches() -> Vec<String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for (name, args) in CASES {
        let got = render(&run(args));
        let path = golden_dir().join(format!("{name}.out"));
        if update {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            Ok(want) => failures.push(format!("{name}:\n--- want\n{want}--- got\n{got}")),
            Err(_) => failures.push(format!("missing golden {}", path.display())),
        }
    }
    failures
}

/// Names of cases whose stdout or exit status differ between two runs.
pub fn nondeterministic_cases() -> Vec<&'static str> {
    CASES
        .iter()
        .filter(|(_, args)| {
            let a = run(args);
            let b = run(args);
            a.stdout != b.stdout || a.status.code() != b.status.code()
        })
        .map(|(name, _)| *name)
        .collect()
}

/// Error names reported by the failing cases.
pub fn reported_error_names() -> std::collections::BTreeSet<String> {
    let mut seen = std::collections::BTreeSet::new();
    for (_, args) in CASES {
        let out = run(args);
        if out.status.success() {
            continue;
        }
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).expect("error payload is JSON");
        seen.insert(v["error"].as_str().unwrap().to_string());
    }
    seen
}
