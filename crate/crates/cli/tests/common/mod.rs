//! Golden cases shared by the CLI tests and the acceptance suite.
#![allow(dead_code)]

use std::path::PathBuf;

/// `(name, arguments, expected exit code)` for the golden files.
pub const CASES: &[(&str, &[&str], i32)] = &[
    ("nf", &["nf", "--n", "2", "x[2,2]*x[1,1]"], 0),
    ("nf-fraction", &["nf", "--n", "2", "q^-1*x[1,2] + D[1,2;1,2]^-1"], 0),
    ("coprod", &["coprod", "--n", "2", "D[1,2;1,2]"], 0),
    ("minor", &["minor", "--n", "3", "--rows", "1,3", "--cols", "2,3"], 0),
    ("central-check", &["central-check", "--n", "2", "D[1,2;1,2]"], 0),
    ("central-check-fail", &["central-check", "--n", "2", "x[1,2]"], 1),
    ("section-check", &["section-check", "--n", "4", "--r", "2"], 0),
    ("section-check-fail", &["section-check", "--n", "2", "--r", "1", "x[1,2]"], 1),
    ("semiinv", &["semiinv", "--n", "4", "--r", "2", "--max-degree", "3", "D[1,4;1,2]"], 0),
    ("semiinv-fail", &["semiinv", "--n", "4", "--r", "2", "--max-degree", "3", "x[1,3]"], 1),
    ("solve-semiinv", &["solve-semiinv", "--n", "4", "--r", "2"], 0),
    ("plucker", &["plucker", "--n", "4", "--r", "2"], 0),
    ("bigcell-manin", &["bigcell-manin", "--n", "3", "--r", "1"], 0),
    ("bigcell-manin-two-columns", &["bigcell-manin", "--n", "4", "--r", "2"], 1),
    ("poisson", &["poisson", "--n", "2", "x[1,1]", "x[2,2]"], 0),
    ("qdp-struct", &["qdp-struct", "--n", "3"], 0),
    ("qdp-pperp", &["qdp-pperp", "--n", "3", "--r", "1"], 0),
    ("qdp-pperp-signs", &["qdp-pperp", "--n", "4", "--r", "2"], 1),
    ("coisotropy", &["coisotropy", "--algebra", "sl2", "--s", "3/5", "--c", "4/5"], 0),
    ("coisotropy-gl", &["coisotropy", "--algebra", "gl", "--n", "3", "--flag-type", "1,2"], 0),
    ("coisotropy-fail", &["coisotropy", "--algebra", "gl", "--n", "2", "--basis", "1,1,0,0"], 1),
    ("flag-section", &["flag-section", "--n", "3", "--flag-type", "1,2"], 0),
];

/// Every subcommand, for coverage checks.
pub const SUBCOMMANDS: &[&str] = &[
    "nf",
    "coprod",
    "minor",
    "central-check",
    "section-check",
    "semiinv",
    "solve-semiinv",
    "plucker",
    "bigcell-manin",
    "poisson",
    "qdp-struct",
    "qdp-pperp",
    "coisotropy",
    "flag-section",
];

/// One deliberate usage error per subcommand.
pub const USAGE_ERRORS: &[&[&str]] = &[
    &["nf", "--n", "2", "x[1,1] +"],
    &["coprod", "--n", "2", "D[1,2;1,2]^-1"],
    &["minor", "--n", "3", "--rows", "1,4", "--cols", "1,2"],
    &["central-check", "--n", "2", "x[3,1]"],
    &["section-check", "--n", "4", "--r", "4"],
    &["semiinv", "--n", "4", "--max-degree", "2", "x[1,1]"],
    &["solve-semiinv", "--n", "4", "--r", "0"],
    &["plucker", "--n", "4"],
    &["bigcell-manin", "--n", "3", "--r", "3"],
    &["poisson", "--n", "2", "x[1,1]"],
    &["qdp-struct", "--n", "two"],
    &["qdp-pperp", "--n", "4", "--r", "5"],
    &["coisotropy", "--algebra", "sl2", "--s", "1/2", "--c", "1/2"],
    &["flag-section", "--n", "3", "--flag-type", "2,1"],
];

pub fn golden_path(name: &str, json: bool) -> PathBuf {
    let ext = if json { "json" } else { "txt" };
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(format!("{name}.{ext}"))
}

pub fn argv(args: &[&str], json: bool) -> Vec<String> {
    let mut v = vec!["qhs".to_string()];
    v.extend(args.iter().map(|s| s.to_string()));
    if json {
        v.extend(["--format".to_string(), "json".to_string()]);
    }
    v
}

/// Compares every case against its golden files, rewriting them when
/// `UPDATE_GOLDEN=1`. Returns one message per mismatch.
pub fn check_goldens() -> Vec<String> {
    let update = std::env::var("UPDATE_GOLDEN").is_ok_and(|v| v == "1");
    let mut problems = Vec::new();
    for (name, args, code) in CASES {
        for json in [false, true] {
            let out = qhs_cli::run(argv(args, json));
            if out.code != *code {
                problems.push(format!("{name} (json={json}): exit {} != {code}: {}", out.code, out.stderr));
            }
            let path = golden_path(name, json);
            if update {
                std::fs::write(&path, &out.stdout).expect("writable golden dir");
                continue;
            }
            match std::fs::read_to_string(&path) {
                Ok(expected) if expected == out.stdout => {}
                Ok(expected) => problems.push(format!(
                    "{name} (json={json}) differs from {}:\n--- expected\n{expected}--- got\n{}",
                    path.display(),
                    out.stdout
                )),
                Err(e) => problems.push(format!("{}: {e}", path.display())),
            }
        }
    }
    problems
}
