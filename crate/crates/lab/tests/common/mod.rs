//! Documented example commands and their checked-in golden outputs.
//!
//! Set `UPDATE_GOLDEN=1` to rewrite the files under `tests/golden/`.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub speed_of_light: Option<&'static str>,
}

const fn case(name: &'static str, args: &'static [&'static str]) -> Case {
    Case {
        name,
        args,
        speed_of_light: None,
    }
}

// golden output is compared at 12 significant digits
pub const GOLDEN_PRECISION: &str = "12";

pub const CASES: &[Case] = &[
    case("transform_lorentz_rest", &["transform", "--preset", "lorentz", "--beta", "0", "--event", "1,0,0,0"]),
    case("transform_superluminal_preset", &["transform", "--preset", "superluminal", "--beta", "0.6", "--event", "1,0,0,0"]),
    case("transform_superluminal_explicit", &["transform", "--k", "0", "--k-prime", "-0.6", "--beta", "0.6", "--event", "1,0,0,0"]),
    case("transform_edwards_csv", &["--output", "csv", "transform", "--beta", "0.5", "--k", "0.2", "--k-prime", "-0.3", "--event", "2,1,0.5,-0.5"]),
    case("transform_frame_pair", &["transform", "--from", "0.3,0.2", "--to", "-0.4,0.5", "--event", "2,1,0,0"]),
    Case {
        name: "transform_si_display",
        args: &["transform", "--preset", "lorentz", "--beta", "0.6", "--event", "1,0.5,0,0"],
        speed_of_light: Some("299792458"),
    },
    case("transform_degenerate", &["transform", "--beta", "0.8", "--k", "-1", "--k-prime", "0", "--event", "1,0,0,0"]),
    case("sync_rest_einstein", &["sync", "tests/data/rest_einstein.json"]),
    case("sync_moving_superluminal", &["sync", "tests/data/moving_06.json"]),
    case("sync_moving_superluminal_csv", &["--output", "csv", "sync", "tests/data/moving_06.json"]),
    case("sync_moving_external_csv", &["--output", "csv", "sync", "tests/data/moving_06.json", "--protocol", "external-regulation"]),
    case("sync_moving_einstein", &["sync", "tests/data/moving_06.json", "--protocol", "einstein"]),
    case("sync_bad_order", &["sync", "tests/data/bad_order.json"]),
    case("oneway_superluminal", &["oneway", "--beta", "0.6", "--protocol", "superluminal"]),
    case("oneway_einstein_csv", &["--output", "csv", "oneway", "--beta", "0.6", "--protocol", "einstein"]),
    case("oneway_finite_chase", &["oneway", "--beta", "0.6", "--kind", "finite", "--speed", "0.5"]),
    case("scan_symmetric", &["--output", "csv", "scan", "--beta-min", "-0.5", "--beta-max", "0.5", "--step", "0.25"]),
    case("scan_tenths", &["--output", "csv", "scan", "--beta-min", "-0.9", "--beta-max", "0.9", "--step", "0.1"]),
    case("scan_single_row", &["--output", "csv", "scan", "--beta-min", "-0.2", "--beta-max", "0.1", "--step", "1"]),
    case("scan_json", &["scan", "--beta-min", "0", "--beta-max", "0.6", "--step", "0.3"]),
    case("probe_beta0_0", &["probe", "--samples", "tests/data/noiseless_beta0_0.csv"]),
    case("probe_beta0_0.3", &["probe", "--samples", "tests/data/noiseless_beta0_0.3.csv"]),
    case("probe_beta0_-0.5_csv", &["--output", "csv", "probe", "--samples", "tests/data/noiseless_beta0_-0.5.csv", "--grid-min", "-0.7", "--grid-max", "-0.3", "--grid-step", "0.05"]),
    case("probe_single_velocity", &["probe", "--samples", "tests/data/single_velocity.csv"]),
    case("samples_noisy", &["samples", "--beta0", "0.3", "--count", "12", "--noise", "0.01", "--seed", "7"]),
    case("usage_unknown_flag", &["scan", "--beta-min", "0", "--beta-max", "0.5", "--stride", "0.1"]),
];

pub fn manifest_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{name}.out"))
}

/// Runs the binary and renders stdout, or exit status plus stderr on
/// failure, as one text blob.
pub fn run_case(case: &Case, extra: &[&str]) -> String {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_synchrony-lab"));
    cmd.current_dir(manifest_dir()).args(extra).args(case.args);
    match case.speed_of_light {
        Some(c) => cmd.env("SYNCHRONY_LAB_C", c),
        None => cmd.env_remove("SYNCHRONY_LAB_C"),
    };
    let out = cmd.output().expect("spawn synchrony-lab");
    let stdout = String::from_utf8(out.stdout).expect("utf-8 stdout");
    let stderr = String::from_utf8(out.stderr).expect("utf-8 stderr");
    if out.status.success() {
        assert!(stderr.is_empty(), "{}: unexpected stderr {stderr:?}", case.name);
        stdout
    } else {
        assert!(stdout.is_empty(), "{}: stdout on failure", case.name);
        format!("exit: {}\nstderr: {stderr}", out.status.code().unwrap_or(-1))
    }
}

pub fn golden_run(case: &Case) -> String {
    // precision is a global flag, so it can lead the argument list
    run_case(case, &["--precision", GOLDEN_PRECISION])
}

/// Compares one case against its golden file (or rewrites it). Returns a
/// description of the mismatch, if any.
pub fn check_golden(case: &Case) -> Result<(), String> {
    let got = golden_run(case);
    let path = golden_path(case.name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if got == want {
        Ok(())
    } else {
        Err(format!("{} differs from golden:\n--- want\n{want}\n--- got\n{got}", case.name))
    }
}

/// Two default-precision runs must match byte for byte.
pub fn check_repeatable(case: &Case) -> Result<(), String> {
    let a = run_case(case, &[]);
    let b = run_case(case, &[]);
    if a == b {
        Ok(())
    } else {
        Err(format!("{}: two runs differ", case.name))
    }
}
