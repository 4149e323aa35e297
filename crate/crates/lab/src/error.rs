use std::fmt::Write as _;

use synchrony_core::kinematics::KinematicsError;
use synchrony_core::probe::ProbeError;
use synchrony_core::syncsim::SimError;

/// Every way a command can fail, with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// `(beta, k)` makes the Edwards chart singular. Exit 2.
    #[error("degenerate convention beta={beta} k={k}")]
    Degenerate { beta: f64, k: f64 },
    /// Scenario file failed validation. Exit 3.
    #[error("scenario invalid: {invariant}: {detail}")]
    Scenario { invariant: &'static str, detail: String },
    /// Probe samples cannot constrain the fit. Exit 4.
    #[error("ill-conditioned fit with {distinct} distinct lab velocities")]
    IllConditioned { distinct: usize },
    /// Malformed command line. Exit 64.
    #[error("usage: {0}")]
    Usage(String),
    /// Sample file failed validation. Exit 5.
    #[error("sample file invalid at line {line}: {detail}")]
    Samples { line: usize, detail: String },
    /// Filesystem failure. Exit 1.
    #[error("io error on {path}: {detail}")]
    Io { path: String, detail: String },
    /// Any other domain error. Exit 1.
    #[error("{0}")]
    Input(String),
}

impl CliError {
    /// Process exit code.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Degenerate { .. } => 2,
            CliError::Scenario { .. } => 3,
            CliError::IllConditioned { .. } => 4,
            CliError::Samples { .. } => 5,
            CliError::Usage(_) => 64,
            CliError::Io { .. } | CliError::Input(_) => 1,
        }
    }

    /// Single-line `error_code key=value ...` diagnostic.
    pub fn diagnostic(&self) -> String {
        let (code, fields): (&str, Vec<(&str, String)>) = match self {
            CliError::Degenerate { beta, k } => (
                "degenerate_convention",
                vec![("beta", beta.to_string()), ("k", k.to_string())],
            ),
            CliError::Scenario { invariant, detail } => (
                "scenario_invalid",
                vec![("invariant", invariant.to_string()), ("detail", detail.clone())],
            ),
            CliError::IllConditioned { distinct } => {
                ("ill_conditioned", vec![("distinct_velocities", distinct.to_string())])
            }
            CliError::Samples { line, detail } => (
                "samples_invalid",
                vec![("line", line.to_string()), ("detail", detail.clone())],
            ),
            CliError::Usage(msg) => ("usage_error", vec![("message", msg.clone())]),
            CliError::Io { path, detail } => {
                ("io_error", vec![("path", path.clone()), ("detail", detail.clone())])
            }
            CliError::Input(msg) => ("invalid_input", vec![("message", msg.clone())]),
        };
        let mut out = String::from(code);
        for (key, value) in fields {
            write!(out, " {key}={}", quote(&value)).unwrap();
        }
        out
    }
}

// bare when safe, otherwise a Debug-escaped string: never spans lines
fn quote(v: &str) -> String {
    let bare = !v.is_empty()
        && v
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '.' | '-' | '+' | '_' | '/' | ':'));
    if bare {
        v.to_string()
    } else {
        format!("{v:?}")
    }
}

impl From<KinematicsError> for CliError {
    fn from(e: KinematicsError) -> Self {
        match e {
            KinematicsError::DegenerateConvention { beta, k } => CliError::Degenerate { beta, k },
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<ProbeError> for CliError {
    fn from(e: ProbeError) -> Self {
        match e {
            ProbeError::IllConditioned { distinct } => CliError::IllConditioned { distinct },
            ProbeError::Kinematics(k) => k.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        match e {
            SimError::Kinematics(k) => k.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}
