//! Collapse-sample CSV files and a seeded synthetic generator.
//!
//! Columns: `delta_E,lab_beta,t_c,sigma`. The header is required; `sigma`
//! may be left empty.

use std::io::{Read, Write};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};
use synchrony_core::probe::{collapse_time, CollapseModel, CollapseSample};

use crate::numfmt;
use crate::CliError;

/// Header every sample file starts with.
pub const HEADER: [&str; 4] = ["delta_E", "lab_beta", "t_c", "sigma"];

#[derive(Debug, Deserialize)]
struct Row {
    #[serde(rename = "delta_E")]
    delta_e: f64,
    lab_beta: f64,
    t_c: f64,
    sigma: Option<f64>,
}

#[derive(Serialize)]
struct OutRow<'a> {
    #[serde(rename = "delta_E")]
    delta_e: &'a str,
    lab_beta: &'a str,
    t_c: &'a str,
    sigma: &'a str,
}

/// Reads a sample file. Line numbers in errors are 1-based and count the
/// header.
pub fn read_samples(reader: impl Read) -> Result<Vec<CollapseSample>, CliError> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let headers = rdr.headers().map_err(|e| bad(1, e.to_string()))?.clone();
    if headers.iter().ne(HEADER.iter().copied()) {
        return Err(bad(1, format!("expected header {}", HEADER.join(","))));
    }
    let mut out = Vec::new();
    for (i, row) in rdr.deserialize::<Row>().enumerate() {
        let line = i + 2;
        let row = row.map_err(|e| bad(line, e.to_string()))?;
        let sample = CollapseSample::new(row.delta_e, row.lab_beta, row.t_c, row.sigma)
            .map_err(|e| bad(line, e.to_string()))?;
        out.push(sample);
    }
    Ok(out)
}

fn bad(line: usize, detail: String) -> CliError {
    CliError::Samples { line, detail }
}

/// Writes samples with `digits` significant digits.
pub fn write_samples(writer: impl Write, samples: &[CollapseSample], digits: usize) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(writer);
    let io = |e: csv::Error| CliError::Io {
        path: "<output>".into(),
        detail: e.to_string(),
    };
    if samples.is_empty() {
        w.write_record(HEADER).map_err(io)?;
    }
    for s in samples {
        let (d, b, t) = (numfmt::fmt(s.delta_e, digits), numfmt::fmt(s.beta, digits), numfmt::fmt(s.t_c, digits));
        let sigma = s.sigma.map(|v| numfmt::fmt(v, digits)).unwrap_or_default();
        w.serialize(OutRow {
            delta_e: &d,
            lab_beta: &b,
            t_c: &t,
            sigma: &sigma,
        })
        .map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Io {
        path: "<output>".into(),
        detail: e.to_string(),
    })
}

/// Parameters for [`generate`].
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorConfig {
    /// Velocity of the frame with the shortest collapse time.
    pub beta0: f64,
    pub delta_e: f64,
    pub count: usize,
    /// Lab velocities are spread evenly over `[u_min, u_max]`.
    pub u_min: f64,
    pub u_max: f64,
    /// Relative Gaussian noise on `t_c`; 0 for exact samples.
    pub noise: f64,
    pub seed: u64,
}

/// Synthetic samples: collapse time at the velocity of each lab relative to
/// the `beta0` frame, optionally with multiplicative Gaussian noise.
pub fn generate(model: &CollapseModel, cfg: &GeneratorConfig) -> Result<Vec<CollapseSample>, CliError> {
    let invalid = |m: &str| CliError::Input(m.to_string());
    if cfg.count < 1 {
        return Err(invalid("count must be at least 1"));
    }
    if !(cfg.noise.is_finite() && cfg.noise >= 0.0) {
        return Err(invalid("noise must be a non-negative number"));
    }
    if !(cfg.u_min <= cfg.u_max) {
        return Err(invalid("u-min must not exceed u-max"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let normal = Normal::new(0.0, 1.0).expect("unit normal");
    (0..cfg.count)
        .map(|i| {
            let u = if cfg.count == 1 {
                cfg.u_min
            } else {
                cfg.u_min + (cfg.u_max - cfg.u_min) * i as f64 / (cfg.count - 1) as f64
            };
            // relative velocity written out directly rather than via the
            // estimator's own composition path
            let rel = (u - cfg.beta0) / (1.0 - u * cfg.beta0);
            let clean = collapse_time(model, cfg.delta_e, rel)?;
            let (t_c, sigma) = if cfg.noise > 0.0 {
                let sigma = cfg.noise * clean;
                (clean + sigma * normal.sample(&mut rng), Some(sigma))
            } else {
                (clean, None)
            };
            CollapseSample::new(cfg.delta_e, u, t_c, sigma).map_err(CliError::from)
        })
        .collect()
}
