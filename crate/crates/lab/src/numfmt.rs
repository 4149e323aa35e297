//! Deterministic number formatting for text, CSV and JSON output.

use serde::{Serialize, Serializer};

/// Default significant digits.
pub const DEFAULT_PRECISION: usize = 15;

/// Rounds to `digits` significant digits. Non-finite values pass through and
/// `-0` becomes `0`.
pub fn round_sig(v: f64, digits: usize) -> f64 {
    if !v.is_finite() {
        return v;
    }
    let digits = digits.clamp(1, 17);
    let r: f64 = format!("{:.*e}", digits - 1, v).parse().unwrap_or(v);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Rounds to a fixed number of decimals chosen so that `scale` keeps
/// `digits` significant digits. Used for tables whose entries should share
/// one absolute resolution.
pub fn round_to_scale(v: f64, scale: f64, digits: usize) -> f64 {
    if !v.is_finite() {
        return v;
    }
    let scale = if scale.is_finite() { scale.abs().max(1.0) } else { 1.0 };
    let magnitude = scale.log10().floor() as i64;
    let decimals = (digits.clamp(1, 17) as i64 - 1 - magnitude).clamp(0, 300) as usize;
    let r: f64 = format!("{v:.decimals$}").parse().unwrap_or(v);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Text form of an already-rounded number: shortest round-trip digits,
/// `inf`/`-inf`/`nan` for non-finite values.
pub fn text(v: f64) -> String {
    if v.is_nan() {
        "nan".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf".into() } else { "-inf".into() }
    } else if v == 0.0 {
        "0".into()
    } else {
        format!("{v}")
    }
}

/// `text(round_sig(v, digits))`.
pub fn fmt(v: f64, digits: usize) -> String {
    text(round_sig(v, digits))
}

/// A number for JSON output: finite values are plain numbers, non-finite
/// values become the strings `"inf"`, `"-inf"`, `"nan"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Num {
    /// Rounded to `digits` significant digits.
    pub fn sig(v: f64, digits: usize) -> Self {
        Num(round_sig(v, digits))
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            s.serialize_f64(self.0)
        } else {
            s.serialize_str(&text(self.0))
        }
    }
}
