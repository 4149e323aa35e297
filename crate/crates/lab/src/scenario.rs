//! Scenario files for `sync`.
//!
//! ```json
//! {
//!   "beta": 0.6,
//!   "node_positions": [0.0, 1.0, 2.0],
//!   "protocol": "superluminal",
//!   "signals": [
//!     {"from": 0, "to": 2, "kind": "light"},
//!     {"from": 2, "to": 0, "kind": "finite", "speed": 3.0},
//!     {"from": 0, "to": 2, "kind": "light", "mode": "two-way"}
//!   ],
//!   "phases": [0.0, 1.5, -2.0],
//!   "master": 0
//! }
//! ```
//!
//! `node_positions` are absolute-frame positions at absolute time 0.
//! `phases`, `master` and `signals` are optional; with no signals the run
//! measures light first-to-last, last-to-first and the round trip.

use std::path::Path;

use serde::Deserialize;
use synchrony_core::syncsim::{ClockLattice, NodeId, Protocol, SignalKind, SimError, SpeedMeasurement};

use crate::CliError;

/// Parsed scenario file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub beta: f64,
    pub node_positions: Vec<f64>,
    #[serde(default)]
    pub protocol: Option<String>,
    #[serde(default)]
    pub signals: Vec<SignalSpec>,
    #[serde(default)]
    pub phases: Option<Vec<f64>>,
    #[serde(default)]
    pub master: Option<usize>,
}

/// One measurement to run after synchronization.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignalSpec {
    pub from: usize,
    pub to: usize,
    #[serde(default = "default_kind")]
    pub kind: String,
    #[serde(default)]
    pub speed: Option<f64>,
    #[serde(default)]
    pub mode: Mode,
}

fn default_kind() -> String {
    "light".into()
}

/// One-way or round-trip measurement.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    OneWay,
    TwoWay,
}

/// What a scenario run produced.
#[derive(Debug, Clone)]
pub struct SyncOutcome {
    pub beta: f64,
    pub protocol: Protocol,
    pub lattice: ClockLattice,
    pub measurements: Vec<SpeedMeasurement>,
}

fn invalid(invariant: &'static str, detail: impl Into<String>) -> CliError {
    CliError::Scenario {
        invariant,
        detail: detail.into(),
    }
}

/// Parses a signal kind name.
pub fn parse_kind(name: &str, speed: Option<f64>) -> Result<SignalKind, String> {
    match (name, speed) {
        ("light", None) => Ok(SignalKind::Light),
        ("instantaneous", None) => Ok(SignalKind::Instantaneous),
        ("finite", Some(speed)) if speed.is_finite() && speed > 0.0 => Ok(SignalKind::Finite { speed }),
        ("finite", _) => Err("finite signals need a positive finite speed".into()),
        ("light" | "instantaneous", Some(_)) => Err(format!("{name} signals take no speed")),
        _ => Err(format!("unknown signal kind {name:?}")),
    }
}

impl Scenario {
    /// Reads and parses a scenario file. Parse failures are validation
    /// failures.
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            detail: e.to_string(),
        })?;
        Self::parse(&text)
    }

    /// Parses scenario JSON.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| invalid("json_schema", e.to_string()))
    }

    /// Protocol to run: `override_` wins over the file.
    pub fn resolve_protocol(&self, override_: Option<Protocol>) -> Result<Protocol, CliError> {
        if let Some(p) = override_ {
            return Ok(p);
        }
        let name = self
            .protocol
            .as_deref()
            .ok_or_else(|| invalid("protocol_known", "no protocol in file or on the command line"))?;
        name.parse()
            .map_err(|_| invalid("protocol_known", format!("unknown protocol {name:?}")))
    }

    /// Builds the lattice, checking every invariant the simulator relies on.
    pub fn build_lattice(&self) -> Result<ClockLattice, CliError> {
        if !(self.beta.is_finite() && self.beta.abs() < 1.0) {
            return Err(invalid("beta_subluminal", format!("beta={} is outside (-1, 1)", self.beta)));
        }
        let lattice = ClockLattice::new(self.beta, &self.node_positions).map_err(|e| match e {
            SimError::TooFewNodes { count } => invalid("min_two_nodes", format!("{count} node(s)")),
            SimError::InvalidPosition { index } => {
                invalid("positions_increasing", format!("node {index} breaks strict increase"))
            }
            other => invalid("lattice", other.to_string()),
        })?;
        match &self.phases {
            Some(p) => lattice.with_phases(p).map_err(|e| invalid("phases", e.to_string())),
            None => Ok(lattice),
        }
    }

    fn measurement_plan(&self, nodes: usize) -> Result<Vec<(NodeId, NodeId, SignalKind, Mode)>, CliError> {
        if self.signals.is_empty() {
            let (first, last) = (NodeId(0), NodeId(nodes - 1));
            return Ok(vec![
                (first, last, SignalKind::Light, Mode::OneWay),
                (last, first, SignalKind::Light, Mode::OneWay),
                (first, last, SignalKind::Light, Mode::TwoWay),
            ]);
        }
        self.signals
            .iter()
            .enumerate()
            .map(|(i, s)| {
                if s.from >= nodes || s.to >= nodes {
                    return Err(invalid("signal_nodes_exist", format!("signal {i} names a missing node")));
                }
                if s.from == s.to {
                    return Err(invalid("signal_nodes_distinct", format!("signal {i} has from == to")));
                }
                let kind = parse_kind(&s.kind, s.speed).map_err(|d| invalid("signal_kind", format!("signal {i}: {d}")))?;
                Ok((NodeId(s.from), NodeId(s.to), kind, s.mode))
            })
            .collect()
    }

    /// Validates, synchronizes and measures.
    pub fn run(&self, protocol_override: Option<Protocol>) -> Result<SyncOutcome, CliError> {
        let protocol = self.resolve_protocol(protocol_override)?;
        let mut lattice = self.build_lattice()?;
        let nodes = lattice.nodes().len();
        let master = self.master.unwrap_or(0);
        if master >= nodes {
            return Err(invalid("master_exists", format!("master {master} of {nodes} nodes")));
        }
        let plan = self.measurement_plan(nodes)?;
        lattice.run_protocol(protocol, NodeId(master))?;
        let measurements = plan
            .into_iter()
            .map(|(from, to, kind, mode)| {
                let m = match mode {
                    Mode::OneWay => lattice.measure_one_way(from, to, kind),
                    Mode::TwoWay => lattice.measure_two_way(from, to, kind),
                };
                m.map_err(|e| match e {
                    SimError::UnresolvableChase { .. } => invalid("chase_resolvable", e.to_string()),
                    other => other.into(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SyncOutcome {
            beta: self.beta,
            protocol,
            lattice,
            measurements,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scenario(json: &str) -> Scenario {
        Scenario::parse(json).unwrap()
    }

    fn invariant(r: Result<SyncOutcome, CliError>) -> &'static str {
        match r {
            Err(CliError::Scenario { invariant, .. }) => invariant,
            other => panic!("expected scenario error, got {other:?}"),
        }
    }

    #[test]
    fn default_plan_measures_both_ways() {
        let out = scenario(r#"{"beta": 0.6, "node_positions": [0, 1], "protocol": "superluminal"}"#)
            .run(None)
            .unwrap();
        let speeds: Vec<f64> = out.measurements.iter().map(|m| m.speed.as_f64()).collect();
        assert!((speeds[0] - 0.625).abs() < 1e-9);
        assert!((speeds[1] - 2.5).abs() < 1e-9);
        assert!((speeds[2] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn validation_names_the_invariant() {
        assert_eq!(invariant(Scenario::parse("{").map(|s| s.run(None)).and_then(|r| r)), "json_schema");
        let s = scenario(r#"{"beta": 1.5, "node_positions": [0, 1], "protocol": "einstein"}"#);
        assert_eq!(invariant(s.run(None)), "beta_subluminal");
        let s = scenario(r#"{"beta": 0.1, "node_positions": [0], "protocol": "einstein"}"#);
        assert_eq!(invariant(s.run(None)), "min_two_nodes");
        let s = scenario(r#"{"beta": 0.1, "node_positions": [0, 2, 1], "protocol": "einstein"}"#);
        assert_eq!(invariant(s.run(None)), "positions_increasing");
        let s = scenario(r#"{"beta": 0.1, "node_positions": [0, 1], "protocol": "ntp"}"#);
        assert_eq!(invariant(s.run(None)), "protocol_known");
        let s = scenario(r#"{"beta": 0.1, "node_positions": [0, 1], "protocol": "einstein", "signals": [{"from": 0, "to": 3}]}"#);
        assert_eq!(invariant(s.run(None)), "signal_nodes_exist");
        let s = scenario(r#"{"beta": 0.1, "node_positions": [0, 1], "protocol": "einstein", "signals": [{"from": 1, "to": 1}]}"#);
        assert_eq!(invariant(s.run(None)), "signal_nodes_distinct");
        let s = scenario(r#"{"beta": 0.1, "node_positions": [0, 1], "protocol": "einstein", "signals": [{"from": 0, "to": 1, "kind": "finite"}]}"#);
        assert_eq!(invariant(s.run(None)), "signal_kind");
        let s = scenario(r#"{"beta": 0.6, "node_positions": [0, 1], "protocol": "einstein", "signals": [{"from": 0, "to": 1, "kind": "finite", "speed": 0.2}]}"#);
        assert_eq!(invariant(s.run(None)), "chase_resolvable");
        let s = scenario(r#"{"beta": 0.6, "node_positions": [0, 1], "protocol": "einstein", "master": 2}"#);
        assert_eq!(invariant(s.run(None)), "master_exists");
        let s = scenario(r#"{"beta": 0.6, "node_positions": [0, 1], "protocol": "einstein", "phases": [1]}"#);
        assert_eq!(invariant(s.run(None)), "phases");
    }

    #[test]
    fn override_protocol() {
        let s = scenario(r#"{"beta": 0.6, "node_positions": [0, 1]}"#);
        assert_eq!(invariant(s.run(None)), "protocol_known");
        let out = s.run(Some(Protocol::Einstein)).unwrap();
        assert_eq!(out.protocol, Protocol::Einstein);
        assert!(out.measurements.iter().all(|m| (m.speed.as_f64() - 1.0).abs() < 1e-9));
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(Scenario::parse(r#"{"beta": 0, "node_positions": [0, 1], "betta": 2}"#).is_err());
    }
}
