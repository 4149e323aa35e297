//! Argument parsing and the subcommands.
//!
//! [`run`] is the whole program minus process plumbing: it parses `argv`,
//! writes the report to `out` and returns the error to report, if any.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::builder::TypedValueParser as _;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use synchrony_core::kinematics::{
    edwards_transform, induced_synchrony, Event, FrameSpec, KinematicsError, TransformCoeffs,
};
use synchrony_core::probe::{
    estimate_absolute_frame, uniform_grid, CollapseModel, FitReport, UnitSystem,
};
use synchrony_core::syncsim::{
    argmin_abs_anisotropy, isotropy_scan, AnisotropyRow, ClockLattice, LatticeTemplate, NodeId,
    Protocol, SpeedMeasurement,
};

use crate::numfmt::{self, Num};
use crate::samples::{self, GeneratorConfig};
use crate::scenario::{parse_kind, Scenario};
use crate::CliError;

/// Environment variable giving `c` in m/s for SI display.
pub const SPEED_OF_LIGHT_VAR: &str = "SYNCHRONY_LAB_C";

/// Process environment the commands may consult.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Env {
    /// `c` in m/s when SI display is requested.
    pub speed_of_light: Option<f64>,
}

impl Env {
    /// Reads [`SPEED_OF_LIGHT_VAR`]. Set but unparsable is an error.
    pub fn from_process() -> Result<Self, CliError> {
        match std::env::var(SPEED_OF_LIGHT_VAR) {
            Ok(v) => Self::with_speed_of_light(&v),
            Err(std::env::VarError::NotPresent) => Ok(Env::default()),
            Err(e) => Err(CliError::Input(format!("{SPEED_OF_LIGHT_VAR}: {e}"))),
        }
    }

    /// Parses a value of [`SPEED_OF_LIGHT_VAR`].
    pub fn with_speed_of_light(v: &str) -> Result<Self, CliError> {
        match v.trim().parse::<f64>() {
            Ok(c) if c.is_finite() && c > 0.0 => Ok(Env { speed_of_light: Some(c) }),
            _ => Err(CliError::Input(format!(
                "{SPEED_OF_LIGHT_VAR} must be a positive number, got {v:?}"
            ))),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "synchrony-lab", version, about = "Clock-synchrony kinematics, simulations and probes")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
    /// Significant digits in printed numbers.
    #[arg(long, global = true, default_value_t = numfmt::DEFAULT_PRECISION,
          value_parser = clap::value_parser!(u8).range(1..=17).map(usize::from))]
    precision: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Map one event between synchrony charts.
    Transform(TransformArgs),
    /// Synchronize a scenario lattice and measure signal speeds.
    Sync(SyncArgs),
    /// Synchronize a two-clock lattice and time a signal both ways.
    Oneway(OnewayArgs),
    /// One-way light anisotropy over a range of frame velocities.
    Scan(ScanArgs),
    /// Locate the frame with the shortest collapse time.
    Probe(ProbeArgs),
    /// Write a synthetic collapse-sample CSV.
    Samples(SamplesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Preset {
    /// `k = k' = 0`.
    Lorentz,
    /// `k = 0`, `k'` induced by the boost (`-beta`).
    Superluminal,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct TransformArgs {
    /// Event as `t,x,y,z` (or `t,x`).
    #[arg(long, allow_hyphen_values = true)]
    event: String,
    /// Named `(k, k')` pair.
    #[arg(long, value_enum, conflicts_with_all = ["k", "k_prime", "from", "to"])]
    preset: Option<Preset>,
    /// Velocity of the target frame in the source chart.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    beta: Option<f64>,
    /// Synchrony of the source chart.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    k: Option<f64>,
    /// Synchrony of the target chart.
    #[arg(long = "k-prime", conflicts_with_all = ["from", "to"])]
    k_prime: Option<f64>,
    /// Source frame as `beta,k` relative to the absolute frame.
    #[arg(long, allow_hyphen_values = true, requires = "to")]
    from: Option<String>,
    /// Target frame as `beta,k` relative to the absolute frame.
    #[arg(long, allow_hyphen_values = true, requires = "from")]
    to: Option<String>,
}

#[derive(Debug, Args)]
struct SyncArgs {
    /// Scenario JSON file.
    scenario: PathBuf,
    /// Protocol; overrides the scenario's own.
    #[arg(long)]
    protocol: Option<String>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct OnewayArgs {
    /// Velocity of the clock pair relative to the absolute frame.
    #[arg(long)]
    beta: f64,
    #[arg(long, default_value = "einstein")]
    protocol: String,
    /// `light`, `instantaneous` or `finite`.
    #[arg(long, default_value = "light")]
    kind: String,
    /// Absolute-frame speed of a `finite` signal.
    #[arg(long)]
    speed: Option<f64>,
    /// Clock separation on the pair's own rulers.
    #[arg(long, default_value_t = 1.0)]
    distance: f64,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct ScanArgs {
    #[arg(long = "beta-min")]
    beta_min: f64,
    #[arg(long = "beta-max")]
    beta_max: f64,
    #[arg(long)]
    step: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Units {
    Ev,
    Si,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct ProbeArgs {
    /// Sample CSV (`delta_E,lab_beta,t_c,sigma`).
    #[arg(long)]
    samples: PathBuf,
    #[arg(long = "grid-min", default_value_t = -0.95)]
    grid_min: f64,
    #[arg(long = "grid-max", default_value_t = 0.95)]
    grid_max: f64,
    #[arg(long = "grid-step", default_value_t = 0.01)]
    grid_step: f64,
    /// Unit system the constants are quoted in.
    #[arg(long, value_enum, default_value_t = Units::Ev)]
    units: Units,
    /// Overrides the unit system's reduced Planck constant.
    #[arg(long)]
    hbar: Option<f64>,
    /// Overrides the unit system's Planck energy.
    #[arg(long = "planck-energy")]
    planck_energy: Option<f64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct SamplesArgs {
    /// Velocity of the frame with the shortest collapse time.
    #[arg(long)]
    beta0: f64,
    #[arg(long = "delta-e", default_value_t = 1.0)]
    delta_e: f64,
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long = "u-min", default_value_t = -0.8)]
    u_min: f64,
    #[arg(long = "u-max", default_value_t = 0.8)]
    u_max: f64,
    /// Relative Gaussian noise on `t_c`.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    /// RNG seed; required when `--noise` is positive.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Units::Ev)]
    units: Units,
}

struct Ctx<'a> {
    output: OutputFormat,
    digits: usize,
    env: &'a Env,
}

impl Ctx<'_> {
    fn num(&self, v: f64) -> Num {
        Num::sig(v, self.digits)
    }

    fn text(&self, v: f64) -> String {
        numfmt::fmt(v, self.digits)
    }
}

/// Runs one command line. `argv[0]` is the program name.
pub fn run<I, T>(argv: I, env: &Env, out: &mut dyn Write) -> Result<(), CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return write!(out, "{e}").map_err(io_err);
            }
            return Err(CliError::Usage(first_line(&e.to_string())));
        }
    };
    let ctx = Ctx {
        output: cli.output,
        digits: cli.precision,
        env,
    };
    let mut buf = Vec::new();
    match cli.command {
        Command::Transform(a) => cmd_transform(&ctx, &a, &mut buf)?,
        Command::Sync(a) => cmd_sync(&ctx, &a, &mut buf)?,
        Command::Oneway(a) => cmd_oneway(&ctx, &a, &mut buf)?,
        Command::Scan(a) => cmd_scan(&ctx, &a, &mut buf)?,
        Command::Probe(a) => cmd_probe(&ctx, &a, &mut buf)?,
        Command::Samples(a) => cmd_samples(&ctx, &a, &mut buf)?,
    }
    // nothing reaches `out` unless the whole command succeeded
    out.write_all(&buf).and_then(|_| out.flush()).map_err(io_err)
}

fn first_line(msg: &str) -> String {
    let line = msg.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    line.trim().trim_start_matches("error:").trim().to_string()
}

fn io_err(e: io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        detail: e.to_string(),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn emit_json(out: &mut Vec<u8>, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Input(e.to_string()))?;
    out.push(b'\n');
    Ok(())
}

fn csv_writer(out: &mut Vec<u8>) -> csv::Writer<&mut Vec<u8>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn csv_rows(out: &mut Vec<u8>, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
    let mut w = csv_writer(out);
    let err = |e: csv::Error| CliError::Input(e.to_string());
    w.write_record(header).map_err(err)?;
    for r in rows {
        w.write_record(r).map_err(err)?;
    }
    w.flush().map_err(io_err)
}

fn parse_list(s: &str, what: &str, lens: &[usize]) -> Result<Vec<f64>, CliError> {
    let values = s
        .split(',')
        .map(|p| p.trim().parse::<f64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| usage(format!("{what} must be comma-separated numbers, got {s:?}")))?;
    if !lens.contains(&values.len()) || values.iter().any(|v| !v.is_finite()) {
        let counts: Vec<String> = lens.iter().map(|n| n.to_string()).collect();
        return Err(usage(format!("{what} needs {} finite components, got {s:?}", counts.join(" or "))));
    }
    Ok(values)
}

// ---------------------------------------------------------------- transform

#[derive(Serialize)]
struct EventOut {
    chart: String,
    t: Num,
    x: Num,
    y: Num,
    z: Num,
}

#[derive(Serialize)]
struct CoeffsOut {
    a_tt: Num,
    a_tx: Num,
    a_xt: Num,
    a_xx: Num,
}

#[derive(Serialize)]
struct SiEvent {
    t_s: Num,
    x_m: Num,
    y_m: Num,
    z_m: Num,
}

#[derive(Serialize)]
struct SiBlock {
    c_m_per_s: Num,
    source: SiEvent,
    image: SiEvent,
}

#[derive(Serialize)]
struct TransformReport {
    command: &'static str,
    source: EventOut,
    image: EventOut,
    coefficients: CoeffsOut,
    #[serde(skip_serializing_if = "Option::is_none")]
    si: Option<SiBlock>,
}

fn cmd_transform(ctx: &Ctx, a: &TransformArgs, out: &mut Vec<u8>) -> Result<(), CliError> {
    let ev = parse_list(&a.event, "--event", &[2, 4])?;
    let event = if ev.len() == 2 {
        Event::tx(ev[0], ev[1])
    } else {
        Event::new(ev[0], ev[1], ev[2], ev[3])
    };
    let (source_chart, image_chart, coeffs) = match (&a.from, &a.to) {
        (Some(from), Some(to)) => {
            let from = frame_arg(from, "--from", "from")?;
            let to = frame_arg(to, "--to", "to")?;
            let coeffs = from.transform_to(&to)?;
            (frame_chart(ctx, &from), frame_chart(ctx, &to), coeffs)
        }
        _ => {
            let beta = a.beta.ok_or_else(|| usage("--beta is required without --from/--to"))?;
            // presets only choose (k, k'); the map itself is always the general one
            let (k, k_prime) = match a.preset {
                Some(Preset::Lorentz) => (0.0, 0.0),
                Some(Preset::Superluminal) => (0.0, induced_synchrony(0.0, beta)?),
                None => (
                    a.k.unwrap_or(0.0),
                    a.k_prime
                        .ok_or_else(|| usage("--k-prime or --preset is required"))?,
                ),
            };
            let coeffs = TransformCoeffs::edwards(beta, k, k_prime)?;
            // cross-check the matrix against the direct formula
            debug_assert_eq!(Ok(coeffs.apply(event)), edwards_transform(event, beta, k, k_prime));
            (
                format!("S(k={})", ctx.text(k)),
                format!("S'(beta={} k'={})", ctx.text(beta), ctx.text(k_prime)),
                coeffs,
            )
        }
    };
    if !event.is_finite() {
        return Err(KinematicsError::NonFinite.into());
    }
    let image = coeffs.apply(event);
    match ctx.output {
        OutputFormat::Json => {
            let si = ctx.env.speed_of_light.map(|c| SiBlock {
                c_m_per_s: ctx.num(c),
                source: si_event(ctx, event, c),
                image: si_event(ctx, image, c),
            });
            emit_json(
                out,
                &TransformReport {
                    command: "transform",
                    source: event_out(ctx, source_chart, event),
                    image: event_out(ctx, image_chart, image),
                    coefficients: CoeffsOut {
                        a_tt: ctx.num(coeffs.a_tt),
                        a_tx: ctx.num(coeffs.a_tx),
                        a_xt: ctx.num(coeffs.a_xt),
                        a_xx: ctx.num(coeffs.a_xx),
                    },
                    si,
                },
            )
        }
        OutputFormat::Csv => {
            let mut header = vec!["role", "chart", "t", "x", "y", "z", "a_tt", "a_tx", "a_xt", "a_xx"];
            if ctx.env.speed_of_light.is_some() {
                header.extend(["t_s", "x_m", "y_m", "z_m"]);
            }
            let row = |role: &str, chart: String, e: Event| {
                let mut r = vec![
                    role.to_string(),
                    chart,
                    ctx.text(e.t),
                    ctx.text(e.x),
                    ctx.text(e.y),
                    ctx.text(e.z),
                    ctx.text(coeffs.a_tt),
                    ctx.text(coeffs.a_tx),
                    ctx.text(coeffs.a_xt),
                    ctx.text(coeffs.a_xx),
                ];
                if let Some(c) = ctx.env.speed_of_light {
                    r.extend([ctx.text(e.t), ctx.text(e.x * c), ctx.text(e.y * c), ctx.text(e.z * c)]);
                }
                r
            };
            let rows = [row("source", source_chart, event), row("image", image_chart, image)];
            csv_rows(out, &header, &rows)
        }
    }
}

fn frame_arg(s: &str, flag: &str, label: &str) -> Result<FrameSpec, CliError> {
    let v = parse_list(s, flag, &[2])?;
    Ok(FrameSpec::new(label, v[0], v[1])?)
}

fn frame_chart(ctx: &Ctx, f: &FrameSpec) -> String {
    format!("{}(beta={} k={})", f.label(), ctx.text(f.beta()), ctx.text(f.k()))
}

fn event_out(ctx: &Ctx, chart: String, e: Event) -> EventOut {
    EventOut {
        chart,
        t: ctx.num(e.t),
        x: ctx.num(e.x),
        y: ctx.num(e.y),
        z: ctx.num(e.z),
    }
}

// natural units take t in seconds, so lengths are light-seconds
fn si_event(ctx: &Ctx, e: Event, c: f64) -> SiEvent {
    SiEvent {
        t_s: ctx.num(e.t),
        x_m: ctx.num(e.x * c),
        y_m: ctx.num(e.y * c),
        z_m: ctx.num(e.z * c),
    }
}

// ---------------------------------------------------------------- sync / oneway

#[derive(Serialize)]
struct OffsetOut {
    node: usize,
    xi0: Num,
    offset: Num,
}

#[derive(Serialize)]
struct MeasurementOut {
    from: usize,
    to: usize,
    direction: &'static str,
    kind: &'static str,
    distance: Num,
    elapsed: Num,
    speed: Num,
    #[serde(skip_serializing_if = "Option::is_none")]
    speed_si: Option<Num>,
}

#[derive(Serialize)]
struct SyncReport {
    command: &'static str,
    beta: Num,
    protocol: &'static str,
    synchrony_k: Option<Num>,
    offsets: Vec<OffsetOut>,
    measurements: Vec<MeasurementOut>,
}

fn parse_protocol(name: &str) -> Result<Protocol, CliError> {
    name.parse().map_err(|_| {
        let known: Vec<&str> = Protocol::ALL.iter().map(|p| p.name()).collect();
        usage(format!("unknown protocol {name:?}; expected one of {}", known.join(", ")))
    })
}

fn offsets_out(ctx: &Ctx, lattice: &ClockLattice) -> Vec<OffsetOut> {
    // one absolute resolution for the whole table so float noise on
    // near-zero offsets rounds away identically across protocols
    let offsets = lattice.offsets();
    let scale = offsets.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    lattice
        .nodes()
        .iter()
        .zip(offsets)
        .map(|(n, off)| OffsetOut {
            node: n.id().0,
            xi0: ctx.num(n.xi0()),
            offset: Num(numfmt::round_to_scale(off, scale, ctx.digits)),
        })
        .collect()
}

fn measurement_out(ctx: &Ctx, (from, to): (usize, usize), m: &SpeedMeasurement) -> MeasurementOut {
    let speed = m.speed.as_f64();
    MeasurementOut {
        from,
        to,
        direction: m.direction.name(),
        kind: m.kind.name(),
        distance: ctx.num(m.distance),
        elapsed: ctx.num(m.elapsed),
        speed: ctx.num(speed),
        speed_si: ctx.env.speed_of_light.map(|c| ctx.num(speed * c)),
    }
}

fn sync_report(
    ctx: &Ctx,
    command: &'static str,
    beta: f64,
    protocol: Protocol,
    lattice: &ClockLattice,
    measurements: &[((usize, usize), SpeedMeasurement)],
) -> SyncReport {
    SyncReport {
        command,
        beta: ctx.num(beta),
        protocol: protocol.name(),
        synchrony_k: lattice.synchrony().map(|k| ctx.num(k)),
        offsets: offsets_out(ctx, lattice),
        measurements: measurements.iter().map(|(ends, m)| measurement_out(ctx, *ends, m)).collect(),
    }
}

fn emit_sync(ctx: &Ctx, report: &SyncReport, out: &mut Vec<u8>) -> Result<(), CliError> {
    match ctx.output {
        OutputFormat::Json => emit_json(out, report),
        OutputFormat::Csv => {
            let si = ctx.env.speed_of_light.is_some();
            // offset rows leave beta/protocol blank so offset tables from
            // different protocols compare equal line by line
            let mut header = vec![
                "record", "beta", "protocol", "node", "xi0", "offset", "k", "from", "to", "direction", "kind",
                "distance", "elapsed", "speed",
            ];
            if si {
                header.push("speed_si");
            }
            let t = |n: Num| numfmt::text(n.0);
            let (beta, protocol) = (t(report.beta), report.protocol.to_string());
            let mut rows = Vec::new();
            for o in &report.offsets {
                let mut r = vec!["offset".into(), String::new(), String::new(), o.node.to_string(), t(o.xi0), t(o.offset)];
                r.resize(header.len(), String::new());
                rows.push(r);
            }
            let mut r = vec!["synchrony".into(), beta.clone(), protocol.clone(), String::new(), String::new(), String::new()];
            r.push(report.synchrony_k.map(t).unwrap_or_default());
            r.resize(header.len(), String::new());
            rows.push(r);
            for m in &report.measurements {
                let mut r = vec![
                    "measurement".into(),
                    beta.clone(),
                    protocol.clone(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                    m.from.to_string(),
                    m.to.to_string(),
                    m.direction.into(),
                    m.kind.into(),
                    t(m.distance),
                    t(m.elapsed),
                    t(m.speed),
                ];
                if let Some(s) = m.speed_si {
                    r.push(t(s));
                }
                rows.push(r);
            }
            csv_rows(out, &header, &rows)
        }
    }
}

fn cmd_sync(ctx: &Ctx, a: &SyncArgs, out: &mut Vec<u8>) -> Result<(), CliError> {
    let scenario = Scenario::load(&a.scenario)?;
    let protocol = match &a.protocol {
        Some(p) => Some(parse_protocol(p)?),
        None => None,
    };
    let outcome = scenario.run(protocol)?;
    let ends = scenario_ends(&scenario, outcome.lattice.nodes().len());
    let measurements: Vec<_> = ends.into_iter().zip(outcome.measurements.iter().copied()).collect();
    let report = sync_report(ctx, "sync", outcome.beta, outcome.protocol, &outcome.lattice, &measurements);
    emit_sync(ctx, &report, out)
}

fn scenario_ends(s: &Scenario, nodes: usize) -> Vec<(usize, usize)> {
    if s.signals.is_empty() {
        vec![(0, nodes - 1), (nodes - 1, 0), (0, nodes - 1)]
    } else {
        s.signals.iter().map(|sig| (sig.from, sig.to)).collect()
    }
}

fn cmd_oneway(ctx: &Ctx, a: &OnewayArgs, out: &mut Vec<u8>) -> Result<(), CliError> {
    let protocol = parse_protocol(&a.protocol)?;
    let kind = parse_kind(&a.kind, a.speed).map_err(usage)?;
    if !(a.distance.is_finite() && a.distance > 0.0) {
        return Err(usage("--distance must be positive"));
    }
    let mut lattice = ClockLattice::from_proper_positions(a.beta, &[0.0, a.distance])?;
    lattice.run_protocol(protocol, NodeId(0))?;
    let (near, far) = (NodeId(0), NodeId(1));
    let measurements = vec![
        ((0, 1), lattice.measure_one_way(near, far, kind)?),
        ((1, 0), lattice.measure_one_way(far, near, kind)?),
        ((0, 1), lattice.measure_two_way(near, far, kind)?),
    ];
    let report = sync_report(ctx, "oneway", a.beta, protocol, &lattice, &measurements);
    emit_sync(ctx, &report, out)
}

// ---------------------------------------------------------------- scan

// grid points land on the decimal lattice of the printed precision, so
// e.g. 0.1 + 0.2 prints and computes as 0.3
fn snapped_grid(ctx: &Ctx, min: f64, max: f64, step: f64) -> Vec<f64> {
    uniform_grid(min, max, step)
        .into_iter()
        .map(|b| numfmt::round_to_scale(b, 1.0, ctx.digits))
        .collect()
}

fn check_range(min: f64, max: f64, step: f64, what: &str) -> Result<(), CliError> {
    if !(step.is_finite() && step > 0.0) {
        return Err(CliError::Input(format!("{what} step must be positive")));
    }
    if !(min.is_finite() && max.is_finite() && min > -1.0 && max < 1.0) {
        return Err(CliError::Input(format!("{what} range must lie inside (-1, 1)")));
    }
    if min > max {
        return Err(CliError::Input(format!("{what} minimum exceeds maximum")));
    }
    Ok(())
}

#[derive(Serialize)]
struct ScanRowOut {
    beta: Num,
    c_plus: Num,
    c_minus: Num,
    anisotropy: Num,
    #[serde(skip_serializing_if = "Option::is_none")]
    c_plus_si: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c_minus_si: Option<Num>,
}

#[derive(Serialize)]
struct ScanReport {
    command: &'static str,
    rows: Vec<ScanRowOut>,
    argmin: ScanRowOut,
}

fn cmd_scan(ctx: &Ctx, a: &ScanArgs, out: &mut Vec<u8>) -> Result<(), CliError> {
    check_range(a.beta_min, a.beta_max, a.step, "scan")?;
    let grid = snapped_grid(ctx, a.beta_min, a.beta_max, a.step);
    let rows = isotropy_scan(&grid, &LatticeTemplate::unit_pair())?;
    let best = *argmin_abs_anisotropy(&rows).expect("grid has at least one point");
    let row_out = |r: &AnisotropyRow| ScanRowOut {
        beta: ctx.num(r.beta),
        c_plus: ctx.num(r.c_plus),
        c_minus: ctx.num(r.c_minus),
        anisotropy: ctx.num(r.anisotropy),
        c_plus_si: ctx.env.speed_of_light.map(|c| ctx.num(r.c_plus * c)),
        c_minus_si: ctx.env.speed_of_light.map(|c| ctx.num(r.c_minus * c)),
    };
    match ctx.output {
        OutputFormat::Json => emit_json(
            out,
            &ScanReport {
                command: "scan",
                rows: rows.iter().map(row_out).collect(),
                argmin: row_out(&best),
            },
        ),
        OutputFormat::Csv => {
            let mut header = vec!["row", "beta", "c_plus", "c_minus", "anisotropy"];
            let si = ctx.env.speed_of_light;
            if si.is_some() {
                header.extend(["c_plus_si", "c_minus_si"]);
            }
            let line = |tag: &str, r: &AnisotropyRow| {
                let mut v = vec![
                    tag.to_string(),
                    ctx.text(r.beta),
                    ctx.text(r.c_plus),
                    ctx.text(r.c_minus),
                    ctx.text(r.anisotropy),
                ];
                if let Some(c) = si {
                    v.extend([ctx.text(r.c_plus * c), ctx.text(r.c_minus * c)]);
                }
                v
            };
            let mut table: Vec<Vec<String>> = rows.iter().map(|r| line("scan", r)).collect();
            table.push(line("argmin", &best));
            csv_rows(out, &header, &table)
        }
    }
}

// ---------------------------------------------------------------- probe

fn model_for(units: Units, hbar: Option<f64>, planck_energy: Option<f64>) -> Result<CollapseModel, CliError> {
    let base = match units {
        Units::Ev => CollapseModel::electron_volt(),
        Units::Si => CollapseModel::si(),
    };
    Ok(CollapseModel::new(
        hbar.unwrap_or(base.hbar()),
        planck_energy.unwrap_or(base.planck_energy()),
        base.units(),
    )?)
}

#[derive(Serialize)]
struct Constants {
    units: &'static str,
    hbar: Num,
    planck_energy: Num,
}

#[derive(Serialize)]
struct ResidualOut {
    beta: Num,
    residual: Num,
}

#[derive(Serialize)]
struct ProbeReport {
    command: &'static str,
    samples: usize,
    beta_hat: Num,
    grid_beta: Num,
    grid_index: usize,
    refined: bool,
    scale: Num,
    /// `scale / (hbar E_p)`: 1 when the data follow the model exactly.
    model_ratio: Num,
    composition: &'static str,
    constants: Constants,
    residuals: Vec<ResidualOut>,
}

fn cmd_probe(ctx: &Ctx, a: &ProbeArgs, out: &mut Vec<u8>) -> Result<(), CliError> {
    let model = model_for(a.units, a.hbar, a.planck_energy)?;
    check_range(a.grid_min, a.grid_max, a.grid_step, "grid")?;
    let file = File::open(&a.samples).map_err(|e| CliError::Io {
        path: a.samples.display().to_string(),
        detail: e.to_string(),
    })?;
    let samples = samples::read_samples(io::BufReader::new(file))?;
    let grid = snapped_grid(ctx, a.grid_min, a.grid_max, a.grid_step);
    let fit: FitReport = estimate_absolute_frame(&samples, &grid)?;
    match ctx.output {
        OutputFormat::Json => emit_json(
            out,
            &ProbeReport {
                command: "probe",
                samples: samples.len(),
                beta_hat: ctx.num(fit.beta_hat),
                grid_beta: ctx.num(fit.grid_beta),
                grid_index: fit.grid_index,
                refined: fit.refined,
                scale: ctx.num(fit.scale),
                model_ratio: ctx.num(fit.scale / (model.hbar() * model.planck_energy())),
                composition: fit.composition,
                constants: Constants {
                    units: unit_name(model.units()),
                    hbar: ctx.num(model.hbar()),
                    planck_energy: ctx.num(model.planck_energy()),
                },
                residuals: fit
                    .residuals
                    .iter()
                    .map(|&(beta, residual)| ResidualOut {
                        beta: ctx.num(beta),
                        residual: ctx.num(residual),
                    })
                    .collect(),
            },
        ),
        OutputFormat::Csv => {
            let mut rows: Vec<Vec<String>> = fit
                .residuals
                .iter()
                .map(|&(b, r)| vec!["grid".into(), ctx.text(b), ctx.text(r)])
                .collect();
            rows.push(vec!["beta_hat".into(), ctx.text(fit.beta_hat), String::new()]);
            csv_rows(out, &["row", "beta", "residual"], &rows)
        }
    }
}

fn unit_name(u: UnitSystem) -> &'static str {
    u.name()
}

fn cmd_samples(ctx: &Ctx, a: &SamplesArgs, out: &mut Vec<u8>) -> Result<(), CliError> {
    let seed = match (a.seed, a.noise > 0.0) {
        (Some(s), _) => s,
        (None, false) => 0,
        (None, true) => return Err(usage("--seed is required when --noise is positive")),
    };
    let model = model_for(a.units, None, None)?;
    let cfg = GeneratorConfig {
        beta0: a.beta0,
        delta_e: a.delta_e,
        count: a.count,
        u_min: a.u_min,
        u_max: a.u_max,
        noise: a.noise,
        seed,
    };
    let generated = samples::generate(&model, &cfg)?;
    samples::write_samples(out, &generated, ctx.digits)
}
