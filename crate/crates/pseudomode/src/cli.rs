//! Argument parsing and deterministic CSV emission for the `pseudomode`
//! binary.
//!
//! Every subcommand writes one CSV document: UTF-8, LF line endings, comma
//! separator, a mandatory header row, `#`-prefixed comment lines before the
//! header when requested, and empty fields for absent optional values.
//! Floats are printed in Rust's shortest round-trip form, so identical
//! inputs yield byte-identical output.
//!
//! Exit codes follow the usual convention: 0 on success, 2 for argument
//! errors (reported with a usage hint on stderr), 1 for runtime failures
//! such as stiff integration or failed ordering checks (reported with the
//! offending parameter set). With `--out PATH` the file appears atomically:
//! the document is staged in a sibling temp file and renamed into place.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dynamics::{propagate_eigen, propagate_rk, DynamicsError};
use crate::entanglement::{analyze, QubitPairInit};
use crate::experiments::{
    self, preset, run_concurrence, run_density_profile, run_density_sweep, run_surface,
    ExperimentsError, OrderingReport, Preset, Scenario, SweepAxis, SweepSpec, CHECK_NAMES,
};
use crate::master_equation::{propagate_lindblad, BasisState, DensityOperator};
use crate::ode;
use crate::spectral::SpectralDensity;

/// Parse `args` (including the program name), dispatch, and return the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests land here too; they are not errors.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

#[derive(Debug)]
enum CliError {
    /// Bad flags or flag combinations; exit code 2.
    Usage(String),
    /// The computation itself failed; exit code 1.
    Runtime(String),
}

impl From<DynamicsError> for CliError {
    fn from(e: DynamicsError) -> Self {
        match e {
            // Stiffness is the one failure that valid-looking flags can
            // still trigger; everything else is a rejected input.
            DynamicsError::Stiffness { .. } => CliError::Runtime(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ExperimentsError> for CliError {
    fn from(e: ExperimentsError) -> Self {
        match e {
            ExperimentsError::Dynamics(d) => CliError::from(d),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "pseudomode",
    version,
    about = "Entanglement dynamics of qubits in band-gap reservoirs, as CSV"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Propagate the three excitation amplitudes for one scenario.
    Simulate(SimulateArgs),
    /// Evaluate the reservoir spectral density over a detuning grid.
    Spectrum(SpectrumArgs),
    /// ESD onset and trapped value over a gamma2-half x delta grid.
    EsdTime(EsdTimeArgs),
    /// Concurrence vs time along one swept parameter.
    Sweep(SweepArgs),
    /// Run a named preset study (fig1a .. fig6).
    Preset(PresetArgs),
    /// Evaluate the six qualitative ordering checks.
    Check(CheckArgs),
}

#[derive(Args, Debug, Clone)]
struct SpectralFlags {
    /// Weight of the broad Lorentzian.
    #[arg(long, default_value_t = 1.1, conflicts_with = "one_lorentzian")]
    w1: f64,

    /// Weight of the narrow, gap-carving Lorentzian.
    #[arg(long, default_value_t = 0.1, conflicts_with = "one_lorentzian")]
    w2: f64,

    /// Half width of the broad Lorentzian, in Rabi-frequency units.
    #[arg(long, default_value_t = 10.0)]
    gamma1_half: f64,

    /// Half width of the narrow Lorentzian.
    #[arg(long, default_value_t = 1.0, conflicts_with = "one_lorentzian")]
    gamma2_half: f64,

    /// Use the single-Lorentzian model (weight 1, no gap term).
    #[arg(long)]
    one_lorentzian: bool,
}

impl SpectralFlags {
    fn density(&self) -> SpectralDensity {
        if self.one_lorentzian {
            SpectralDensity::one_lorentzian(2.0 * self.gamma1_half, 0.0)
        } else {
            SpectralDensity::from_half_widths(self.w1, self.w2, self.gamma1_half, self.gamma2_half, 0.0)
        }
    }
}

#[derive(Args, Debug, Clone)]
struct ScenarioFlags {
    /// Qubit detuning from the spectral-density center.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    delta: f64,

    /// Rabi frequency; time is measured in its inverse.
    #[arg(long, default_value_t = 1.0)]
    rabi: f64,

    /// Initial weight on the two-qubit ground component.
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,

    /// Initial weight on the doubly excited component, or 'auto' for
    /// sqrt(1 - alpha^2).
    #[arg(long, default_value = "auto")]
    beta: String,

    /// Time horizon.
    #[arg(long, default_value_t = 50.0)]
    t_max: f64,

    /// Number of uniformly spaced output times, endpoints included.
    #[arg(long, default_value_t = 2001)]
    points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Closed-form eigendecomposition (falls back to rk near degeneracies).
    Eigen,
    /// Adaptive embedded Runge-Kutta integration.
    Rk,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    #[command(flatten)]
    spectral: SpectralFlags,

    #[command(flatten)]
    scenario: ScenarioFlags,

    /// Propagation route.
    #[arg(long, value_enum, default_value_t = MethodArg::Eigen)]
    method: MethodArg,

    /// Adaptive integrator tolerance (rk route).
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,

    // Cross-check column: excited-state population from the truncated
    // Lindblad propagator, exercised by the test suite.
    #[arg(long, hide = true)]
    oracle: bool,

    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SpectrumArgs {
    #[command(flatten)]
    spectral: SpectralFlags,

    /// Smallest detuning on the grid.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    delta_min: f64,

    /// Largest detuning on the grid.
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    delta_max: f64,

    /// Number of grid points, endpoints included.
    #[arg(long, default_value_t = 201)]
    points: usize,

    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EsdTimeArgs {
    /// Weight of the broad Lorentzian.
    #[arg(long, default_value_t = 1.1)]
    w1: f64,

    /// Weight of the narrow Lorentzian.
    #[arg(long, default_value_t = 0.1)]
    w2: f64,

    /// Half width of the broad Lorentzian.
    #[arg(long, default_value_t = 10.0)]
    gamma1_half: f64,

    /// Narrow-Lorentzian half widths to scan, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    gamma2_half: Vec<f64>,

    /// Detunings to scan, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0", allow_negative_numbers = true)]
    delta: Vec<f64>,

    /// Initial weight on the two-qubit ground component.
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,

    /// Initial weight on the doubly excited component, or 'auto'.
    #[arg(long, default_value = "auto")]
    beta: String,

    /// Rabi frequency.
    #[arg(long, default_value_t = 1.0)]
    rabi: f64,

    /// Time horizon searched for the onset.
    #[arg(long, default_value_t = 50.0)]
    t_max: f64,

    /// Worker threads for independent grid cells.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    /// Sweep the narrow-Lorentzian half width.
    Gamma2Half,
    /// Sweep the detuning magnitude.
    DeltaAbs,
}

impl AxisArg {
    fn to_axis(self) -> SweepAxis {
        match self {
            AxisArg::Gamma2Half => SweepAxis::Gamma2Half,
            AxisArg::DeltaAbs => SweepAxis::DeltaAbs,
        }
    }
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Swept parameter.
    #[arg(long, value_enum)]
    axis: AxisArg,

    /// Axis values, comma separated, strictly increasing.
    #[arg(long, value_delimiter = ',', required = true)]
    values: Vec<f64>,

    #[command(flatten)]
    spectral: SpectralFlags,

    #[command(flatten)]
    scenario: ScenarioFlags,

    /// Worker threads for independent sweep points.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct PresetArgs {
    /// Preset name: fig1a, fig1b, fig2a, fig2b, fig3, fig4, fig5 or fig6.
    name: String,

    /// Emit the full parameter set as '# key=value' lines before the header.
    #[arg(long)]
    manifest: bool,

    /// Worker threads for independent scenarios.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Check names to run; all six when omitted.
    names: Vec<String>,

    /// Worker threads for independent runs inside each check.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Write the CSV here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn dispatch(cmd: Command) -> Result<(), CliError> {
    match cmd {
        Command::Simulate(a) => {
            let csv = simulate_csv(&a)?;
            write_output(a.out.as_deref(), &csv)
        }
        Command::Spectrum(a) => {
            let csv = spectrum_csv(&a)?;
            write_output(a.out.as_deref(), &csv)
        }
        Command::EsdTime(a) => {
            let csv = esd_time_csv(&a)?;
            write_output(a.out.as_deref(), &csv)
        }
        Command::Sweep(a) => {
            let csv = sweep_csv(&a)?;
            write_output(a.out.as_deref(), &csv)
        }
        Command::Preset(a) => {
            let csv = preset_csv(&a)?;
            write_output(a.out.as_deref(), &csv)
        }
        Command::Check(a) => {
            let (csv, report) = check_csv(&a)?;
            write_output(a.out.as_deref(), &csv)?;
            if report.all_passed() {
                Ok(())
            } else {
                let failed = report.checks.iter().filter(|c| !c.passed).count();
                Err(CliError::Runtime(format!(
                    "{failed} of {} ordering checks failed",
                    report.checks.len()
                )))
            }
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(msg.to_string())
}

fn parse_init(alpha: f64, beta: &str) -> Result<QubitPairInit, CliError> {
    let init = if beta == "auto" {
        QubitPairInit::from_alpha(alpha)
    } else {
        let b: f64 = beta
            .parse()
            .map_err(|_| usage(format!("--beta must be a number or 'auto', got '{beta}'")))?;
        QubitPairInit::new(alpha, b)
    };
    init.map_err(usage)
}

fn validate_tol(tol: f64) -> Result<(), CliError> {
    if tol.is_finite() && (ode::TOL_MIN..=ode::TOL_MAX).contains(&tol) {
        Ok(())
    } else {
        Err(usage(format!(
            "--tol {tol:e} outside [{:e}, {:e}]",
            ode::TOL_MIN,
            ode::TOL_MAX
        )))
    }
}

fn scenario_from_flags(
    name: &str,
    spectral: &SpectralFlags,
    flags: &ScenarioFlags,
) -> Result<Scenario, CliError> {
    let init = parse_init(flags.alpha, &flags.beta)?;
    let s = Scenario::new(name, spectral.density(), flags.delta)
        .with_rabi(flags.rabi)
        .with_init(init)
        .with_horizon(flags.t_max, flags.points);
    s.validate().map_err(usage)?;
    Ok(s)
}

/// Shortest text that parses back to exactly `v`: positional and scientific
/// notation both print shortest-digit forms, so take whichever is shorter
/// (ties go to positional). Keeps tiny residuals like 1e-65 readable.
fn fmt_f64(v: f64) -> String {
    let plain = format!("{v}");
    let sci = format!("{v:e}");
    if sci.len() < plain.len() {
        sci
    } else {
        plain
    }
}

fn field(o: Option<f64>) -> String {
    o.map(fmt_f64).unwrap_or_default()
}

fn simulate_csv(a: &SimulateArgs) -> Result<String, CliError> {
    validate_tol(a.tol)?;
    let s = scenario_from_flags("simulate", &a.spectral, &a.scenario)?;
    let times = s.times();
    let p = s.system_params();
    let traj = match a.method {
        MethodArg::Eigen => propagate_eigen(&p, &times)?,
        MethodArg::Rk => propagate_rk(&p, &times, a.tol)?,
    };
    let rho_ee = if a.oracle {
        let rho = propagate_lindblad(&DensityOperator::qubit_excited(), &p, &times, a.tol)?;
        Some(rho.population(BasisState::QubitExcited))
    } else {
        None
    };

    let mut csv = String::from("t,re_c1,im_c1,abs2_c1,abs2_b1,abs2_b2,norm");
    if rho_ee.is_some() {
        csv.push_str(",rho_ee");
    }
    csv.push('\n');
    for (i, st) in traj.states.iter().enumerate() {
        let cells = [
            traj.times[i],
            st.c1.re,
            st.c1.im,
            st.c1.norm_sqr(),
            st.b1.norm_sqr(),
            st.b2.norm_sqr(),
            st.excitation_norm(),
        ];
        let _ = write!(csv, "{}", cells.map(fmt_f64).join(","));
        if let Some(r) = &rho_ee {
            let _ = write!(csv, ",{}", fmt_f64(r[i]));
        }
        csv.push('\n');
    }
    Ok(csv)
}

fn spectrum_csv(a: &SpectrumArgs) -> Result<String, CliError> {
    let sd = a.spectral.density();
    sd.validate().into_result().map_err(usage)?;
    if a.points < 2 {
        return Err(usage(format!("--points {} must be at least 2", a.points)));
    }
    if !(a.delta_min.is_finite() && a.delta_max.is_finite() && a.delta_max > a.delta_min) {
        return Err(usage(format!(
            "--delta-max {} must exceed --delta-min {}",
            a.delta_max, a.delta_min
        )));
    }
    let mut csv = String::from("delta,density\n");
    let span = a.delta_max - a.delta_min;
    for i in 0..a.points {
        let delta = a.delta_min + span * i as f64 / (a.points - 1) as f64;
        let _ = writeln!(
            csv,
            "{},{}",
            fmt_f64(delta),
            fmt_f64(sd.density_at_detuning(delta))
        );
    }
    Ok(csv)
}

fn esd_time_csv(a: &EsdTimeArgs) -> Result<String, CliError> {
    let init = parse_init(a.alpha, &a.beta)?;
    let mut cells = Vec::new();
    for &g2h in &a.gamma2_half {
        for &d in &a.delta {
            let sd = SpectralDensity::from_half_widths(a.w1, a.w2, a.gamma1_half, g2h, 0.0);
            let mut s = Scenario::new(format!("esd_g2h_{g2h}_d_{d}"), sd, d)
                .with_rabi(a.rabi)
                .with_init(init);
            s.t_max = a.t_max;
            s.validate().map_err(usage)?;
            cells.push((g2h, d, s));
        }
    }
    let reports = experiments::parallel_map(&cells, a.jobs, |(_, _, s)| {
        Ok(analyze(&s.system_params(), &s.init, s.t_max)?)
    })?;

    let mut csv = String::from("gamma2_half,delta,esd_onset,trapped_value\n");
    for ((g2h, d, _), report) in cells.iter().zip(reports) {
        let _ = writeln!(
            csv,
            "{},{},{},{}",
            fmt_f64(*g2h),
            fmt_f64(*d),
            field(report.onset),
            field(report.trapped_value)
        );
    }
    Ok(csv)
}

fn sweep_csv(a: &SweepArgs) -> Result<String, CliError> {
    let axis = a.axis.to_axis();
    if axis == SweepAxis::Gamma2Half && a.spectral.one_lorentzian {
        return Err(usage(
            "cannot sweep gamma2-half of the single-Lorentzian model",
        ));
    }
    let base = scenario_from_flags("sweep", &a.spectral, &a.scenario)?;
    let sweep = SweepSpec {
        base,
        axis,
        values: a.values.clone(),
    };
    let rows = run_surface(&sweep, a.jobs)?;
    let mut csv = format!("{},t,concurrence\n", axis.column_name());
    for (v, t, c) in rows {
        let _ = writeln!(csv, "{},{},{}", fmt_f64(v), fmt_f64(t), fmt_f64(c));
    }
    Ok(csv)
}

fn manifest_scenario(csv: &mut String, s: &Scenario) {
    let prefix = &s.name;
    let pairs: [(&str, String); 10] = [
        ("w1", fmt_f64(s.sd.w1)),
        ("w2", fmt_f64(s.sd.w2)),
        ("gamma1_half", fmt_f64(s.sd.gamma1 / 2.0)),
        ("gamma2_half", fmt_f64(s.sd.gamma2 / 2.0)),
        ("delta", fmt_f64(s.delta)),
        ("rabi", fmt_f64(s.rabi)),
        ("alpha", fmt_f64(s.init.alpha())),
        ("beta", fmt_f64(s.init.beta())),
        ("t_max", fmt_f64(s.t_max)),
        ("grid_points", s.grid_points.to_string()),
    ];
    for (key, value) in pairs {
        let _ = writeln!(csv, "# {prefix}.{key}={value}");
    }
}

fn manifest_density(csv: &mut String, prefix: &str, sd: &SpectralDensity) {
    let pairs: [(&str, f64); 4] = [
        ("w1", sd.w1),
        ("w2", sd.w2),
        ("gamma1_half", sd.gamma1 / 2.0),
        ("gamma2_half", sd.gamma2 / 2.0),
    ];
    for (key, value) in pairs {
        let _ = writeln!(csv, "# {prefix}.{key}={}", fmt_f64(value));
    }
}

fn join_spaced(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| fmt_f64(*v))
        .collect::<Vec<_>>()
        .join(" ")
}

fn manifest_into(csv: &mut String, name: &str, p: &Preset) {
    let _ = writeln!(csv, "# preset={name}");
    match p {
        Preset::Scenarios(list) => {
            for s in list {
                manifest_scenario(csv, s);
            }
        }
        Preset::ConcurrenceSweep(sweep) | Preset::DensitySweep(sweep) => {
            manifest_scenario(csv, &sweep.base);
            let _ = writeln!(csv, "# axis={}", sweep.axis.column_name());
            let _ = writeln!(csv, "# values={}", join_spaced(&sweep.values));
        }
        Preset::DensityComparison {
            lorentzian,
            gap,
            deltas,
        } => {
            manifest_density(csv, "lorentzian", lorentzian);
            manifest_density(csv, "gap", gap);
            let _ = writeln!(csv, "# delta_min={}", fmt_f64(deltas.first().copied().unwrap_or(f64::NAN)));
            let _ = writeln!(csv, "# delta_max={}", fmt_f64(deltas.last().copied().unwrap_or(f64::NAN)));
            let _ = writeln!(csv, "# delta_points={}", deltas.len());
        }
    }
}

fn preset_csv(a: &PresetArgs) -> Result<String, CliError> {
    let p = preset(&a.name)?;
    let mut csv = String::new();
    if a.manifest {
        manifest_into(&mut csv, &a.name, &p);
    }
    match p {
        Preset::Scenarios(list) => {
            csv.push_str("scenario,t,concurrence\n");
            let runs = experiments::parallel_map(&list, a.jobs, run_concurrence)?;
            for (s, rows) in list.iter().zip(runs) {
                for (t, c) in rows {
                    let _ = writeln!(csv, "{},{},{}", s.name, fmt_f64(t), fmt_f64(c));
                }
            }
        }
        Preset::ConcurrenceSweep(sweep) => {
            let _ = writeln!(csv, "{},t,concurrence", sweep.axis.column_name());
            for (v, t, c) in run_surface(&sweep, a.jobs)? {
                let _ = writeln!(csv, "{},{},{}", fmt_f64(v), fmt_f64(t), fmt_f64(c));
            }
        }
        Preset::DensitySweep(sweep) => {
            let _ = writeln!(csv, "{},density", sweep.axis.column_name());
            for (v, d) in run_density_sweep(&sweep)? {
                let _ = writeln!(csv, "{},{}", fmt_f64(v), fmt_f64(d));
            }
        }
        Preset::DensityComparison {
            lorentzian,
            gap,
            deltas,
        } => {
            csv.push_str("delta,density_lorentzian,density_gap\n");
            for (d, dl, dg) in run_density_profile(&lorentzian, &gap, &deltas) {
                let _ = writeln!(csv, "{},{},{}", fmt_f64(d), fmt_f64(dl), fmt_f64(dg));
            }
        }
    }
    Ok(csv)
}

fn check_csv(a: &CheckArgs) -> Result<(String, OrderingReport), CliError> {
    let names: Vec<&str> = if a.names.is_empty() {
        CHECK_NAMES.to_vec()
    } else {
        a.names.iter().map(String::as_str).collect()
    };
    let report = experiments::run_checks(&names, a.jobs)?;
    let mut csv = String::from("check,passed,detail\n");
    for check in &report.checks {
        let _ = writeln!(csv, "{},{},{}", check.name, check.passed, check.detail);
    }
    Ok((csv, report))
}

fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    let Some(path) = out else {
        print!("{content}");
        return Ok(());
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let stem = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".to_string());
    let tmp = dir.join(format!(".{stem}.{}.tmp", std::process::id()));
    fs::write(&tmp, content)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", tmp.display())))?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        CliError::Runtime(format!("cannot finalize {}: {e}", path.display()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::error::ErrorKind;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("pseudomode").chain(args.iter().copied()))
    }

    #[test]
    fn float_fields_round_trip_and_stay_short() {
        for v in [0.0, 0.5, 1.0, -1.5, 1e-65, 1.925929944387236e-34, 37.455764] {
            let text = fmt_f64(v);
            assert_eq!(text.parse::<f64>().unwrap(), v, "{text}");
            assert!(text.len() <= format!("{v}").len());
        }
        assert_eq!(fmt_f64(0.5), "0.5");
        assert_eq!(fmt_f64(1.0), "1");
        assert_eq!(fmt_f64(1e-65), "1e-65");
    }

    #[test]
    fn beta_auto_matches_the_reference_preparation() {
        let init = parse_init(0.5, "auto").unwrap();
        let reference = QubitPairInit::reference();
        assert!((init.alpha() - reference.alpha()).abs() < 1e-15);
        assert!((init.beta() - reference.beta()).abs() < 1e-15);

        let explicit = parse_init(0.5, "0.8660254037844386").unwrap();
        assert!((explicit.beta() - reference.beta()).abs() < 1e-15);
    }

    #[test]
    fn beta_rejects_garbage_and_broken_normalization() {
        assert!(matches!(parse_init(0.5, "sqrt3/2"), Err(CliError::Usage(_))));
        assert!(matches!(parse_init(0.5, "0.5"), Err(CliError::Usage(_))));
    }

    #[test]
    fn one_lorentzian_conflicts_with_gap_shape_flags() {
        for flags in [
            &["simulate", "--one-lorentzian", "--w2", "0.1"][..],
            &["simulate", "--one-lorentzian", "--gamma2-half", "2"][..],
            &["spectrum", "--one-lorentzian", "--w1", "1"][..],
        ] {
            let err = parse(flags).unwrap_err();
            assert_eq!(err.kind(), ErrorKind::ArgumentConflict, "{flags:?}");
        }
        assert!(parse(&["simulate", "--one-lorentzian", "--gamma1-half", "10"]).is_ok());
    }

    #[test]
    fn list_flags_split_on_commas() {
        let cli = parse(&[
            "esd-time",
            "--gamma2-half",
            "1,2,9",
            "--delta",
            "0,10",
        ])
        .unwrap();
        let Command::EsdTime(a) = cli.command else {
            panic!()
        };
        assert_eq!(a.gamma2_half, vec![1.0, 2.0, 9.0]);
        assert_eq!(a.delta, vec![0.0, 10.0]);
    }

    #[test]
    fn weight_sum_violations_are_usage_errors() {
        let cli = parse(&["simulate", "--w1", "1.5", "--w2", "0.1", "--t-max", "1"]).unwrap();
        let Command::Simulate(a) = cli.command else {
            panic!()
        };
        match simulate_csv(&a) {
            Err(CliError::Usage(msg)) => assert!(msg.contains("w1 - w2"), "{msg}"),
            other => panic!("expected usage error, got {other:?}"),
        }
    }

    #[test]
    fn simulate_emits_header_and_requested_rows() {
        let cli = parse(&["simulate", "--t-max", "1", "--points", "11"]).unwrap();
        let Command::Simulate(a) = cli.command else {
            panic!()
        };
        let csv = simulate_csv(&a).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,re_c1,im_c1,abs2_c1,abs2_b1,abs2_b2,norm");
        assert_eq!(lines.len(), 12);
        // The eigen route reconstructs the initial state to round-off, so
        // check the parsed fields instead of exact digits.
        let first: Vec<f64> = lines[1].split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(first[0], 0.0);
        assert!((first[1] - 1.0).abs() < 1e-12);
        assert!(first[2].abs() < 1e-12);
        assert!((first[6] - 1.0).abs() < 1e-12);
        assert_eq!(csv, simulate_csv(&a).unwrap(), "rerun must be identical");
    }

    #[test]
    fn oracle_flag_appends_the_lindblad_column() {
        let cli = parse(&[
            "simulate",
            "--t-max",
            "1",
            "--points",
            "5",
            "--tol",
            "1e-8",
            "--oracle",
        ])
        .unwrap();
        let Command::Simulate(a) = cli.command else {
            panic!()
        };
        let csv = simulate_csv(&a).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert!(lines[0].ends_with(",rho_ee"));
        // At t = 0 the qubit is excited in both pictures.
        assert!(lines[1].ends_with(",1"));
    }

    #[test]
    fn tolerance_bounds_are_enforced() {
        let cli = parse(&["simulate", "--tol", "1e-2"]).unwrap();
        let Command::Simulate(a) = cli.command else {
            panic!()
        };
        assert!(matches!(simulate_csv(&a), Err(CliError::Usage(_))));
    }

    #[test]
    fn spectrum_grid_is_validated() {
        let cli = parse(&["spectrum", "--points", "1"]).unwrap();
        let Command::Spectrum(a) = cli.command else {
            panic!()
        };
        assert!(matches!(spectrum_csv(&a), Err(CliError::Usage(_))));

        let cli = parse(&["spectrum", "--delta-min", "5", "--delta-max", "1"]).unwrap();
        let Command::Spectrum(a) = cli.command else {
            panic!()
        };
        assert!(matches!(spectrum_csv(&a), Err(CliError::Usage(_))));
    }

    #[test]
    fn spectrum_rows_match_direct_evaluation() {
        let cli = parse(&["spectrum", "--points", "3", "--delta-max", "2"]).unwrap();
        let Command::Spectrum(a) = cli.command else {
            panic!()
        };
        let csv = spectrum_csv(&a).unwrap();
        let sd = SpectralDensity::from_half_widths(1.1, 0.1, 10.0, 1.0, 0.0);
        let expected = format!(
            "delta,density\n0,{}\n1,{}\n2,{}\n",
            sd.density_at_detuning(0.0),
            sd.density_at_detuning(1.0),
            sd.density_at_detuning(2.0)
        );
        assert_eq!(csv, expected);
    }

    #[test]
    fn esd_grid_covers_the_cartesian_product_in_order() {
        let cli = parse(&[
            "esd-time",
            "--gamma2-half",
            "1,2",
            "--delta",
            "0,10",
            "--jobs",
            "2",
        ])
        .unwrap();
        let Command::EsdTime(a) = cli.command else {
            panic!()
        };
        let csv = esd_time_csv(&a).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "gamma2_half,delta,esd_onset,trapped_value");
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("1,0,"));
        assert!(lines[2].starts_with("1,10,"));
        assert!(lines[3].starts_with("2,0,"));
        assert!(lines[4].starts_with("2,10,"));
        // Resonant cells die, so the onset field is non-empty.
        let onset: Vec<&str> = lines[1].split(',').collect();
        assert!(!onset[2].is_empty());
    }

    #[test]
    fn esd_fields_are_empty_without_death() {
        // alpha > beta never crosses the death threshold.
        let cli = parse(&["esd-time", "--alpha", "0.9", "--t-max", "5"]).unwrap();
        let Command::EsdTime(a) = cli.command else {
            panic!()
        };
        let csv = esd_time_csv(&a).unwrap();
        let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
        assert_eq!(row[2], "", "onset must be the empty field");
    }

    #[test]
    fn sweep_requires_increasing_values_and_a_gap_model_for_gamma2() {
        let cli = parse(&["sweep", "--axis", "gamma2-half", "--values", "2,1"]).unwrap();
        let Command::Sweep(a) = cli.command else {
            panic!()
        };
        match sweep_csv(&a) {
            Err(CliError::Usage(msg)) => assert!(msg.contains("strictly increasing"), "{msg}"),
            other => panic!("{other:?}"),
        }

        let cli = parse(&[
            "sweep",
            "--axis",
            "gamma2-half",
            "--values",
            "1,2",
            "--one-lorentzian",
        ])
        .unwrap();
        let Command::Sweep(a) = cli.command else {
            panic!()
        };
        assert!(matches!(sweep_csv(&a), Err(CliError::Usage(_))));
    }

    #[test]
    fn sweep_output_is_long_format_with_the_axis_column() {
        let cli = parse(&[
            "sweep",
            "--axis",
            "delta-abs",
            "--values",
            "0,10",
            "--t-max",
            "1",
            "--points",
            "3",
            "--jobs",
            "2",
        ])
        .unwrap();
        let Command::Sweep(a) = cli.command else {
            panic!()
        };
        let csv = sweep_csv(&a).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "delta_abs,t,concurrence");
        assert_eq!(lines.len(), 7);
        assert!(lines[1].starts_with("0,0,"));
        assert!(lines[4].starts_with("10,0,"));
    }

    #[test]
    fn preset_manifest_lines_precede_the_header() {
        let a = PresetArgs {
            name: "fig3".to_string(),
            manifest: true,
            jobs: 2,
            out: None,
        };
        let csv = preset_csv(&a).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# preset=fig3");
        assert!(lines.contains(&"# fig3_strong.gamma1_half=11"));
        assert!(lines.contains(&"# fig3_weak.alpha=0.5"));
        let header = lines.iter().position(|l| !l.starts_with('#')).unwrap();
        assert_eq!(lines[header], "scenario,t,concurrence");
        assert!(lines[header + 1].starts_with("fig3_strong,0,"));
    }

    #[test]
    fn unknown_names_are_usage_errors() {
        let a = PresetArgs {
            name: "fig9".to_string(),
            manifest: false,
            jobs: 1,
            out: None,
        };
        match preset_csv(&a) {
            Err(CliError::Usage(msg)) => assert!(msg.contains("fig1a"), "{msg}"),
            other => panic!("{other:?}"),
        }

        let a = CheckArgs {
            names: vec!["bogus".to_string()],
            jobs: 1,
            out: None,
        };
        assert!(matches!(check_csv(&a), Err(CliError::Usage(_))));
    }

    #[test]
    fn check_csv_reports_each_selected_check() {
        let a = CheckArgs {
            names: vec!["fig2_density_monotonicity".to_string()],
            jobs: 1,
            out: None,
        };
        let (csv, report) = check_csv(&a).unwrap();
        assert!(report.all_passed());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "check,passed,detail");
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with("fig2_density_monotonicity,true,"));
        // The detail field must not smuggle in extra separators.
        assert_eq!(lines[1].matches(',').count(), 2);
    }

    #[test]
    fn output_file_is_created_atomically() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("rows.csv");
        write_output(Some(&path), "a,b\n1,2\n").unwrap();
        assert_eq!(fs::read_to_string(&path).unwrap(), "a,b\n1,2\n");
        // No stray temp files survive.
        let leftovers: Vec<_> = fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap().file_name())
            .collect();
        assert_eq!(leftovers.len(), 1);

        let missing = dir.path().join("no_such_dir").join("rows.csv");
        assert!(matches!(
            write_output(Some(&missing), "x\n"),
            Err(CliError::Runtime(_))
        ));
    }
}
