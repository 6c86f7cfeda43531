//! Named parameter studies and the qualitative checks they support.
//!
//! Every quantitative claim the library makes about the band-gap model is
//! reproducible from one of eight presets:
//!
//! - `fig1a` / `fig1b`: concurrence vs time while the gap width `gamma2/2`
//!   sweeps through {1, 2, 9}, resonant and detuned by 10.
//! - `fig2a` / `fig2b`: the density at the qubit frequency for the same
//!   sweep, densely sampled; explains why the fig1 orderings flip.
//! - `fig3`: three perfect-gap scenarios (strong, intermediate, weak
//!   coupling) showing trapping, plain sudden death, and death with
//!   revivals.
//! - `fig4` / `fig5`: ESD onset vs detuning for the single-Lorentzian and
//!   band-gap models; the gap makes the onset non-monotonic.
//! - `fig6`: the two spectral profiles seen by a detuned qubit side by side.
//!
//! [`check_orderings`] distills those studies into six pass/fail
//! relations, so a regression anywhere in the pipeline (spectral mapping,
//! propagation, concurrence, onset search) trips at least one check.

use std::thread;

use thiserror::Error;

use crate::dynamics::{propagate_eigen, DynamicsError, SystemParams};
use crate::entanglement::{analyze, concurrence_series, find_esd_onset, EsdReport, QubitPairInit};
use crate::spectral::SpectralDensity;

pub const PRESET_NAMES: [&str; 8] = [
    "fig1a", "fig1b", "fig2a", "fig2b", "fig3", "fig4", "fig5", "fig6",
];

pub const CHECK_NAMES: [&str; 6] = [
    "fig1a_onset_ordering",
    "fig1b_onset_ordering",
    "fig2_density_monotonicity",
    "fig3_regimes",
    "fig4_onset_monotone",
    "fig5_onset_single_minimum",
];

/// Default time horizon (units of inverse Rabi frequency) for all presets;
/// long enough that every preset onset lands well inside it.
pub const DEFAULT_T_MAX: f64 = 50.0;

pub const DEFAULT_GRID_POINTS: usize = 2001;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExperimentsError {
    #[error("unknown preset '{name}'; valid presets: {}", PRESET_NAMES.join(", "))]
    UnknownPreset { name: String },
    #[error("unknown check '{name}'; valid checks: {}", CHECK_NAMES.join(", "))]
    UnknownCheck { name: String },
    #[error("invalid scenario '{name}': {reason}")]
    InvalidScenario { name: String, reason: String },
    #[error(transparent)]
    Dynamics(#[from] DynamicsError),
}

/// One fully specified run: reservoir, detuning, preparation, horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub name: String,
    pub sd: SpectralDensity,
    pub delta: f64,
    pub rabi: f64,
    pub init: QubitPairInit,
    pub t_max: f64,
    pub grid_points: usize,
}

impl Scenario {
    /// Reference defaults: unit Rabi frequency, the `alpha = 1/2`
    /// preparation, horizon 50 on the standard grid.
    pub fn new(name: impl Into<String>, sd: SpectralDensity, delta: f64) -> Self {
        Scenario {
            name: name.into(),
            sd,
            delta,
            rabi: 1.0,
            init: QubitPairInit::reference(),
            t_max: DEFAULT_T_MAX,
            grid_points: DEFAULT_GRID_POINTS,
        }
    }

    pub fn with_rabi(mut self, rabi: f64) -> Self {
        self.rabi = rabi;
        self
    }

    pub fn with_init(mut self, init: QubitPairInit) -> Self {
        self.init = init;
        self
    }

    pub fn with_horizon(mut self, t_max: f64, grid_points: usize) -> Self {
        self.t_max = t_max;
        self.grid_points = grid_points;
        self
    }

    pub fn system_params(&self) -> SystemParams {
        SystemParams::for_density(&self.sd, self.delta, self.rabi)
    }

    pub fn times(&self) -> Vec<f64> {
        let n = self.grid_points;
        (0..n)
            .map(|i| self.t_max * i as f64 / (n - 1) as f64)
            .collect()
    }

    pub fn validate(&self) -> Result<(), ExperimentsError> {
        let invalid = |reason: String| ExperimentsError::InvalidScenario {
            name: self.name.clone(),
            reason,
        };
        let sd_check = self.sd.validate();
        if !sd_check.is_valid() {
            return Err(invalid(sd_check.to_string()));
        }
        if !(self.t_max.is_finite() && self.t_max > 0.0) {
            return Err(invalid(format!("t_max = {} must be positive", self.t_max)));
        }
        if self.grid_points < 2 {
            return Err(invalid(format!(
                "grid_points = {} must be at least 2",
                self.grid_points
            )));
        }
        if !(self.rabi.is_finite() && self.rabi >= 0.0) {
            return Err(invalid(format!("rabi = {} must be non-negative", self.rabi)));
        }
        if !self.delta.is_finite() {
            return Err(invalid(format!("delta = {} must be finite", self.delta)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepAxis {
    /// Vary the narrow-Lorentzian half width, widening the gap.
    Gamma2Half,
    /// Vary the magnitude of the qubit detuning from the gap center.
    DeltaAbs,
}

impl SweepAxis {
    pub fn column_name(self) -> &'static str {
        match self {
            SweepAxis::Gamma2Half => "gamma2_half",
            SweepAxis::DeltaAbs => "delta_abs",
        }
    }
}

/// A base scenario plus the axis along which it is replicated.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: Scenario,
    pub axis: SweepAxis,
    pub values: Vec<f64>,
}

impl SweepSpec {
    /// Axis values must be strictly increasing and every induced scenario
    /// individually valid.
    pub fn validate(&self) -> Result<(), ExperimentsError> {
        for w in self.values.windows(2) {
            if !(w[1] > w[0]) {
                return Err(ExperimentsError::InvalidScenario {
                    name: self.base.name.clone(),
                    reason: format!(
                        "sweep values must be strictly increasing, got {} then {}",
                        w[0], w[1]
                    ),
                });
            }
        }
        for s in self.scenarios() {
            s.validate()?;
        }
        Ok(())
    }

    pub fn scenarios(&self) -> Vec<Scenario> {
        self.values
            .iter()
            .map(|&v| {
                let mut s = self.base.clone();
                match self.axis {
                    SweepAxis::Gamma2Half => {
                        s.name = format!("{}_g2h_{v}", self.base.name);
                        s.sd.gamma2 = 2.0 * v;
                    }
                    SweepAxis::DeltaAbs => {
                        s.name = format!("{}_d_{v}", self.base.name);
                        s.delta = v;
                    }
                }
                s
            })
            .collect()
    }
}

/// What a preset asks to be computed.
#[derive(Debug, Clone, PartialEq)]
pub enum Preset {
    /// Independent named scenarios, concurrence vs time for each.
    Scenarios(Vec<Scenario>),
    /// Concurrence vs time across a parameter sweep.
    ConcurrenceSweep(SweepSpec),
    /// Density at the qubit frequency across a parameter sweep.
    DensitySweep(SweepSpec),
    /// Single-Lorentzian and band-gap densities on a detuning grid.
    DensityComparison {
        lorentzian: SpectralDensity,
        gap: SpectralDensity,
        deltas: Vec<f64>,
    },
}

fn reference_gap() -> SpectralDensity {
    SpectralDensity::from_half_widths(1.1, 0.1, 10.0, 1.0, 0.0)
}

fn reference_lorentzian() -> SpectralDensity {
    SpectralDensity::one_lorentzian(20.0, 0.0)
}

fn gamma2_fine_grid() -> Vec<f64> {
    (0..33).map(|k| 1.0 + 0.25 * k as f64).collect()
}

fn delta_grid() -> Vec<f64> {
    (0..=40).map(|k| 0.25 * k as f64).collect()
}

/// Look up a preset by name; see the module docs for the list.
pub fn preset(name: &str) -> Result<Preset, ExperimentsError> {
    let p = match name {
        "fig1a" => Preset::ConcurrenceSweep(SweepSpec {
            base: Scenario::new("fig1a", reference_gap(), 0.0),
            axis: SweepAxis::Gamma2Half,
            values: vec![1.0, 2.0, 9.0],
        }),
        "fig1b" => Preset::ConcurrenceSweep(SweepSpec {
            base: Scenario::new("fig1b", reference_gap(), 10.0),
            axis: SweepAxis::Gamma2Half,
            values: vec![1.0, 2.0, 9.0],
        }),
        "fig2a" => Preset::DensitySweep(SweepSpec {
            base: Scenario::new("fig2a", reference_gap(), 0.0),
            axis: SweepAxis::Gamma2Half,
            values: gamma2_fine_grid(),
        }),
        "fig2b" => Preset::DensitySweep(SweepSpec {
            base: Scenario::new("fig2b", reference_gap(), 10.0),
            axis: SweepAxis::Gamma2Half,
            values: gamma2_fine_grid(),
        }),
        "fig3" => Preset::Scenarios(vec![
            Scenario::new(
                "fig3_strong",
                SpectralDensity::from_half_widths(1.1, 0.1, 11.0, 1.0, 0.0),
                0.0,
            ),
            Scenario::new(
                "fig3_intermediate",
                SpectralDensity::from_half_widths(1.1, 0.1, 1.1, 0.1, 0.0),
                0.0,
            ),
            Scenario::new(
                "fig3_weak",
                SpectralDensity::from_half_widths(1.1, 0.1, 0.11, 0.01, 0.0),
                0.0,
            ),
        ]),
        "fig4" => Preset::ConcurrenceSweep(SweepSpec {
            base: Scenario::new("fig4", reference_lorentzian(), 0.0),
            axis: SweepAxis::DeltaAbs,
            values: delta_grid(),
        }),
        "fig5" => Preset::ConcurrenceSweep(SweepSpec {
            base: Scenario::new("fig5", reference_gap(), 0.0),
            axis: SweepAxis::DeltaAbs,
            values: delta_grid(),
        }),
        "fig6" => Preset::DensityComparison {
            lorentzian: reference_lorentzian(),
            gap: reference_gap(),
            deltas: (0..=200).map(|k| 0.05 * k as f64).collect(),
        },
        _ => {
            return Err(ExperimentsError::UnknownPreset {
                name: name.to_string(),
            })
        }
    };
    Ok(p)
}

/// Concurrence vs time for one scenario, as `(t, C)` rows.
pub fn run_concurrence(s: &Scenario) -> Result<Vec<(f64, f64)>, ExperimentsError> {
    s.validate()?;
    let traj = propagate_eigen(&s.system_params(), &s.times())?;
    let series = concurrence_series(&traj, &s.init);
    Ok(traj.times.into_iter().zip(series).collect())
}

/// Deterministic fork-join over scenarios: results come back in input
/// order no matter how many workers ran.
pub(crate) fn parallel_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Result<Vec<R>, ExperimentsError>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Result<R, ExperimentsError> + Sync,
{
    let jobs = jobs.clamp(1, items.len().max(1));
    if jobs == 1 {
        return items.iter().map(f).collect();
    }
    let mut slots: Vec<Option<Result<R, ExperimentsError>>> =
        (0..items.len()).map(|_| None).collect();
    let chunk = items.len().div_ceil(jobs);
    thread::scope(|scope| {
        for (item_chunk, slot_chunk) in items.chunks(chunk).zip(slots.chunks_mut(chunk)) {
            scope.spawn(|| {
                for (item, slot) in item_chunk.iter().zip(slot_chunk.iter_mut()) {
                    *slot = Some(f(item));
                }
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.expect("every slot visited"))
        .collect()
}

/// Concurrence surface over a sweep, long format `(axis_value, t, C)`,
/// ordered by axis value then time. `jobs` workers at most; output does not
/// depend on the worker count.
pub fn run_surface(
    sweep: &SweepSpec,
    jobs: usize,
) -> Result<Vec<(f64, f64, f64)>, ExperimentsError> {
    sweep.validate()?;
    let scenarios = sweep.scenarios();
    let per_scenario = parallel_map(&scenarios, jobs, run_concurrence)?;
    let mut rows = Vec::new();
    for (value, series) in sweep.values.iter().zip(per_scenario) {
        for (t, c) in series {
            rows.push((*value, t, c));
        }
    }
    Ok(rows)
}

/// Density at the qubit frequency for each sweep member,
/// `(axis_value, density)`.
pub fn run_density_sweep(sweep: &SweepSpec) -> Result<Vec<(f64, f64)>, ExperimentsError> {
    sweep.validate()?;
    let mut rows = Vec::new();
    for (value, s) in sweep.values.iter().zip(sweep.scenarios()) {
        rows.push((*value, s.sd.density_at_detuning(s.delta)));
    }
    Ok(rows)
}

/// Two spectral profiles on a shared detuning grid,
/// `(delta, density_lorentzian, density_gap)`.
pub fn run_density_profile(
    lorentzian: &SpectralDensity,
    gap: &SpectralDensity,
    deltas: &[f64],
) -> Vec<(f64, f64, f64)> {
    deltas
        .iter()
        .map(|&d| {
            (
                d,
                lorentzian.density_at_detuning(d),
                gap.density_at_detuning(d),
            )
        })
        .collect()
}

/// One named qualitative relation, with a human-readable account either way.
#[derive(Debug, Clone, PartialEq)]
pub struct OrderingCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct OrderingReport {
    pub checks: Vec<OrderingCheck>,
}

impl OrderingReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn fmt_axis(values: &[(f64, Option<f64>)]) -> String {
    values
        .iter()
        .map(|(v, o)| match o {
            Some(t) => format!("t({v}) = {t:.6}"),
            None => format!("t({v}) = none"),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Strictly ordered finite onsets along an axis. `decreasing` states the
/// expected direction of the onset as the axis grows.
pub fn assess_onset_ordering(
    name: &'static str,
    onsets: &[(f64, Option<f64>)],
    decreasing: bool,
) -> OrderingCheck {
    for (v, o) in onsets {
        if o.is_none() {
            return OrderingCheck {
                name,
                passed: false,
                detail: format!("no onset within the horizon at axis value {v}"),
            };
        }
    }
    for w in onsets.windows(2) {
        let (v0, t0) = (w[0].0, w[0].1.unwrap());
        let (v1, t1) = (w[1].0, w[1].1.unwrap());
        let ok = if decreasing { t1 < t0 } else { t1 > t0 };
        if !ok {
            return OrderingCheck {
                name,
                passed: false,
                detail: format!(
                    "expected t({v1}) {} t({v0}) but got {t1:.6} vs {t0:.6}",
                    if decreasing { "<" } else { ">" }
                ),
            };
        }
    }
    OrderingCheck {
        name,
        passed: true,
        detail: fmt_axis(onsets),
    }
}

/// Strict monotonicity of `(x, y)` samples in the stated direction.
pub fn assess_monotone(
    name: &'static str,
    samples: &[(f64, f64)],
    increasing: bool,
) -> OrderingCheck {
    for w in samples.windows(2) {
        let ok = if increasing {
            w[1].1 > w[0].1
        } else {
            w[1].1 < w[0].1
        };
        if !ok {
            return OrderingCheck {
                name,
                passed: false,
                detail: format!(
                    "not strictly {} between x = {} (y = {:.6}) and x = {} (y = {:.6})",
                    if increasing { "increasing" } else { "decreasing" },
                    w[0].0,
                    w[0].1,
                    w[1].0,
                    w[1].1
                ),
            };
        }
    }
    OrderingCheck {
        name,
        passed: true,
        detail: format!(
            "strictly {} over {} samples from x = {} to x = {}",
            if increasing { "increasing" } else { "decreasing" },
            samples.len(),
            samples.first().map(|s| s.0).unwrap_or(f64::NAN),
            samples.last().map(|s| s.0).unwrap_or(f64::NAN)
        ),
    }
}

/// Finite onsets that never decrease along the axis.
pub fn assess_nondecreasing_onsets(
    name: &'static str,
    onsets: &[(f64, Option<f64>)],
) -> OrderingCheck {
    for (v, o) in onsets {
        if o.is_none() {
            return OrderingCheck {
                name,
                passed: false,
                detail: format!("no onset within the horizon at axis value {v}"),
            };
        }
    }
    for w in onsets.windows(2) {
        let (v0, t0) = (w[0].0, w[0].1.unwrap());
        let (v1, t1) = (w[1].0, w[1].1.unwrap());
        if t1 < t0 {
            return OrderingCheck {
                name,
                passed: false,
                detail: format!("onset decreases from t({v0}) = {t0:.6} to t({v1}) = {t1:.6}"),
            };
        }
    }
    OrderingCheck {
        name,
        passed: true,
        detail: format!(
            "onset grows from {:.6} to {:.6} over {} detunings",
            onsets.first().and_then(|o| o.1).unwrap_or(f64::NAN),
            onsets.last().and_then(|o| o.1).unwrap_or(f64::NAN),
            onsets.len()
        ),
    }
}

/// Finite onsets with exactly one interior minimum, located inside
/// `bracket`: strictly decreasing before it, strictly increasing after.
pub fn assess_single_minimum(
    name: &'static str,
    onsets: &[(f64, Option<f64>)],
    bracket: (f64, f64),
) -> OrderingCheck {
    for (v, o) in onsets {
        if o.is_none() {
            return OrderingCheck {
                name,
                passed: false,
                detail: format!("no onset within the horizon at axis value {v}"),
            };
        }
    }
    let times: Vec<f64> = onsets.iter().map(|(_, o)| o.unwrap()).collect();
    let mut k = 0;
    for (i, t) in times.iter().enumerate() {
        if *t < times[k] {
            k = i;
        }
    }
    if k == 0 || k + 1 == times.len() {
        return OrderingCheck {
            name,
            passed: false,
            detail: format!("minimum sits at the boundary axis value {}", onsets[k].0),
        };
    }
    for i in 0..k {
        if !(times[i + 1] < times[i]) {
            return OrderingCheck {
                name,
                passed: false,
                detail: format!(
                    "not strictly decreasing before the minimum: t({}) = {:.6} vs t({}) = {:.6}",
                    onsets[i].0,
                    times[i],
                    onsets[i + 1].0,
                    times[i + 1]
                ),
            };
        }
    }
    for i in k..times.len() - 1 {
        if !(times[i + 1] > times[i]) {
            return OrderingCheck {
                name,
                passed: false,
                detail: format!(
                    "not strictly increasing after the minimum: t({}) = {:.6} vs t({}) = {:.6}",
                    onsets[i].0,
                    times[i],
                    onsets[i + 1].0,
                    times[i + 1]
                ),
            };
        }
    }
    let at = onsets[k].0;
    if !(at > bracket.0 && at < bracket.1) {
        return OrderingCheck {
            name,
            passed: false,
            detail: format!(
                "minimum at axis value {at} falls outside ({}; {})",
                bracket.0, bracket.1
            ),
        };
    }
    OrderingCheck {
        name,
        passed: true,
        detail: format!(
            "single interior minimum t = {:.6} at axis value {at}",
            times[k]
        ),
    }
}

/// The three perfect-gap coupling regimes, in the order strong,
/// intermediate, weak: trapping without death; death without revival;
/// death followed by at least one revival.
pub fn assess_regimes(name: &'static str, reports: &[(String, EsdReport)]) -> OrderingCheck {
    if reports.len() != 3 {
        return OrderingCheck {
            name,
            passed: false,
            detail: format!("expected 3 scenario reports, got {}", reports.len()),
        };
    }
    let (strong_name, strong) = &reports[0];
    if strong.onset.is_some() || strong.trapped_value.is_none() {
        return OrderingCheck {
            name,
            passed: false,
            detail: format!(
                "{strong_name} should trap entanglement; onset = {:?}; plateau = {:?}",
                strong.onset, strong.trapped_value
            ),
        };
    }
    let (mid_name, mid) = &reports[1];
    if mid.onset.is_none() || !mid.revivals.is_empty() || mid.trapped_value.is_some() {
        return OrderingCheck {
            name,
            passed: false,
            detail: format!(
                "{mid_name} should die without revival; onset = {:?}; revivals = {}",
                mid.onset,
                mid.revivals.len()
            ),
        };
    }
    let (weak_name, weak) = &reports[2];
    if weak.onset.is_none() || weak.revivals.is_empty() || weak.trapped_value.is_some() {
        return OrderingCheck {
            name,
            passed: false,
            detail: format!(
                "{weak_name} should die and revive; onset = {:?}; revivals = {}",
                weak.onset,
                weak.revivals.len()
            ),
        };
    }
    OrderingCheck {
        name,
        passed: true,
        detail: format!(
            "{strong_name} traps at C = {:.6}; {mid_name} dies at t = {:.6}; {weak_name} dies at t = {:.6} and revives {} time(s)",
            strong.trapped_value.unwrap(),
            mid.onset.unwrap(),
            weak.onset.unwrap(),
            weak.revivals.len()
        ),
    }
}

fn sweep_onsets(
    sweep: &SweepSpec,
    jobs: usize,
) -> Result<Vec<(f64, Option<f64>)>, ExperimentsError> {
    let scenarios = sweep.scenarios();
    let onsets = parallel_map(&scenarios, jobs, |s| {
        s.validate()?;
        Ok(find_esd_onset(&s.system_params(), &s.init, s.t_max)?)
    })?;
    Ok(sweep.values.iter().copied().zip(onsets).collect())
}

fn expect_concurrence_sweep(name: &str) -> Result<SweepSpec, ExperimentsError> {
    match preset(name)? {
        Preset::ConcurrenceSweep(s) => Ok(s),
        _ => unreachable!("preset {name} is a concurrence sweep"),
    }
}

fn run_one_check(name: &str, jobs: usize) -> Result<OrderingCheck, ExperimentsError> {
    match name {
        "fig1a_onset_ordering" => {
            let sweep = expect_concurrence_sweep("fig1a")?;
            let onsets = sweep_onsets(&sweep, jobs)?;
            Ok(assess_onset_ordering("fig1a_onset_ordering", &onsets, true))
        }
        "fig1b_onset_ordering" => {
            let sweep = expect_concurrence_sweep("fig1b")?;
            let onsets = sweep_onsets(&sweep, jobs)?;
            Ok(assess_onset_ordering("fig1b_onset_ordering", &onsets, false))
        }
        "fig2_density_monotonicity" => {
            let resonant = match preset("fig2a")? {
                Preset::DensitySweep(s) => run_density_sweep(&s)?,
                _ => unreachable!(),
            };
            let detuned = match preset("fig2b")? {
                Preset::DensitySweep(s) => run_density_sweep(&s)?,
                _ => unreachable!(),
            };
            let a = assess_monotone("fig2_density_monotonicity", &resonant, true);
            let b = assess_monotone("fig2_density_monotonicity", &detuned, false);
            Ok(OrderingCheck {
                name: "fig2_density_monotonicity",
                passed: a.passed && b.passed,
                detail: format!("resonant: {}; detuned: {}", a.detail, b.detail),
            })
        }
        "fig3_regimes" => {
            let scenarios = match preset("fig3")? {
                Preset::Scenarios(s) => s,
                _ => unreachable!(),
            };
            let reports = parallel_map(&scenarios, jobs, |s| {
                s.validate()?;
                let report = analyze(&s.system_params(), &s.init, s.t_max)?;
                Ok((s.name.clone(), report))
            })?;
            Ok(assess_regimes("fig3_regimes", &reports))
        }
        "fig4_onset_monotone" => {
            let sweep = expect_concurrence_sweep("fig4")?;
            let onsets = sweep_onsets(&sweep, jobs)?;
            Ok(assess_nondecreasing_onsets("fig4_onset_monotone", &onsets))
        }
        "fig5_onset_single_minimum" => {
            let sweep = expect_concurrence_sweep("fig5")?;
            let onsets = sweep_onsets(&sweep, jobs)?;
            Ok(assess_single_minimum(
                "fig5_onset_single_minimum",
                &onsets,
                (3.0, 4.0),
            ))
        }
        _ => Err(ExperimentsError::UnknownCheck {
            name: name.to_string(),
        }),
    }
}

/// Run a subset of the ordering checks by name (empty slice: empty report).
pub fn run_checks(names: &[&str], jobs: usize) -> Result<OrderingReport, ExperimentsError> {
    let mut checks = Vec::with_capacity(names.len());
    for name in names {
        checks.push(run_one_check(name, jobs)?);
    }
    Ok(OrderingReport { checks })
}

/// All six qualitative relations; see [`CHECK_NAMES`].
pub fn check_orderings(jobs: usize) -> Result<OrderingReport, ExperimentsError> {
    run_checks(&CHECK_NAMES, jobs)
}
