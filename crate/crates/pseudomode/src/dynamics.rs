//! Single-excitation dynamics of a qubit coupled to the two pseudomodes.
//!
//! In the single-excitation sector the full non-Markovian problem reduces to
//! three complex amplitudes `x = (c1, b1, b2)`: qubit excited, lossless-side
//! pseudomode excited, lossy-side pseudomode excited. They obey
//!
//! ```text
//! i dx/dt = M x,   M = | omega0   0     rabi |
//!                      |   0      z1'    V   |
//!                      | rabi     V     z2'  |
//! ```
//!
//! with `zj' = omega_c - i*gammaj'/2` and `omega_c = omega0 + delta`. The
//! qubit exchanges excitation with the lossy pseudomode at the vacuum Rabi
//! frequency `rabi`; the coupling `V` feeds the second, possibly lossless,
//! pseudomode. The initial condition throughout is `x(0) = (1, 0, 0)`.
//!
//! `M` is constant, so the propagator of choice is the closed-form
//! eigendecomposition of a 3x3 matrix ([`propagate_eigen`]): exact at any
//! `t`, no step-size questions, and cheap enough to bisect against when
//! locating concurrence zeros. When the spectrum is too close to degenerate
//! for the eigenvector solve to be trusted (separation below 1e-8 of the
//! spectral scale), propagation falls back to the embedded Runge-Kutta
//! integrator and the trajectory records that.

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{self, C64, Mat3, C_ONE, C_ZERO};
use crate::ode::{self, OdeError};
use crate::spectral::{PseudomodeParams, SpectralDensity};

/// Grid resolution used by the canonical dense trajectories.
pub const DEFAULT_GRID_POINTS: usize = 2001;

/// Tolerance handed to the RK integrator when no explicit one is given.
pub const DEFAULT_RK_TOL: f64 = 1e-10;

/// Eigenvalue separation below this fraction of the spectral scale routes
/// propagation through the RK fallback.
pub const DEGENERACY_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    /// Gap-center detuning `omega_c - omega0` (the qubit sits below the
    /// center when positive).
    pub delta: f64,
    /// Vacuum Rabi frequency `Omega_0` coupling qubit and lossy pseudomode.
    pub rabi: f64,
    /// Pseudomode rates and coupling derived from the spectral density.
    pub pm: PseudomodeParams,
    /// Bare qubit frequency; zero selects the rotating frame and only shifts
    /// phases otherwise.
    pub omega0: f64,
}

impl SystemParams {
    pub fn new(delta: f64, rabi: f64, pm: PseudomodeParams) -> Self {
        SystemParams {
            delta,
            rabi,
            pm,
            omega0: 0.0,
        }
    }

    /// Derive the pseudomode parameters from `sd` and build system
    /// parameters in the rotating frame.
    pub fn for_density(sd: &SpectralDensity, delta: f64, rabi: f64) -> Self {
        SystemParams::new(delta, rabi, sd.pseudomode_params())
    }

    pub fn with_omega0(mut self, omega0: f64) -> Self {
        self.omega0 = omega0;
        self
    }

    pub fn omega_c(&self) -> f64 {
        self.omega0 + self.delta
    }

    pub(crate) fn validate(&self) -> Result<(), DynamicsError> {
        let fields = [
            ("delta", self.delta),
            ("rabi", self.rabi),
            ("omega0", self.omega0),
            ("gamma1_prime", self.pm.gamma1_prime),
            ("gamma2_prime", self.pm.gamma2_prime),
            ("coupling", self.pm.coupling),
        ];
        for (name, value) in fields {
            if !value.is_finite() {
                return Err(DynamicsError::InvalidParams {
                    reason: format!("{name} = {value} is not finite"),
                });
            }
        }
        if self.rabi < 0.0 {
            return Err(DynamicsError::InvalidParams {
                reason: format!("rabi = {} must be non-negative", self.rabi),
            });
        }
        Ok(())
    }

    pub(crate) fn describe(&self) -> String {
        format!(
            "delta = {}, rabi = {}, gamma1' = {}, gamma2' = {}, V = {}, omega0 = {}",
            self.delta,
            self.rabi,
            self.pm.gamma1_prime,
            self.pm.gamma2_prime,
            self.pm.coupling,
            self.omega0
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DynamicsError {
    #[error("invalid system parameters: {reason}")]
    InvalidParams { reason: String },
    #[error("integration tolerance {tol:e} outside [{:e}, {:e}]", ode::TOL_MIN, ode::TOL_MAX)]
    InvalidTolerance { tol: f64 },
    #[error("time grid must be non-empty, finite, non-negative and strictly increasing")]
    InvalidGrid,
    #[error("step size underflow at t = {t}: the system ({params}) is too stiff for the requested tolerance")]
    Stiffness { t: f64, params: String },
}

pub(crate) fn map_ode_error(err: OdeError, p: &SystemParams) -> DynamicsError {
    match err {
        OdeError::StepUnderflow { t } => DynamicsError::Stiffness {
            t,
            params: p.describe(),
        },
        OdeError::InvalidTolerance { tol } => DynamicsError::InvalidTolerance { tol },
        OdeError::InvalidGrid => DynamicsError::InvalidGrid,
    }
}

/// Amplitudes `(c1, b1, b2)` at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeState {
    pub c1: C64,
    pub b1: C64,
    pub b2: C64,
}

impl AmplitudeState {
    /// Excitation starts entirely on the qubit.
    pub const INITIAL: AmplitudeState = AmplitudeState {
        c1: C_ONE,
        b1: C_ZERO,
        b2: C_ZERO,
    };

    /// Total excitation in the tracked sector,
    /// `|c1|^2 + |b1|^2 + |b2|^2 <= 1`; the deficit is what already leaked
    /// through the pseudomode decay channels.
    pub fn excitation_norm(&self) -> f64 {
        self.c1.norm_sqr() + self.b1.norm_sqr() + self.b2.norm_sqr()
    }

    fn from_reals(y: &[f64; 6]) -> Self {
        AmplitudeState {
            c1: C64::new(y[0], y[1]),
            b1: C64::new(y[2], y[3]),
            b2: C64::new(y[4], y[5]),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropagationMethod {
    Eigen,
    /// Embedded RK pair; [`propagate_eigen`] records this when a
    /// near-degenerate spectrum forced the fallback.
    Rk,
}

/// Amplitudes on a time grid, tagged with how they were produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<AmplitudeState>,
    pub method: PropagationMethod,
}

impl Trajectory {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Qubit excited-state population `p = |c1|^2` along the grid.
    pub fn abs2_c1(&self) -> Vec<f64> {
        self.states.iter().map(|s| s.c1.norm_sqr()).collect()
    }

    pub fn excitation_norms(&self) -> Vec<f64> {
        self.states.iter().map(|s| s.excitation_norm()).collect()
    }
}

/// The non-Hermitian generator `M` of `i dx/dt = M x`.
pub fn build_generator(p: &SystemParams) -> Mat3 {
    let omega_c = p.omega_c();
    let mut m = linalg::mat3_zero();
    m[0][0] = C64::new(p.omega0, 0.0);
    m[0][2] = C64::new(p.rabi, 0.0);
    m[1][1] = C64::new(omega_c, -p.pm.gamma1_prime / 2.0);
    m[1][2] = C64::new(p.pm.coupling, 0.0);
    m[2][0] = C64::new(p.rabi, 0.0);
    m[2][1] = C64::new(p.pm.coupling, 0.0);
    m[2][2] = C64::new(omega_c, -p.pm.gamma2_prime / 2.0);
    m
}

/// Spectral form of the propagator: `x(t) = sum_k w_k e^{-i lambda_k t} v_k`
/// with `w` solving `V w = x(0)`.
pub struct EigenBasis {
    values: [C64; 3],
    vectors: [[C64; 3]; 3],
    weights: [C64; 3],
}

impl EigenBasis {
    /// `None` when the spectrum is too close to degenerate for the
    /// eigenvector solve to be trusted.
    pub fn for_params(p: &SystemParams) -> Option<EigenBasis> {
        let m = build_generator(p);
        let eig = linalg::eigen3(&m);
        let scale = eig.values.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            // All eigenvalues zero: x(t) is constant, but treat it as the
            // degenerate case and let the integrator confirm that.
            return None;
        }
        for i in 0..3 {
            for j in i + 1..3 {
                if (eig.values[i] - eig.values[j]).norm() <= DEGENERACY_THRESHOLD * scale {
                    return None;
                }
            }
        }

        let mut vmat = linalg::mat3_zero();
        for (col, vec) in eig.vectors.iter().enumerate() {
            for row in 0..3 {
                vmat[row][col] = vec[row];
            }
        }
        let weights = linalg::solve3(&vmat, &[C_ONE, C_ZERO, C_ZERO])?;
        Some(EigenBasis {
            values: eig.values,
            vectors: eig.vectors,
            weights,
        })
    }

    pub fn eigenvalues(&self) -> &[C64; 3] {
        &self.values
    }

    pub fn eigenvectors(&self) -> &[[C64; 3]; 3] {
        &self.vectors
    }

    pub fn state_at(&self, t: f64) -> AmplitudeState {
        let mut x = [C_ZERO; 3];
        for k in 0..3 {
            let phase = (-Complex64::i() * self.values[k] * t).exp();
            let wk = self.weights[k] * phase;
            for j in 0..3 {
                x[j] += wk * self.vectors[k][j];
            }
        }
        AmplitudeState {
            c1: x[0],
            b1: x[1],
            b2: x[2],
        }
    }
}

fn amplitude_rhs(m: &Mat3, y: &[f64; 6]) -> [f64; 6] {
    let x = [
        C64::new(y[0], y[1]),
        C64::new(y[2], y[3]),
        C64::new(y[4], y[5]),
    ];
    let mx = linalg::mat3_mul_vec(m, &x);
    let mut out = [0.0; 6];
    for j in 0..3 {
        let dx = -Complex64::i() * mx[j];
        out[2 * j] = dx.re;
        out[2 * j + 1] = dx.im;
    }
    out
}

pub(crate) fn validate_grid(times: &[f64]) -> Result<(), DynamicsError> {
    if times.is_empty()
        || !times.iter().all(|t| t.is_finite())
        || times[0] < 0.0
        || !times.windows(2).all(|w| w[1] > w[0])
    {
        return Err(DynamicsError::InvalidGrid);
    }
    Ok(())
}

/// Continuous-time amplitude evaluator: eigendecomposition when available,
/// fresh RK integration per query otherwise. Root finders use this to
/// evaluate between grid points without committing to a step sequence.
pub struct AmplitudeEvaluator {
    params: SystemParams,
    kind: EvaluatorKind,
}

enum EvaluatorKind {
    Eigen(EigenBasis),
    Rk { tol: f64 },
}

impl AmplitudeEvaluator {
    pub fn new(p: &SystemParams) -> Result<Self, DynamicsError> {
        p.validate()?;
        let kind = match EigenBasis::for_params(p) {
            Some(basis) => EvaluatorKind::Eigen(basis),
            None => EvaluatorKind::Rk {
                tol: DEFAULT_RK_TOL,
            },
        };
        Ok(AmplitudeEvaluator { params: *p, kind })
    }

    pub fn method(&self) -> PropagationMethod {
        match self.kind {
            EvaluatorKind::Eigen(_) => PropagationMethod::Eigen,
            EvaluatorKind::Rk { .. } => PropagationMethod::Rk,
        }
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn state_at(&self, t: f64) -> Result<AmplitudeState, DynamicsError> {
        if !(t.is_finite() && t >= 0.0) {
            return Err(DynamicsError::InvalidGrid);
        }
        match &self.kind {
            EvaluatorKind::Eigen(basis) => Ok(basis.state_at(t)),
            EvaluatorKind::Rk { tol } => {
                if t == 0.0 {
                    return Ok(AmplitudeState::INITIAL);
                }
                let m = build_generator(&self.params);
                let y0 = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
                let sol = ode::integrate(|_, y| amplitude_rhs(&m, y), 0.0, y0, &[t], *tol)
                    .map_err(|e| map_ode_error(e, &self.params))?;
                Ok(AmplitudeState::from_reals(&sol[0]))
            }
        }
    }

    /// Qubit population `|c1|^2` at `t`.
    pub fn abs2_c1_at(&self, t: f64) -> Result<f64, DynamicsError> {
        Ok(self.state_at(t)?.c1.norm_sqr())
    }

    pub fn trajectory(&self, times: &[f64]) -> Result<Trajectory, DynamicsError> {
        validate_grid(times)?;
        match &self.kind {
            EvaluatorKind::Eigen(basis) => Ok(Trajectory {
                times: times.to_vec(),
                states: times.iter().map(|&t| basis.state_at(t)).collect(),
                method: PropagationMethod::Eigen,
            }),
            EvaluatorKind::Rk { tol } => {
                let mut traj = propagate_rk(&self.params, times, *tol)?;
                traj.method = PropagationMethod::Rk;
                Ok(traj)
            }
        }
    }
}

/// Propagate by eigendecomposition, falling back to RK (and flagging the
/// trajectory) when the generator spectrum is near-degenerate.
pub fn propagate_eigen(p: &SystemParams, times: &[f64]) -> Result<Trajectory, DynamicsError> {
    AmplitudeEvaluator::new(p)?.trajectory(times)
}

/// Propagate with the embedded RK pair at tolerance `tol`.
pub fn propagate_rk(p: &SystemParams, times: &[f64], tol: f64) -> Result<Trajectory, DynamicsError> {
    p.validate()?;
    validate_grid(times)?;
    let m = build_generator(p);
    let y0 = [1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
    let sol = ode::integrate(|_, y| amplitude_rhs(&m, y), 0.0, y0, times, tol)
        .map_err(|e| map_ode_error(e, p))?;
    Ok(Trajectory {
        times: times.to_vec(),
        states: sol.iter().map(AmplitudeState::from_reals).collect(),
        method: PropagationMethod::Rk,
    })
}

/// Uniform grid of [`DEFAULT_GRID_POINTS`] points on `[0, t_max]`.
pub fn default_grid(t_max: f64) -> Vec<f64> {
    let n = DEFAULT_GRID_POINTS - 1;
    (0..DEFAULT_GRID_POINTS)
        .map(|i| t_max * i as f64 / n as f64)
        .collect()
}
