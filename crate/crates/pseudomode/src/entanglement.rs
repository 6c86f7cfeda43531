//! Two-qubit entanglement fed by the single-qubit amplitude dynamics.
//!
//! Two identical qubits A and B sit in independent copies of the same
//! reservoir, prepared in `alpha|00> + beta|11>` (no excitation shared with
//! either reservoir). Because each qubit evolves independently in the
//! single-excitation sector, the joint state stays in X form. Writing
//! `p(t) = |c1(t)|^2` for the single-qubit excited population, the reduced
//! two-qubit density matrix in the product basis `{|00>, |01>, |10>, |11>}`
//! (0 = ground, 1 = excited) is
//!
//! ```text
//! diag( alpha^2 + beta^2 (1-p)^2,  beta^2 p(1-p),  beta^2 p(1-p),  beta^2 p^2 )
//! rho[0][3] = alpha beta c1^2      (single coherence pair)
//! ```
//!
//! Its concurrence collapses to the closed form
//!
//! ```text
//! C(p) = 2 max{0, alpha beta p - beta^2 p (1 - p)}
//! ```
//!
//! positive exactly when `p > 1 - alpha/beta`. For `alpha < beta` that
//! threshold is positive, so the decaying `p` hits it at a finite time: the
//! concurrence vanishes abruptly (entanglement sudden death) even though
//! every matrix element is still smoothly nonzero. Band-gap reservoirs make
//! the story richer: revivals when memory feeds excitation back, and a
//! trapped plateau when a perfect gap freezes part of `p`.
//!
//! [`concurrence_wootters`] evaluates the general X-form closed expression
//! (both coherence pairs) and is cross-checked in the tests against an
//! eigenvalue-route oracle; [`concurrence_closed_form`] is the one-line
//! special case above. Keeping both routes separate is the point: they
//! validate each other.

use thiserror::Error;

use crate::dynamics::{
    default_grid, AmplitudeEvaluator, DynamicsError, SystemParams, Trajectory,
};
use crate::linalg::{self, C64, Mat4};

/// Concurrence below this counts as dead when delimiting revival windows.
pub const REVIVAL_THRESHOLD: f64 = 1e-12;

/// Amplitudes may overshoot `|c1| = 1` by at most this before construction
/// fails instead of clamping.
pub const AMPLITUDE_SLACK: f64 = 1e-9;

/// Absolute time tolerance of onset and revival-edge bisection.
pub const TIME_TOLERANCE: f64 = 1e-10;

/// Tail variation (relative) below which the late concurrence counts as a
/// trapped plateau.
pub const PLATEAU_TOLERANCE: f64 = 1e-4;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntanglementError {
    #[error("alpha = {alpha} and beta = {beta} must be finite and non-negative")]
    InvalidAmplitudes { alpha: f64, beta: f64 },
    #[error("alpha^2 + beta^2 = {sum} must equal 1 within 1e-12")]
    NotNormalized { sum: f64 },
    #[error("|c1| = {abs_c1} exceeds 1 by more than the {AMPLITUDE_SLACK:e} slack")]
    AmplitudeOutOfRange { abs_c1: f64 },
    #[error("matrix is not X-form: entry ({row}, {col}) has magnitude {magnitude:e}")]
    NotXForm {
        row: usize,
        col: usize,
        magnitude: f64,
    },
    #[error("not a two-qubit state: {reason}")]
    InvalidState { reason: String },
}

/// Initial `alpha|00> + beta|11>` preparation, validated on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitPairInit {
    alpha: f64,
    beta: f64,
}

impl QubitPairInit {
    pub fn new(alpha: f64, beta: f64) -> Result<Self, EntanglementError> {
        if !(alpha.is_finite() && beta.is_finite()) || alpha < 0.0 || beta < 0.0 {
            return Err(EntanglementError::InvalidAmplitudes { alpha, beta });
        }
        let sum = alpha * alpha + beta * beta;
        if (sum - 1.0).abs() > 1e-12 {
            return Err(EntanglementError::NotNormalized { sum });
        }
        Ok(QubitPairInit { alpha, beta })
    }

    /// Fill in `beta = sqrt(1 - alpha^2)`.
    pub fn from_alpha(alpha: f64) -> Result<Self, EntanglementError> {
        if !alpha.is_finite() || !(0.0..=1.0).contains(&alpha) {
            return Err(EntanglementError::InvalidAmplitudes { alpha, beta: f64::NAN });
        }
        Ok(QubitPairInit {
            alpha,
            beta: (1.0 - alpha * alpha).sqrt(),
        })
    }

    /// The reference preparation `alpha = 1/2`, `beta = sqrt(3)/2`.
    pub fn reference() -> Self {
        QubitPairInit {
            alpha: 0.5,
            beta: 0.75f64.sqrt(),
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Population threshold below which the concurrence is zero:
    /// `Some(1 - alpha/beta)` when `0 < alpha < beta`. `None` otherwise:
    /// for `alpha >= beta > 0` the concurrence stays positive at all finite
    /// times, and a vanishing `alpha` or `beta` never entangles at all.
    pub fn esd_threshold(&self) -> Option<f64> {
        if self.alpha > 0.0 && self.alpha < self.beta {
            Some(1.0 - self.alpha / self.beta)
        } else {
            None
        }
    }
}

/// Two-qubit density matrix in the product basis `{|00>,|01>,|10>,|11>}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitDensity {
    m: Mat4,
}

impl TwoQubitDensity {
    pub fn from_matrix(m: Mat4) -> Result<Self, EntanglementError> {
        let mut herm = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                herm = herm.max((m[i][j] - m[j][i].conj()).norm());
            }
        }
        if herm > 1e-12 {
            return Err(EntanglementError::InvalidState {
                reason: format!("hermiticity deviation {herm:e}"),
            });
        }
        let trace: f64 = (0..4).map(|i| m[i][i].re).sum();
        if (trace - 1.0).abs() > 1e-10 {
            return Err(EntanglementError::InvalidState {
                reason: format!("trace = {trace}"),
            });
        }
        for i in 0..4 {
            if m[i][i].re < -1e-9 {
                return Err(EntanglementError::InvalidState {
                    reason: format!("negative population {} at index {i}", m[i][i].re),
                });
            }
        }
        Ok(TwoQubitDensity { m })
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    pub fn trace(&self) -> f64 {
        (0..4).map(|i| self.m[i][i].re).sum()
    }
}

/// Assemble the X-form two-qubit state from the single-qubit amplitude.
///
/// `|c1|` may exceed 1 by at most [`AMPLITUDE_SLACK`] (roundoff from the
/// propagators); such values are clamped back to the unit circle with their
/// phase kept.
pub fn build_rho_ab(c1: C64, init: &QubitPairInit) -> Result<TwoQubitDensity, EntanglementError> {
    let abs_c1 = c1.norm();
    let c1 = if abs_c1 > 1.0 {
        if abs_c1 > 1.0 + AMPLITUDE_SLACK {
            return Err(EntanglementError::AmplitudeOutOfRange { abs_c1 });
        }
        c1 / abs_c1
    } else {
        c1
    };

    let alpha = init.alpha;
    let beta = init.beta;
    let p = c1.norm_sqr();
    let q = 1.0 - p;

    let mut m = linalg::mat4_zero();
    m[0][0] = C64::new(alpha * alpha + beta * beta * q * q, 0.0);
    m[1][1] = C64::new(beta * beta * p * q, 0.0);
    m[2][2] = C64::new(beta * beta * p * q, 0.0);
    m[3][3] = C64::new(beta * beta * p * p, 0.0);
    let coherence = alpha * beta * c1 * c1;
    m[0][3] = coherence;
    m[3][0] = coherence.conj();
    Ok(TwoQubitDensity { m })
}

/// Concurrence of the decayed `alpha|00> + beta|11>` preparation as a
/// function of the excited population `p = |c1|^2` (clamped to `[0, 1]`).
pub fn concurrence_closed_form(abs2_c1: f64, init: &QubitPairInit) -> f64 {
    let p = abs2_c1.clamp(0.0, 1.0);
    let inner = init.alpha * init.beta * p - init.beta * init.beta * p * (1.0 - p);
    (2.0 * inner).max(0.0)
}

const X_POSITIONS: [(usize, usize); 8] = [
    (0, 0),
    (1, 1),
    (2, 2),
    (3, 3),
    (0, 3),
    (3, 0),
    (1, 2),
    (2, 1),
];

/// Concurrence of an X-form state via the closed expression
/// `2 max{0, |rho_03| - sqrt(rho_11 rho_22), |rho_12| - sqrt(rho_00 rho_33)}`.
///
/// Errors when the matrix carries weight outside the X positions; the
/// expression is only valid there.
pub fn concurrence_wootters(rho: &TwoQubitDensity) -> Result<f64, EntanglementError> {
    let m = rho.matrix();
    for row in 0..4 {
        for col in 0..4 {
            if X_POSITIONS.contains(&(row, col)) {
                continue;
            }
            let magnitude = m[row][col].norm();
            if magnitude > 1e-12 {
                return Err(EntanglementError::NotXForm {
                    row,
                    col,
                    magnitude,
                });
            }
        }
    }
    // Populations may sit a hair below zero (construction tolerance); the
    // products are clamped so the square roots stay real.
    let d0 = m[0][0].re.max(0.0);
    let d1 = m[1][1].re.max(0.0);
    let d2 = m[2][2].re.max(0.0);
    let d3 = m[3][3].re.max(0.0);
    let branch_outer = m[0][3].norm() - (d1 * d2).sqrt();
    let branch_inner = m[1][2].norm() - (d0 * d3).sqrt();
    Ok((2.0 * branch_outer.max(branch_inner)).max(0.0))
}

/// Concurrence along an amplitude trajectory (closed form at each point).
pub fn concurrence_series(traj: &Trajectory, init: &QubitPairInit) -> Vec<f64> {
    traj.states
        .iter()
        .map(|s| concurrence_closed_form(s.c1.norm_sqr(), init))
        .collect()
}

/// ESD onset, revival windows and trapped plateau over `[0, t_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct EsdReport {
    /// First time the concurrence hits zero; `None` when it never dies
    /// (trapping, or `alpha >= beta`).
    pub onset: Option<f64>,
    /// Maximal intervals after the onset where the concurrence exceeds
    /// [`REVIVAL_THRESHOLD`], ordered and disjoint.
    pub revivals: Vec<(f64, f64)>,
    /// Late-time plateau value when the tail (`t >= 0.8 t_max`) is flat to
    /// [`PLATEAU_TOLERANCE`] relative variation and positive.
    pub trapped_value: Option<f64>,
}

fn bisect_crossing<F>(mut above: f64, mut below: f64, is_above: F) -> Result<f64, DynamicsError>
where
    F: Fn(f64) -> Result<bool, DynamicsError>,
{
    // `above` and `below` bracket a sign change; keep the invariant names
    // honest while narrowing to TIME_TOLERANCE.
    while (below - above).abs() > TIME_TOLERANCE {
        let mid = 0.5 * (above + below);
        if is_above(mid)? {
            above = mid;
        } else {
            below = mid;
        }
    }
    Ok(below)
}

/// First time `|c1|^2` drops to the ESD threshold, located on the dense
/// default grid and refined by bisection. `Ok(None)` when the threshold is
/// never reached within `[0, t_max]` or no finite threshold exists.
pub fn find_esd_onset(
    p: &SystemParams,
    init: &QubitPairInit,
    t_max: f64,
) -> Result<Option<f64>, DynamicsError> {
    let evaluator = AmplitudeEvaluator::new(p)?;
    onset_with(&evaluator, init, &default_grid_checked(t_max)?)
}

fn default_grid_checked(t_max: f64) -> Result<Vec<f64>, DynamicsError> {
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(DynamicsError::InvalidGrid);
    }
    Ok(default_grid(t_max))
}

fn onset_with(
    evaluator: &AmplitudeEvaluator,
    init: &QubitPairInit,
    times: &[f64],
) -> Result<Option<f64>, DynamicsError> {
    let Some(threshold) = init.esd_threshold() else {
        return Ok(None);
    };
    let traj = evaluator.trajectory(times)?;
    let pops = traj.abs2_c1();
    for i in 1..times.len() {
        if pops[i] <= threshold && pops[i - 1] > threshold {
            let t = bisect_crossing(times[i - 1], times[i], |t| {
                Ok(evaluator.abs2_c1_at(t)? > threshold)
            })?;
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Full qualitative analysis of one scenario: onset, revivals, trapping.
pub fn analyze(
    p: &SystemParams,
    init: &QubitPairInit,
    t_max: f64,
) -> Result<EsdReport, DynamicsError> {
    let times = default_grid_checked(t_max)?;
    let evaluator = AmplitudeEvaluator::new(p)?;
    let traj = evaluator.trajectory(&times)?;
    let series = concurrence_series(&traj, init);

    let onset = onset_with(&evaluator, init, &times)?;

    let concurrence_at = |t: f64| -> Result<f64, DynamicsError> {
        Ok(concurrence_closed_form(evaluator.abs2_c1_at(t)?, init))
    };

    let mut revivals = Vec::new();
    if let Some(onset_t) = onset {
        let mut i = times.iter().position(|&t| t > onset_t).unwrap_or(times.len());
        // Skip the grid points still inside the pre-onset positive stretch;
        // from here every positive run is a revival.
        while i < times.len() {
            if series[i] <= REVIVAL_THRESHOLD {
                i += 1;
                continue;
            }
            let start = if i == 0 {
                times[0]
            } else {
                let lo = times[i - 1].max(onset_t);
                bisect_crossing(lo, times[i], |t| Ok(concurrence_at(t)? <= REVIVAL_THRESHOLD))?
            };
            let mut j = i;
            while j + 1 < times.len() && series[j + 1] > REVIVAL_THRESHOLD {
                j += 1;
            }
            let end = if j + 1 == times.len() {
                times[j]
            } else {
                bisect_crossing(times[j], times[j + 1], |t| {
                    Ok(concurrence_at(t)? > REVIVAL_THRESHOLD)
                })?
            };
            revivals.push((start, end));
            i = j + 1;
        }
    }

    let tail_start = 0.8 * t_max;
    let tail: Vec<f64> = times
        .iter()
        .zip(&series)
        .filter(|(t, _)| **t >= tail_start)
        .map(|(_, c)| *c)
        .collect();
    let trapped_value = if tail.is_empty() {
        None
    } else {
        let mean = tail.iter().sum::<f64>() / tail.len() as f64;
        let spread = tail.iter().fold(0.0f64, |a, c| a.max(*c))
            - tail.iter().fold(f64::INFINITY, |a, c| a.min(*c));
        if mean > REVIVAL_THRESHOLD && spread <= PLATEAU_TOLERANCE * mean {
            Some(mean)
        } else {
            None
        }
    };

    Ok(EsdReport {
        onset,
        revivals,
        trapped_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::propagate_eigen;
    use crate::spectral::SpectralDensity;

    fn reference_gap() -> SpectralDensity {
        SpectralDensity::from_half_widths(1.1, 0.1, 10.0, 1.0, 0.0)
    }

    fn perfect_gap(scale: f64) -> SpectralDensity {
        SpectralDensity::from_half_widths(1.1, 0.1, 11.0 * scale, scale, 0.0)
    }

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!(
            (a - b).abs() <= tol,
            "{what}: {a} vs {b} (diff {:.3e})",
            (a - b).abs()
        );
    }

    struct Lcg(u64);

    impl Lcg {
        fn next_f64(&mut self) -> f64 {
            self.0 = self
                .0
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            (self.0 >> 11) as f64 / (1u64 << 53) as f64
        }
    }

    #[test]
    fn init_validation() {
        assert!(QubitPairInit::new(0.5, 0.75f64.sqrt()).is_ok());
        assert!(matches!(
            QubitPairInit::new(0.5, 0.5),
            Err(EntanglementError::NotNormalized { .. })
        ));
        assert!(matches!(
            QubitPairInit::new(-0.5, 0.75f64.sqrt()),
            Err(EntanglementError::InvalidAmplitudes { .. })
        ));
        let auto = QubitPairInit::from_alpha(0.3).unwrap();
        assert_close(
            auto.alpha() * auto.alpha() + auto.beta() * auto.beta(),
            1.0,
            1e-15,
            "auto-normalized",
        );
    }

    #[test]
    fn esd_threshold_matches_hand_value() {
        let init = QubitPairInit::reference();
        assert_close(
            init.esd_threshold().unwrap(),
            0.42264973081037416,
            1e-15,
            "threshold",
        );
        // alpha >= beta keeps concurrence positive: no threshold.
        let balanced = QubitPairInit::new(0.5f64.sqrt(), 0.5f64.sqrt()).unwrap();
        assert_eq!(balanced.esd_threshold(), None);
        let heavy = QubitPairInit::from_alpha(0.9).unwrap();
        assert_eq!(heavy.esd_threshold(), None);
        // Product states never entangle: no threshold either.
        assert_eq!(QubitPairInit::from_alpha(0.0).unwrap().esd_threshold(), None);
        assert_eq!(QubitPairInit::from_alpha(1.0).unwrap().esd_threshold(), None);
    }

    #[test]
    fn rho_ab_matches_hand_built_entries() {
        let init = QubitPairInit::reference();
        let c1 = C64::new(0.6, 0.0);
        let rho = build_rho_ab(c1, &init).unwrap();
        let m = rho.matrix();
        let p = 0.36;
        let q = 0.64;
        assert_close(m[0][0].re, 0.25 + 0.75 * q * q, 1e-15, "rho_00");
        assert_close(m[1][1].re, 0.75 * p * q, 1e-15, "rho_11");
        assert_close(m[2][2].re, 0.75 * p * q, 1e-15, "rho_22");
        assert_close(m[3][3].re, 0.75 * p * p, 1e-15, "rho_33");
        let coherence = 0.5 * 0.75f64.sqrt() * 0.36;
        assert_close(m[0][3].re, coherence, 1e-15, "coherence");
        assert_close(m[0][3].im, 0.0, 1e-15, "coherence phase");
    }

    #[test]
    fn rho_ab_carries_the_amplitude_phase() {
        let init = QubitPairInit::reference();
        let c1 = C64::from_polar(0.8, 0.9);
        let rho = build_rho_ab(c1, &init).unwrap();
        let expect = 0.5 * 0.75f64.sqrt() * c1 * c1;
        assert!((rho.matrix()[0][3] - expect).norm() < 1e-15);
        assert!((rho.matrix()[3][0] - expect.conj()).norm() < 1e-15);
    }

    #[test]
    fn rho_ab_trace_is_one_for_many_populations() {
        let init = QubitPairInit::reference();
        let mut rng = Lcg(42);
        for _ in 0..1000 {
            let r = rng.next_f64();
            let phase = rng.next_f64() * std::f64::consts::TAU;
            let rho = build_rho_ab(C64::from_polar(r, phase), &init).unwrap();
            assert!(
                (rho.trace() - 1.0).abs() <= 1e-12,
                "trace off by {:e} at |c1| = {r}",
                (rho.trace() - 1.0).abs()
            );
        }
    }

    #[test]
    fn rho_ab_clamps_tiny_overshoot_and_rejects_large() {
        let init = QubitPairInit::reference();
        let slightly_over = C64::from_polar(1.0 + 5e-10, 0.3);
        let rho = build_rho_ab(slightly_over, &init).unwrap();
        assert_close(rho.matrix()[3][3].re, 0.75, 1e-12, "clamped p = 1");
        assert!((rho.trace() - 1.0).abs() <= 1e-12);
        assert!(matches!(
            build_rho_ab(C64::new(1.0 + 1e-8, 0.0), &init),
            Err(EntanglementError::AmplitudeOutOfRange { .. })
        ));
    }

    #[test]
    fn closed_form_special_values() {
        let init = QubitPairInit::reference();
        // Undecayed: C = 2 alpha beta.
        assert_close(
            concurrence_closed_form(1.0, &init),
            0.8660254037844386,
            1e-15,
            "C(1)",
        );
        // Fully decayed: separable.
        assert_eq!(concurrence_closed_form(0.0, &init), 0.0);
        // At the threshold the positive part vanishes.
        let threshold = init.esd_threshold().unwrap();
        assert!(concurrence_closed_form(threshold, &init) <= 1e-15);
    }

    #[test]
    fn closed_form_positivity_matches_threshold_characterization() {
        let init = QubitPairInit::reference();
        let threshold = init.esd_threshold().unwrap();
        let mut rng = Lcg(7);
        for _ in 0..1000 {
            let p = rng.next_f64();
            if (p - threshold).abs() < 1e-12 {
                continue;
            }
            let positive = concurrence_closed_form(p, &init) > 0.0;
            assert_eq!(positive, p > threshold, "p = {p}");
        }
    }

    #[test]
    fn wootters_known_states() {
        // Bell state (alpha = beta): maximally entangled at p = 1.
        let bell = QubitPairInit::new(0.5f64.sqrt(), 0.5f64.sqrt()).unwrap();
        let rho = build_rho_ab(C64::new(1.0, 0.0), &bell).unwrap();
        assert_close(concurrence_wootters(&rho).unwrap(), 1.0, 1e-12, "Bell");

        // Fully decayed: product state.
        let rho = build_rho_ab(C64::new(0.0, 0.0), &QubitPairInit::reference()).unwrap();
        assert_eq!(concurrence_wootters(&rho).unwrap(), 0.0);
    }

    #[test]
    fn wootters_rejects_non_x_matrices() {
        let mut m = linalg::mat4_zero();
        for i in 0..4 {
            m[i][i] = C64::new(0.25, 0.0);
        }
        m[0][1] = C64::new(0.05, 0.0);
        m[1][0] = C64::new(0.05, 0.0);
        let rho = TwoQubitDensity::from_matrix(m).unwrap();
        assert!(matches!(
            concurrence_wootters(&rho),
            Err(EntanglementError::NotXForm { row: 0, col: 1, .. })
        ));
    }

    #[test]
    fn wootters_agrees_with_closed_form_on_random_draws() {
        let init_pool = [
            QubitPairInit::reference(),
            QubitPairInit::from_alpha(0.2).unwrap(),
            QubitPairInit::from_alpha(0.7).unwrap(),
        ];
        let mut rng = Lcg(20260815);
        let mut worst = 0.0f64;
        for k in 0..10_000 {
            let init = init_pool[k % init_pool.len()];
            let r = rng.next_f64();
            let phase = rng.next_f64() * std::f64::consts::TAU;
            let c1 = C64::from_polar(r, phase);
            let rho = build_rho_ab(c1, &init).unwrap();
            let via_matrix = concurrence_wootters(&rho).unwrap();
            let via_population = concurrence_closed_form(r * r, &init);
            worst = worst.max((via_matrix - via_population).abs());
        }
        assert!(worst <= 1e-10, "worst deviation {worst:.3e}");
    }

    /// Eigenvalue-route oracle: concurrence from the spectrum of
    /// rho * (sy x sy) rho^* (sy x sy), which the X structure reduces to two
    /// quadratic eigenproblems. Independent of the closed expression.
    fn concurrence_eigenroute(rho: &TwoQubitDensity) -> f64 {
        let m = rho.matrix();
        let mut flip = linalg::mat4_zero();
        flip[0][3] = C64::new(-1.0, 0.0);
        flip[1][2] = C64::new(1.0, 0.0);
        flip[2][1] = C64::new(1.0, 0.0);
        flip[3][0] = C64::new(-1.0, 0.0);
        let mut conj = linalg::mat4_zero();
        for i in 0..4 {
            for j in 0..4 {
                conj[i][j] = m[i][j].conj();
            }
        }
        let tilde = linalg::mat4_mul(&flip, &linalg::mat4_mul(&conj, &flip));
        let r = linalg::mat4_mul(m, &tilde);

        // R is block diagonal on {0,3} and {1,2} for X input.
        let blocks = [
            [r[0][0], r[0][3], r[3][0], r[3][3]],
            [r[1][1], r[1][2], r[2][1], r[2][2]],
        ];
        let mut sqrt_eigs = Vec::with_capacity(4);
        for b in blocks {
            let tr = b[0] + b[3];
            let det = b[0] * b[3] - b[1] * b[2];
            let disc = (tr * tr - 4.0 * det).sqrt();
            for lambda in [(tr + disc) / 2.0, (tr - disc) / 2.0] {
                sqrt_eigs.push(lambda.re.max(0.0).sqrt());
            }
        }
        sqrt_eigs.sort_by(|a, b| b.total_cmp(a));
        (sqrt_eigs[0] - sqrt_eigs[1] - sqrt_eigs[2] - sqrt_eigs[3]).max(0.0)
    }

    #[test]
    fn wootters_agrees_with_eigenvalue_route_on_general_x_states() {
        let mut rng = Lcg(77);
        let mut worst = 0.0f64;
        for _ in 0..2000 {
            // Random positive X state: diagonal simplex plus admissible
            // coherences on both antidiagonal pairs.
            let mut d = [0.0f64; 4];
            let mut sum = 0.0;
            for v in d.iter_mut() {
                *v = rng.next_f64() + 1e-6;
                sum += *v;
            }
            for v in d.iter_mut() {
                *v /= sum;
            }
            let z = C64::from_polar(
                rng.next_f64() * (d[0] * d[3]).sqrt(),
                rng.next_f64() * std::f64::consts::TAU,
            );
            let w = C64::from_polar(
                rng.next_f64() * (d[1] * d[2]).sqrt(),
                rng.next_f64() * std::f64::consts::TAU,
            );
            let mut m = linalg::mat4_zero();
            for i in 0..4 {
                m[i][i] = C64::new(d[i], 0.0);
            }
            m[0][3] = z;
            m[3][0] = z.conj();
            m[1][2] = w;
            m[2][1] = w.conj();
            let rho = TwoQubitDensity::from_matrix(m).unwrap();
            let closed = concurrence_wootters(&rho).unwrap();
            let eigen = concurrence_eigenroute(&rho);
            worst = worst.max((closed - eigen).abs());
        }
        assert!(worst <= 1e-10, "worst deviation {worst:.3e}");
    }

    #[test]
    fn series_is_constant_without_coupling() {
        let p = SystemParams::for_density(&reference_gap(), 0.0, 0.0);
        let traj = propagate_eigen(&p, &default_grid(30.0)).unwrap();
        let series = concurrence_series(&traj, &QubitPairInit::reference());
        for c in &series {
            assert_close(*c, 0.8660254037844386, 1e-12, "C with rabi = 0");
        }
    }

    #[test]
    fn onset_anchors_for_resonant_sweep() {
        // gamma2/2 = 1, 2, 9 at delta = 0: deeper gaps hold entanglement
        // longer, so onsets decrease.
        let expected = [(1.0, 37.455764), (2.0, 7.023526), (9.0, 4.411726)];
        let init = QubitPairInit::reference();
        let mut onsets = Vec::new();
        for (g2h, anchor) in expected {
            let sd = SpectralDensity::from_half_widths(1.1, 0.1, 10.0, g2h, 0.0);
            let p = SystemParams::for_density(&sd, 0.0, 1.0);
            let onset = find_esd_onset(&p, &init, 50.0).unwrap().unwrap();
            assert_close(onset, anchor, 1e-5, "onset");
            onsets.push(onset);
        }
        assert!(onsets[0] > onsets[1] && onsets[1] > onsets[2]);
    }

    #[test]
    fn onset_anchors_for_detuned_sweep() {
        // Same sweep at delta = 10: ordering reverses.
        let expected = [(1.0, 8.017629), (2.0, 8.157387), (9.0, 8.649568)];
        let init = QubitPairInit::reference();
        let mut onsets = Vec::new();
        for (g2h, anchor) in expected {
            let sd = SpectralDensity::from_half_widths(1.1, 0.1, 10.0, g2h, 0.0);
            let p = SystemParams::for_density(&sd, 10.0, 1.0);
            let onset = find_esd_onset(&p, &init, 50.0).unwrap().unwrap();
            assert_close(onset, anchor, 1e-5, "onset");
            onsets.push(onset);
        }
        assert!(onsets[0] < onsets[1] && onsets[1] < onsets[2]);
    }

    #[test]
    fn onset_is_consistent_with_the_grid_series() {
        let init = QubitPairInit::reference();
        let p = SystemParams::for_density(&reference_gap(), 0.0, 1.0);
        let onset = find_esd_onset(&p, &init, 50.0).unwrap().unwrap();
        let times = default_grid(50.0);
        let traj = propagate_eigen(&p, &times).unwrap();
        let series = concurrence_series(&traj, &init);
        let first_zero = times
            .iter()
            .zip(&series)
            .find(|(_, c)| **c <= 0.0)
            .map(|(t, _)| *t)
            .unwrap();
        assert!(onset <= first_zero && first_zero - onset <= 0.025 + 1e-9);
    }

    #[test]
    fn onset_absent_when_alpha_dominates() {
        let init = QubitPairInit::from_alpha(0.9).unwrap();
        let p = SystemParams::for_density(&reference_gap(), 0.0, 1.0);
        assert_eq!(find_esd_onset(&p, &init, 50.0).unwrap(), None);
    }

    #[test]
    fn onset_absent_without_decay() {
        let p = SystemParams::for_density(&reference_gap(), 0.0, 0.0);
        assert_eq!(
            find_esd_onset(&p, &QubitPairInit::reference(), 50.0).unwrap(),
            None
        );
    }

    #[test]
    fn strong_coupling_perfect_gap_traps_entanglement() {
        let p = SystemParams::for_density(&perfect_gap(1.0), 0.0, 1.0);
        let report = analyze(&p, &QubitPairInit::reference(), 50.0).unwrap();
        assert_eq!(report.onset, None);
        assert!(report.revivals.is_empty());
        let plateau = report.trapped_value.expect("plateau expected");
        assert_close(plateau, 0.5263853508651177, 1e-6, "trapped value");
    }

    #[test]
    fn intermediate_coupling_dies_without_revival() {
        let p = SystemParams::for_density(&perfect_gap(0.1), 0.0, 1.0);
        let report = analyze(&p, &QubitPairInit::reference(), 50.0).unwrap();
        let onset = report.onset.expect("onset expected");
        assert_close(onset, 1.062429125269925, 1e-5, "onset");
        assert!(report.revivals.is_empty(), "revivals: {:?}", report.revivals);
        assert_eq!(report.trapped_value, None);
    }

    #[test]
    fn weak_coupling_revives_twice() {
        let p = SystemParams::for_density(&perfect_gap(0.01), 0.0, 1.0);
        let report = analyze(&p, &QubitPairInit::reference(), 50.0).unwrap();
        let onset = report.onset.expect("onset expected");
        assert_close(onset, 0.8790944712863954, 1e-5, "onset");
        assert_eq!(report.revivals.len(), 2, "revivals: {:?}", report.revivals);
        for (start, end) in &report.revivals {
            assert!(*start > onset && end > start);
        }
        for w in report.revivals.windows(2) {
            assert!(w[0].1 < w[1].0, "revival windows overlap");
        }
        assert_eq!(report.trapped_value, None);
    }
}
