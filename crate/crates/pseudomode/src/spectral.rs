//! Band-gap spectral density and the pseudomode parameters derived from it.
//!
//! The reservoir coupling spectrum is a difference of two Lorentzians sharing
//! a center frequency `omega_c`,
//!
//! ```text
//! D(w) = W1*gamma1 / ((w - wc)^2 + (gamma1/2)^2)
//!      - W2*gamma2 / ((w - wc)^2 + (gamma2/2)^2)
//! ```
//!
//! with `W1 - W2 = 1` (unit total weight), `0 <= gamma2 < gamma1`, and
//! `W2/W1 <= gamma2/gamma1` so the subtraction never drives `D` negative.
//! `gamma1` and `gamma2` are full widths; command-line and figure parameters
//! quote half widths `gamma/2`, so construct from those with
//! [`SpectralDensity::from_half_widths`]. `W2 = 0, gamma2 = 0` degenerates to
//! the single-Lorentzian (no gap) model.
//!
//! The dip at `omega_c` supports a bound dressed state when the qubit is
//! resonant with it. Equivalently, the two Lorentzians map onto two damped
//! pseudomodes with decay rates and coherent coupling
//!
//! ```text
//! gamma1' = W1*gamma2 - W2*gamma1
//! gamma2' = W1*gamma1 - W2*gamma2
//! V       = sqrt(W1*W2) * (gamma1 - gamma2) / 2
//! ```
//!
//! A perfect gap (`D(omega_c) = 0`, equivalently `W1/gamma1 = W2/gamma2`)
//! makes `gamma1'` vanish: one pseudomode becomes lossless and the qubit can
//! trap excitation. For the reference parameters this identity holds exactly
//! in floating point, not just within rounding slack.
//!
//! Two notions of "critical detuning" coexist and do not agree:
//! [`SpectralDensity::critical_detuning_paper`] evaluates the closed form
//!
//! ```text
//! delta_c^2 = (gamma1^2*sqrt(W2*gamma2) - gamma2^2*sqrt(W1*gamma1))
//!           / (4*sqrt(W1)*(sqrt(gamma1) - sqrt(gamma2)))
//! ```
//!
//! which gives 3.5329... for the reference gap parameters, while
//! [`SpectralDensity::critical_detuning_numeric`] maximizes `D` at the qubit
//! frequency directly and lands at 3.0715... for the same parameters. Both
//! are exposed; neither is adjusted toward the other.

use thiserror::Error;

/// Relative tolerance for the perfect-gap ratio test.
pub const PERFECT_GAP_TOL: f64 = 1e-12;

const WEIGHT_SUM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralDensity {
    /// Weight of the broad (positive) Lorentzian.
    pub w1: f64,
    /// Weight of the narrow (subtracted) Lorentzian.
    pub w2: f64,
    /// Full width of the broad Lorentzian.
    pub gamma1: f64,
    /// Full width of the narrow Lorentzian.
    pub gamma2: f64,
    /// Shared center frequency of both Lorentzians.
    pub omega_c: f64,
}

/// Pseudomode decay rates and coupling equivalent to a [`SpectralDensity`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PseudomodeParams {
    /// Decay rate of the qubit-coupled pseudomode; zero for a perfect gap.
    pub gamma1_prime: f64,
    /// Decay rate of the second pseudomode.
    pub gamma2_prime: f64,
    /// Coherent coupling between the two pseudomodes.
    pub coupling: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConstraintViolation {
    NonFinite { field: &'static str, value: f64 },
    WeightSum { w1: f64, w2: f64 },
    NegativeWeight { field: &'static str, value: f64 },
    WidthOrdering { gamma1: f64, gamma2: f64 },
    GapPositivity { weight_ratio: f64, width_ratio: f64 },
}

impl std::fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConstraintViolation::NonFinite { field, value } => {
                write!(f, "{field} = {value} is not finite")
            }
            ConstraintViolation::WeightSum { w1, w2 } => {
                write!(f, "w1 - w2 = {} must equal 1 within 1e-12", w1 - w2)
            }
            ConstraintViolation::NegativeWeight { field, value } => {
                write!(f, "{field} = {value} must be non-negative")
            }
            ConstraintViolation::WidthOrdering { gamma1, gamma2 } => {
                write!(f, "widths must satisfy 0 <= gamma2 < gamma1, got gamma1 = {gamma1}, gamma2 = {gamma2}")
            }
            ConstraintViolation::GapPositivity {
                weight_ratio,
                width_ratio,
            } => {
                write!(
                    f,
                    "positivity requires w2/w1 <= gamma2/gamma1, got {weight_ratio} > {width_ratio}"
                )
            }
        }
    }
}

/// Outcome of [`SpectralDensity::validate`]; empty means valid.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationResult {
    pub violations: Vec<ConstraintViolation>,
}

impl ValidationResult {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<(), SpectralError> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(SpectralError::InvalidDensity(self))
        }
    }
}

impl std::fmt::Display for ValidationResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpectralError {
    #[error("invalid spectral density: {0}")]
    InvalidDensity(ValidationResult),
    #[error("second Lorentzian is degenerate (w2 = {w2}, gamma2 = {gamma2}): no band gap to characterize")]
    DegenerateSecondLorentzian { w2: f64, gamma2: f64 },
    #[error("no real critical detuning: closed form gives delta_c^2 = {delta_sq}")]
    NoCriticalDetuning { delta_sq: f64 },
}

impl SpectralDensity {
    pub fn new(w1: f64, w2: f64, gamma1: f64, gamma2: f64, omega_c: f64) -> Self {
        SpectralDensity {
            w1,
            w2,
            gamma1,
            gamma2,
            omega_c,
        }
    }

    /// Construct from the half widths `gamma1/2`, `gamma2/2` used in figure
    /// captions and on the command line.
    pub fn from_half_widths(
        w1: f64,
        w2: f64,
        gamma1_half: f64,
        gamma2_half: f64,
        omega_c: f64,
    ) -> Self {
        SpectralDensity::new(w1, w2, 2.0 * gamma1_half, 2.0 * gamma2_half, omega_c)
    }

    /// Single-Lorentzian model: `W1 = 1`, no subtracted component.
    pub fn one_lorentzian(gamma1: f64, omega_c: f64) -> Self {
        SpectralDensity::new(1.0, 0.0, gamma1, 0.0, omega_c)
    }

    pub fn is_one_lorentzian(&self) -> bool {
        self.w2 == 0.0
    }

    /// Collect every violated model constraint (an empty result is valid):
    /// finite fields, unit weight difference, non-negative weights, width
    /// ordering, and the positivity condition `w2/w1 <= gamma2/gamma1`.
    pub fn validate(&self) -> ValidationResult {
        let mut violations = Vec::new();
        for (field, value) in [
            ("w1", self.w1),
            ("w2", self.w2),
            ("gamma1", self.gamma1),
            ("gamma2", self.gamma2),
            ("omega_c", self.omega_c),
        ] {
            if !value.is_finite() {
                violations.push(ConstraintViolation::NonFinite { field, value });
            }
        }
        if !violations.is_empty() {
            // Remaining checks assume finite numbers.
            return ValidationResult { violations };
        }

        if ((self.w1 - self.w2) - 1.0).abs() > WEIGHT_SUM_TOL {
            violations.push(ConstraintViolation::WeightSum {
                w1: self.w1,
                w2: self.w2,
            });
        }
        if self.w2 < 0.0 {
            violations.push(ConstraintViolation::NegativeWeight {
                field: "w2",
                value: self.w2,
            });
        }
        if self.w1 <= 0.0 {
            violations.push(ConstraintViolation::NegativeWeight {
                field: "w1",
                value: self.w1,
            });
        }
        if !(self.gamma2 >= 0.0 && self.gamma2 < self.gamma1) {
            violations.push(ConstraintViolation::WidthOrdering {
                gamma1: self.gamma1,
                gamma2: self.gamma2,
            });
        } else if self.w1 > 0.0 && self.w2 > 0.0 {
            // The subtracted Lorentzian is narrower, so the worst case for
            // positivity is the shared center; the center condition is the
            // ratio test below.
            let weight_ratio = self.w2 / self.w1;
            let width_ratio = self.gamma2 / self.gamma1;
            if weight_ratio > width_ratio {
                violations.push(ConstraintViolation::GapPositivity {
                    weight_ratio,
                    width_ratio,
                });
            }
        } else if self.w2 > 0.0 && self.gamma2 == 0.0 {
            violations.push(ConstraintViolation::GapPositivity {
                weight_ratio: self.w2 / self.w1,
                width_ratio: 0.0,
            });
        }

        ValidationResult { violations }
    }

    /// Validate and return self, for construct-and-check chains.
    pub fn validated(self) -> Result<Self, SpectralError> {
        self.validate().into_result()?;
        Ok(self)
    }

    /// Evaluate `D` at angular frequency `omega`.
    pub fn density_at(&self, omega: f64) -> f64 {
        let x2 = (omega - self.omega_c) * (omega - self.omega_c);
        let mut d = self.w1 * self.gamma1 / (x2 + self.gamma1 * self.gamma1 / 4.0);
        if self.w2 != 0.0 {
            d -= self.w2 * self.gamma2 / (x2 + self.gamma2 * self.gamma2 / 4.0);
        }
        d
    }

    /// Evaluate `D` at the qubit frequency for a qubit detuned by `delta`
    /// below the gap center (`D` is even around the center, so the sign of
    /// `delta` does not matter).
    pub fn density_at_detuning(&self, delta: f64) -> f64 {
        self.density_at(self.omega_c - delta)
    }

    /// Whether the gap is perfect, i.e. `D(omega_c) = 0`, tested as
    /// `|w1/gamma1 - w2/gamma2| <= tol * max(ratio)`. Use
    /// [`PERFECT_GAP_TOL`] unless there is a reason not to.
    pub fn is_perfect_gap(&self, tol: f64) -> Result<bool, SpectralError> {
        if self.w2 == 0.0 {
            // The single-Lorentzian model has no gap at all.
            return Ok(false);
        }
        if self.gamma2 == 0.0 {
            return Err(SpectralError::DegenerateSecondLorentzian {
                w2: self.w2,
                gamma2: self.gamma2,
            });
        }
        let r1 = self.w1 / self.gamma1;
        let r2 = self.w2 / self.gamma2;
        Ok((r1 - r2).abs() <= tol * r1.max(r2))
    }

    /// Map the two Lorentzians onto two damped pseudomodes.
    pub fn pseudomode_params(&self) -> PseudomodeParams {
        PseudomodeParams {
            gamma1_prime: self.w1 * self.gamma2 - self.w2 * self.gamma1,
            gamma2_prime: self.w1 * self.gamma1 - self.w2 * self.gamma2,
            coupling: (self.w1 * self.w2).sqrt() * (self.gamma1 - self.gamma2) / 2.0,
        }
    }

    /// Critical detuning from the closed form quoted with the model.
    ///
    /// Errors when the second Lorentzian is degenerate (nothing to detune
    /// against) or when the radicand is negative so no real solution exists.
    /// See the module docs: for the reference parameters this disagrees with
    /// [`SpectralDensity::critical_detuning_numeric`].
    pub fn critical_detuning_paper(&self) -> Result<f64, SpectralError> {
        if self.w2 <= 0.0 || self.gamma2 <= 0.0 {
            return Err(SpectralError::DegenerateSecondLorentzian {
                w2: self.w2,
                gamma2: self.gamma2,
            });
        }
        let num = self.gamma1 * self.gamma1 * (self.w2 * self.gamma2).sqrt()
            - self.gamma2 * self.gamma2 * (self.w1 * self.gamma1).sqrt();
        let den = 4.0 * self.w1.sqrt() * (self.gamma1.sqrt() - self.gamma2.sqrt());
        let delta_sq = num / den;
        if delta_sq < 0.0 {
            return Err(SpectralError::NoCriticalDetuning { delta_sq });
        }
        Ok(delta_sq.sqrt())
    }

    /// Detuning that maximizes the density seen by the qubit, located by a
    /// coarse scan over `[0, 5*gamma1]` plus golden-section refinement to
    /// absolute tolerance 1e-9. Returns 0 when the maximum sits at zero
    /// detuning (single-Lorentzian model, or any density peaked at center).
    pub fn critical_detuning_numeric(&self) -> f64 {
        let hi = 5.0 * self.gamma1;
        let f = |delta: f64| self.density_at_detuning(delta);

        let n = 4000usize;
        let mut best_i = 0usize;
        let mut best = f(0.0);
        for i in 1..=n {
            let d = hi * i as f64 / n as f64;
            let v = f(d);
            if v > best {
                best = v;
                best_i = i;
            }
        }

        let lo_b = hi * best_i.saturating_sub(1) as f64 / n as f64;
        let hi_b = hi * (best_i + 1).min(n) as f64 / n as f64;
        let x = golden_max(f, lo_b, hi_b, 1e-9);
        if f(0.0) >= f(x) {
            0.0
        } else {
            x
        }
    }
}

/// Golden-section maximization of a unimodal function on `[lo, hi]`.
fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > xtol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference gap parameters (half widths 10 and 1, weights 1.1 / 0.1).
    fn reference_gap() -> SpectralDensity {
        SpectralDensity::from_half_widths(1.1, 0.1, 10.0, 1.0, 0.0)
    }

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!(
            (a - b).abs() <= tol,
            "{what}: {a} vs {b} (diff {:.3e})",
            (a - b).abs()
        );
    }

    #[test]
    fn reference_parameters_are_valid() {
        assert!(reference_gap().validate().is_valid());
        assert!(SpectralDensity::one_lorentzian(20.0, 0.0)
            .validate()
            .is_valid());
        assert!(SpectralDensity::from_half_widths(1.1, 0.1, 11.0, 1.0, 5.0)
            .validate()
            .is_valid());
    }

    #[test]
    fn weight_sum_violation_is_reported() {
        let sd = SpectralDensity::new(1.5, 0.1, 20.0, 2.0, 0.0);
        let result = sd.validate();
        assert!(!result.is_valid());
        assert!(matches!(
            result.violations[0],
            ConstraintViolation::WeightSum { .. }
        ));
        let err = sd.validated().unwrap_err();
        assert!(err.to_string().contains("must equal 1"));
    }

    #[test]
    fn width_ordering_violation_is_reported() {
        let sd = SpectralDensity::new(1.1, 0.1, 2.0, 20.0, 0.0);
        assert!(sd
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, ConstraintViolation::WidthOrdering { .. })));
        let degenerate = SpectralDensity::new(1.0, 0.0, 0.0, 0.0, 0.0);
        assert!(!degenerate.validate().is_valid());
    }

    #[test]
    fn positivity_violation_is_reported_and_density_goes_negative() {
        // w2/w1 = 0.0909... > gamma2/gamma1 = 0.05 pushes the center negative.
        let sd = SpectralDensity::new(1.1, 0.1, 20.0, 1.0, 0.0);
        assert!(sd
            .validate()
            .violations
            .iter()
            .any(|v| matches!(v, ConstraintViolation::GapPositivity { .. })));
        assert!(sd.density_at(0.0) < 0.0);
    }

    #[test]
    fn non_finite_fields_are_rejected() {
        let sd = SpectralDensity::new(f64::NAN, 0.1, 20.0, 2.0, 0.0);
        assert!(matches!(
            sd.validate().violations[0],
            ConstraintViolation::NonFinite { field: "w1", .. }
        ));
    }

    #[test]
    fn zero_gamma2_with_positive_weight_is_invalid() {
        let sd = SpectralDensity::new(1.1, 0.1, 20.0, 0.0, 0.0);
        assert!(!sd.validate().is_valid());
    }

    #[test]
    fn center_density_values_match_hand_evaluation() {
        // W1*G1/(G1/2)^2 - W2*G2/(G2/2)^2 = 0.22 - 0.2 for the reference gap.
        assert_close(reference_gap().density_at(0.0), 0.02, 1e-12, "gap center");
        // Perfect gap zeroes the center.
        let perfect = SpectralDensity::from_half_widths(1.1, 0.1, 11.0, 1.0, 0.0);
        assert!(perfect.density_at(0.0).abs() <= 1e-12);
        // Single Lorentzian: 4*W1/G1 = 0.2.
        let ol = SpectralDensity::one_lorentzian(20.0, 0.0);
        assert_close(ol.density_at(0.0), 0.2, 1e-12, "one-Lorentzian center");
    }

    #[test]
    fn density_is_even_around_center() {
        let sd = reference_gap();
        for k in 1..50 {
            let x = 0.37 * k as f64;
            assert_eq!(sd.density_at(x), sd.density_at(-x), "x = {x}");
        }
        let shifted = SpectralDensity::from_half_widths(1.1, 0.1, 10.0, 1.0, 5.3);
        for k in 1..50 {
            let x = 0.37 * k as f64;
            assert_close(
                shifted.density_at(5.3 + x),
                shifted.density_at(5.3 - x),
                1e-12,
                "shifted center",
            );
        }
    }

    #[test]
    fn density_at_detuning_matches_direct_evaluation() {
        let sd = SpectralDensity::from_half_widths(1.1, 0.1, 10.0, 1.0, 2.0);
        assert_eq!(sd.density_at_detuning(3.0), sd.density_at(-1.0));
        assert_eq!(sd.density_at_detuning(0.0), sd.density_at(2.0));
    }

    #[test]
    fn valid_densities_are_non_negative_everywhere() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..200 {
            let gamma1 = 1.0 + 29.0 * next();
            let gamma2 = gamma1 * (0.05 + 0.9 * next());
            let r = gamma2 / gamma1;
            // Solve w2/(1 + w2) <= r for the largest admissible w2.
            let w2 = next() * r / (1.0 - r);
            let sd = SpectralDensity::new(1.0 + w2, w2, gamma1, gamma2, 0.0);
            assert!(sd.validate().is_valid(), "sampled density invalid: {sd:?}");
            for i in 0..400 {
                let omega = -10.0 * gamma1 + 20.0 * gamma1 * i as f64 / 399.0;
                let d = sd.density_at(omega);
                assert!(d >= -1e-12, "D({omega}) = {d} for {sd:?}");
            }
        }
    }

    #[test]
    fn perfect_gap_classification_matches_ratio_identity() {
        let perfect = SpectralDensity::from_half_widths(1.1, 0.1, 11.0, 1.0, 0.0);
        assert!(perfect.is_perfect_gap(PERFECT_GAP_TOL).unwrap());
        let weak_perfect = SpectralDensity::from_half_widths(1.1, 0.1, 0.11, 0.01, 0.0);
        assert!(weak_perfect.is_perfect_gap(PERFECT_GAP_TOL).unwrap());
        assert!(!reference_gap().is_perfect_gap(PERFECT_GAP_TOL).unwrap());
        assert!(!SpectralDensity::one_lorentzian(20.0, 0.0)
            .is_perfect_gap(PERFECT_GAP_TOL)
            .unwrap());
        assert!(matches!(
            SpectralDensity::new(1.1, 0.1, 20.0, 0.0, 0.0).is_perfect_gap(PERFECT_GAP_TOL),
            Err(SpectralError::DegenerateSecondLorentzian { .. })
        ));
    }

    #[test]
    fn perfect_gap_makes_first_pseudomode_lossless() {
        for (g1h, g2h) in [(11.0, 1.0), (1.1, 0.1), (0.11, 0.01)] {
            let sd = SpectralDensity::from_half_widths(1.1, 0.1, g1h, g2h, 0.0);
            let pm = sd.pseudomode_params();
            // The products 1.1*gamma2 and 0.1*gamma1 round to the same f64,
            // so the cancellation is exact, not merely small.
            assert_eq!(pm.gamma1_prime, 0.0, "half widths ({g1h}, {g2h})");
        }
    }

    #[test]
    fn pseudomode_params_match_hand_derivation() {
        // gamma1' = 1.1*2 - 0.1*20, gamma2' = 1.1*20 - 0.1*2,
        // V = sqrt(0.11)*(20 - 2)/2.
        let pm = reference_gap().pseudomode_params();
        assert_close(pm.gamma1_prime, 0.2, 1e-12, "gamma1'");
        assert_close(pm.gamma2_prime, 21.8, 1e-12, "gamma2'");
        assert_close(pm.coupling, 2.98496231131986, 1e-12, "V");

        let perfect = SpectralDensity::from_half_widths(1.1, 0.1, 11.0, 1.0, 0.0);
        let pm = perfect.pseudomode_params();
        assert_close(pm.gamma2_prime, 24.0, 1e-12, "perfect-gap gamma2'");
        assert_close(pm.coupling, 3.3166247903554003, 1e-12, "perfect-gap V");

        let ol = SpectralDensity::one_lorentzian(20.0, 0.0).pseudomode_params();
        assert_eq!(ol.gamma1_prime, 0.0);
        assert_eq!(ol.gamma2_prime, 20.0);
        assert_eq!(ol.coupling, 0.0);
    }

    #[test]
    fn pseudomode_params_reconstruct_the_density() {
        // Invert the rate map: the sum of rates is gamma1 + gamma2, the
        // discriminant collapses to (gamma1 - gamma2)^2, and the weights
        // follow from the rate difference. Reconstructing and comparing
        // pointwise checks the three derived quantities jointly.
        for sd in [
            reference_gap(),
            SpectralDensity::from_half_widths(1.1, 0.1, 10.0, 2.0, 0.0),
            SpectralDensity::from_half_widths(1.4, 0.4, 8.0, 3.0, 0.0),
        ] {
            let pm = sd.pseudomode_params();
            let s = pm.gamma1_prime + pm.gamma2_prime;
            let d = ((pm.gamma2_prime - pm.gamma1_prime).powi(2)
                - 16.0 * pm.coupling * pm.coupling)
                .sqrt();
            let gamma1 = (s + d) / 2.0;
            let gamma2 = (s - d) / 2.0;
            let u = (pm.gamma2_prime - pm.gamma1_prime) / d;
            let rebuilt =
                SpectralDensity::new((u + 1.0) / 2.0, (u - 1.0) / 2.0, gamma1, gamma2, sd.omega_c);
            for i in 0..200 {
                let omega = -30.0 + 60.0 * i as f64 / 199.0;
                assert_close(
                    rebuilt.density_at(omega),
                    sd.density_at(omega),
                    1e-12,
                    "reconstructed density",
                );
            }
        }
    }

    #[test]
    fn closed_form_critical_detuning_matches_frozen_value() {
        let dc = reference_gap().critical_detuning_paper().unwrap();
        assert_close(dc, 3.5329420494377266, 1e-12, "closed-form delta_c");
    }

    #[test]
    fn closed_form_critical_detuning_error_cases() {
        assert!(matches!(
            SpectralDensity::one_lorentzian(20.0, 0.0).critical_detuning_paper(),
            Err(SpectralError::DegenerateSecondLorentzian { .. })
        ));
        // Nearly equal widths push the radicand negative.
        let sd = SpectralDensity::new(1.1, 0.1, 20.0, 19.8, 0.0);
        assert!(sd.validate().is_valid());
        assert!(matches!(
            sd.critical_detuning_paper(),
            Err(SpectralError::NoCriticalDetuning { .. })
        ));
    }

    #[test]
    fn numeric_critical_detuning_matches_frozen_value() {
        let dc = reference_gap().critical_detuning_numeric();
        assert_close(dc, 3.0715037701402514, 1e-7, "numeric delta_c");
    }

    #[test]
    fn numeric_critical_detuning_closed_cases() {
        // For the perfect-gap reference parameters the stationary point has
        // the closed value sqrt(11).
        let perfect = SpectralDensity::from_half_widths(1.1, 0.1, 11.0, 1.0, 0.0);
        assert_close(
            perfect.critical_detuning_numeric(),
            11.0f64.sqrt(),
            1e-7,
            "perfect-gap numeric delta_c",
        );
        // A plain Lorentzian peaks at its center.
        assert_eq!(
            SpectralDensity::one_lorentzian(20.0, 0.0).critical_detuning_numeric(),
            0.0
        );
    }

    #[test]
    fn numeric_critical_detuning_dominates_grid() {
        let sd = reference_gap();
        let dc = sd.critical_detuning_numeric();
        let peak = sd.density_at_detuning(dc);
        for i in 0..=5000 {
            let d = 100.0 * i as f64 / 5000.0;
            assert!(
                peak >= sd.density_at_detuning(d) - 1e-12,
                "grid point {d} beats the maximizer"
            );
        }
    }

    #[test]
    fn the_two_critical_detunings_disagree_for_reference_parameters() {
        // Documented discrepancy; both values are intentional.
        let sd = reference_gap();
        let paper = sd.critical_detuning_paper().unwrap();
        let numeric = sd.critical_detuning_numeric();
        assert!((paper - numeric).abs() > 0.4);
    }
}
