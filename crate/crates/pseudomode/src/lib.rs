//! Entanglement dynamics of qubits coupled to band-gap structured reservoirs,
//! solved exactly with the pseudomode method.
//!
//! The reservoir is modeled by a difference of two Lorentzians,
//!
//! ```text
//! D(w) = W1*G1 / ((w - wc)^2 + (G1/2)^2) - W2*G2 / ((w - wc)^2 + (G2/2)^2)
//! ```
//!
//! whose dip at `wc` imitates a photonic band gap. Mapping the reservoir onto
//! two damped, coherently coupled pseudomodes turns the non-Markovian qubit
//! dynamics into a three-amplitude linear ODE (and, equivalently, a Lindblad
//! master equation on a four-state truncated basis). Single-qubit amplitudes
//! feed a two-qubit X-state construction whose concurrence exhibits
//! entanglement sudden death, revivals, or trapping depending on the gap
//! parameters and the qubit-reservoir detuning.
//!
//! The crate is organized to be driven from the `examples/` directory: each
//! example is a runnable study of one capability (spectral profiles, amplitude
//! dynamics, the Lindblad cross-check, ESD onsets, detuning sweeps, ordering
//! checks). The same studies are scriptable through the `pseudomode` binary,
//! which emits deterministic CSV.
//!
//! Module map:
//!
//! - [`spectral`]: density model, validity checks, pseudomode parameters,
//!   critical detuning (closed form and numeric maximizer).
//! - [`dynamics`]: three-amplitude generator, eigendecomposition propagator
//!   with RK fallback, excitation norm.
//! - [`master_equation`]: truncated-basis Lindblad propagator used as an
//!   independent cross-check of the amplitude picture.
//! - [`entanglement`]: X-state construction, concurrence (closed form and
//!   Wootters route), ESD onset and revival analysis.
//! - [`experiments`]: named presets, sweep runners, qualitative ordering
//!   checks.
//! - [`cli`]: argument parsing and CSV emission for the binary.

pub mod cli;
pub mod dynamics;
pub mod entanglement;
pub mod experiments;
pub mod linalg;
pub mod master_equation;
mod ode;
pub mod spectral;

pub use dynamics::{AmplitudeEvaluator, AmplitudeState, SystemParams, Trajectory};
pub use entanglement::QubitPairInit;
pub use experiments::{preset, Preset, Scenario};
pub use spectral::{PseudomodeParams, SpectralDensity};
