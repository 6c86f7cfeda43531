//! Agreement between the amplitude picture and the Lindblad master equation.
//!
//! In the single-excitation sector the pure-state amplitudes (c1, b1, b2)
//! and the truncated-basis density operator describe the same open system:
//! every excited-state matrix element of rho must equal the bilinear
//! x_j * conj(x_k). This study propagates both routes independently and
//! reports the largest disagreement, the trace drift, and the most negative
//! eigenvalue seen along the way.

use pseudomode::dynamics::propagate_eigen;
use pseudomode::linalg::C64;
use pseudomode::master_equation::{propagate_lindblad, BasisState, DensityOperator};
use pseudomode::{SpectralDensity, SystemParams};

fn main() {
    let sd = SpectralDensity::from_half_widths(1.1, 0.1, 10.0, 1.0, 0.0);
    let params = SystemParams::for_density(&sd, 0.0, 1.0);
    let times: Vec<f64> = (0..=200).map(|i| 0.05 * i as f64).collect();

    let amps = propagate_eigen(&params, &times).expect("reference parameters propagate");
    let rhos = propagate_lindblad(&DensityOperator::qubit_excited(), &params, &times, 1e-10)
        .expect("same grid, integrated");

    let excited = [
        BasisState::QubitExcited,
        BasisState::PseudomodeOneExcited,
        BasisState::PseudomodeTwoExcited,
    ];

    let mut worst_element = 0.0f64;
    let mut worst_trace = 0.0f64;
    let mut lowest_eigenvalue = f64::INFINITY;
    for (s, rho) in amps.states.iter().zip(&rhos.states) {
        let x = [s.c1, s.b1, s.b2];
        for (j, &row) in excited.iter().enumerate() {
            for (k, &col) in excited.iter().enumerate() {
                let bilinear = x[j] * x[k].conj();
                worst_element = worst_element.max((rho.element(row, col) - bilinear).norm());
            }
        }
        worst_trace = worst_trace.max((rho.trace() - C64::new(1.0, 0.0)).norm());
        lowest_eigenvalue = lowest_eigenvalue.min(rho.min_eigenvalue());
    }

    println!("   t    rho_11    |c1|^2    rho_00    vacuum");
    let qubit = rhos.population(BasisState::QubitExcited);
    let vacuum = rhos.population(BasisState::Vacuum);
    for i in (0..times.len()).step_by(20) {
        let s = &amps.states[i];
        println!(
            "{:5.1}  {:8.6}  {:8.6}  {:8.6}  {:8.6}",
            times[i],
            qubit[i],
            s.c1.norm_sqr(),
            vacuum[i],
            1.0 - s.excitation_norm()
        );
    }

    println!();
    println!("max |rho_jk - x_j conj(x_k)| over excited states: {worst_element:.3e}");
    println!("max |tr rho - 1|: {worst_trace:.3e}");
    println!("lowest eigenvalue of rho along the run: {lowest_eigenvalue:.3e}");
}
