//! Lindblad master equation on the truncated single-excitation basis.
//!
//! The pseudomode picture admits an exact master equation: qubit plus two
//! bosonic modes, with Markovian damping on the modes only. Starting from
//! one excitation, the reachable Fock space truncates to four states, in
//! this fixed order:
//!
//! | index | label    | meaning                      |
//! |-------|----------|------------------------------|
//! | 0     | `|g;00>` | everything de-excited        |
//! | 1     | `|e;00>` | qubit excited                |
//! | 2     | `|g;10>` | first pseudomode excited     |
//! | 3     | `|g;01>` | second pseudomode excited    |
//!
//! The density operator evolves as
//!
//! ```text
//! drho/dt = -i [H, rho]
//!         + sum_j gammaj' * (a_j rho a_j^H - 1/2 {a_j^H a_j, rho})
//! ```
//!
//! with `H` diagonal in the basis energies plus the `rabi` and `V`
//! couplings, and `a_j = |g;00><basis_j|` the mode lowering operators. This
//! module exists as an independent check of the amplitude picture: a
//! trajectory integrated here must reproduce every bilinear
//! `rho_jk = x_j * conj(x_k)` of the three-amplitude solution, with
//! `x = (c1, b1, b2)` mapped to indices (1, 2, 3) and the ground population
//! making up the trace.
//!
//! Integration runs on the 16 real degrees of freedom of the Hermitian
//! matrix (4 diagonals, 6 complex upper off-diagonals), so Hermiticity is
//! preserved by construction rather than by hope.

use thiserror::Error;

use crate::dynamics::{self, DynamicsError, SystemParams};
use crate::linalg::{self, C64, Mat4, C_ONE};
use crate::ode;

/// Dimension of the truncated basis.
pub const DIM: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisState {
    Vacuum,
    QubitExcited,
    PseudomodeOneExcited,
    PseudomodeTwoExcited,
}

impl BasisState {
    pub const ALL: [BasisState; DIM] = [
        BasisState::Vacuum,
        BasisState::QubitExcited,
        BasisState::PseudomodeOneExcited,
        BasisState::PseudomodeTwoExcited,
    ];

    pub fn index(self) -> usize {
        match self {
            BasisState::Vacuum => 0,
            BasisState::QubitExcited => 1,
            BasisState::PseudomodeOneExcited => 2,
            BasisState::PseudomodeTwoExcited => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            BasisState::Vacuum => "|g;00>",
            BasisState::QubitExcited => "|e;00>",
            BasisState::PseudomodeOneExcited => "|g;10>",
            BasisState::PseudomodeTwoExcited => "|g;01>",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MasterEquationError {
    #[error("matrix is not Hermitian: max |rho - rho^H| = {deviation:e}")]
    NotHermitian { deviation: f64 },
    #[error("matrix trace {trace} is not 1 within 1e-10")]
    TraceNotOne { trace: f64 },
    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },
}

/// Density operator on the truncated basis. Constructors enforce
/// Hermiticity (1e-12), unit trace (1e-10) and positivity (eigenvalues
/// above -1e-9), so a held value is always a physical state up to those
/// tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityOperator {
    m: Mat4,
}

impl DensityOperator {
    fn pure(index: usize) -> Self {
        let mut m = linalg::mat4_zero();
        m[index][index] = C_ONE;
        DensityOperator { m }
    }

    /// `|g;00><g;00|`: the stationary state of the dissipator.
    pub fn vacuum() -> Self {
        DensityOperator::pure(0)
    }

    /// `|e;00><e;00|`: the canonical initial state, matching the amplitude
    /// picture's `x(0) = (1, 0, 0)`.
    pub fn qubit_excited() -> Self {
        DensityOperator::pure(1)
    }

    pub fn from_matrix(m: Mat4) -> Result<Self, MasterEquationError> {
        let rho = DensityOperator { m };
        let deviation = rho.hermiticity_deviation();
        if deviation > 1e-12 {
            return Err(MasterEquationError::NotHermitian { deviation });
        }
        let trace = rho.trace().re;
        if (trace - 1.0).abs() > 1e-10 {
            return Err(MasterEquationError::TraceNotOne { trace });
        }
        let min_eigenvalue = rho.min_eigenvalue();
        if min_eigenvalue < -1e-9 {
            return Err(MasterEquationError::NotPositive { min_eigenvalue });
        }
        Ok(rho)
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    pub fn element(&self, row: BasisState, col: BasisState) -> C64 {
        self.m[row.index()][col.index()]
    }

    pub fn population(&self, state: BasisState) -> f64 {
        self.element(state, state).re
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1] + self.m[2][2] + self.m[3][3]
    }

    pub fn hermiticity_deviation(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..DIM {
            for j in 0..DIM {
                worst = worst.max((self.m[i][j] - self.m[j][i].conj()).norm());
            }
        }
        worst
    }

    pub fn min_eigenvalue(&self) -> f64 {
        linalg::hermitian_eigenvalues4(&self.m)[0]
    }
}

/// Qubit and pseudomode energies plus the two coherent couplings.
pub fn build_hamiltonian(p: &SystemParams) -> Mat4 {
    let omega_c = p.omega_c();
    let mut h = linalg::mat4_zero();
    h[1][1] = C64::new(p.omega0, 0.0);
    h[2][2] = C64::new(omega_c, 0.0);
    h[3][3] = C64::new(omega_c, 0.0);
    h[1][3] = C64::new(p.rabi, 0.0);
    h[3][1] = C64::new(p.rabi, 0.0);
    h[2][3] = C64::new(p.pm.coupling, 0.0);
    h[3][2] = C64::new(p.pm.coupling, 0.0);
    h
}

/// A mode lowering operator together with its damping rate.
#[derive(Debug, Clone, PartialEq)]
pub struct JumpOperator {
    pub matrix: Mat4,
    pub rate: f64,
}

/// The two pseudomode decay channels `|g;00><g;10|` and `|g;00><g;01|`
/// with rates `gamma1'`, `gamma2'`.
pub fn build_jump_operators(p: &SystemParams) -> [JumpOperator; 2] {
    let mut a1 = linalg::mat4_zero();
    a1[0][2] = C_ONE;
    let mut a2 = linalg::mat4_zero();
    a2[0][3] = C_ONE;
    [
        JumpOperator {
            matrix: a1,
            rate: p.pm.gamma1_prime,
        },
        JumpOperator {
            matrix: a2,
            rate: p.pm.gamma2_prime,
        },
    ]
}

/// Density operators on a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityTrajectory {
    pub times: Vec<f64>,
    pub states: Vec<DensityOperator>,
}

impl DensityTrajectory {
    pub fn population(&self, state: BasisState) -> Vec<f64> {
        self.states.iter().map(|r| r.population(state)).collect()
    }
}

const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

fn pack(rho: &Mat4) -> [f64; 16] {
    let mut y = [0.0; 16];
    for i in 0..DIM {
        y[i] = rho[i][i].re;
    }
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        y[4 + 2 * k] = rho[i][j].re;
        y[5 + 2 * k] = rho[i][j].im;
    }
    y
}

fn unpack(y: &[f64; 16]) -> Mat4 {
    let mut rho = linalg::mat4_zero();
    for i in 0..DIM {
        rho[i][i] = C64::new(y[i], 0.0);
    }
    for (k, &(i, j)) in PAIRS.iter().enumerate() {
        let z = C64::new(y[4 + 2 * k], y[5 + 2 * k]);
        rho[i][j] = z;
        rho[j][i] = z.conj();
    }
    rho
}

fn lindblad_rhs(h: &Mat4, jumps: &[(Mat4, Mat4, f64); 2], y: &[f64; 16]) -> [f64; 16] {
    let rho = unpack(y);
    let h_rho = linalg::mat4_mul(h, &rho);
    let rho_h = linalg::mat4_mul(&rho, h);

    let mut drho = linalg::mat4_zero();
    let i_unit = C64::new(0.0, 1.0);
    for r in 0..DIM {
        for c in 0..DIM {
            drho[r][c] = -i_unit * (h_rho[r][c] - rho_h[r][c]);
        }
    }

    for (a, ada, rate) in jumps {
        if *rate == 0.0 {
            continue;
        }
        let a_rho = linalg::mat4_mul(a, &rho);
        let sandwich = linalg::mat4_mul(&a_rho, &linalg::mat4_dagger(a));
        let ada_rho = linalg::mat4_mul(ada, &rho);
        let rho_ada = linalg::mat4_mul(&rho, ada);
        for r in 0..DIM {
            for c in 0..DIM {
                drho[r][c] += *rate * (sandwich[r][c] - 0.5 * (ada_rho[r][c] + rho_ada[r][c]));
            }
        }
    }

    // The diagonal of drho is real up to roundoff because rho is Hermitian;
    // packing keeps the integrated state exactly Hermitian.
    pack(&drho)
}

/// Integrate the master equation with the same embedded RK pair as
/// [`dynamics::propagate_rk`], emitting states on `times`.
pub fn propagate_lindblad(
    rho0: &DensityOperator,
    p: &SystemParams,
    times: &[f64],
    tol: f64,
) -> Result<DensityTrajectory, DynamicsError> {
    p.validate()?;
    dynamics::validate_grid(times)?;

    let h = build_hamiltonian(p);
    let [j1, j2] = build_jump_operators(p);
    let jumps = [
        (
            j1.matrix,
            linalg::mat4_mul(&linalg::mat4_dagger(&j1.matrix), &j1.matrix),
            j1.rate,
        ),
        (
            j2.matrix,
            linalg::mat4_mul(&linalg::mat4_dagger(&j2.matrix), &j2.matrix),
            j2.rate,
        ),
    ];

    let y0 = pack(&rho0.m);
    let sol = ode::integrate(|_, y| lindblad_rhs(&h, &jumps, y), 0.0, y0, times, tol)
        .map_err(|e| dynamics::map_ode_error(e, p))?;

    Ok(DensityTrajectory {
        times: times.to_vec(),
        states: sol
            .iter()
            .map(|y| DensityOperator { m: unpack(y) })
            .collect(),
    })
}
