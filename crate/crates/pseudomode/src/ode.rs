//! Embedded Dormand-Prince 5(4) integrator with quartic dense output.
//!
//! One fixed pair, no method zoo: the generators in this crate are small
//! linear systems whose stiffness is bounded by the pseudomode decay rates,
//! and the callers need values on arbitrary requested grids, which the
//! dense-output interpolant provides without constraining the step sequence.
//! State dimension is a const generic so the 6-real amplitude system and the
//! 16-real density system share one implementation.

/// Requested tolerance is used for both the absolute and relative part of
/// the per-component error scale.
pub const TOL_MIN: f64 = 1e-13;
pub const TOL_MAX: f64 = 1e-3;

/// Below this step size the error controller has effectively stalled.
pub const MIN_STEP: f64 = 1e-14;

const SAFETY: f64 = 0.9;
const MIN_SCALE: f64 = 0.2;
const MAX_SCALE: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OdeError {
    /// The controller drove the step below `MIN_STEP` near time `t`.
    StepUnderflow { t: f64 },
    /// Tolerance outside `[TOL_MIN, TOL_MAX]`.
    InvalidTolerance { tol: f64 },
    /// Output times empty or not strictly increasing.
    InvalidGrid,
}

const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];

const A: [[f64; 6]; 7] = [
    [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [
        19372.0 / 6561.0,
        -25360.0 / 2187.0,
        64448.0 / 6561.0,
        -212.0 / 729.0,
        0.0,
        0.0,
    ],
    [
        9017.0 / 3168.0,
        -355.0 / 33.0,
        46732.0 / 5247.0,
        49.0 / 176.0,
        -5103.0 / 18656.0,
        0.0,
    ],
    [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
    ],
];

/// Fifth-order weights equal `A[6]`; the seventh stage is FSAL.
const B5: [f64; 7] = [
    35.0 / 384.0,
    0.0,
    500.0 / 1113.0,
    125.0 / 192.0,
    -2187.0 / 6784.0,
    11.0 / 84.0,
    0.0,
];

const B4: [f64; 7] = [
    5179.0 / 57600.0,
    0.0,
    7571.0 / 16695.0,
    393.0 / 640.0,
    -92097.0 / 339200.0,
    187.0 / 2100.0,
    1.0 / 40.0,
];

/// Dense-output coefficients: state at `t + theta h` is
/// `y + h * sum_j k_j * sum_m P[j][m] theta^(m+1)`, a quartic interpolant
/// with fourth-order accuracy across the whole step.
const P: [[f64; 4]; 7] = [
    [
        1.0,
        -8048581381.0 / 2820520608.0,
        8663915743.0 / 2820520608.0,
        -12715105075.0 / 11282082432.0,
    ],
    [0.0, 0.0, 0.0, 0.0],
    [
        0.0,
        131558114200.0 / 32700410799.0,
        -68118460800.0 / 10900136933.0,
        87487479700.0 / 32700410799.0,
    ],
    [
        0.0,
        -1754552775.0 / 470086768.0,
        14199869525.0 / 1410260304.0,
        -10690763975.0 / 1880347072.0,
    ],
    [
        0.0,
        127303824393.0 / 49829197408.0,
        -318862633887.0 / 49829197408.0,
        701980252875.0 / 199316789632.0,
    ],
    [
        0.0,
        -282668133.0 / 205662961.0,
        2019193451.0 / 616988883.0,
        -1453857185.0 / 822651844.0,
    ],
    [
        0.0,
        40617522.0 / 29380423.0,
        -110615467.0 / 29380423.0,
        69997945.0 / 29380423.0,
    ],
];

fn rms_scaled<const N: usize>(v: &[f64; N], scale: &[f64; N]) -> f64 {
    let mut acc = 0.0;
    for i in 0..N {
        let r = v[i] / scale[i];
        acc += r * r;
    }
    (acc / N as f64).sqrt()
}

fn initial_step<const N: usize, F>(
    rhs: &F,
    t0: f64,
    y0: &[f64; N],
    f0: &[f64; N],
    tol: f64,
    span: f64,
) -> f64
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    let mut scale = [0.0; N];
    for i in 0..N {
        scale[i] = tol + tol * y0[i].abs();
    }
    let d0 = rms_scaled(y0, &scale);
    let d1 = rms_scaled(f0, &scale);
    let h0 = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    }
    .min(span);

    let mut y1 = *y0;
    for i in 0..N {
        y1[i] += h0 * f0[i];
    }
    let f1 = rhs(t0 + h0, &y1);
    let mut df = [0.0; N];
    for i in 0..N {
        df[i] = f1[i] - f0[i];
    }
    let d2 = rms_scaled(&df, &scale) / h0;

    let dm = d1.max(d2);
    let h1 = if dm <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / dm).powf(0.2)
    };
    (100.0 * h0).min(h1).min(span)
}

/// Integrate `y' = rhs(t, y)` from `(t0, y0)` and return the solution at
/// each entry of `times` (all entries must be `>= t0`, strictly increasing;
/// if `times[0] == t0` the initial state is emitted as-is).
pub fn integrate<const N: usize, F>(
    rhs: F,
    t0: f64,
    y0: [f64; N],
    times: &[f64],
    tol: f64,
) -> Result<Vec<[f64; N]>, OdeError>
where
    F: Fn(f64, &[f64; N]) -> [f64; N],
{
    if !(TOL_MIN..=TOL_MAX).contains(&tol) || !tol.is_finite() {
        return Err(OdeError::InvalidTolerance { tol });
    }
    if times.is_empty()
        || times[0] < t0
        || !times.windows(2).all(|w| w[1] > w[0])
        || !times.iter().all(|t| t.is_finite())
    {
        return Err(OdeError::InvalidGrid);
    }

    let mut out = Vec::with_capacity(times.len());
    let mut idx = 0;
    if times[0] == t0 {
        out.push(y0);
        idx = 1;
    }
    if idx == times.len() {
        return Ok(out);
    }

    let t_end = *times.last().unwrap();
    let mut t = t0;
    let mut y = y0;
    let mut k = [[0.0; N]; 7];
    k[0] = rhs(t, &y);
    let mut h = initial_step(&rhs, t, &y, &k[0], tol, t_end - t0);

    loop {
        let last = h >= t_end - t;
        if last {
            h = t_end - t;
        }
        if h < MIN_STEP {
            return Err(OdeError::StepUnderflow { t });
        }

        for stage in 1..7 {
            let mut ys = y;
            for j in 0..stage {
                let a = A[stage][j];
                if a == 0.0 {
                    continue;
                }
                for i in 0..N {
                    ys[i] += h * a * k[j][i];
                }
            }
            k[stage] = rhs(t + C[stage] * h, &ys);
        }

        // Stage 7 was evaluated at the fifth-order solution, so y_new is
        // already in hand via the A[6] row.
        let mut y_new = y;
        for j in 0..6 {
            let b = B5[j];
            if b == 0.0 {
                continue;
            }
            for i in 0..N {
                y_new[i] += h * b * k[j][i];
            }
        }

        let mut err = [0.0; N];
        for j in 0..7 {
            let d = B5[j] - B4[j];
            if d == 0.0 {
                continue;
            }
            for i in 0..N {
                err[i] += h * d * k[j][i];
            }
        }
        let mut scale = [0.0; N];
        for i in 0..N {
            scale[i] = tol + tol * y[i].abs().max(y_new[i].abs());
        }
        let err_norm = rms_scaled(&err, &scale);

        if !err_norm.is_finite() {
            h *= MIN_SCALE;
            continue;
        }

        if err_norm <= 1.0 {
            let t_new = if last { t_end } else { t + h };
            while idx < times.len() && times[idx] <= t_new {
                if times[idx] == t_new {
                    out.push(y_new);
                } else {
                    let theta = (times[idx] - t) / h;
                    let powers = [
                        theta,
                        theta * theta,
                        theta * theta * theta,
                        theta * theta * theta * theta,
                    ];
                    let mut yi = y;
                    for j in 0..7 {
                        let mut w = 0.0;
                        for m in 0..4 {
                            w += P[j][m] * powers[m];
                        }
                        if w == 0.0 {
                            continue;
                        }
                        for i in 0..N {
                            yi[i] += h * w * k[j][i];
                        }
                    }
                    out.push(yi);
                }
                idx += 1;
            }
            if idx == times.len() {
                return Ok(out);
            }
            t = t_new;
            y = y_new;
            k[0] = k[6];
            let grow = if err_norm == 0.0 {
                MAX_SCALE
            } else {
                (SAFETY * err_norm.powf(-0.2)).clamp(MIN_SCALE, MAX_SCALE)
            };
            h *= grow;
        } else {
            h *= (SAFETY * err_norm.powf(-0.2)).clamp(MIN_SCALE, 1.0);
        }
    }
}
