//! Small dense complex linear algebra.
//!
//! Everything the solver needs fits in 3x3 (amplitude generator) and 4x4
//! (truncated-basis density operator) matrices, so this module sticks to
//! closed forms and short fixed-size iterations instead of pulling in a
//! general-purpose linear algebra crate: Cardano's formula plus a Newton
//! polish for cubic eigenvalues, cross products for null vectors, Gaussian
//! elimination for 3x3 systems, and a cyclic complex Jacobi sweep for
//! Hermitian 4x4 eigenvalues.

use num_complex::Complex64;

pub type C64 = Complex64;
/// Row-major 3x3 complex matrix.
pub type Mat3 = [[C64; 3]; 3];
/// Row-major 4x4 complex matrix.
pub type Mat4 = [[C64; 4]; 4];

pub const C_ZERO: C64 = C64::new(0.0, 0.0);
pub const C_ONE: C64 = C64::new(1.0, 0.0);

pub fn mat3_zero() -> Mat3 {
    [[C_ZERO; 3]; 3]
}

pub fn mat4_zero() -> Mat4 {
    [[C_ZERO; 4]; 4]
}

pub fn mat3_mul_vec(m: &Mat3, v: &[C64; 3]) -> [C64; 3] {
    let mut out = [C_ZERO; 3];
    for (row, o) in m.iter().zip(out.iter_mut()) {
        *o = row[0] * v[0] + row[1] * v[1] + row[2] * v[2];
    }
    out
}

pub fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = mat4_zero();
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            if aik == C_ZERO {
                continue;
            }
            for j in 0..4 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

pub fn mat4_dagger(m: &Mat4) -> Mat4 {
    let mut out = mat4_zero();
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = m[j][i].conj();
        }
    }
    out
}

pub fn mat4_max_abs(m: &Mat4) -> f64 {
    m.iter()
        .flatten()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Roots of the monic cubic `x^3 + c2 x^2 + c1 x + c0` over the complex
/// numbers, in no particular order.
///
/// Cardano's closed form on the depressed cubic, branch-picked to avoid
/// cancellation, then two Newton steps on the original polynomial to clean
/// up the last couple of bits.
pub fn cubic_roots(c2: C64, c1: C64, c0: C64) -> [C64; 3] {
    let shift = c2 / 3.0;
    let p = c1 - c2 * c2 / 3.0;
    let q = c2 * (2.0 * c2 * c2 - 9.0 * c1) / 27.0 + c0;

    let s = (q * q / 4.0 + p * p * p / 27.0).sqrt();
    let u_plus = -q / 2.0 + s;
    let u_minus = -q / 2.0 - s;
    let u_cubed = if u_plus.norm() >= u_minus.norm() {
        u_plus
    } else {
        u_minus
    };

    let mut roots = [C_ZERO; 3];
    if u_cubed.norm() > 0.0 {
        let omega = C64::new(-0.5, 0.75f64.sqrt());
        let mut u = u_cubed.cbrt();
        for root in roots.iter_mut() {
            *root = u - p / (3.0 * u);
            u *= omega;
        }
    }
    // else p = q = 0: triple root of the depressed cubic at zero.

    let scale = 1.0 + c2.norm() + c1.norm() + c0.norm();
    for root in roots.iter_mut() {
        let mut x = *root - shift;
        for _ in 0..2 {
            let f = ((x + c2) * x + c1) * x + c0;
            let df = (3.0 * x + 2.0 * c2) * x + c1;
            if df.norm() > 1e-300 * scale {
                x -= f / df;
            }
        }
        *root = x;
    }
    roots
}

/// Bilinear (unconjugated) cross product; `a x b` is orthogonal to both rows
/// in the bilinear sense used for null vectors of a singular matrix.
fn cross3(a: &[C64; 3], b: &[C64; 3]) -> [C64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm3(v: &[C64; 3]) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr() + v[2].norm_sqr()).sqrt()
}

/// Eigenvalues and (unit 2-norm) eigenvector columns of a general complex
/// 3x3 matrix. `vectors[k]` belongs to `values[k]`. Near-defective inputs
/// yield unreliable vectors; callers gate on eigenvalue separation first.
pub struct Eigen3 {
    pub values: [C64; 3],
    pub vectors: [[C64; 3]; 3],
}

pub fn eigen3(m: &Mat3) -> Eigen3 {
    let tr = m[0][0] + m[1][1] + m[2][2];
    let minor_sum = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        + m[0][0] * m[2][2] - m[0][2] * m[2][0]
        + m[1][1] * m[2][2] - m[1][2] * m[2][1];
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);

    let values = cubic_roots(-tr, minor_sum, -det);
    let vectors = [
        null_vector(m, values[0]),
        null_vector(m, values[1]),
        null_vector(m, values[2]),
    ];
    Eigen3 { values, vectors }
}

fn null_vector(m: &Mat3, lambda: C64) -> [C64; 3] {
    let mut a = *m;
    for i in 0..3 {
        a[i][i] -= lambda;
    }
    let candidates = [
        cross3(&a[0], &a[1]),
        cross3(&a[0], &a[2]),
        cross3(&a[1], &a[2]),
    ];
    let mut best = candidates[0];
    let mut best_norm = norm3(&best);
    for c in &candidates[1..] {
        let n = norm3(c);
        if n > best_norm {
            best = *c;
            best_norm = n;
        }
    }
    if best_norm == 0.0 {
        // Rank deficit at least two: every unit vector close to the
        // eigenspace; return a basis vector so callers get something finite.
        return [C_ONE, C_ZERO, C_ZERO];
    }
    best.map(|z| z / best_norm)
}

/// Solve `a x = b` by Gaussian elimination with partial pivoting.
/// Returns `None` when a pivot falls below `1e-13` times the matrix scale.
pub fn solve3(a: &Mat3, b: &[C64; 3]) -> Option<[C64; 3]> {
    let mut m = *a;
    let mut rhs = *b;
    let scale = m.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return None;
    }

    for col in 0..3 {
        let pivot_row = (col..3)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .unwrap();
        if m[pivot_row][col].norm() <= 1e-13 * scale {
            return None;
        }
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        for row in col + 1..3 {
            let factor = m[row][col] / m[col][col];
            for k in col..3 {
                let sub = factor * m[col][k];
                m[row][k] -= sub;
            }
            let sub = factor * rhs[col];
            rhs[row] -= sub;
        }
    }

    let mut x = [C_ZERO; 3];
    for row in (0..3).rev() {
        let mut acc = rhs[row];
        for k in row + 1..3 {
            acc -= m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    Some(x)
}

/// Eigenvalues of a Hermitian 4x4 matrix, ascending.
///
/// Cyclic complex Jacobi: each rotation zeroes one off-diagonal pair via a
/// phase factored out of the pivot entry followed by a real rotation. For
/// Hermitian input the off-diagonal mass decreases monotonically, so the
/// sweep count is a safety bound, not a tuning knob.
pub fn hermitian_eigenvalues4(m: &Mat4) -> [f64; 4] {
    let mut a = *m;
    let scale = mat4_max_abs(&a).max(1e-300);

    for _sweep in 0..64 {
        let mut off = 0.0f64;
        for p in 0..4 {
            for q in p + 1..4 {
                off += a[p][q].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }

        for p in 0..4 {
            for q in p + 1..4 {
                let apq = a[p][q];
                if apq.norm() <= 1e-18 * scale {
                    continue;
                }
                let app = a[p][p].re;
                let aqq = a[q][q].re;
                let phase = C64::from_polar(1.0, apq.arg());
                let theta = 0.5 * (2.0 * apq.norm()).atan2(app - aqq);
                let (sin, cos) = theta.sin_cos();
                // U = diag(1, e^{-i phi}) * [[cos, -sin], [sin, cos]] on the
                // (p,q) plane; the phase turns the pivot real, the rotation
                // zeroes it. u^H a u has exact zero at (p,q) up to roundoff.
                let upp = C64::new(cos, 0.0);
                let upq = C64::new(-sin, 0.0);
                let uqp = phase.conj() * sin;
                let uqq = phase.conj() * cos;

                for k in 0..4 {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = akp * upp + akq * uqp;
                    a[k][q] = akp * upq + akq * uqq;
                }
                for k in 0..4 {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = upp.conj() * apk + uqp.conj() * aqk;
                    a[q][k] = upq.conj() * apk + uqq.conj() * aqk;
                }
            }
        }
    }

    let mut eig = [a[0][0].re, a[1][1].re, a[2][2].re, a[3][3].re];
    eig.sort_by(f64::total_cmp);
    eig
}
