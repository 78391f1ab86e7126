//! Classical fixed-step 4th-order Runge-Kutta integrator.
//!
//! Shared by the density-matrix equations of motion and the rate-equation
//! model. The state is a fixed-size array of reals; complex quantities are
//! split into real and imaginary parts by the caller.

use crate::error::{Result, ZenoError};

/// Integrates `y' = f(y)` (autonomous) from `y0` over `duration` using `steps`
/// equal RK4 steps. `observe` is called after every step with the step index
/// (1-based) and the current state.
pub fn rk4_integrate<const D: usize, F, O>(
    y0: [f64; D],
    duration: f64,
    steps: usize,
    f: F,
    mut observe: O,
) -> Result<[f64; D]>
where
    F: Fn(&[f64; D]) -> [f64; D],
    O: FnMut(usize, &[f64; D]),
{
    if steps == 0 {
        return Err(ZenoError::ZeroSteps);
    }
    let h = duration / steps as f64;
    let mut y = y0;
    for step in 1..=steps {
        y = rk4_step(&y, h, &f);
        observe(step, &y);
    }
    Ok(y)
}

/// One RK4 step of size `h`.
pub fn rk4_step<const D: usize, F>(y: &[f64; D], h: f64, f: &F) -> [f64; D]
where
    F: Fn(&[f64; D]) -> [f64; D],
{
    let k1 = f(y);
    let k2 = f(&axpy(y, 0.5 * h, &k1));
    let k3 = f(&axpy(y, 0.5 * h, &k2));
    let k4 = f(&axpy(y, h, &k3));
    let mut out = *y;
    for i in 0..D {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

fn axpy<const D: usize>(y: &[f64; D], a: f64, k: &[f64; D]) -> [f64; D] {
    let mut out = *y;
    for i in 0..D {
        out[i] += a * k[i];
    }
    out
}
