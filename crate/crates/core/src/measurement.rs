//! Ideal projective measurements and the N-pulse protocol.
//!
//! A measurement erases the coherences (R1, R2) and leaves the populations
//! untouched. Between measurements the atom undergoes free Rabi rotation by
//! the angle `π/N`, starting from level 1.

use std::f64::consts::PI;

use crate::dynamics::{evolve_bloch, level_populations, BlochVector, PulseProtocol};
use crate::error::{Result, ZenoError};

/// Outcome of [`run_pulsed_protocol`].
#[derive(Debug, Clone, PartialEq)]
pub struct ProtocolResult {
    pub protocol: PulseProtocol,
    /// Post-measurement states R⁽¹⁾ … R⁽ᴺ⁾.
    pub bloch_after_each: Vec<BlochVector>,
    pub p1_final: f64,
    pub p2_final: f64,
    pub p2_after_each: Vec<f64>,
}

/// One entry of [`stepwise_record`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepRecord {
    pub r3: f64,
    pub p1: f64,
    pub p2: f64,
}

/// Projects onto the measurement basis: `(R1, R2, R3) -> (0, 0, R3)`.
pub fn project(r: &BlochVector) -> BlochVector {
    BlochVector { r1: 0.0, r2: 0.0, r3: r.r3 }
}

/// Evolves level 1 for `τ`, measures, and repeats N times.
pub fn run_pulsed_protocol(protocol: &PulseProtocol) -> ProtocolResult {
    let n = protocol.n_measurements() as usize;
    let mut state = BlochVector::GROUND;
    let mut bloch_after_each = Vec::with_capacity(n);
    let mut p2_after_each = Vec::with_capacity(n);
    for _ in 0..n {
        state = project(&evolve_bloch(&state, protocol.omega(), protocol.interval()));
        bloch_after_each.push(state);
        p2_after_each.push(level_populations(&state).1);
    }
    let (p1_final, p2_final) = level_populations(&state);
    ProtocolResult { protocol: *protocol, bloch_after_each, p1_final, p2_final, p2_after_each }
}

/// `(P1, P2) = ½[1 ± cosᴺ(π/N)]`, the populations at `T` after N measurements.
pub fn occupation_closed_form(n_measurements: u32) -> Result<(f64, f64)> {
    let damping = cos_pow_n(n_measurements)?;
    Ok((0.5 * (1.0 + damping), 0.5 * (1.0 - damping)))
}

/// Per-measurement record `R3⁽ⁿ⁾ = −cosⁿ(π/N)` for `n = 1..=N`.
pub fn stepwise_record(n_measurements: u32) -> Result<Vec<StepRecord>> {
    if n_measurements == 0 {
        return Err(ZenoError::ZeroMeasurements);
    }
    let cos = (PI / f64::from(n_measurements)).cos();
    Ok((1..=n_measurements as i32)
        .map(|n| {
            let r3 = -cos.powi(n);
            let p2 = 0.5 * (1.0 + r3);
            StepRecord { r3, p1: 1.0 - p2, p2 }
        })
        .collect())
}

fn cos_pow_n(n_measurements: u32) -> Result<f64> {
    if n_measurements == 0 {
        return Err(ZenoError::ZeroMeasurements);
    }
    let n = f64::from(n_measurements);
    Ok((PI / n).cos().powf(n))
}
