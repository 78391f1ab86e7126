//! Incoherent rate-equation model of the pulsed experiment.
//!
//! ```text
//! dP1/dt = k(P2 − P1),   dP2/dt = k(P1 − P2),   k = ω²τ/2
//! ```
//!
//! Two readings are exposed. [`cook_closed_form`] is the published closed
//! form `P2(T) = ½[1 − exp(−π²/2N)]`. Integrating the equations as written
//! with `k = ω²τ/2`, `τ = π/(Nω)` up to `T = π/ω` instead gives
//! `½[1 − exp(−π²/N)]` ([`cook_ode_p2`]). The two differ by a factor of two in
//! the exponent; the closed form is the one that matches the large-N limit of
//! the exact occupation probability.

use crate::dynamics::PulseProtocol;
use crate::error::{Result, ZenoError};
use crate::ode::rk4_integrate;

use std::f64::consts::PI;

/// Default RK4 step count for the rate-equation column of reports.
pub const DEFAULT_RATE_STEPS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CookModel {
    omega: f64,
    interval: f64,
    rate: f64,
}

impl CookModel {
    pub fn new(omega: f64, interval: f64) -> Result<Self> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(omega) || !positive(interval) {
            return Err(ZenoError::InvalidArgument(format!(
                "omega and interval must be positive, got {omega} and {interval}"
            )));
        }
        Ok(CookModel { omega, interval, rate: omega * omega * interval / 2.0 })
    }

    /// Model whose pulse spacing is that of `protocol`.
    pub fn for_protocol(protocol: &PulseProtocol) -> Self {
        // Protocol fields are already validated positive.
        Self::new(protocol.omega(), protocol.interval()).expect("valid protocol")
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn interval(&self) -> f64 {
        self.interval
    }

    /// `k = ω²τ/2`
    pub fn rate(&self) -> f64 {
        self.rate
    }

    /// Exact solution `P2(t) = ½[1 − exp(−2kt)]` from `P1(0) = 1`.
    pub fn analytic_p2(&self, t: f64) -> f64 {
        0.5 * (1.0 - (-2.0 * self.rate * t).exp())
    }
}

/// Published closed form `½[1 − exp(−π²/2N)]`.
pub fn cook_closed_form(n_measurements: u32) -> Result<f64> {
    if n_measurements == 0 {
        return Err(ZenoError::ZeroMeasurements);
    }
    let n = f64::from(n_measurements);
    Ok(0.5 * (1.0 - (-PI * PI / (2.0 * n)).exp()))
}

/// Integrates the rate equations from `(P1, P2) = (1, 0)` over `total_time`.
pub fn integrate_rate_equations(
    model: &CookModel,
    total_time: f64,
    steps: usize,
) -> Result<(f64, f64)> {
    integrate_rate_equations_observed(model, total_time, steps, |_, _, _| {})
}

/// As [`integrate_rate_equations`], calling `observe(step, p1, p2)` after every step.
pub fn integrate_rate_equations_observed<O>(
    model: &CookModel,
    total_time: f64,
    steps: usize,
    mut observe: O,
) -> Result<(f64, f64)>
where
    O: FnMut(usize, f64, f64),
{
    let k = model.rate();
    let rhs = |p: &[f64; 2]| {
        let flow = k * (p[1] - p[0]);
        [flow, -flow]
    };
    let p = rk4_integrate([1.0, 0.0], total_time, steps, rhs, |i, p| observe(i, p[0], p[1]))?;
    Ok((p[0], p[1]))
}

/// `P2(T)` from integrating the rate equations for the N-pulse protocol
/// (unit Rabi frequency).
pub fn cook_ode_p2(n_measurements: u32, steps: usize) -> Result<f64> {
    let protocol = PulseProtocol::with_unit_frequency(n_measurements)?;
    let model = CookModel::for_protocol(&protocol);
    Ok(integrate_rate_equations(&model, protocol.total_time(), steps)?.1)
}
