//! Two-level state representations and resonant Rabi evolution.
//!
//! A state is held either as a 2×2 density matrix over levels 1 and 2 or as
//! the real coherence (Bloch) vector
//!
//! ```text
//! R1 = ρ21 + ρ12,   R2 = i(ρ12 − ρ21),   R3 = ρ22 − ρ11
//! ```
//!
//! Under a resonant drive of Rabi frequency ω the vector precesses about the
//! first axis, `dR/dt = (ω, 0, 0) × R`. [`evolve_bloch`] applies that rotation
//! in closed form; [`evolve_density_ode`] integrates the density-matrix
//! equations of motion numerically and serves as an independent check.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, ZenoError};
use crate::ode::rk4_integrate;

/// Slack allowed on physical constraints (trace, norm, positivity).
pub const STATE_TOLERANCE: f64 = 1e-12;

/// Default RK4 step count per integrated interval.
pub const DEFAULT_ODE_STEPS: usize = 1000;

/// Coherence vector `(R1, R2, R3)` of a two-level system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
}

impl BlochVector {
    /// Pure state with only level 1 populated.
    pub const GROUND: BlochVector = BlochVector { r1: 0.0, r2: 0.0, r3: -1.0 };
    /// Pure state with only level 2 populated.
    pub const EXCITED: BlochVector = BlochVector { r1: 0.0, r2: 0.0, r3: 1.0 };
    /// Maximally mixed state.
    pub const MIXED: BlochVector = BlochVector { r1: 0.0, r2: 0.0, r3: 0.0 };

    /// Builds a vector, rejecting anything outside the unit ball.
    pub fn new(r1: f64, r2: f64, r3: f64) -> Result<Self> {
        let v = BlochVector { r1, r2, r3 };
        v.validate()?;
        Ok(v)
    }

    pub fn norm(&self) -> f64 {
        (self.r1 * self.r1 + self.r2 * self.r2 + self.r3 * self.r3).sqrt()
    }

    pub fn validate(&self) -> Result<()> {
        let norm = self.norm();
        if !norm.is_finite() || norm > 1.0 + STATE_TOLERANCE {
            return Err(ZenoError::NonPhysicalBloch { norm });
        }
        Ok(())
    }
}

/// Density operator of a two-level system. Off-diagonals are stored
/// separately so hermiticity is checked rather than assumed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    pub rho11: f64,
    pub rho22: f64,
    pub rho12: Complex64,
    pub rho21: Complex64,
}

impl DensityMatrix {
    pub fn new(rho11: f64, rho22: f64, rho12: Complex64, rho21: Complex64) -> Result<Self> {
        let rho = DensityMatrix { rho11, rho22, rho12, rho21 };
        rho.validate()?;
        Ok(rho)
    }

    /// Diagonal (incoherent) state.
    pub fn diagonal(rho11: f64, rho22: f64) -> Result<Self> {
        Self::new(rho11, rho22, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn trace(&self) -> f64 {
        self.rho11 + self.rho22
    }

    /// Largest deviation of `rho21` from `conj(rho12)`.
    pub fn hermiticity_error(&self) -> f64 {
        (self.rho21 - self.rho12.conj()).norm()
    }

    pub fn validate(&self) -> Result<()> {
        let values = [
            self.rho11,
            self.rho22,
            self.rho12.re,
            self.rho12.im,
            self.rho21.re,
            self.rho21.im,
        ];
        if values.iter().any(|v| !v.is_finite()) {
            return Err(ZenoError::InvalidDensity("non-finite entry".into()));
        }
        if (self.trace() - 1.0).abs() > STATE_TOLERANCE {
            return Err(ZenoError::InvalidDensity(format!("trace {} != 1", self.trace())));
        }
        if self.hermiticity_error() > STATE_TOLERANCE {
            return Err(ZenoError::InvalidDensity(format!(
                "not hermitian: rho12 = {}, rho21 = {}",
                self.rho12, self.rho21
            )));
        }
        let in_unit = |p: f64| (-STATE_TOLERANCE..=1.0 + STATE_TOLERANCE).contains(&p);
        if !in_unit(self.rho11) || !in_unit(self.rho22) {
            return Err(ZenoError::InvalidDensity(format!(
                "populations ({}, {}) outside [0, 1]",
                self.rho11, self.rho22
            )));
        }
        if self.rho12.norm_sqr() > self.rho11 * self.rho22 + STATE_TOLERANCE {
            return Err(ZenoError::InvalidDensity(format!(
                "coherence |rho12|^2 = {} exceeds rho11*rho22",
                self.rho12.norm_sqr()
            )));
        }
        Ok(())
    }
}

/// Resonant π-pulse experiment: drive for `T = π/ω`, measure `N` times at
/// spacing `τ = T/N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PulseProtocol {
    omega: f64,
    n_measurements: u32,
}

impl PulseProtocol {
    pub fn new(omega: f64, n_measurements: u32) -> Result<Self> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(ZenoError::InvalidProtocol(format!("omega must be positive, got {omega}")));
        }
        if n_measurements == 0 {
            return Err(ZenoError::ZeroMeasurements);
        }
        Ok(PulseProtocol { omega, n_measurements })
    }

    /// Protocol with unit Rabi frequency; published results depend only on ω·t.
    pub fn with_unit_frequency(n_measurements: u32) -> Result<Self> {
        Self::new(1.0, n_measurements)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn n_measurements(&self) -> u32 {
        self.n_measurements
    }

    pub fn total_time(&self) -> f64 {
        PI / self.omega
    }

    pub fn interval(&self) -> f64 {
        self.total_time() / f64::from(self.n_measurements)
    }
}

pub fn bloch_from_density(rho: &DensityMatrix) -> Result<BlochVector> {
    rho.validate()?;
    let sum = rho.rho21 + rho.rho12;
    // i(ρ12 − ρ21) is real for a hermitian matrix; its real part is Im ρ21 − Im ρ12.
    let r2 = (Complex64::i() * (rho.rho12 - rho.rho21)).re;
    Ok(BlochVector { r1: sum.re, r2, r3: rho.rho22 - rho.rho11 })
}

pub fn density_from_bloch(r: &BlochVector) -> Result<DensityMatrix> {
    r.validate()?;
    let rho12 = Complex64::new(0.5 * r.r1, -0.5 * r.r2);
    Ok(DensityMatrix {
        rho11: 0.5 * (1.0 - r.r3),
        rho22: 0.5 * (1.0 + r.r3),
        rho12,
        rho21: rho12.conj(),
    })
}

/// Exact solution of `dR/dt = (ω, 0, 0) × R` after time `dt`: a rotation
/// about the first axis by the angle `ω·dt`.
pub fn evolve_bloch(r: &BlochVector, omega: f64, dt: f64) -> BlochVector {
    rotate_about_first_axis(r, omega * dt)
}

/// Rotation about the first axis by `angle` radians.
pub fn rotate_about_first_axis(r: &BlochVector, angle: f64) -> BlochVector {
    let (sin, cos) = angle.sin_cos();
    BlochVector {
        r1: r.r1,
        r2: r.r2 * cos - r.r3 * sin,
        r3: r.r3 * cos + r.r2 * sin,
    }
}

/// Integrates the density-matrix equations of motion
///
/// ```text
/// dρ11/dt = i(ω/2)(ρ21 − ρ12)
/// dρ12/dt = i(ω/2)(ρ22 − ρ11)
/// dρ22/dt = i(ω/2)(ρ12 − ρ21)
/// ```
///
/// (with `dρ21/dt` the conjugate of the second line) using `steps` RK4 steps.
pub fn evolve_density_ode(
    rho: &DensityMatrix,
    omega: f64,
    dt: f64,
    steps: usize,
) -> Result<DensityMatrix> {
    evolve_density_ode_observed(rho, omega, dt, steps, |_, _| {})
}

/// As [`evolve_density_ode`], calling `observe` with the state after every step.
pub fn evolve_density_ode_observed<O>(
    rho: &DensityMatrix,
    omega: f64,
    dt: f64,
    steps: usize,
    mut observe: O,
) -> Result<DensityMatrix>
where
    O: FnMut(usize, &DensityMatrix),
{
    rho.validate()?;
    if steps == 0 {
        return Err(ZenoError::ZeroSteps);
    }
    let half = 0.5 * omega;
    let rhs = |y: &[f64; 6]| {
        let s = unpack(y);
        let coupling = Complex64::new(0.0, half);
        let d11 = coupling * (s.rho21 - s.rho12);
        let d22 = coupling * (s.rho12 - s.rho21);
        let d12 = coupling * Complex64::new(s.rho22 - s.rho11, 0.0);
        let d21 = -coupling * Complex64::new(s.rho22 - s.rho11, 0.0);
        [d11.re, d22.re, d12.re, d12.im, d21.re, d21.im]
    };
    let y = rk4_integrate(pack(rho), dt, steps, rhs, |i, y| observe(i, &unpack(y)))?;
    Ok(unpack(&y))
}

fn pack(rho: &DensityMatrix) -> [f64; 6] {
    [rho.rho11, rho.rho22, rho.rho12.re, rho.rho12.im, rho.rho21.re, rho.rho21.im]
}

fn unpack(y: &[f64; 6]) -> DensityMatrix {
    DensityMatrix {
        rho11: y[0],
        rho22: y[1],
        rho12: Complex64::new(y[2], y[3]),
        rho21: Complex64::new(y[4], y[5]),
    }
}

/// Level populations `(P1, P2)` with `P2 = (1 + R3)/2`.
pub fn level_populations(r: &BlochVector) -> (f64, f64) {
    let p2 = 0.5 * (1.0 + r.r3);
    (1.0 - p2, p2)
}
