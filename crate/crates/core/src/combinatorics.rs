//! History-resolved probabilities.
//!
//! Between two measurements the atom keeps its level with probability
//! `c² = cos²(π/2N)` and flips with probability `s² = sin²(π/2N)`. A history
//! is the sequence of levels found at the N measurements; its weight is the
//! product of the per-interval factors, and its flip count `n` is the number
//! of level changes counted from the initial level 1.
//!
//! Summing the histories that end in level 1 (even `n`) gives the occupation
//! probability `P1 = Σ_even C(N,n) s²ⁿ c²⁽ᴺ⁻ⁿ⁾ = ½[1 + cosᴺ(π/N)]`. The
//! survival probability keeps only the `n = 0` history: `cos²ᴺ(π/2N)`.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Result, ZenoError};

/// Default guard on [`enumerate_histories`]: 2²⁰ histories.
pub const DEFAULT_ENUMERATION_CAP: u32 = 20;

/// Energy level found by a measurement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    One,
    Two,
}

impl Level {
    pub fn label(self) -> u8 {
        match self {
            Level::One => 1,
            Level::Two => 2,
        }
    }

    pub fn flipped(self) -> Level {
        match self {
            Level::One => Level::Two,
            Level::Two => Level::One,
        }
    }

    pub fn from_label(label: u8) -> Result<Level> {
        match label {
            1 => Ok(Level::One),
            2 => Ok(Level::Two),
            other => Err(ZenoError::InvalidArgument(format!("level label must be 1 or 2, got {other}"))),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Per-interval transition probabilities for an N-measurement π pulse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FlipKernel {
    n_measurements: u32,
    stay_prob: f64,
    flip_prob: f64,
}

impl FlipKernel {
    pub fn new(n_measurements: u32) -> Result<Self> {
        if n_measurements == 0 {
            return Err(ZenoError::ZeroMeasurements);
        }
        let half_angle = PI / (2.0 * f64::from(n_measurements));
        let (s, c) = half_angle.sin_cos();
        Ok(FlipKernel { n_measurements, stay_prob: c * c, flip_prob: s * s })
    }

    pub fn n_measurements(&self) -> u32 {
        self.n_measurements
    }

    /// `cos²(π/2N)`
    pub fn stay_prob(&self) -> f64 {
        self.stay_prob
    }

    /// `sin²(π/2N)`
    pub fn flip_prob(&self) -> f64 {
        self.flip_prob
    }
}

/// Levels found at each of the N measurements.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TrajectoryHistory {
    levels: Vec<Level>,
}

impl TrajectoryHistory {
    pub fn new(levels: Vec<Level>) -> Self {
        TrajectoryHistory { levels }
    }

    pub fn from_labels(labels: &[u8]) -> Result<Self> {
        labels.iter().map(|&l| Level::from_label(l)).collect::<Result<Vec<_>>>().map(Self::new)
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Number of level changes, starting from level 1.
    pub fn flip_count(&self) -> usize {
        let mut prev = Level::One;
        let mut flips = 0;
        for &level in &self.levels {
            if level != prev {
                flips += 1;
            }
            prev = level;
        }
        flips
    }

    /// Level at the last measurement (level 1 for an empty history).
    pub fn final_level(&self) -> Level {
        self.levels.last().copied().unwrap_or(Level::One)
    }

    /// True when level 1 was found at every measurement.
    pub fn survived(&self) -> bool {
        self.levels.iter().all(|&l| l == Level::One)
    }
}

impl fmt::Display for TrajectoryHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, level) in self.levels.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{level}")?;
        }
        Ok(())
    }
}

pub fn history_probability(history: &TrajectoryHistory, kernel: &FlipKernel) -> Result<f64> {
    let expected = kernel.n_measurements() as usize;
    if history.len() != expected {
        return Err(ZenoError::LengthMismatch { expected, got: history.len() });
    }
    let mut prev = Level::One;
    let mut prob = 1.0;
    for &level in history.levels() {
        prob *= if level == prev { kernel.stay_prob() } else { kernel.flip_prob() };
        prev = level;
    }
    Ok(prob)
}

/// All 2ᴺ histories with their probabilities, in lexicographic order
/// (level 1 before level 2, first measurement most significant).
pub fn enumerate_histories(kernel: &FlipKernel) -> Result<Vec<(TrajectoryHistory, f64)>> {
    enumerate_histories_capped(kernel, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_histories_capped(
    kernel: &FlipKernel,
    cap: u32,
) -> Result<Vec<(TrajectoryHistory, f64)>> {
    let n = kernel.n_measurements();
    // Beyond 63 the bit pattern below would overflow regardless of the cap.
    if n > cap || n > 63 {
        return Err(ZenoError::EnumerationCap { n, cap });
    }
    let count = 1u64 << n;
    let mut out = Vec::with_capacity(count as usize);
    for pattern in 0..count {
        let levels = (0..n)
            .rev()
            .map(|bit| if pattern >> bit & 1 == 0 { Level::One } else { Level::Two })
            .collect();
        let history = TrajectoryHistory::new(levels);
        let prob = history_probability(&history, kernel)?;
        out.push((history, prob));
    }
    Ok(out)
}

/// Binomial coefficients `C(n, 0..=n)` by multiplicative recurrence.
pub fn binomial_row(n: u32) -> Vec<f64> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut coeff = 1.0;
    row.push(coeff);
    for k in 1..=n {
        coeff = (coeff * f64::from(n - k + 1) / f64::from(k)).round();
        row.push(coeff);
    }
    row
}

/// Occupation probabilities at `T` as the even/odd split of the binomial
/// distribution of flip counts.
pub fn occupation_from_binomial(kernel: &FlipKernel) -> (f64, f64) {
    let n = kernel.n_measurements();
    let (s2, c2) = (kernel.flip_prob(), kernel.stay_prob());
    let p1: f64 = binomial_row(n)
        .iter()
        .enumerate()
        .step_by(2)
        .map(|(k, coeff)| coeff * s2.powi(k as i32) * c2.powi((n as usize - k) as i32))
        .sum();
    (p1, 1.0 - p1)
}

/// `(cos²ᴺ(π/2N), 1 − cos²ᴺ(π/2N))`: probability of finding level 1 at every
/// measurement, and its complement.
pub fn survival_closed_form(n_measurements: u32) -> Result<(f64, f64)> {
    let kernel = FlipKernel::new(n_measurements)?;
    let surv1 = kernel.stay_prob().powf(f64::from(n_measurements));
    Ok((surv1, 1.0 - surv1))
}
