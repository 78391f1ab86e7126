//! Monte Carlo sampling of measurement histories.
//!
//! Each simulated atom starts in level 1 and, at each of the N measurements,
//! flips level with probability `sin²(π/2N)`. One stream of trajectories
//! yields both estimators: final level 1 (occupation) and level 1 at every
//! measurement (survival, i.e. post-selection).
//!
//! Trials are split into fixed-size batches. Batch `b` draws from a ChaCha8
//! generator keyed by the seed with stream id `b`, so the merged counts are
//! identical no matter how batches are scheduled across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinatorics::{FlipKernel, Level, TrajectoryHistory};
use crate::error::{Result, ZenoError};

pub const DEFAULT_SEED: u64 = 0x5EED_2E20;

/// Trials per RNG substream.
pub const BATCH_SIZE: u64 = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MCEstimate {
    pub n_measurements: u32,
    pub trials: u64,
    /// Seed of the run (the first run's seed after a merge).
    pub seed: u64,
    pub occupation_hits: u64,
    pub survival_hits: u64,
    pub occupation_p1: f64,
    pub survival_p1: f64,
    pub stderr_occupation: f64,
    pub stderr_survival: f64,
}

impl MCEstimate {
    pub fn from_counts(
        n_measurements: u32,
        trials: u64,
        seed: u64,
        occupation_hits: u64,
        survival_hits: u64,
    ) -> Result<Self> {
        if trials == 0 {
            return Err(ZenoError::ZeroTrials);
        }
        if occupation_hits > trials || survival_hits > occupation_hits {
            return Err(ZenoError::IncompatibleEstimates(format!(
                "counts out of range: {survival_hits} <= {occupation_hits} <= {trials} violated"
            )));
        }
        let m = trials as f64;
        let occupation_p1 = occupation_hits as f64 / m;
        let survival_p1 = survival_hits as f64 / m;
        Ok(MCEstimate {
            n_measurements,
            trials,
            seed,
            occupation_hits,
            survival_hits,
            occupation_p1,
            survival_p1,
            stderr_occupation: binomial_stderr(occupation_p1, m),
            stderr_survival: binomial_stderr(survival_p1, m),
        })
    }

    /// Pools the counts of two runs over the same N.
    pub fn merge(&self, other: &MCEstimate) -> Result<MCEstimate> {
        if self.n_measurements != other.n_measurements {
            return Err(ZenoError::IncompatibleEstimates(format!(
                "N = {} vs N = {}",
                self.n_measurements, other.n_measurements
            )));
        }
        MCEstimate::from_counts(
            self.n_measurements,
            self.trials + other.trials,
            self.seed,
            self.occupation_hits + other.occupation_hits,
            self.survival_hits + other.survival_hits,
        )
    }
}

fn binomial_stderr(p: f64, m: f64) -> f64 {
    (p * (1.0 - p) / m).sqrt()
}

/// Walks one trajectory, calling `visit` with the level found at each
/// measurement. Consumes exactly N uniform draws.
fn walk<R: Rng + ?Sized>(kernel: &FlipKernel, rng: &mut R, mut visit: impl FnMut(Level)) {
    let flip = kernel.flip_prob();
    let mut level = Level::One;
    for _ in 0..kernel.n_measurements() {
        if rng.random::<f64>() < flip {
            level = level.flipped();
        }
        visit(level);
    }
}

pub fn sample_trajectory<R: Rng + ?Sized>(kernel: &FlipKernel, rng: &mut R) -> TrajectoryHistory {
    let mut levels = Vec::with_capacity(kernel.n_measurements() as usize);
    walk(kernel, rng, |level| levels.push(level));
    TrajectoryHistory::new(levels)
}

/// Generator for substream `batch` of `seed`.
pub fn substream(seed: u64, batch: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    rng
}

/// `(occupation_hits, survival_hits)` for one batch.
fn run_batch(kernel: &FlipKernel, seed: u64, batch: u64, trials: u64) -> (u64, u64) {
    let mut rng = substream(seed, batch);
    let (mut occupied, mut survived) = (0u64, 0u64);
    for _ in 0..trials {
        let mut never_left = true;
        let mut last = Level::One;
        walk(kernel, &mut rng, |level| {
            never_left &= level == Level::One;
            last = level;
        });
        if last == Level::One {
            occupied += 1;
        }
        if never_left {
            survived += 1;
        }
    }
    (occupied, survived)
}

fn batch_sizes(trials: u64) -> impl ParallelIterator<Item = (u64, u64)> {
    let batches = trials.div_ceil(BATCH_SIZE);
    (0..batches)
        .into_par_iter()
        .map(move |b| (b, BATCH_SIZE.min(trials - b * BATCH_SIZE)))
}

/// Estimates occupation and survival of level 1 from `trials` trajectories.
/// Batches run in parallel; the result depends only on `(N, trials, seed)`.
pub fn estimate(n_measurements: u32, trials: u64, seed: u64) -> Result<MCEstimate> {
    let kernel = FlipKernel::new(n_measurements)?;
    if trials == 0 {
        return Err(ZenoError::ZeroTrials);
    }
    let (occupied, survived) = batch_sizes(trials)
        .map(|(b, size)| run_batch(&kernel, seed, b, size))
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    MCEstimate::from_counts(n_measurements, trials, seed, occupied, survived)
}

/// Single-threaded twin of [`estimate`], batch by batch in order.
pub fn estimate_serial(n_measurements: u32, trials: u64, seed: u64) -> Result<MCEstimate> {
    let kernel = FlipKernel::new(n_measurements)?;
    if trials == 0 {
        return Err(ZenoError::ZeroTrials);
    }
    let (mut occupied, mut survived) = (0, 0);
    let mut done = 0;
    let mut batch = 0;
    while done < trials {
        let size = BATCH_SIZE.min(trials - done);
        let (o, s) = run_batch(&kernel, seed, batch, size);
        occupied += o;
        survived += s;
        done += size;
        batch += 1;
    }
    MCEstimate::from_counts(n_measurements, trials, seed, occupied, survived)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{history_probability, occupation_from_binomial, survival_closed_form};

    #[test]
    fn single_measurement_always_flips() {
        let kernel = FlipKernel::new(1).unwrap();
        let mut rng = substream(DEFAULT_SEED, 0);
        for _ in 0..10_000 {
            assert_eq!(sample_trajectory(&kernel, &mut rng).levels(), &[Level::Two]);
        }
        let est = estimate(1, 12_345, 7).unwrap();
        assert_eq!(est.occupation_p1, 0.0);
        assert_eq!(est.survival_p1, 0.0);
    }

    #[test]
    fn two_measurement_survivor_fraction() {
        let kernel = FlipKernel::new(2).unwrap();
        let target = TrajectoryHistory::from_labels(&[1, 1]).unwrap();
        let expected = history_probability(&target, &kernel).unwrap();
        let mut rng = substream(DEFAULT_SEED, 0);
        let m = 1_000_000;
        let hits = (0..m).filter(|_| sample_trajectory(&kernel, &mut rng) == target).count();
        let frac = hits as f64 / m as f64;
        assert!((frac - 0.25).abs() < 0.0013, "fraction {frac}");
        assert!((frac - expected).abs() < 0.0013);
    }

    #[test]
    fn four_measurement_even_flip_fraction() {
        let kernel = FlipKernel::new(4).unwrap();
        let mut rng = substream(DEFAULT_SEED, 1);
        let m = 1_000_000;
        let even = (0..m)
            .filter(|_| sample_trajectory(&kernel, &mut rng).flip_count().is_multiple_of(2))
            .count();
        let frac = even as f64 / m as f64;
        assert!((frac - 0.625).abs() < 0.0015, "fraction {frac}");
    }

    #[test]
    fn estimate_examples() {
        let est = estimate(2, 1_000_000, DEFAULT_SEED).unwrap();
        assert!((est.occupation_p1 - 0.5).abs() < 3.0 * est.stderr_occupation);
        assert!((est.survival_p1 - 0.25).abs() < 3.0 * est.stderr_survival);

        let est = estimate(16, 1_000_000, DEFAULT_SEED).unwrap();
        let (surv1, _) = survival_closed_form(16).unwrap();
        assert!((est.survival_p1 - surv1).abs() < 3.0 * est.stderr_survival);
        assert!((est.survival_p1 - 0.8569).abs() < 3.0 * est.stderr_survival);
        let (p1, _) = occupation_from_binomial(&FlipKernel::new(16).unwrap());
        assert!((est.occupation_p1 - p1).abs() < 4.0 * est.stderr_occupation);
    }

    #[test]
    fn errors() {
        assert_eq!(estimate(4, 0, 1), Err(ZenoError::ZeroTrials));
        assert_eq!(estimate(0, 10, 1), Err(ZenoError::ZeroMeasurements));
        assert_eq!(estimate_serial(4, 0, 1), Err(ZenoError::ZeroTrials));
        let a = estimate(4, 100, 1).unwrap();
        let b = estimate(5, 100, 1).unwrap();
        assert!(matches!(a.merge(&b), Err(ZenoError::IncompatibleEstimates(_))));
    }

    #[test]
    fn deterministic_replay_and_schedule_independence() {
        let trials = 3 * BATCH_SIZE + 17;
        let a = estimate(8, trials, 99).unwrap();
        let b = estimate(8, trials, 99).unwrap();
        let c = estimate_serial(8, trials, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_ne!(a, estimate(8, trials, 100).unwrap());
    }

    #[test]
    fn standard_error_formula() {
        let est = estimate(3, 50_000, 5).unwrap();
        let m = est.trials as f64;
        let p = est.occupation_p1;
        assert_eq!(est.stderr_occupation, (p * (1.0 - p) / m).sqrt());
        assert!(est.survival_hits <= est.occupation_hits);
    }

    #[test]
    fn merge_pools_counts() {
        let a = estimate(8, 200_000, 1).unwrap();
        let b = estimate(8, 200_000, 2).unwrap();
        let merged = a.merge(&b).unwrap();
        assert_eq!(merged.trials, 400_000);
        assert_eq!(merged.occupation_hits, a.occupation_hits + b.occupation_hits);
        assert_eq!(merged.seed, 1);
        let ratio = a.stderr_occupation / merged.stderr_occupation;
        assert!((ratio - 2f64.sqrt()).abs() < 0.01, "ratio {ratio}");
    }
}
