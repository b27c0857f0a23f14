//! Seeded round-trip sweeps: draw `x`, invert, and measure `|j(τ) − x|/(1 + |x|)`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::chain::{invert_verified_with, BranchChoice};
use crate::forward::{j_paper, ThetaConfig};
use crate::numerics::AgmConfig;
use crate::Error;

/// Half-width of the sampling box `[−5, 5] × [−5, 5]`.
pub const BOX_HALF_WIDTH: f64 = 5.0;

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub samples: usize,
    pub seed: u64,
    /// Tolerance handed to the verified inverse.
    pub tol: f64,
    /// Replace the first draw by `x = 0`.
    pub include_zero: bool,
    pub agm: AgmConfig,
    pub theta: ThetaConfig,
}

impl SweepConfig {
    pub fn new(samples: usize, seed: u64, tol: f64) -> Self {
        Self {
            samples,
            seed,
            tol,
            include_zero: false,
            agm: AgmConfig::default(),
            theta: ThetaConfig::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepFailure {
    pub x: Complex64,
    pub error: Error,
}

#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub samples: usize,
    /// Relative defects of the successful samples, in draw order.
    pub defects: Vec<f64>,
    pub failures: Vec<SweepFailure>,
    /// Number of successes per branch, indexed like [`BranchChoice::ALL`].
    pub branch_histogram: [usize; 6],
}

impl SweepSummary {
    pub fn successes(&self) -> usize {
        self.defects.len()
    }

    pub fn max_defect(&self) -> f64 {
        self.defects.iter().copied().fold(0.0, f64::max)
    }

    pub fn median_defect(&self) -> f64 {
        if self.defects.is_empty() {
            return f64::NAN;
        }
        let mut sorted = self.defects.clone();
        sorted.sort_by(f64::total_cmp);
        let n = sorted.len();
        if n % 2 == 1 {
            sorted[n / 2]
        } else {
            0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
        }
    }
}

/// The `n` sample points drawn for `seed`, uniform in the box.
pub fn sample_points(n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = SplitMix64::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let re = rng.random_range(-BOX_HALF_WIDTH..=BOX_HALF_WIDTH);
            let im = rng.random_range(-BOX_HALF_WIDTH..=BOX_HALF_WIDTH);
            Complex64::new(re, im)
        })
        .collect()
}

pub fn run(cfg: &SweepConfig) -> SweepSummary {
    let mut points = sample_points(cfg.samples, cfg.seed);
    if cfg.include_zero {
        if let Some(first) = points.first_mut() {
            *first = Complex64::new(0.0, 0.0);
        }
    }
    let mut summary = SweepSummary {
        samples: points.len(),
        defects: Vec::with_capacity(points.len()),
        failures: Vec::new(),
        branch_histogram: [0; 6],
    };
    for x in points {
        let outcome = invert_verified_with(x, cfg.tol, &cfg.agm, &cfg.theta).and_then(|r| {
            let j = j_paper(r.tau, &cfg.theta)?;
            Ok(((j - x).norm() / (1.0 + x.norm()), r.branch_used))
        });
        match outcome {
            Ok((defect, branch)) => {
                summary.defects.push(defect);
                summary.branch_histogram[branch.index()] += 1;
            }
            Err(error) => summary.failures.push(SweepFailure { x, error }),
        }
    }
    summary
}

/// Display labels for the histogram slots.
pub fn branch_labels() -> [String; 6] {
    BranchChoice::ALL.map(|b| b.to_string())
}
