use serde::{Deserialize, Serialize};

use super::EstimateError;
use crate::seed;

/// Accuracy target, constant multipliers for every sample size, and the
/// master seed all plan and post-processing randomness is derived from.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimatorParams {
    pub epsilon: f64,
    /// Bucket ratio; `epsilon / 10` unless overridden.
    pub gamma: f64,
    pub c_s: f64,
    pub c_t: f64,
    pub c_f: f64,
    pub c_r: f64,
    /// Independent collision-estimate batches of `s` samples each. `1` is the
    /// single-batch estimate; larger values take the median batch count.
    pub collision_batches: usize,
    pub master_seed: u64,
}

/// Sample sizes derived from `(n, params)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleSizes {
    /// `|S| = ⌈c_S √n ln n / ε^2.5⌉`
    pub degree_samples: usize,
    /// `|T| = ⌈c_T √(εn) ln n⌉`
    pub edge_samples: usize,
    /// `R = ⌈c_R ln n⌉`
    pub collision_reps: usize,
    /// `⌈√(2n)⌉`
    pub collision_batch: usize,
    /// `s = ⌈c_F √n ln n / ε⌉`
    pub collision_samples: usize,
    pub collision_batches: usize,
}

impl SampleSizes {
    pub fn is_collision_total(&self) -> usize {
        self.collision_reps * self.collision_batch
    }

    pub fn collision_total(&self) -> usize {
        self.collision_samples * self.collision_batches
    }

    pub fn rand_edge_total(&self) -> usize {
        self.edge_samples + self.is_collision_total() + self.collision_total()
    }

    pub fn total(&self) -> usize {
        self.degree_samples + self.rand_edge_total()
    }
}

impl EstimatorParams {
    pub const DEFAULT_C_S: f64 = 2.0;
    pub const DEFAULT_C_T: f64 = 2.0;
    pub const DEFAULT_C_F: f64 = 2.0;
    pub const DEFAULT_C_R: f64 = 5.0;
    pub const MAX_EPSILON: f64 = 0.8;

    pub fn new(epsilon: f64) -> Result<Self, EstimateError> {
        let p = EstimatorParams {
            epsilon,
            gamma: epsilon / 10.0,
            c_s: Self::DEFAULT_C_S,
            c_t: Self::DEFAULT_C_T,
            c_f: Self::DEFAULT_C_F,
            c_r: Self::DEFAULT_C_R,
            collision_batches: 1,
            master_seed: 0,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.master_seed = seed;
        self
    }

    pub fn with_constants(
        mut self,
        c_s: f64,
        c_t: f64,
        c_f: f64,
        c_r: f64,
    ) -> Result<Self, EstimateError> {
        self.c_s = c_s;
        self.c_t = c_t;
        self.c_f = c_f;
        self.c_r = c_r;
        self.validate()?;
        Ok(self)
    }

    pub fn with_gamma(mut self, gamma: f64) -> Result<Self, EstimateError> {
        self.gamma = gamma;
        self.validate()?;
        Ok(self)
    }

    pub fn with_collision_batches(mut self, batches: usize) -> Result<Self, EstimateError> {
        self.collision_batches = batches;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<(), EstimateError> {
        let bad = |msg: String| Err(EstimateError::InvalidParams(msg));
        if !(self.epsilon > 0.0 && self.epsilon <= Self::MAX_EPSILON) {
            return bad(format!(
                "epsilon must lie in (0, 0.8], got {}",
                self.epsilon
            ));
        }
        if !(self.gamma.is_finite() && self.gamma > 0.0) {
            return bad(format!("gamma must be positive, got {}", self.gamma));
        }
        for (name, c) in [
            ("c_s", self.c_s),
            ("c_t", self.c_t),
            ("c_f", self.c_f),
            ("c_r", self.c_r),
        ] {
            if !(c.is_finite() && c > 0.0) {
                return bad(format!("{name} must be positive, got {c}"));
            }
        }
        if self.collision_batches == 0 {
            return bad("collision_batches must be at least 1".into());
        }
        Ok(())
    }

    pub fn sizes(&self, n: usize) -> SampleSizes {
        let nf = n as f64;
        let ln_n = nf.ln();
        let sqrt_n = nf.sqrt();
        let ceil = |x: f64| (x.ceil() as usize).max(1);
        SampleSizes {
            degree_samples: ceil(self.c_s * sqrt_n * ln_n / self.epsilon.powf(2.5)),
            edge_samples: ceil(self.c_t * (self.epsilon * nf).sqrt() * ln_n),
            collision_reps: ceil(self.c_r * ln_n),
            collision_batch: ceil((2.0 * nf).sqrt()),
            collision_samples: ceil(self.c_f * sqrt_n * ln_n / self.epsilon),
            collision_batches: self.collision_batches,
        }
    }

    /// Seed for the vertex sample inside the plan.
    pub fn plan_seed(&self) -> u64 {
        seed::derive_seed(self.master_seed, "plan", 0)
    }

    /// Seed handed to the oracle for its RandEdge draws.
    pub fn answer_seed(&self) -> u64 {
        seed::derive_seed(self.master_seed, "answer", 0)
    }

    /// Seed for the endpoint coin applied to returned edges.
    pub fn coin_seed(&self) -> u64 {
        seed::derive_seed(self.master_seed, "endpoint-coin", 0)
    }
}
