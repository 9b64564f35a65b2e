//! Geometric degree buckets `B_i = {v : deg(v) ∈ ((1+γ)^(i-1), (1+γ)^i]}`.
//!
//! Boundaries come from one table built by repeated multiplication; both
//! bucket assignment and the `(1+γ)^i` weights read that same table.

use super::EstimateError;

#[derive(Clone, Debug, PartialEq)]
pub struct BucketConfig {
    n: usize,
    gamma: f64,
    /// `bounds[i] = (1+γ)^i` for `i` in `0..t`.
    bounds: Vec<f64>,
}

impl BucketConfig {
    pub fn new(n: usize, gamma: f64) -> Result<Self, EstimateError> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(EstimateError::InvalidParams(format!(
                "gamma must be positive, got {gamma}"
            )));
        }
        if n == 0 {
            return Err(EstimateError::InvalidParams("n must be positive".into()));
        }
        let ratio = 1.0 + gamma;
        let mut bounds = vec![1.0];
        while *bounds.last().unwrap() < n as f64 {
            let next = bounds.last().unwrap() * ratio;
            bounds.push(next);
        }
        // Stops at the smallest j with (1+γ)^j >= n, so t = j + 1 = bounds.len().
        Ok(BucketConfig { n, gamma, bounds })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Bucket count `t`.
    pub fn t(&self) -> usize {
        self.bounds.len()
    }

    /// Upper boundary `(1+γ)^i` of bucket `i`.
    pub fn weight(&self, i: usize) -> f64 {
        self.bounds[i]
    }

    pub fn weights(&self) -> &[f64] {
        &self.bounds
    }

    /// Bucket of a vertex with degree `d`; `None` for `d = 0` or degrees
    /// beyond the covered range.
    pub fn bucket_of(&self, d: usize) -> Option<usize> {
        if d == 0 {
            return None;
        }
        let df = d as f64;
        let i = self.bounds.partition_point(|&b| b < df);
        if i < self.bounds.len() {
            Some(i)
        } else {
            None
        }
    }
}

/// `t = ⌈log_{1+γ} n⌉ + 1`, evaluated on the multiplication table.
pub fn bucket_count(n: usize, gamma: f64) -> Result<usize, EstimateError> {
    Ok(BucketConfig::new(n, gamma)?.t())
}

/// The unique `i` with `(1+γ)^(i-1) < d <= (1+γ)^i`.
pub fn bucket_index(d: usize, gamma: f64) -> Result<usize, EstimateError> {
    if d == 0 {
        return Err(EstimateError::NoBucket);
    }
    BucketConfig::new(d, gamma)?
        .bucket_of(d)
        .ok_or(EstimateError::NoBucket)
}
