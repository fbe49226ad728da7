//! Run configuration: problem parameters, tunable constants, mode flags.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("epsilon must lie in (0, 1/2), got {0}")]
    EpsilonRange(f64),
    #[error("k must be at least 1")]
    KRange,
    #[error("delta must be at least 1")]
    DeltaRange,
    #[error("sampler budget relation violated: kappa^2/(sigma*Gamma^2) = {got:.3e} < {want:.3e} (kappa={kappa}, sigma={sigma}, gamma={gamma})")]
    BudgetRelation {
        got: f64,
        want: f64,
        kappa: u32,
        sigma: u32,
        gamma: u32,
    },
    #[error("config file: {0}")]
    Io(#[from] std::io::Error),
    #[error("config file: {0}")]
    Parse(#[from] serde_json::Error),
}

/// Tunable constants. The estimation guarantees fix only the shapes of these
/// quantities; the concrete values here are desk-scale defaults and every one
/// of them can be overridden from a config file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default)]
pub struct Constants {
    /// Portals per side = ceil(c_p / epsilon * log2 L).
    pub c_p: f64,
    /// Cell subdivision gamma = smallest power of two >= c_g / epsilon.
    pub c_g: f64,
    /// Rounding level: largest i' with 2^i' <= c_round * epsilon * (1+eps)^i.
    pub c_round: f64,
    /// kappa = clamp(kappa_c * log2(k) * log2(delta) / epsilon, 8, kappa_max).
    pub kappa_c: f64,
    /// sigma = clamp(sigma_c * k * kappa * log2(delta), 64, sigma_max).
    pub sigma_c: f64,
    /// Hard cap on kappa (memory/time budget).
    pub kappa_max: u32,
    /// Hard cap on sigma (memory/time budget).
    pub sigma_max: u32,
    /// Gamma = max(4, gamma_scale / epsilon^2 * log2(delta)).
    pub gamma_scale: f64,
    /// Cap on active portals per DP subproblem.
    pub a_max: u32,
    /// Candidate boundary points per side considered by the DP (1 = corners
    /// only, 2 = corners plus side midpoints).
    pub portal_candidates_per_side: u32,
    /// Floor for the net radius parameter used by the augmentation step.
    pub delta_floor: f64,
    /// Cap on the net sketch sparsity parameter T.
    pub net_t_cap: u32,
    /// Required lower bound for kappa^2 / (sigma * Gamma^2), checked at startup.
    pub failure_exponent: f64,
    /// Additive term coefficient is eps^3 / (k * log2(delta)) * additive_scale.
    pub additive_scale: f64,
    /// Repetition rows in sparse recovery structures.
    pub recovery_reps: u32,
    /// Per-level sparsity of the recovery inside each l0 sampler.
    pub sampler_t: u32,
    /// Repetitions of the l0 norm estimator.
    pub norm_reps: u32,
    /// Bucket multiplier for the l0 norm estimator (buckets ~ norm_buckets_c / eps^2).
    pub norm_buckets_c: f64,
}

impl Default for Constants {
    fn default() -> Self {
        Constants {
            c_p: 1.0,
            c_g: 1.0,
            c_round: 0.25,
            kappa_c: 2.0,
            sigma_c: 4.0,
            kappa_max: 48,
            sigma_max: 512,
            gamma_scale: 1.0,
            a_max: 2,
            portal_candidates_per_side: 2,
            delta_floor: 0.02,
            net_t_cap: 2048,
            failure_exponent: 1e-6,
            additive_scale: 1.0,
            recovery_reps: 4,
            sampler_t: 3,
            norm_reps: 5,
            norm_buckets_c: 6.0,
        }
    }
}

/// Full run configuration.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Config {
    pub epsilon: f64,
    pub k: u32,
    /// Grid bound; normalized to the next power of two on validation.
    pub delta: u64,
    pub seed: u64,
    #[serde(default)]
    pub constants: Constants,
    /// Reject streams that delete points not currently present.
    #[serde(default)]
    pub strict: bool,
    /// Force sequential execution even when compiled with the parallel feature.
    #[serde(default)]
    pub sequential: bool,
    /// Trace the color partition realized at the DP root into the report.
    #[serde(default = "default_true")]
    pub emit_partition: bool,
}

fn default_true() -> bool {
    true
}

impl Config {
    pub fn new(epsilon: f64, k: u32, delta: u64, seed: u64) -> Self {
        Config {
            epsilon,
            k,
            delta,
            seed,
            constants: Constants::default(),
            strict: false,
            sequential: false,
            emit_partition: true,
        }
    }

    /// Validates ranges and normalizes delta up to a power of two.
    pub fn validated(mut self) -> Result<Self, ConfigError> {
        if !(self.epsilon > 0.0 && self.epsilon < 0.5) {
            return Err(ConfigError::EpsilonRange(self.epsilon));
        }
        if self.k < 1 {
            return Err(ConfigError::KRange);
        }
        if self.delta < 1 {
            return Err(ConfigError::DeltaRange);
        }
        self.delta = self.delta.next_power_of_two();
        Ok(self)
    }

    pub fn from_json_file(path: &std::path::Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)?;
        let cfg: Config = serde_json::from_str(&text)?;
        cfg.validated()
    }

    /// log2 of the root side length L = 2*delta.
    pub fn log2_l(&self) -> u32 {
        (2 * self.delta).trailing_zeros()
    }

    pub fn log2_delta(&self) -> f64 {
        (self.delta as f64).log2().max(1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_normalized_to_power_of_two() {
        let cfg = Config::new(0.25, 2, 100, 1).validated().unwrap();
        assert_eq!(cfg.delta, 128);
        assert_eq!(cfg.log2_l(), 8);
    }

    #[test]
    fn epsilon_range_enforced() {
        assert!(Config::new(0.5, 2, 64, 1).validated().is_err());
        assert!(Config::new(0.0, 2, 64, 1).validated().is_err());
        assert!(Config::new(0.49, 2, 64, 1).validated().is_ok());
    }
}
