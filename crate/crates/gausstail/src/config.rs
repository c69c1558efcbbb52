//! Run configuration: every tolerance and resolution default in one place,
//! optionally overridden by a JSON file so acceptance runs stay auditable.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid config: {0}")]
    Parse(String),
    #[error("invalid config value: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    /// Relative tolerance for closed-form coefficient checks.
    pub exact_rel_tol: f64,
    /// Oracle fit: relative tolerance on the area term.
    pub sigma2_rel_tol: f64,
    /// Oracle fit: absolute fallback when the exact area is zero.
    pub sigma2_abs_tol: f64,
    /// Oracle fit: relative tolerance on the boundary-length term.
    pub l1_rel_tol: f64,
    /// Oracle fit: absolute tolerance on the constant term.
    pub l0_abs_tol: f64,
    /// Relative tolerance on fitted 3D tube coefficients.
    pub coeff_3d_rel_tol: f64,
    /// Relative tolerance on the tangent-pair intersection law.
    pub tangent_rel_tol: f64,
    /// Allowed |p_hat/expansion - 1| in calibrated simulate comparisons.
    pub expansion_ratio_tol: f64,
    /// Accepted band for the joint-exceedance ratio.
    pub joint_ratio_low: f64,
    pub joint_ratio_high: f64,
    /// Monte Carlo discretization step (curves; interiors use twice this).
    pub mc_h: f64,
    pub mc_replicates: u64,
    /// Cell budget for oracle distance fields.
    pub oracle_cell_cap: usize,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            exact_rel_tol: 1e-12,
            sigma2_rel_tol: 0.005,
            sigma2_abs_tol: 1e-3,
            l1_rel_tol: 0.02,
            l0_abs_tol: 0.05,
            coeff_3d_rel_tol: 0.03,
            tangent_rel_tol: 0.02,
            expansion_ratio_tol: 0.15,
            joint_ratio_low: 0.5,
            joint_ratio_high: 1.5,
            mc_h: 0.005,
            mc_replicates: 100_000,
            oracle_cell_cap: crate::tube_oracle::DEFAULT_CELL_CAP,
        }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), ConfigError> {
        let positives = [
            ("exact_rel_tol", self.exact_rel_tol),
            ("sigma2_rel_tol", self.sigma2_rel_tol),
            ("sigma2_abs_tol", self.sigma2_abs_tol),
            ("l1_rel_tol", self.l1_rel_tol),
            ("l0_abs_tol", self.l0_abs_tol),
            ("coeff_3d_rel_tol", self.coeff_3d_rel_tol),
            ("tangent_rel_tol", self.tangent_rel_tol),
            ("expansion_ratio_tol", self.expansion_ratio_tol),
            ("mc_h", self.mc_h),
        ];
        for (name, v) in positives {
            if !(v > 0.0 && v.is_finite()) {
                return Err(ConfigError::Invalid(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
        }
        if !(self.joint_ratio_low > 0.0 && self.joint_ratio_low < self.joint_ratio_high) {
            return Err(ConfigError::Invalid(format!(
                "need 0 < joint_ratio_low < joint_ratio_high, got {} and {}",
                self.joint_ratio_low, self.joint_ratio_high
            )));
        }
        if self.mc_replicates == 0 || self.oracle_cell_cap == 0 {
            return Err(ConfigError::Invalid(
                "mc_replicates and oracle_cell_cap must be nonzero".into(),
            ));
        }
        Ok(())
    }
}

/// Load a config file, or the documented defaults when no path is given.
pub fn load(path: Option<&Path>) -> Result<Config, ConfigError> {
    let config = match path {
        None => Config::default(),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|source| ConfigError::Io {
                path: p.display().to_string(),
                source,
            })?;
            serde_json::from_str(&text).map_err(|e| ConfigError::Parse(e.to_string()))?
        }
    };
    config.validate()?;
    Ok(config)
}
