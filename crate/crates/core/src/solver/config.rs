use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Probability of following an out-edge; `1 - alpha` teleports.
    pub alpha: f64,
    /// L1 threshold on the change between successive iterates.
    pub tol: f64,
    pub max_iters: usize,
    /// Pull-based multiply over the transposed operator using rayon. The
    /// result may differ from the sequential path below `tol`.
    #[serde(default)]
    pub parallel: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            alpha: 0.85,
            tol: 1e-10,
            max_iters: 200,
            parallel: false,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.alpha.is_nan() || self.alpha <= 0.0 || self.alpha >= 1.0 {
            return Err(Error::InvalidConfig(format!("alpha must be in (0, 1), got {}", self.alpha)));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::InvalidConfig(format!("tol must be positive, got {}", self.tol)));
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidConfig("max_iters must be at least 1".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(SolverConfig::default().validate().is_ok());
        for alpha in [0.0, 1.0, -0.5, f64::NAN] {
            assert!(SolverConfig { alpha, ..Default::default() }.validate().is_err());
        }
        assert!(SolverConfig { tol: 0.0, ..Default::default() }.validate().is_err());
        assert!(SolverConfig { max_iters: 0, ..Default::default() }.validate().is_err());
    }
}
