use crate::error::{Error, Result};

/// Environment variable overriding [`Tolerances::inequality_slack`].
pub const TOL_ENV_VAR: &str = "EXPANDER_FORGE_TOL";

/// Central numerical tolerances. One record, one knob per check.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// Additive slack when testing the spectral-expansion inequalities.
    pub inequality_slack: f64,
    /// Row/column sum deviation allowed in a doubly stochastic matrix.
    pub stochastic: f64,
    /// Frobenius error allowed when reconstructing A from its SVD factors.
    pub svd_reconstruction: f64,
    /// Frobenius error allowed for the square-root split B1*B2 = B.
    pub sqrt_split_reconstruction: f64,
    /// Relative Rayleigh-quotient tolerance for power iteration.
    pub power_iter_tol: f64,
    /// Iteration cap for power iteration.
    pub power_iter_max_iters: usize,
    /// Largest dimension handled by dense SVD; above it, power iteration.
    pub dense_svd_max_dim: usize,
    /// Allowed gap between the dense-SVD and power-iteration values.
    pub oracle_agreement: f64,
    /// Cap on rotation entries for explicit graph powering.
    pub explicit_power_cap: u64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            inequality_slack: 1e-9,
            stochastic: 1e-12,
            svd_reconstruction: 1e-10,
            sqrt_split_reconstruction: 1e-9,
            power_iter_tol: 1e-10,
            power_iter_max_iters: 100_000,
            dense_svd_max_dim: 600,
            oracle_agreement: 1e-8,
            explicit_power_cap: 10_000_000,
        }
    }
}

impl Tolerances {
    /// Defaults, with `EXPANDER_FORGE_TOL` (if set) overriding the
    /// inequality slack.
    pub fn from_env() -> Result<Self> {
        let mut tols = Self::default();
        if let Ok(raw) = std::env::var(TOL_ENV_VAR) {
            let parsed: f64 = raw.trim().parse().map_err(|_| {
                Error::InvalidArgument(format!("{TOL_ENV_VAR} is not a number: {raw:?}"))
            })?;
            if !parsed.is_finite() || parsed <= 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "{TOL_ENV_VAR} must be a positive number, got {raw:?}"
                )));
            }
            tols.inequality_slack = parsed;
        }
        Ok(tols)
    }
}
