use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hyper-parameters of a construction run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SolverConfig {
    pub learning_rate: f64,
    /// Maximum number of passes over the circle loop.
    pub max_epochs: usize,
    /// Gradient steps allowed per constraint and epoch.
    pub steps_per_constraint: usize,
    /// Total loss at or below which a configuration counts as constructed.
    pub loss_tol: f64,
    /// Margin certifying the open conditions of ¬P and ¬D.
    pub strict_margin: f64,
    /// Extra hinge offset used while descending, so that the reported losses
    /// reach exactly zero instead of hovering at the boundary.
    pub descent_slack: f64,
    /// Fixed radius of atomic circles.
    pub atomic_radius: f64,
    pub init_radius: f64,
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            learning_rate: 1e-4,
            max_epochs: 1,
            steps_per_constraint: 50_000,
            loss_tol: 1e-6,
            strict_margin: 1e-3,
            descent_slack: 1e-3,
            atomic_radius: 0.01,
            init_radius: (-1.0f64).exp(),
            seed: 0,
        }
    }
}

impl SolverConfig {
    /// Checks the parameter invariants against a sphere of radius `sphere_radius`.
    pub fn validate(&self, sphere_radius: f64) -> Result<()> {
        let positive = [
            ("learning_rate", self.learning_rate),
            ("loss_tol", self.loss_tol),
            ("strict_margin", self.strict_margin),
            ("atomic_radius", self.atomic_radius),
            ("init_radius", self.init_radius),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be positive, got {v}"
                )));
            }
        }
        if !(self.descent_slack >= 0.0 && self.descent_slack.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "descent_slack must be nonnegative, got {}",
                self.descent_slack
            )));
        }
        if self.max_epochs == 0 || self.steps_per_constraint == 0 {
            return Err(Error::InvalidConfig(
                "max_epochs and steps_per_constraint must be positive".into(),
            ));
        }
        let half = std::f64::consts::PI * sphere_radius / 2.0;
        if !(self.atomic_radius < self.init_radius && self.init_radius < half) {
            return Err(Error::InvalidConfig(format!(
                "need atomic_radius < init_radius < πR/2, got {} and {}",
                self.atomic_radius, self.init_radius
            )));
        }
        Ok(())
    }
}
