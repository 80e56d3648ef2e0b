//! Bracketed root-finding and the adaptive radial-fall integrator.

mod ode;
mod root;

pub use ode::{integrate_radial_fall, integrate_radial_fall_at, IvpSolution, Termination};
pub use root::find_root;

use crate::error::{Error, Result};

/// Tolerances and iteration budgets shared by the root finder and the integrator.
///
/// For [`find_root`], `abs_tol` is in the units of the unknown. For
/// [`integrate_radial_fall`], `abs_tol` is in meters; the velocity component
/// uses the same tolerance converted by the free-fall velocity scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ToleranceConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_iterations: usize,
    pub max_steps: usize,
}

impl ToleranceConfig {
    pub fn new(
        abs_tol: f64,
        rel_tol: f64,
        max_iterations: usize,
        max_steps: usize,
    ) -> Result<Self> {
        let tol = ToleranceConfig {
            abs_tol,
            rel_tol,
            max_iterations,
            max_steps,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        let finite_nonneg = |x: f64| x.is_finite() && x >= 0.0;
        if !finite_nonneg(self.abs_tol) || !finite_nonneg(self.rel_tol) {
            return Err(Error::domain("tolerances must be finite and non-negative"));
        }
        if self.abs_tol == 0.0 && self.rel_tol == 0.0 {
            return Err(Error::domain("abs_tol and rel_tol cannot both be zero"));
        }
        if self.max_iterations == 0 || self.max_steps == 0 {
            return Err(Error::domain(
                "iteration and step budgets must be at least 1",
            ));
        }
        Ok(())
    }

    /// Settings used when the integrator acts as an oracle for the closed forms.
    pub fn oracle() -> Self {
        ToleranceConfig {
            abs_tol: 0.0,
            rel_tol: 1e-11,
            ..Self::default()
        }
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        ToleranceConfig { rel_tol, ..self }
    }

    pub fn with_abs_tol(self, abs_tol: f64) -> Self {
        ToleranceConfig { abs_tol, ..self }
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            abs_tol: 0.0,
            rel_tol: 1e-12,
            max_iterations: 200,
            max_steps: 200_000,
        }
    }
}
