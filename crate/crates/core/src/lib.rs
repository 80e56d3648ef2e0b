//! Radial free fall under inverse-square gravity.
//!
//! Exact fall times from rest, the constant-g approximation and its error,
//! collapse times, trajectory tabulation, circular and elliptical orbital
//! periods, and an adaptive Runge–Kutta oracle that integrates the equation
//! of motion directly.
//!
//! ```
//! use radialfall::{collapse_time, lookup_body};
//!
//! let earth = lookup_body("earth").unwrap();
//! let t = collapse_time(earth.mean_radius, earth.gravity_field()).unwrap();
//! assert!((t - 894.6).abs() < 0.1);
//! ```

// `!(x > 0.0)` style checks are used so that NaN inputs are rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod constants;
pub mod error;
pub mod freefall;
pub mod numerics;
pub mod orbits;

pub use constants::{
    gravity_field_of, lookup_body, newtonian_constant, Body, GravityField, CATALOG, G_NEWTON,
};
pub use error::{Error, Result};
pub use freefall::{
    approximation_error, bracket_term, collapse_time, fall, fall_time_constant_g, fall_time_exact,
    gravitational_acceleration, radial_speed, radius_at_time, radius_at_time_with,
    sample_trajectory, FallResult, FallScenario, RadialVelocity, Speed, TrajectorySample,
};
pub use numerics::{
    find_root, integrate_radial_fall, integrate_radial_fall_at, IvpSolution, Termination,
    ToleranceConfig,
};
pub use orbits::{
    angular_velocity, circular_period, degenerate_limit_check, elliptical_period, EllipseGeometry,
    LimitRow,
};
