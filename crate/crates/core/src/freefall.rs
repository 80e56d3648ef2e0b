//! Closed-form radial free fall from rest under an inverse-square field.

use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use crate::constants::GravityField;
use crate::error::{Error, Result};
use crate::numerics::{find_root, ToleranceConfig};

/// Radial velocity of a sample. Falling bodies have `Finite(v)` with `v ≤ 0`;
/// at the central point the velocity diverges and is reported as `Unbounded`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RadialVelocity {
    Finite(f64),
    Unbounded,
}

impl RadialVelocity {
    pub fn finite(self) -> Option<f64> {
        match self {
            RadialVelocity::Finite(v) => Some(v),
            RadialVelocity::Unbounded => None,
        }
    }

    pub fn is_unbounded(self) -> bool {
        matches!(self, RadialVelocity::Unbounded)
    }
}

/// Impact speed `|v|` at the target radius.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Speed {
    Finite(f64),
    Unbounded,
}

impl Speed {
    pub fn finite(self) -> Option<f64> {
        match self {
            Speed::Finite(v) => Some(v),
            Speed::Unbounded => None,
        }
    }
}

/// Release radius `r0`, target radius `r1` and the attracting field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FallScenario {
    r0: f64,
    r1: f64,
    field: GravityField,
}

impl FallScenario {
    pub fn new(r0: f64, r1: f64, field: GravityField) -> Result<Self> {
        if !(r0.is_finite() && r0 > 0.0) {
            return Err(Error::domain(format!(
                "r0 must be positive and finite, got {r0}"
            )));
        }
        if !(r1 >= 0.0) {
            return Err(Error::domain(format!("r1 must be non-negative, got {r1}")));
        }
        if r1 > r0 {
            return Err(Error::domain(format!("r1 exceeds r0 ({r1} > {r0})")));
        }
        Ok(FallScenario { r0, r1, field })
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn r1(&self) -> f64 {
        self.r1
    }

    pub fn field(&self) -> GravityField {
        self.field
    }

    /// K = r1 / r0.
    pub fn ratio(&self) -> f64 {
        self.r1 / self.r0
    }

    /// Fraction of the release radius that is fallen, 1 − K.
    pub fn drop_fraction(&self) -> f64 {
        (self.r0 - self.r1) / self.r0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FallResult {
    pub elapsed: f64,
    pub impact_speed: Speed,
}

/// One `(t, r, v)` point along a fall.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectorySample {
    pub t: f64,
    pub r: f64,
    pub v: RadialVelocity,
}

/// The dimensionless factor f(K) = π/2 − asin(√K) + √(K(1−K)).
///
/// Evaluated as asin(√(1−K)) + √(K(1−K)), which stays accurate as K → 1.
pub fn bracket_term(k: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&k) {
        return Err(Error::domain(format!("K must lie in [0, 1], got {k}")));
    }
    Ok(bracket_term_parts(k, 1.0 - k))
}

/// `one_minus_k` is passed separately so callers that know the drop fraction
/// directly do not lose it to rounding in `1 − K`.
#[inline]
fn bracket_term_parts(k: f64, one_minus_k: f64) -> f64 {
    one_minus_k.sqrt().asin() + (k * one_minus_k).sqrt()
}

/// √(r0³ / (2μ)), the time scale multiplying f(K).
#[inline]
fn fall_scale(r0: f64, mu: f64) -> f64 {
    (r0 * r0 * r0 / (2.0 * mu)).sqrt()
}

pub fn fall_time_exact(scenario: &FallScenario) -> f64 {
    fall_scale(scenario.r0, scenario.field.mu())
        * bracket_term_parts(scenario.ratio(), scenario.drop_fraction())
}

/// Fall time together with the speed at the target radius.
pub fn fall(scenario: &FallScenario) -> FallResult {
    let impact_speed = if scenario.r1 == 0.0 {
        Speed::Unbounded
    } else {
        Speed::Finite(speed_at(scenario.r1, scenario.r0, scenario.field.mu()))
    };
    FallResult {
        elapsed: fall_time_exact(scenario),
        impact_speed,
    }
}

/// Constant-acceleration drop time √(2h/g).
pub fn fall_time_constant_g(h: f64, g: f64) -> Result<f64> {
    if !(h >= 0.0 && h.is_finite()) {
        return Err(Error::domain(format!(
            "drop height must be non-negative, got {h}"
        )));
    }
    if !(g > 0.0 && g.is_finite()) {
        return Err(Error::domain(format!(
            "acceleration must be positive, got {g}"
        )));
    }
    Ok((2.0 * h / g).sqrt())
}

/// μ / r².
pub fn gravitational_acceleration(r: f64, field: GravityField) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain(format!("radius must be positive, got {r}")));
    }
    Ok(field.mu() / (r * r))
}

#[inline]
fn speed_at(r: f64, r0: f64, mu: f64) -> f64 {
    // 2μ(1/r − 1/r0) written without the subtraction of reciprocals
    (2.0 * mu * ((r0 - r) / (r * r0))).sqrt()
}

/// dr/dt = −√(2μ(1/r − 1/r0)) at radius `r` of the scenario's fall.
pub fn radial_speed(r: f64, scenario: &FallScenario) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain(format!(
            "radial speed is unbounded at the center; radius must be positive, got {r}"
        )));
    }
    if r > scenario.r0 || r < scenario.r1 {
        return Err(Error::domain(format!(
            "radius {r} lies outside the fall interval [{}, {}]",
            scenario.r1, scenario.r0
        )));
    }
    Ok(-speed_at(r, scenario.r0, scenario.field.mu()))
}

/// Time to fall from rest at `radius` to the central point, (π/2)·√(R³/(2μ)).
pub fn collapse_time(radius: f64, field: GravityField) -> Result<f64> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::domain(format!(
            "radius must be positive, got {radius}"
        )));
    }
    Ok(FRAC_PI_2 * fall_scale(radius, field.mu()))
}

/// Radius reached `t` seconds after release from rest at `r0`.
///
/// Inverts the closed-form fall time by bracketed root-finding on `[0, r0]`.
/// The residual in time is at most `1e-9 · T_C`, except for `t` within about
/// `1e-8 · T_C` of release, where the first representable radius below `r0`
/// is already further away in time than that; the closest representable
/// radius is returned there.
pub fn radius_at_time(t: f64, r0: f64, field: GravityField) -> Result<f64> {
    radius_at_time_with(t, r0, field, &ToleranceConfig::default())
}

pub fn radius_at_time_with(
    t: f64,
    r0: f64,
    field: GravityField,
    tol: &ToleranceConfig,
) -> Result<f64> {
    let t_c = collapse_time(r0, field)?;
    if !(t >= 0.0) {
        return Err(Error::domain(format!("time must be non-negative, got {t}")));
    }
    if t > t_c {
        return Err(Error::domain(format!(
            "time {t} exceeds the collapse time {t_c}"
        )));
    }
    if t == 0.0 {
        return Ok(r0);
    }
    if t == t_c {
        return Ok(0.0);
    }

    let mu = field.mu();
    let scale = fall_scale(r0, mu);
    let time_to = |r: f64| scale * bracket_term_parts(r / r0, (r0 - r) / r0);
    let root_tol = ToleranceConfig {
        abs_tol: 0.0,
        rel_tol: 2.0 * f64::EPSILON,
        ..*tol
    };
    let r = find_root(|r| time_to(r) - t, 0.0, r0, &root_tol)?;

    // polish to the best neighbouring representable radius
    let best = [r.next_down(), r, r.next_up()]
        .into_iter()
        .filter(|x| (0.0..=r0).contains(x))
        .min_by(|a, b| (time_to(*a) - t).abs().total_cmp(&(time_to(*b) - t).abs()))
        .unwrap_or(r);
    Ok(best)
}

/// `n` samples at uniformly spaced times from release at `r0` to arrival at
/// `floor_radius`.
pub fn sample_trajectory(
    r0: f64,
    field: GravityField,
    n: usize,
    floor_radius: f64,
) -> Result<Vec<TrajectorySample>> {
    if n < 2 {
        return Err(Error::domain(format!("need at least 2 samples, got {n}")));
    }
    if !(floor_radius >= 0.0 && floor_radius < r0) {
        return Err(Error::domain(format!(
            "floor radius must lie in [0, r0) = [0, {r0}), got {floor_radius}"
        )));
    }
    let scenario = FallScenario::new(r0, floor_radius, field)?;
    let total = fall_time_exact(&scenario);
    let last = n - 1;

    (0..n)
        .map(|i| {
            let (t, r) = match i {
                0 => (0.0, r0),
                i if i == last => (total, floor_radius),
                i => {
                    let t = total * (i as f64 / last as f64);
                    (t, radius_at_time(t, r0, field)?.max(floor_radius))
                }
            };
            let v = if r == 0.0 {
                RadialVelocity::Unbounded
            } else {
                RadialVelocity::Finite(radial_speed(r, &scenario)?)
            };
            Ok(TrajectorySample { t, r, v })
        })
        .collect()
}

/// Relative error of the constant-g drop time against the exact one for a
/// drop of height `h` from `r0`, with g taken at the release radius.
///
/// Behaves as ε/6 for ε = h/r0 → 0.
pub fn approximation_error(r0: f64, h: f64, field: GravityField) -> Result<f64> {
    if !(r0 > 0.0 && r0.is_finite()) {
        return Err(Error::domain(format!("r0 must be positive, got {r0}")));
    }
    if !(h > 0.0 && h <= r0) {
        return Err(Error::domain(format!(
            "drop height must lie in (0, r0] = (0, {r0}], got {h}"
        )));
    }
    let mu = field.mu();
    let eps = h / r0;
    let exact = fall_scale(r0, mu) * bracket_term_parts(1.0 - eps, eps);
    let approx = fall_time_constant_g(h, gravitational_acceleration(r0, field)?)?;
    Ok((approx - exact).abs() / exact)
}
