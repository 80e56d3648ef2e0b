//! Circular and elliptical orbital periods, and the degenerate-ellipse
//! connection to radial collapse.
//!
//! All periods are evaluated through √(a³/μ) with `a³` formed by plain
//! multiplication. Halving `a` then scales the radicand by an exact power of
//! two, so the `r_min = 0` half-period equals [`collapse_time`] bit for bit.

use std::f64::consts::TAU;

use crate::constants::GravityField;
use crate::error::{Error, Result};
use crate::freefall::collapse_time;

/// Apoapsis and periapsis distances of a Keplerian ellipse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipseGeometry {
    r_max: f64,
    r_min: f64,
}

impl EllipseGeometry {
    /// `r_min = 0` is allowed: the ellipse degenerates to a radial segment.
    pub fn new(r_max: f64, r_min: f64) -> Result<Self> {
        if !(r_max > 0.0 && r_max.is_finite()) {
            return Err(Error::domain(format!("rmax must be positive, got {r_max}")));
        }
        if !(r_min >= 0.0) {
            return Err(Error::domain(format!(
                "rmin must be non-negative, got {r_min}"
            )));
        }
        if r_min > r_max {
            return Err(Error::domain(format!(
                "rmin exceeds rmax ({r_min} > {r_max})"
            )));
        }
        Ok(EllipseGeometry { r_max, r_min })
    }

    pub fn circle(radius: f64) -> Result<Self> {
        Self::new(radius, radius)
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    /// Semi-major axis (r_max + r_min) / 2.
    pub fn r_star(&self) -> f64 {
        0.5 * (self.r_max + self.r_min)
    }

    pub fn eccentricity(&self) -> f64 {
        (self.r_max - self.r_min) / (self.r_max + self.r_min)
    }
}

#[inline]
fn kepler_scale(a: f64, mu: f64) -> f64 {
    (a * a * a / mu).sqrt()
}

fn check_radius(radius: f64) -> Result<()> {
    if radius > 0.0 && radius.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "radius must be positive, got {radius}"
        )))
    }
}

/// 2π √(R³/μ).
pub fn circular_period(radius: f64, field: GravityField) -> Result<f64> {
    check_radius(radius)?;
    Ok(TAU * kepler_scale(radius, field.mu()))
}

/// √(μ/R³).
pub fn angular_velocity(radius: f64, field: GravityField) -> Result<f64> {
    check_radius(radius)?;
    Ok((field.mu() / (radius * radius * radius)).sqrt())
}

/// 2π √(r*³/μ) with r* the semi-major axis.
pub fn elliptical_period(geometry: &EllipseGeometry, field: GravityField) -> Result<f64> {
    Ok(TAU * kepler_scale(geometry.r_star(), field.mu()))
}

/// One row of [`degenerate_limit_check`].
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct LimitRow {
    pub delta: f64,
    /// Half the period of the `(r0, δ·r0)` ellipse divided by the collapse time from `r0`.
    pub ratio: f64,
}

/// Half-period of increasingly eccentric ellipses relative to the collapse time.
///
/// Each `delta` must lie in `[0, 1]`; the ratio is `(1 + δ)^{3/2}`, tending to
/// 1 as the ellipse flattens and reaching 2√2 for the circle.
pub fn degenerate_limit_check(
    r0: f64,
    field: GravityField,
    deltas: &[f64],
) -> Result<Vec<LimitRow>> {
    let t_c = collapse_time(r0, field)?;
    deltas
        .iter()
        .map(|&delta| {
            if !(0.0..=1.0).contains(&delta) {
                return Err(Error::domain(format!(
                    "delta must lie in [0, 1], got {delta}"
                )));
            }
            let geometry = EllipseGeometry::new(r0, delta * r0)?;
            let half = 0.5 * elliptical_period(&geometry, field)?;
            Ok(LimitRow {
                delta,
                ratio: half / t_c,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{gravity_field_of, EARTH};
    use proptest::prelude::*;
    use std::f64::consts::{PI, SQRT_2};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn unit_circle() {
        let f = GravityField::new(27.0).unwrap();
        let r = 3.0; // μ^{1/3}
        assert!(rel(circular_period(r, f).unwrap(), TAU) <= 2.0 * f64::EPSILON);
        assert!(rel(angular_velocity(r, f).unwrap(), 1.0) <= 2.0 * f64::EPSILON);
    }

    #[test]
    fn earth_surface_orbit() {
        let p = circular_period(EARTH.mean_radius, gravity_field_of(&EARTH)).unwrap();
        assert!((p - 5.06e3).abs() < 10.0, "{p}");
        assert!((p / 60.0 - 84.0).abs() < 1.0);
    }

    #[test]
    fn circle_to_collapse_ratio() {
        let f = gravity_field_of(&EARTH);
        let r = EARTH.mean_radius;
        let ratio = circular_period(r, f).unwrap() / collapse_time(r, f).unwrap();
        assert!(rel(ratio, 4.0 * SQRT_2) < 1e-12);
    }

    #[test]
    fn angular_velocity_scaling() {
        let f = GravityField::new(1.0e5).unwrap();
        let w1 = angular_velocity(10.0, f).unwrap();
        let w2 = angular_velocity(10.0 * 2f64.powf(2.0 / 3.0), f).unwrap();
        assert!(rel(w1 / w2, 2.0) < 1e-14);
    }

    #[test]
    fn geometry_validation() {
        assert!(EllipseGeometry::new(1.0, 2.0)
            .unwrap_err()
            .to_string()
            .contains("rmin exceeds rmax"));
        assert!(EllipseGeometry::new(0.0, 0.0).is_err());
        assert!(EllipseGeometry::new(1.0, -1.0).is_err());
        assert!(EllipseGeometry::new(-1.0, -2.0).is_err());
        let g = EllipseGeometry::new(3.0, 1.0).unwrap();
        assert_eq!(g.r_star(), 2.0);
        assert_eq!(g.eccentricity(), 0.5);
        assert_eq!(EllipseGeometry::new(3.0, 0.0).unwrap().eccentricity(), 1.0);
        assert!(circular_period(0.0, GravityField::new(1.0).unwrap()).is_err());
        assert!(angular_velocity(-1.0, GravityField::new(1.0).unwrap()).is_err());
    }

    #[test]
    fn degenerate_ellipse_half_period_is_collapse_time() {
        for (r, mu) in [
            (1.0, 1.0),
            (6.371e6, 3.986e14),
            (7.3e-3, 11.0),
            (1.496e11, 1.327e20),
        ] {
            let f = GravityField::new(mu).unwrap();
            let g = EllipseGeometry::new(r, 0.0).unwrap();
            let half = 0.5 * elliptical_period(&g, f).unwrap();
            assert_eq!(half, collapse_time(r, f).unwrap());
            let full = elliptical_period(&g, f).unwrap();
            assert!(rel(full, PI * r.powf(1.5) / (2.0 * mu).sqrt()) < 1e-14);
        }
    }

    #[test]
    fn limit_table() {
        let f = GravityField::new(3.986e14).unwrap();
        let rows = degenerate_limit_check(6.371e6, f, &[0.0, 1e-4, 1e-2, 1.0]).unwrap();
        assert_eq!(rows[0].ratio, 1.0);
        assert!(rows[1].ratio - 1.0 <= 2e-4 && rows[1].ratio >= 1.0);
        assert!(rows[2].ratio - 1.0 <= 2e-2 && rows[2].ratio >= 1.0);
        assert!(rel(rows[3].ratio, 2.0 * SQRT_2) < 1e-14);
        assert!(rel(rows[3].ratio, 4.0 * SQRT_2 / 2.0) < 1e-14);
        assert!(degenerate_limit_check(1.0, f, &[1.5]).is_err());
        assert!(degenerate_limit_check(1.0, f, &[-1e-3]).is_err());
        assert!(degenerate_limit_check(1.0, f, &[f64::NAN]).is_err());
    }

    #[test]
    fn half_period_binomial_bound() {
        let f = GravityField::new(42.0).unwrap();
        let r = 17.0;
        let t_c = collapse_time(r, f).unwrap();
        for delta in [1e-2, 3e-3, 1e-3, 1e-5, 1e-8] {
            let half =
                0.5 * elliptical_period(&EllipseGeometry::new(r, delta * r).unwrap(), f).unwrap();
            let ratio = half / t_c;
            assert!(rel(ratio, (1.0 + delta).powf(1.5)) < 1e-14);
            assert!(
                ratio >= 1.0 && ratio - 1.0 <= 2.0 * delta,
                "{delta}: {ratio}"
            );
        }
    }

    proptest! {
        #[test]
        fn circle_is_zero_eccentricity_ellipse(r in 1e-6f64..1e15, mu in 1e-6f64..1e22) {
            let f = GravityField::new(mu).unwrap();
            prop_assert_eq!(circular_period(r, f).unwrap(), elliptical_period(&EllipseGeometry::circle(r).unwrap(), f).unwrap());
        }

        #[test]
        fn circle_collapse_ratio(r in 1e-6f64..1e15, mu in 1e-6f64..1e22) {
            let f = GravityField::new(mu).unwrap();
            let ratio = circular_period(r, f).unwrap() / collapse_time(r, f).unwrap();
            prop_assert!((ratio - 4.0 * SQRT_2).abs() <= 4.0 * f64::EPSILON * 4.0 * SQRT_2);
        }

        #[test]
        fn centripetal_identity(r in 1e-6f64..1e15, mu in 1e-6f64..1e22) {
            let f = GravityField::new(mu).unwrap();
            let w = angular_velocity(r, f).unwrap();
            let lhs = w * w * r;
            let rhs = mu / (r * r);
            prop_assert!((lhs - rhs).abs() <= 4.0 * f64::EPSILON * rhs);
            prop_assert!((w * circular_period(r, f).unwrap() - TAU).abs() <= 4.0 * f64::EPSILON * TAU);
        }

        #[test]
        fn kepler_scaling(r_max in 1e-3f64..1e12, frac in 0.0f64..=1.0, mu in 1e-3f64..1e20, lambda_exp in -3.0f64..6.0) {
            let lambda = 10f64.powf(lambda_exp);
            let f = GravityField::new(mu).unwrap();
            let g = EllipseGeometry::new(r_max, frac * r_max).unwrap();
            let p = elliptical_period(&g, f).unwrap();
            let gs = EllipseGeometry::new(lambda * r_max, lambda * (frac * r_max)).unwrap();
            let ps = elliptical_period(&gs, GravityField::new(lambda.powi(3) * mu).unwrap()).unwrap();
            prop_assert!((p - ps).abs() <= 1e-12 * p);
        }

        #[test]
        fn limit_ratio_decreases_toward_one(r in 1e-3f64..1e12, mu in 1e-3f64..1e20, d in 1e-9f64..0.5) {
            let f = GravityField::new(mu).unwrap();
            let rows = degenerate_limit_check(r, f, &[2.0 * d, d]).unwrap();
            prop_assert!(rows[1].ratio < rows[0].ratio);
            prop_assert!(rows[1].ratio >= 1.0);
        }
    }
}
