//! Physical constants, the celestial-body catalog and gravity fields.
//!
//! Everything here is SI. Catalog values:
//!
//! | body  | mass (kg)  | mean radius (m) | source |
//! |-------|------------|-----------------|--------|
//! | earth | 5.9722e24  | 6.371e6         | IAU 2015 nominal / IUGG mean radius |
//! | moon  | 7.342e22   | 1.7374e6        | NASA Moon fact sheet |
//! | sun   | 1.9885e30  | 6.957e8         | IAU 2015 nominal solar radius, NASA Sun fact sheet |
//! | mars  | 6.4171e23  | 3.3895e6        | NASA Mars fact sheet |
//! | jupiter | 1.89819e27 | 6.9911e7      | NASA Jupiter fact sheet |

use crate::error::{Error, Result};

/// Newtonian constant of gravitation, CODATA 2018 (m³ kg⁻¹ s⁻²).
pub const G_NEWTON: f64 = 6.67430e-11;

pub fn newtonian_constant() -> f64 {
    G_NEWTON
}

/// A named point mass with a mean radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Body {
    pub name: &'static str,
    /// kg
    pub mass: f64,
    /// m
    pub mean_radius: f64,
}

impl Body {
    pub fn gravity_field(&self) -> GravityField {
        gravity_field_of(self)
    }
}

pub const EARTH: Body = Body {
    name: "earth",
    mass: 5.9722e24,
    mean_radius: 6.371e6,
};
pub const MOON: Body = Body {
    name: "moon",
    mass: 7.342e22,
    mean_radius: 1.7374e6,
};
pub const SUN: Body = Body {
    name: "sun",
    mass: 1.9885e30,
    mean_radius: 6.957e8,
};
pub const MARS: Body = Body {
    name: "mars",
    mass: 6.4171e23,
    mean_radius: 3.3895e6,
};
pub const JUPITER: Body = Body {
    name: "jupiter",
    mass: 1.89819e27,
    mean_radius: 6.9911e7,
};

/// The compiled-in catalog, in listing order.
pub const CATALOG: &[Body] = &[SUN, EARTH, MOON, MARS, JUPITER];

/// Case-insensitive catalog lookup.
pub fn lookup_body(name: &str) -> Result<Body> {
    CATALOG
        .iter()
        .find(|b| b.name.eq_ignore_ascii_case(name.trim()))
        .copied()
        .ok_or_else(|| Error::UnknownBody(name.to_string()))
}

/// Gravitational parameter μ = GM of a fixed point mass, in m³/s².
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GravityField {
    mu: f64,
}

impl GravityField {
    pub fn new(mu: f64) -> Result<Self> {
        if mu.is_finite() && mu > 0.0 {
            Ok(GravityField { mu })
        } else {
            Err(Error::domain(format!(
                "gravitational parameter must be positive and finite, got {mu}"
            )))
        }
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }
}

pub fn gravity_field_of(body: &Body) -> GravityField {
    GravityField {
        mu: G_NEWTON * body.mass,
    }
}
