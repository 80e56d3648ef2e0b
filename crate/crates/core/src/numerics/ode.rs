use super::{find_root, ToleranceConfig};
use crate::constants::GravityField;
use crate::error::{Error, Result};
use crate::freefall::{RadialVelocity, TrajectorySample};

/// Why an integration stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    ReachedTargetRadius,
    /// The step size collapsed below the resolution of `t` before the target
    /// was reached; the trajectory cannot be advanced further in `f64`.
    ReachedFloor,
    StepLimit,
}

/// Numerical solution of the radial fall initial value problem.
#[derive(Debug, Clone, PartialEq)]
pub struct IvpSolution {
    /// One sample per accepted step, starting at `(0, r0, 0)`.
    pub samples: Vec<TrajectorySample>,
    pub terminal_time: f64,
    pub terminated_by: Termination,
    /// Largest `|v²/2 − μ/r + μ/r0| / (μ/r0)` over the accepted steps.
    pub max_energy_drift: f64,
}

impl IvpSolution {
    pub fn last(&self) -> &TrajectorySample {
        self.samples
            .last()
            .expect("solution always holds the initial sample")
    }
}

type State = [f64; 2];

// Dormand–Prince 5(4) tableau. The system is autonomous, so the nodes c_i are not needed.
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// b - b̂
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.9;
const MIN_SCALE: f64 = 0.2;
const MAX_SCALE: f64 = 5.0;
/// Upper bound on a step as a fraction of the local free-fall time scale √(r³/μ).
const MAX_STEP_FRACTION: f64 = 0.1;

struct RadialFall {
    mu: f64,
}

impl RadialFall {
    #[inline]
    fn rhs(&self, y: &State) -> State {
        [y[1], -self.mu / (y[0] * y[0])]
    }

    /// One Dormand–Prince step; returns the 5th-order solution and the embedded error estimate.
    fn step(&self, y: &State, h: f64) -> (State, State) {
        let k1 = self.rhs(y);
        let stage = |coef: &[(f64, &State)]| -> State {
            let mut out = *y;
            for (a, k) in coef {
                out[0] += h * a * k[0];
                out[1] += h * a * k[1];
            }
            out
        };
        let k2 = self.rhs(&stage(&[(A21, &k1)]));
        let k3 = self.rhs(&stage(&[(A31, &k1), (A32, &k2)]));
        let k4 = self.rhs(&stage(&[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = self.rhs(&stage(&[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
        let k6 = self.rhs(&stage(&[
            (A61, &k1),
            (A62, &k2),
            (A63, &k3),
            (A64, &k4),
            (A65, &k5),
        ]));
        let y_new = stage(&[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
        let k7 = self.rhs(&y_new);
        let mut err = [0.0; 2];
        for i in 0..2 {
            err[i] =
                h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
        }
        (y_new, err)
    }
}

/// Adaptive stepping state for the radial fall from rest at `r0`.
struct Stepper<'a> {
    sys: RadialFall,
    tol: &'a ToleranceConfig,
    abs_tol: [f64; 2],
    energy0: f64,
    t: f64,
    y: State,
    h: f64,
    attempts: usize,
}

enum Advance {
    /// Step accepted; carries the state and step length it started from.
    Accepted {
        prev: State,
        h: f64,
    },
    Collapsed,
}

impl<'a> Stepper<'a> {
    fn new(r0: f64, field: GravityField, tol: &'a ToleranceConfig) -> Self {
        let mu = field.mu();
        let v_scale = (mu / r0).sqrt();
        Stepper {
            sys: RadialFall { mu },
            tol,
            abs_tol: [tol.abs_tol, tol.abs_tol * v_scale / r0],
            energy0: mu / r0,
            t: 0.0,
            y: [r0, 0.0],
            h: 1e-3 * (r0 * r0 * r0 / mu).sqrt(),
            attempts: 0,
        }
    }

    fn drift(&self, y: &State) -> f64 {
        (0.5 * y[1] * y[1] - self.sys.mu / y[0] + self.energy0).abs() / self.energy0
    }

    fn error_norm(&self, y_new: &State, err: &State) -> f64 {
        if !(y_new.iter().all(|x| x.is_finite()) && y_new[0] > 0.0) {
            return f64::INFINITY;
        }
        let mut acc = 0.0;
        for i in 0..2 {
            let sc = self.abs_tol[i] + self.tol.rel_tol * self.y[i].abs().max(y_new[i].abs());
            acc += if sc > 0.0 {
                (err[i] / sc).powi(2)
            } else if err[i] == 0.0 {
                0.0
            } else {
                f64::INFINITY
            };
        }
        (0.5 * acc).sqrt()
    }

    /// Takes one accepted step no longer than `limit`, retrying with smaller
    /// steps on rejection.
    fn advance(&mut self, limit: f64) -> Result<Advance> {
        loop {
            if self.attempts >= self.tol.max_steps {
                return Err(Error::StepLimit(self.tol.max_steps));
            }
            self.attempts += 1;

            let h_max = MAX_STEP_FRACTION * (self.y[0].powi(3) / self.sys.mu).sqrt();
            let proposed = self.h.min(h_max);
            let h = proposed.min(limit);
            if h <= 16.0 * f64::EPSILON * self.t {
                return Ok(Advance::Collapsed);
            }

            let (y_new, err) = self.sys.step(&self.y, h);
            let err_norm = self.error_norm(&y_new, &err);
            if err_norm > 1.0 {
                let scale = if err_norm.is_finite() {
                    SAFETY * err_norm.powf(-0.2)
                } else {
                    MIN_SCALE
                };
                self.h = h * scale.clamp(MIN_SCALE, 1.0);
                continue;
            }

            let prev = self.y;
            self.t += h;
            self.y = y_new;
            if h == proposed {
                let scale = if err_norm == 0.0 {
                    MAX_SCALE
                } else {
                    SAFETY * err_norm.powf(-0.2)
                };
                self.h = h * scale.clamp(MIN_SCALE, MAX_SCALE);
            } else {
                // clipped by `limit`; the proposal still stands for the next step
                self.h = proposed;
            }
            return Ok(Advance::Accepted { prev, h });
        }
    }
}

fn validate_release(r0: f64, tol: &ToleranceConfig) -> Result<()> {
    tol.validate()?;
    if !(r0.is_finite() && r0 > 0.0) {
        return Err(Error::domain(format!(
            "release radius must be positive, got {r0}"
        )));
    }
    Ok(())
}

/// Integrates r'' = −μ/r² from rest at `r0` until `r` reaches `target_r`.
///
/// The state `(r, v)` is advanced with an adaptive Dormand–Prince 5(4) pair.
/// The step crossing `target_r` is refined by root-finding on the step length
/// of a single re-integrated step from the last accepted state.
pub fn integrate_radial_fall(
    r0: f64,
    field: GravityField,
    target_r: f64,
    tol: &ToleranceConfig,
) -> Result<IvpSolution> {
    validate_release(r0, tol)?;
    if !(target_r > 0.0) {
        return Err(Error::domain(format!(
            "target radius must be strictly positive (the equation of motion is singular at r = 0), got {target_r}"
        )));
    }
    if target_r >= r0 {
        return Err(Error::domain(format!(
            "target radius {target_r} must be below the release radius {r0}"
        )));
    }

    let mut stepper = Stepper::new(r0, field, tol);
    let mut samples = vec![TrajectorySample {
        t: 0.0,
        r: r0,
        v: RadialVelocity::Finite(0.0),
    }];
    let mut max_energy_drift = 0.0f64;

    loop {
        let (prev, h) = match stepper.advance(f64::INFINITY)? {
            Advance::Accepted { prev, h } => (prev, h),
            Advance::Collapsed => {
                return Ok(finish(samples, Termination::ReachedFloor, max_energy_drift))
            }
        };

        if stepper.y[0] <= target_r {
            let sys = &stepper.sys;
            let t_prev = stepper.t - h;
            let cross = |theta: f64| sys.step(&prev, theta).0[0] - target_r;
            let root_tol = ToleranceConfig {
                abs_tol: 0.0,
                rel_tol: 4.0 * f64::EPSILON,
                ..*tol
            };
            let theta = find_root(cross, 0.0, h, &root_tol)?;
            let (y_hit, _) = sys.step(&prev, theta);
            max_energy_drift = max_energy_drift.max(stepper.drift(&y_hit));
            samples.push(TrajectorySample {
                t: t_prev + theta,
                r: y_hit[0],
                v: RadialVelocity::Finite(y_hit[1]),
            });
            return Ok(finish(
                samples,
                Termination::ReachedTargetRadius,
                max_energy_drift,
            ));
        }

        max_energy_drift = max_energy_drift.max(stepper.drift(&stepper.y));
        samples.push(TrajectorySample {
            t: stepper.t,
            r: stepper.y[0],
            v: RadialVelocity::Finite(stepper.y[1]),
        });
    }
}

/// Integrates the fall from rest at `r0` and reports the state at each of the
/// requested `times`, which must be non-negative and non-decreasing.
///
/// Steps are clipped to land exactly on each output time.
pub fn integrate_radial_fall_at(
    r0: f64,
    field: GravityField,
    times: &[f64],
    tol: &ToleranceConfig,
) -> Result<Vec<TrajectorySample>> {
    validate_release(r0, tol)?;
    if times.iter().any(|t| !(t.is_finite() && *t >= 0.0)) || times.windows(2).any(|w| w[1] < w[0])
    {
        return Err(Error::domain(
            "output times must be finite, non-negative and non-decreasing",
        ));
    }

    let mut stepper = Stepper::new(r0, field, tol);
    let mut out = Vec::with_capacity(times.len());
    for &t_out in times {
        while stepper.t < t_out {
            match stepper.advance(t_out - stepper.t)? {
                Advance::Accepted { .. } => {}
                Advance::Collapsed => {
                    return Err(Error::domain(format!(
                        "output time {t_out} lies beyond the resolvable fall (r = {} at t = {})",
                        stepper.y[0], stepper.t
                    )))
                }
            }
            // landing within rounding of the output time counts as reaching it
            if (t_out - stepper.t).abs() <= 4.0 * f64::EPSILON * t_out {
                stepper.t = t_out;
            }
        }
        out.push(TrajectorySample {
            t: t_out,
            r: stepper.y[0],
            v: RadialVelocity::Finite(stepper.y[1]),
        });
    }
    Ok(out)
}

fn finish(
    samples: Vec<TrajectorySample>,
    terminated_by: Termination,
    max_energy_drift: f64,
) -> IvpSolution {
    let terminal_time = samples.last().map_or(0.0, |s| s.t);
    IvpSolution {
        samples,
        terminal_time,
        terminated_by,
        max_energy_drift,
    }
}
