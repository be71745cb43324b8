use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex64;

use super::{JonesResult, Method};
use crate::domain::functions::{check_not_integer, f_abr, phi_factor, tau_unchecked};
use crate::domain::knot::TorusKnot;
use crate::error::{Error, Result};
use crate::logc::LogComplex;
use crate::quadrature::{adaptive, GaussLegendre, Tolerance};

/// Line `z = s e^{i phi}`, `s` in `[-S, S]`, and the quadrature policy.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContourSpec {
    pub phi: f64,
    /// Half-length `S`; `0` picks it from the Gaussian width.
    pub truncation: f64,
    /// Initial number of equal panels before adaptive refinement.
    pub panels: usize,
    /// Relative tolerance on the integral.
    pub target_tol: f64,
    /// Cap on integrand evaluations.
    pub max_nodes: usize,
}

/// How far (in `e`-folds) the integrand peak may exceed the answer.
const CANCELLATION_BUDGET: f64 = 5.0;
/// Smallest angle kept between the line and the imaginary axis.
const MIN_AXIS_GAP: f64 = 0.02;

impl ContourSpec {
    pub const DEFAULT_TOL: f64 = 1e-11;
    pub const DEFAULT_PANELS: usize = 32;
    pub const DEFAULT_MAX_NODES: usize = 1 << 20;

    fn with_phi(phi: f64) -> Self {
        ContourSpec {
            phi,
            truncation: 0.0,
            panels: Self::DEFAULT_PANELS,
            target_tol: Self::DEFAULT_TOL,
            max_nodes: Self::DEFAULT_MAX_NODES,
        }
    }

    /// `phi = theta/2 + pi/4`, the bisector of the admissible sector.
    pub fn bisector(r: Complex64) -> Self {
        Self::with_phi(r.arg() / 2.0 + FRAC_PI_4)
    }

    /// A line through the origin chosen so that the integrand's peak is not
    /// exponentially larger than the result.
    ///
    /// Rotating the line about the origin leaves the integral unchanged as
    /// long as it does not sweep over a pole of tau (all on the imaginary
    /// axis) and the Gaussian decay persists, i.e. for
    /// `theta/2 < phi < min(pi/2, theta/2 + pi/2)`. For `theta < 0` the line
    /// through the saddle `pi r i` has no cancellation at all. For
    /// `theta >= 0` the answer is of order one while the peak grows like
    /// `e^{N ab pi |r| cos^2(phi) / (2 sin(2 phi - theta))}`; the line is
    /// tilted towards the imaginary axis until that excess is within budget.
    pub fn auto(knot: &TorusKnot, r: Complex64, n: u32) -> Self {
        let theta = r.arg();
        if theta < 0.0 {
            return Self::with_phi(theta + FRAC_PI_2);
        }
        let excess = |gap: f64| peak_log(knot, r, n, FRAC_PI_2 - gap);
        let widest = FRAC_PI_4 - theta / 2.0;
        if widest <= MIN_AXIS_GAP || excess(widest) <= CANCELLATION_BUDGET {
            return Self::with_phi(FRAC_PI_2 - widest);
        }
        if excess(MIN_AXIS_GAP) >= CANCELLATION_BUDGET {
            return Self::with_phi(FRAC_PI_2 - MIN_AXIS_GAP);
        }
        let (mut lo, mut hi) = (MIN_AXIS_GAP, widest);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if excess(mid) <= CANCELLATION_BUDGET {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Self::with_phi(FRAC_PI_2 - lo)
    }

    pub fn check(&self, r: Complex64) -> Result<()> {
        let theta = r.arg();
        let ok = self.phi > theta / 2.0
            && self.phi < FRAC_PI_2
            && self.phi < theta / 2.0 + FRAC_PI_2
            && self.target_tol > 0.0
            && self.truncation >= 0.0;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidContour {
                phi: self.phi,
                theta,
            })
        }
    }
}

/// `Re c` where `f(s e^{i phi}) = ab (s e^{i phi} - c s^2)`.
fn quadratic_re(r: Complex64, phi: f64) -> f64 {
    libm::sin(2.0 * phi - r.arg()) / (2.0 * PI * r.norm())
}

/// Maximum of `Re N f` along the line.
fn peak_log(knot: &TorusKnot, r: Complex64, n: u32, phi: f64) -> f64 {
    let cos = libm::cos(phi);
    n as f64 * knot.ab() as f64 * cos * cos / (4.0 * quadratic_re(r, phi))
}

/// `Phi(N) * int_C e^{N f(z)} tau(z) dz` by adaptive Gauss-Legendre on a
/// straight line through the origin. `spec = None` uses
/// [`ContourSpec::auto`].
pub fn evaluate_integral(
    knot: &TorusKnot,
    n: u32,
    r: Complex64,
    spec: Option<ContourSpec>,
) -> Result<JonesResult> {
    if n == 0 {
        return Err(Error::InvalidInput("N must be at least 1"));
    }
    check_not_integer(r)?;
    if !(r.re > 0.0) {
        return Err(Error::Regime {
            reason: "the integral form needs Re r > 0",
        });
    }
    let spec = spec.unwrap_or_else(|| ContourSpec::auto(knot, r, n));
    spec.check(r)?;

    let nf = n as f64;
    let ab = knot.ab() as f64;
    let dir = Complex64::from_polar(1.0, spec.phi);
    let re_c = quadratic_re(r, spec.phi);
    let peak = peak_log(knot, r, n, spec.phi);
    let center = libm::cos(spec.phi) / (2.0 * re_c);
    let sigma = 1.0 / libm::sqrt(2.0 * nf * ab * re_c);

    let integrand = |s: f64| {
        if s == 0.0 {
            // tau(0) = 0
            return Complex64::new(0.0, 0.0);
        }
        let z = dir * s;
        let e = f_abr(knot, r, z) * nf - peak;
        e.exp() * tau_unchecked(knot, z) * dir
    };

    let tol = spec.target_tol;
    let mut half = if spec.truncation > 0.0 {
        spec.truncation
    } else {
        center.abs() + sigma * libm::sqrt(2.0 * (libm::log(1.0 / tol) + 10.0))
    };
    let top = integrand(center).norm().max(1e-300);
    for _ in 0..30 {
        let edge = integrand(half).norm().max(integrand(-half).norm());
        if edge < tol * 1e-3 * top {
            break;
        }
        half *= 2.0;
    }

    // the integrand's phase N Im f is only known to about eps * |N f|
    let phase_size = nf * ab * (half + half * half / (2.0 * PI * r.norm()));
    let noise = 16.0 * f64::EPSILON * (1.0 + phase_size);
    let rule = GaussLegendre::new(16);
    let rough = Tolerance { rel: 1e-3, scale: top * sigma, noise };
    let coarse = adaptive(&rule, -half, half, spec.panels, rough, spec.max_nodes, integrand)?;
    let target = Tolerance { rel: tol, scale: coarse.value.norm().max(1e-300), noise };
    let fine = adaptive(&rule, -half, half, spec.panels, target, spec.max_nodes, integrand)?;
    let size = fine.value.norm();
    let rel_err = if size > 0.0 { fine.abs_error / size } else { f64::INFINITY };

    let integral = LogComplex::from_complex(fine.value).scale_exp(peak);
    let value = phi_factor(knot, r, n)? * integral;
    Ok(JonesResult {
        value,
        method: Method::Integral,
        n,
        knot: *knot,
        r,
        quad_error_estimate: Some(rel_err),
    })
}
