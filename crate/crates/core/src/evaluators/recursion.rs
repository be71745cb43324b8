use num_complex::Complex;

use super::{sum::evaluate_sum, JonesResult, Method};
use crate::cmath;
use crate::domain::functions::check_not_integer;
use crate::domain::knot::TorusKnot;
use crate::domain::power::PowerConvention;
use crate::error::{Error, Result};
use crate::logc::LogComplex;
use crate::real::Real;

/// Below this magnitude `1 - t^{-m}` counts as zero.
const DEGENERATE: f64 = 1e-13;

/// Recursion in the color, stepping `N -> N - 2`.
///
/// `t = e^{2 pi r i / N}` is fixed at the requested `N` for the whole
/// chain. Odd `N` start from `J_1 = 1`, even `N` from `J_2` given by the
/// double sum at the parameter `2r/N`, which reproduces the same `t`.
pub fn evaluate_recursive<T: Real>(
    knot: &TorusKnot,
    n: u32,
    r: Complex<T>,
) -> Result<JonesResult<T>> {
    if n == 0 {
        return Err(Error::InvalidInput("N must be at least 1"));
    }
    check_not_integer(cmath::lower(r))?;
    let conv = PowerConvention::new(n, r);
    let (a, b) = (knot.a() as i64, knot.b() as i64);
    let mut j = if n % 2 == 1 {
        LogComplex::one()
    } else {
        let r2 = cmath::scale(r, T::from_f64(2.0) / T::from_i64(n as i64));
        evaluate_sum(knot, 2, r2)?.value
    };
    let start = if n % 2 == 1 { 3 } else { 4 };
    let t = |e: i64| conv.t_power_int(e);
    for m in (start..=n as i64).step_by(2) {
        let den = t(-m).one_minus();
        if den.is_zero() || den.log_mag.to_f64() < libm::log(DEGENERATE) {
            return Err(Error::DenominatorZero { what: "1 - t^{-m} in the recursion" });
        }
        let e = 1 - m;
        let bracket = LogComplex::sum([
            LogComplex::one(),
            -t(a * e - 1),
            -t(b * e - 1),
            t((a + b) * e),
        ]);
        let inhom = t((a - 1) * (b - 1) * e / 2) * bracket / den;
        let hom = t(2 - m).one_minus() / den * t(a * b * e - 1);
        j = inhom + hom * j;
    }
    Ok(JonesResult {
        value: j,
        method: Method::Recursion,
        n,
        knot: *knot,
        r: cmath::lower(r),
        quad_error_estimate: None,
    })
}
