use alloc::vec::Vec;

use num_complex::{Complex, Complex64};

use super::{JonesResult, Method};
use crate::cmath;
use crate::domain::functions::check_not_integer;
use crate::domain::knot::TorusKnot;
use crate::domain::power::PowerConvention;
use crate::error::{Error, Result};
use crate::logc::LogComplex;
use crate::real::Real;

/// `4 X` for the summand `eps * t^X`, with the global `t^{-ab(N^2-1)/4}`
/// folded in. `j = 0..N` stands for `k = j - (N-1)/2`.
fn quarter_exponent(knot: &TorusKnot, n: i64, j: i64, eps: i64) -> i64 {
    let (a, b) = (knot.a() as i64, knot.b() as i64);
    let k2 = 2 * j - (n - 1);
    -a * b * (n * n - 1) + a * b * k2 * k2 + 2 * k2 * (a + eps * b) + 2 * eps
}

/// Summands in ascending `k`, `eps = +1` block first.
fn summands<T: Real>(knot: &TorusKnot, n: u32, r: Complex<T>) -> Vec<LogComplex<T>> {
    let conv = PowerConvention::new(n, r);
    let nn = n as i64;
    let mut terms = Vec::with_capacity(2 * n as usize);
    for eps in [1_i64, -1] {
        for j in 0..nn {
            let t = conv.t_power_quarter(quarter_exponent(knot, nn, j, eps));
            terms.push(if eps > 0 { t } else { -t });
        }
    }
    terms
}

/// `t^{N/2} - t^{-N/2} = 2 sinh(pi r i)`, independent of `N`.
fn denominator<T: Real>(r: Complex<T>) -> LogComplex<T> {
    let sh = cmath::sinh(cmath::scale(cmath::i::<T>() * r, T::pi()));
    LogComplex::from_complex(cmath::scale(sh, T::from_f64(2.0)))
}

/// The double sum over `eps = +-1` and `k = -(N-1)/2 ..= (N-1)/2`.
///
/// Every summand's powers of `t` are merged into one exponent before it is
/// exponentiated, and the sum is scaled by its largest term, so neither
/// `|t^{-ab N^2/4}|` nor the size of `J_N` itself can overflow.
pub fn evaluate_sum<T: Real>(knot: &TorusKnot, n: u32, r: Complex<T>) -> Result<JonesResult<T>> {
    if n == 0 {
        return Err(Error::InvalidInput("N must be at least 1"));
    }
    check_not_integer(cmath::lower(r))?;
    let num = LogComplex::sum(summands(knot, n, r));
    Ok(JonesResult {
        value: num / denominator(r),
        method: Method::Sum,
        n,
        knot: *knot,
        r: cmath::lower(r),
        quad_error_estimate: None,
    })
}

/// `J_N` at `r = m` exactly, where `t` is a root of unity.
///
/// Numerator and denominator of the double sum both vanish there; the
/// quotient of their `r`-derivatives gives
/// `J_N = sum eps X t^X / (N (-1)^m)`.
pub fn evaluate_sum_root_of_unity(knot: &TorusKnot, n: u32, m: i64) -> Result<JonesResult> {
    if n == 0 {
        return Err(Error::InvalidInput("N must be at least 1"));
    }
    let nn = n as i64;
    let d = 4 * nn;
    let mut acc = Complex64::new(0.0, 0.0);
    for eps in [1_i64, -1] {
        for j in 0..nn {
            let x4 = quarter_exponent(knot, nn, j, eps);
            // t^X = exp(2 pi i m X4 / (4N)), reduced exactly in integers
            let turns = ((m % d) * x4.rem_euclid(d)).rem_euclid(d);
            let (s, c) = libm::sincos(core::f64::consts::TAU * turns as f64 / d as f64);
            acc += Complex64::new(c, s) * (eps as f64 * x4 as f64 / 4.0);
        }
    }
    let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let value = acc / (nn as f64 * sign);
    Ok(JonesResult {
        value: LogComplex::from_complex(value),
        method: Method::Sum,
        n,
        knot: *knot,
        r: Complex64::new(m as f64, 0.0),
        quad_error_estimate: None,
    })
}
