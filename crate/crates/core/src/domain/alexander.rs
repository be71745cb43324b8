use num_complex::Complex64;

use crate::cmath;
use crate::domain::knot::TorusKnot;
use crate::error::Result;

/// Below this distance of `a u` (or `b u`) to an integer the removable form
/// is used instead of the raw quotient.
const REMOVABLE_GUARD: f64 = 1e-8;

/// `Delta(T(a, b); e^{2 pi u i})` as a function of the exponent `u`.
///
/// With `t = e^{2 pi u i}` every factor `t^{x/2} - t^{-x/2}` is
/// `2i sin(pi x u)`, so
/// `Delta = sin(pi ab u) sin(pi u) / (sin(pi a u) sin(pi b u))`.
/// Zeros of the denominator are always cancelled by the numerator (because
/// `gcd(a, b) = 1`), so the result is total.
pub fn alexander_eval(knot: &TorusKnot, u: Complex64) -> Result<Complex64> {
    let a = knot.a() as f64;
    let b = knot.b() as f64;
    let near = |x: Complex64| {
        let m = libm::round(x.re);
        (libm::hypot(x.re - m, x.im) < REMOVABLE_GUARD).then_some(m)
    };
    let s = |x: f64, u: Complex64| cmath::sin(u * core::f64::consts::PI * x);
    let co = |x: f64, u: f64| libm::cos(core::f64::consts::PI * x * u);

    if near(u).is_some() {
        // every sine vanishes; the ratio of derivatives is (-1)^{m(a-1)(b-1)} = 1
        return Ok(Complex64::new(1.0, 0.0));
    }
    if let Some(m) = near(u * a) {
        let u0 = m / a;
        let v = b * co(a * b, u0) * libm::sin(core::f64::consts::PI * u0)
            / (co(a, u0) * libm::sin(core::f64::consts::PI * b * u0));
        return Ok(Complex64::new(v, 0.0));
    }
    if let Some(m) = near(u * b) {
        let u0 = m / b;
        let v = a * co(a * b, u0) * libm::sin(core::f64::consts::PI * u0)
            / (co(b, u0) * libm::sin(core::f64::consts::PI * a * u0));
        return Ok(Complex64::new(v, 0.0));
    }
    Ok(s(a * b, u) * s(1.0, u) / (s(a, u) * s(b, u)))
}
