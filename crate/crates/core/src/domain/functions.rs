//! The integrand pieces `tau`, `f`, the prefactor `Phi` and the pole-count
//! function `h`.

use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_complex::Complex;

use crate::cmath;
use crate::domain::knot::TorusKnot;
use crate::error::{Error, Result};
use crate::logc::LogComplex;
use crate::real::{turns_of_ratio, Real};

/// Default distance below which a point counts as sitting on a pole.
pub const POLE_GUARD: f64 = 1e-9;

/// `tau(z) = 2 sinh(az) sinh(bz) / sinh(abz)`.
pub fn tau<T: Real>(knot: &TorusKnot, z: Complex<T>) -> Result<Complex<T>> {
    tau_guarded(knot, z, POLE_GUARD)
}

pub fn tau_guarded<T: Real>(knot: &TorusKnot, z: Complex<T>, guard: f64) -> Result<Complex<T>> {
    let ab = knot.ab() as f64;
    let zf = cmath::lower(z);
    let k = libm::round(zf.im * ab / PI) as i64;
    let dist = libm::hypot(zf.re, zf.im - k as f64 * PI / ab);
    if k != 0 && dist < guard {
        return removable_value(knot, k, dist);
    }
    if k == 0 && z.re.is_zero() && z.im.is_zero() {
        return Ok(z);
    }
    Ok(tau_unchecked(knot, z))
}

/// Value of tau at a removable point `k pi i/(ab)`, or `PoleHit`.
fn removable_value<T: Real>(knot: &TorusKnot, k: i64, dist: f64) -> Result<Complex<T>> {
    let (a, b) = (knot.a() as i64, knot.b() as i64);
    let divides_a = k % a == 0;
    let divides_b = k % b == 0;
    if !divides_a && !divides_b {
        return Err(Error::PoleHit { k, distance: dist });
    }
    if divides_a && divides_b {
        return Ok(Complex::new(T::zero(), T::zero()));
    }
    let ab = T::from_i64(a * b);
    let z0 = Complex::new(T::zero(), T::pi() * T::from_i64(k) / ab);
    // l'Hopital on the factor that vanishes together with sinh(abz)
    let (vanishing, other, v) = if divides_a { (b, a, b) } else { (a, b, a) };
    let num = cmath::scale(
        cmath::sinh(cmath::scale(z0, T::from_i64(other)))
            * cmath::cosh(cmath::scale(z0, T::from_i64(vanishing))),
        T::from_f64(2.0) * T::from_i64(v),
    );
    let den = cmath::scale(cmath::cosh(cmath::scale(z0, ab)), ab);
    Ok(num / den)
}

/// tau without the pole check. Uses
/// `tau(z) = -e^{(a+b-ab)z} expm1(-2az) expm1(-2bz) / expm1(-2abz)` on
/// `Re z >= 0` and oddness elsewhere, so nothing overflows for large `|Re z|`.
pub(crate) fn tau_unchecked<T: Real>(knot: &TorusKnot, z: Complex<T>) -> Complex<T> {
    if z.re < T::zero() {
        return -tau_unchecked(knot, -z);
    }
    let a = T::from_i64(knot.a() as i64);
    let b = T::from_i64(knot.b() as i64);
    let ab = a * b;
    let m2 = T::from_f64(-2.0);
    let x = cmath::exp_m1(cmath::scale(z, m2 * a));
    let y = cmath::exp_m1(cmath::scale(z, m2 * b));
    let w = cmath::exp_m1(cmath::scale(z, m2 * ab));
    let e = cmath::exp(cmath::scale(z, a + b - ab));
    -(e * x * y / w)
}

/// `f(z) = ab (z - z^2 / (2 pi r i))`.
pub fn f_abr<T: Real>(knot: &TorusKnot, r: Complex<T>, z: Complex<T>) -> Complex<T> {
    let ab = T::from_i64(knot.ab() as i64);
    let two_pi_ri = cmath::scale(cmath::i::<T>() * r, T::two_pi());
    cmath::scale(z - z * z / two_pi_ri, ab)
}

/// `f'(z) = ab (1 - z / (pi r i))`.
pub fn f_abr_prime<T: Real>(knot: &TorusKnot, r: Complex<T>, z: Complex<T>) -> Complex<T> {
    let ab = T::from_i64(knot.ab() as i64);
    let pi_ri = cmath::scale(cmath::i::<T>() * r, T::pi());
    cmath::scale(Complex::new(T::one(), T::zero()) - z / pi_ri, ab)
}

/// `f''(z) = -ab / (pi r i)`, constant in `z`.
pub fn f_abr_second<T: Real>(knot: &TorusKnot, r: Complex<T>) -> Complex<T> {
    let ab = T::from_i64(knot.ab() as i64);
    let pi_ri = cmath::scale(cmath::i::<T>() * r, T::pi());
    Complex::new(-ab, T::zero()) / pi_ri
}

pub(crate) fn check_not_integer(r: Complex<f64>) -> Result<()> {
    let nearest = libm::round(r.re);
    if libm::hypot(r.re - nearest, r.im) < POLE_GUARD {
        return Err(Error::IntegerR { re: r.re, im: r.im });
    }
    Ok(())
}

/// `g = sqrt(ab) / (2 pi sqrt(2r) e^{pi i/4} sinh(pi r i))`, principal roots.
pub fn g_factor<T: Real>(knot: &TorusKnot, r: Complex<T>) -> Result<Complex<T>> {
    check_not_integer(cmath::lower(r))?;
    let ab = T::from_i64(knot.ab() as i64);
    let two = T::from_f64(2.0);
    let sqrt_2r = cmath::sqrt(cmath::scale(r, two));
    let eighth_turn = cmath::exp(Complex::new(T::zero(), T::pi() / T::from_f64(4.0)));
    let sh = cmath::sinh(cmath::scale(cmath::i::<T>() * r, T::pi()));
    let den = cmath::scale(sqrt_2r * eighth_turn * sh, T::two_pi());
    Ok(Complex::new(ab.sqrt(), T::zero()) / den)
}

/// `Phi(N) = g sqrt(N) exp(-(ab(N^2-1) + a/b + b/a) pi r i / (2N))`.
pub fn phi_factor<T: Real>(knot: &TorusKnot, r: Complex<T>, n: u32) -> Result<LogComplex<T>> {
    if n == 0 {
        return Err(Error::InvalidInput("N must be at least 1"));
    }
    let g = g_factor(knot, r)?;
    let (a, b) = (knot.a() as i64, knot.b() as i64);
    let nn = n as i64;
    let d = 4 * nn;
    // exponent = 2 pi i w, w = -(Q + a/b + b/a) r / (4N), Q = ab(N^2 - 1)
    let q = a * b * (nn * nn - 1);
    let small = T::from_i64(a) / T::from_i64(b) + T::from_i64(b) / T::from_i64(a);
    let two_pi = T::two_pi();
    let dt = T::from_i64(d);
    let log_mag = two_pi * r.im * (T::from_i64(q) + small) / dt;
    let turns = -(turns_of_ratio(r.re, q, d) + small * r.re / dt);
    let expo = LogComplex::new(log_mag, two_pi * turns);
    let root_n = LogComplex::new(T::from_i64(nn).ln() / T::from_f64(2.0), T::zero());
    Ok(LogComplex::from_complex(g) * root_n * expo)
}

/// `h(theta) = cos(theta) + sin(theta) tan(theta/2 + pi/4)` on `(-pi/2, pi/2)`.
pub fn h_theta(theta: f64) -> Result<f64> {
    if !(theta > -FRAC_PI_2 && theta < FRAC_PI_2) {
        return Err(Error::OutOfRange {
            value: theta,
            range: "(-pi/2, pi/2)",
        });
    }
    Ok(libm::cos(theta) + libm::sin(theta) * libm::tan(theta / 2.0 + FRAC_PI_4))
}

/// `pi r i`, the saddle point of `f`.
pub fn saddle_point<T: Real>(r: Complex<T>) -> Complex<T> {
    cmath::scale(cmath::i::<T>() * r, T::pi())
}
