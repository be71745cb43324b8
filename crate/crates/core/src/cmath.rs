//! Elementary complex functions over any [`Real`].

use num_complex::Complex;

use crate::real::Real;

#[inline]
pub fn c<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::from_f64(re), T::from_f64(im))
}

#[inline]
pub fn lift<T: Real>(z: Complex<f64>) -> Complex<T> {
    c(z.re, z.im)
}

#[inline]
pub fn lower<T: Real>(z: Complex<T>) -> Complex<f64> {
    Complex::new(z.re.to_f64(), z.im.to_f64())
}

#[inline]
pub fn i<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

pub fn scale<T: Real>(z: Complex<T>, s: T) -> Complex<T> {
    Complex::new(z.re * s, z.im * s)
}

pub fn abs<T: Real>(z: Complex<T>) -> T {
    z.re.hypot(z.im)
}

pub fn arg<T: Real>(z: Complex<T>) -> T {
    z.im.atan2(z.re)
}

pub fn exp<T: Real>(z: Complex<T>) -> Complex<T> {
    let m = z.re.exp();
    let (s, co) = z.im.sin_cos();
    Complex::new(m * co, m * s)
}

/// `e^z - 1`, accurate for small `|z|`.
pub fn exp_m1<T: Real>(z: Complex<T>) -> Complex<T> {
    let em1 = z.re.exp_m1();
    let (s, co) = z.im.sin_cos();
    let (sh, _) = (z.im / T::from_f64(2.0)).sin_cos();
    // cos y - 1 = -2 sin^2(y/2)
    let cos_m1 = -T::from_f64(2.0) * sh * sh;
    Complex::new(em1 * co + cos_m1, (em1 + T::one()) * s)
}

pub fn sinh<T: Real>(z: Complex<T>) -> Complex<T> {
    let half = T::from_f64(0.5);
    scale(exp(z) - exp(-z), half)
}

pub fn cosh<T: Real>(z: Complex<T>) -> Complex<T> {
    let half = T::from_f64(0.5);
    scale(exp(z) + exp(-z), half)
}

/// `sin z = -i sinh(i z)`.
pub fn sin<T: Real>(z: Complex<T>) -> Complex<T> {
    let w = sinh(i::<T>() * z);
    Complex::new(w.im, -w.re)
}

pub fn cos<T: Real>(z: Complex<T>) -> Complex<T> {
    cosh(i::<T>() * z)
}

/// Principal square root (branch cut on the negative real axis).
pub fn sqrt<T: Real>(z: Complex<T>) -> Complex<T> {
    let zero = T::zero();
    if z.re == zero && z.im == zero {
        return z;
    }
    let two = T::from_f64(2.0);
    let m = abs(z);
    if z.re >= zero {
        let t = ((m + z.re) / two).sqrt();
        Complex::new(t, z.im / (two * t))
    } else {
        let t = ((m - z.re) / two).sqrt();
        let re = z.im.abs() / (two * t);
        let im = if z.im < zero { -t } else { t };
        Complex::new(re, im)
    }
}

pub fn recip<T: Real>(z: Complex<T>) -> Complex<T> {
    let d = z.re * z.re + z.im * z.im;
    Complex::new(z.re / d, -z.im / d)
}
