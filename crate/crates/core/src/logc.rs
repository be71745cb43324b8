//! Complex numbers stored as `exp(log_mag + i*phase)`.
//!
//! Products add fields, so magnitudes like `e^{900}` never touch a float's
//! exponent range. The phase is kept unreduced through multiplication; sums
//! produce a principal phase for the result.

use core::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;

use crate::cmath;
use crate::error::{Error, Result};
use crate::real::Real;

/// Largest log-magnitude that converts to a finite `f64` complex.
pub const OVERFLOW_LOG: f64 = 709.0;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogComplex<T = f64> {
    pub log_mag: T,
    pub phase: T,
}

impl<T: Real> LogComplex<T> {
    pub fn new(log_mag: T, phase: T) -> Self {
        LogComplex { log_mag, phase }
    }

    pub fn zero() -> Self {
        LogComplex::new(T::neg_infinity(), T::zero())
    }

    pub fn one() -> Self {
        LogComplex::new(T::zero(), T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.log_mag == T::neg_infinity()
    }

    /// `exp(z)` without evaluating the exponential.
    pub fn from_exponent(z: Complex<T>) -> Self {
        LogComplex::new(z.re, z.im)
    }

    pub fn from_complex(z: Complex<T>) -> Self {
        if z.re.is_zero() && z.im.is_zero() {
            return Self::zero();
        }
        LogComplex::new(cmath::abs(z).ln(), cmath::arg(z))
    }

    pub fn from_real(x: T) -> Self {
        Self::from_complex(Complex::new(x, T::zero()))
    }

    /// `log_mag + i*phase`, the (unreduced) logarithm.
    pub fn ln(&self) -> Complex<T> {
        Complex::new(self.log_mag, self.phase)
    }

    /// Phase reduced to `(-pi, pi]`.
    pub fn principal_phase(&self) -> T {
        wrap_phase(self.phase)
    }

    pub fn to_complex(&self) -> Result<Complex<T>> {
        if self.is_zero() {
            return Ok(Complex::zero());
        }
        let lm = self.log_mag.to_f64();
        if !(lm <= OVERFLOW_LOG) {
            return Err(Error::Overflow { log_mag: lm });
        }
        let m = self.log_mag.exp();
        let (s, c) = self.phase.sin_cos();
        Ok(Complex::new(m * c, m * s))
    }

    /// Multiplies by `e^{shift}` for real `shift`.
    pub fn scale_exp(self, shift: T) -> Self {
        LogComplex::new(self.log_mag + shift, self.phase)
    }

    pub fn recip(self) -> Self {
        LogComplex::new(-self.log_mag, -self.phase)
    }

    pub fn powi(self, n: i64) -> Self {
        let k = T::from_i64(n);
        LogComplex::new(self.log_mag * k, self.phase * k)
    }

    /// `1 - self`.
    pub fn one_minus(self) -> Self {
        Self::sum([Self::one(), -self])
    }

    /// Sum scaled by the largest magnitude so no term overflows.
    pub fn sum<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = Self>,
        I::IntoIter: Clone,
    {
        let it = terms.into_iter();
        let mut top = T::neg_infinity();
        for t in it.clone() {
            top = top.max(t.log_mag);
        }
        if top == T::neg_infinity() {
            return Self::zero();
        }
        let mut acc = Complex::new(T::zero(), T::zero());
        for t in it {
            if t.is_zero() {
                continue;
            }
            let m = (t.log_mag - top).exp();
            let (s, c) = t.phase.sin_cos();
            acc = acc + Complex::new(m * c, m * s);
        }
        Self::from_complex(acc).scale_exp(top)
    }

    /// `|self / other - 1|`, evaluated without leaving log space.
    pub fn rel_diff(&self, other: &Self) -> T {
        let d = Complex::new(self.log_mag - other.log_mag, wrap_phase(self.phase - other.phase));
        cmath::abs(cmath::exp_m1(d))
    }

    pub fn to_f64(&self) -> LogComplex<f64> {
        LogComplex::new(self.log_mag.to_f64(), self.phase.to_f64())
    }

    pub fn lift(z: LogComplex<f64>) -> Self {
        LogComplex::new(T::from_f64(z.log_mag), T::from_f64(z.phase))
    }
}

/// Reduces an angle to `(-pi, pi]`.
pub fn wrap_phase<T: Real>(phase: T) -> T {
    let two_pi = T::two_pi();
    let k = (phase / two_pi).round();
    let mut p = phase - two_pi * k;
    let pi = T::pi();
    if p > pi {
        p -= two_pi;
    } else if p <= -pi {
        p += two_pi;
    }
    p
}

impl<T: Real> Add for LogComplex<T> {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        Self::sum([self, other])
    }
}

impl<T: Real> Sub for LogComplex<T> {
    type Output = Self;
    fn sub(self, other: Self) -> Self {
        Self::sum([self, -other])
    }
}

impl<T: Real> Mul for LogComplex<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        LogComplex::new(self.log_mag + o.log_mag, self.phase + o.phase)
    }
}

impl<T: Real> Div for LogComplex<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        LogComplex::new(self.log_mag - o.log_mag, self.phase - o.phase)
    }
}

impl<T: Real> Neg for LogComplex<T> {
    type Output = Self;
    fn neg(self) -> Self {
        let pi = T::pi();
        let phase = if self.phase > T::zero() {
            self.phase - pi
        } else {
            self.phase + pi
        };
        LogComplex::new(self.log_mag, phase)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn complex_round_trip() {
        let z = Complex::new(-3.0, 4.0);
        let l = LogComplex::from_complex(z);
        assert!((l.log_mag - 5.0_f64.ln()).abs() < 1e-15);
        assert!((l.to_complex().unwrap() - z).norm() < 1e-14);
    }

    #[test]
    fn huge_values_survive_products() {
        let big = LogComplex::new(600.0, 1.0);
        let p = big * big;
        assert_eq!(p.log_mag, 1200.0);
        assert!(p.to_complex().is_err());
        let q = p / big;
        assert!(q.to_complex().is_ok());
    }

    #[test]
    fn sum_of_large_terms_cancels_cleanly() {
        let a = LogComplex::new(800.0, 0.3);
        let b = -a;
        let c = LogComplex::new(790.0, 0.0);
        let s = LogComplex::sum([a, b, c]);
        assert!((s.log_mag - 790.0).abs() < 1e-9);
    }

    #[test]
    fn zero_is_absorbing_for_sum_identity() {
        let z = LogComplex::<f64>::zero();
        let a = LogComplex::new(2.0, 0.5);
        let s = z + a;
        assert!(s.rel_diff(&a) < 1e-15);
        assert!(LogComplex::<f64>::sum([z, z]).is_zero());
    }

    #[test]
    fn neg_adds_half_turn() {
        let a = LogComplex::new(0.0, 0.25);
        let n = -a;
        let expected = Complex::new(-(0.25_f64).cos(), -(0.25_f64).sin());
        assert!((n.to_complex().unwrap() - expected).norm() < 1e-15);
    }

    #[test]
    fn rel_diff_ignores_whole_turns() {
        let a = LogComplex::new(1.0, 0.2);
        let b = LogComplex::new(1.0, 0.2 + 40.0 * PI);
        assert!(a.rel_diff(&b) < 1e-13);
    }

    #[test]
    fn wrap_phase_range() {
        assert!((wrap_phase(3.0 * PI) - PI).abs() < 1e-12);
        assert!((wrap_phase(-PI) - PI).abs() < 1e-12);
        assert!((wrap_phase(0.1_f64) - 0.1).abs() < 1e-16);
    }
}
