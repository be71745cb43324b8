use num_complex::Complex;

use crate::logc::LogComplex;
use crate::real::{turns_of_ratio, Real};

/// The single branch used for every power of `t = exp(2 pi r i / N)`:
/// `t^x := exp((2 pi r i / N) x)` for any real `x`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerConvention<T = f64> {
    pub n: u32,
    pub r: Complex<T>,
}

impl<T: Real> PowerConvention<T> {
    pub fn new(n: u32, r: Complex<T>) -> Self {
        assert!(n >= 1, "N must be positive");
        PowerConvention { n, r }
    }

    /// `t^x` with the phase left unreduced.
    pub fn t_power(&self, x: T) -> LogComplex<T> {
        let scale = T::two_pi() * x / T::from_i64(self.n as i64);
        LogComplex::new(-self.r.im * scale, self.r.re * scale)
    }

    /// `t^{m/4}` with the phase reduced mod `2 pi` exactly in the integer
    /// part, for exponents that are multiples of one quarter.
    pub fn t_power_quarter(&self, m: i64) -> LogComplex<T> {
        let d = 4 * self.n as i64;
        let log_mag = -T::two_pi() * self.r.im * T::from_i64(m) / T::from_i64(d);
        let phase = T::two_pi() * turns_of_ratio(self.r.re, m, d);
        LogComplex::new(log_mag, phase)
    }

    pub fn t_power_int(&self, m: i64) -> LogComplex<T> {
        self.t_power_quarter(4 * m)
    }
}

pub fn t_power<T: Real>(conv: &PowerConvention<T>, x: T) -> LogComplex<T> {
    conv.t_power(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;
    use num_complex::Complex64;

    #[test]
    fn zeroth_power_is_one() {
        let conv = PowerConvention::new(4, Complex64::new(1.0, 0.0));
        let p = conv.t_power(0.0);
        assert_eq!(p.log_mag, 0.0);
        assert_eq!(p.phase, 0.0);
    }

    #[test]
    fn first_power_at_n4_is_i() {
        let conv = PowerConvention::new(4, Complex64::new(1.0, 0.0));
        let p = conv.t_power(1.0);
        assert_eq!(p.log_mag, 0.0);
        assert!((p.phase - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn fractional_power_with_complex_r() {
        let conv = PowerConvention::new(10, Complex64::new(1.0, -0.1));
        let p = conv.t_power(2.5);
        assert!((p.log_mag - 0.05 * PI).abs() < 1e-15);
        assert!((p.phase - 0.5 * PI).abs() < 1e-15);
    }

    #[test]
    fn quarter_powers_agree_with_plain_powers_modulo_turns() {
        let conv = PowerConvention::new(37, Complex64::new(0.93, 0.21));
        for m in [-5000_i64, -7, 0, 3, 12345] {
            let a = conv.t_power(m as f64 / 4.0);
            let b = conv.t_power_quarter(m);
            assert!(a.rel_diff(&b) < 1e-12, "m = {m}");
        }
    }
}
