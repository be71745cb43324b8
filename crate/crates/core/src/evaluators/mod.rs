//! Three independent ways to compute `J_N(T(a, b); e^{2 pi r i / N})`.

mod integral;
mod recursion;
mod sum;

pub use integral::{evaluate_integral, ContourSpec};
pub use recursion::evaluate_recursive;
pub use sum::{evaluate_sum, evaluate_sum_root_of_unity};

use num_complex::Complex64;

use crate::domain::knot::TorusKnot;
use crate::logc::LogComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Sum,
    Recursion,
    Integral,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Sum => "sum",
            Method::Recursion => "recursion",
            Method::Integral => "integral",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JonesResult<T = f64> {
    pub value: LogComplex<T>,
    pub method: Method,
    pub n: u32,
    pub knot: TorusKnot,
    pub r: Complex64,
    /// Relative quadrature error; present exactly for [`Method::Integral`].
    pub quad_error_estimate: Option<f64>,
}

/// Dispatches to the evaluator for `method` in double precision.
pub fn evaluate(
    knot: &TorusKnot,
    n: u32,
    r: Complex64,
    method: Method,
) -> crate::Result<JonesResult> {
    match method {
        Method::Sum => evaluate_sum(knot, n, r),
        Method::Recursion => evaluate_recursive(knot, n, r),
        Method::Integral => evaluate_integral(knot, n, r, None),
    }
}
