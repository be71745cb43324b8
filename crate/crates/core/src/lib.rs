//! Colored Jones polynomials of torus knots near roots of unity.
//!
//! The [`evaluators`] compute `J_N` exactly by independent methods that
//! cross-check each other. [`asymptotics`] and [`analysis`] cover the
//! large-`N` behaviour. Everything is `no_std` with `alloc`.

#![no_std]
// `!(x < y)` guards are written so that NaN fails them
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// reference constants in tests carry every digit of the oracle
#![cfg_attr(test, allow(clippy::excessive_precision, clippy::approx_constant))]

extern crate alloc;

pub mod analysis;
pub mod asymptotics;
pub mod cmath;
mod dd;
pub mod domain;
pub mod evaluators;
mod error;
pub mod logc;
pub mod quadrature;
mod real;

pub use asymptotics::{
    asymptotic_value, dominant_exponent, dominant_term, enumerate_residues, predict_growth_positive,
    predict_limit_negative, recursion_fixed_point, residue_term, saddle_term, AsymptoticExpansion,
    Dominant, ResidueTerm,
};
pub use dd::Dd;
pub use domain::*;
pub use error::{Error, Result};
pub use evaluators::{
    evaluate, evaluate_integral, evaluate_recursive, evaluate_sum, evaluate_sum_root_of_unity,
    ContourSpec, JonesResult, Method,
};
pub use logc::{wrap_phase, LogComplex};
pub use real::{turns_of_ratio, Real};
