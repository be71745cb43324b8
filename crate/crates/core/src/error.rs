use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("T({a},{b}) is not a torus knot: need a, b > 1 and gcd(a, b) = 1")]
    InvalidKnot { a: u32, b: u32 },

    #[error("point lies within {distance:e} of the pole k = {k} of tau")]
    PoleHit { k: i64, distance: f64 },

    #[error("r = {re}{im:+}i is (numerically) an integer")]
    IntegerR { re: f64, im: f64 },

    #[error("argument {value} outside the admissible range {range}")]
    OutOfRange { value: f64, range: &'static str },

    #[error("vanishing denominator: {what}")]
    DenominatorZero { what: &'static str },

    #[error("quadrature did not reach tolerance {tol:e} within {nodes} nodes")]
    NoConvergence { nodes: usize, tol: f64 },

    #[error("pole k = {k} sits on the shifted contour (bound {bound})")]
    BoundaryResidue { k: i64, bound: f64 },

    /// Term indices are pole numbers `k`, with 0 standing for the saddle.
    #[error("dominant exponent is not unique: terms {first} and {second} tie (0 is the saddle)")]
    TieBreak { first: i64, second: i64 },

    #[error("outside the asymptotic regime: {reason}")]
    Regime { reason: &'static str },

    #[error("least-squares design is ill conditioned (condition number {cond:e})")]
    IllConditioned { cond: f64 },

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("invalid input: {0}")]
    InvalidInput(&'static str),

    #[error("contour angle {phi} is not admissible for arg r = {theta}")]
    InvalidContour { phi: f64, theta: f64 },

    #[error("value with log-magnitude {log_mag} does not fit in a double")]
    Overflow { log_mag: f64 },
}

impl Error {
    /// Stable short name of the variant, used by front ends on stderr.
    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidKnot { .. } => "InvalidKnot",
            Error::PoleHit { .. } => "PoleHit",
            Error::IntegerR { .. } => "IntegerR",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::DenominatorZero { .. } => "DenominatorZero",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::BoundaryResidue { .. } => "BoundaryResidue",
            Error::TieBreak { .. } => "TieBreak",
            Error::Regime { .. } => "RegimeError",
            Error::IllConditioned { .. } => "IllConditioned",
            Error::InsufficientSamples { .. } => "InsufficientSamples",
            Error::InvalidInput(_) => "InvalidInput",
            Error::InvalidContour { .. } => "InvalidContour",
            Error::Overflow { .. } => "Overflow",
        }
    }
}
