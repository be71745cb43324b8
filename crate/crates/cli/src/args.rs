//! Command-line flags and the value parsers for complex numbers and ranges.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Parser, Debug)]
#[command(name = "jones-asy", version, about = "Colored Jones polynomials of torus knots and their large-N behaviour")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate J_N at t = exp(2 pi r i / N) by one or all methods.
    Eval(EvalArgs),
    /// Fit the large-N limit along a range of N and compare with the closed form.
    Limit(LimitArgs),
    /// Saddle and residue terms of the asymptotic expansion at one N.
    Asympt(AsymptArgs),
    /// Fitted limit of log J_N / N along a vertical line crossing the real axis.
    Scan(ScanArgs),
    /// The poles crossed when the contour is shifted onto the saddle.
    Residues(ResiduesArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long)]
    pub a: u32,
    #[arg(long)]
    pub b: u32,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Relative tolerance of the integral evaluator.
    #[arg(long, value_parser = parse_tol)]
    pub tol: Option<f64>,
    /// Worker threads; JONES_ASY_THREADS takes precedence.
    #[arg(long)]
    pub threads: Option<usize>,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub r: Complex64,
    #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Sum)]
    pub method: MethodArg,
}

#[derive(Args, Debug)]
pub struct LimitArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub r: Complex64,
    /// `start:stop:step`, stop included when aligned.
    #[arg(long, value_parser = parse_range)]
    pub n: NRange,
    #[arg(long, value_enum, default_value_t = SingleMethod::Sum)]
    pub method: SingleMethod,
}

#[derive(Args, Debug)]
pub struct AsymptArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub r: Complex64,
    #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub common: Common,
    /// Real part shared by every grid point.
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    pub re: f64,
    /// Comma-separated Im r values, none of them zero.
    #[arg(long, value_parser = parse_im_value, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub im: Vec<f64>,
    #[arg(long, value_parser = parse_range)]
    pub n: NRange,
    #[arg(long, value_enum, default_value_t = SingleMethod::Sum)]
    pub method: SingleMethod,
}

#[derive(Args, Debug)]
pub struct ResiduesArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub r: Complex64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Sum,
    Recursion,
    Integral,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SingleMethod {
    Sum,
    Recursion,
    Integral,
}

impl SingleMethod {
    pub fn method(self) -> torus_jones::Method {
        match self {
            SingleMethod::Sum => torus_jones::Method::Sum,
            SingleMethod::Recursion => torus_jones::Method::Recursion,
            SingleMethod::Integral => torus_jones::Method::Integral,
        }
    }
}

/// Inclusive `start:stop:step` range of colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NRange {
    pub start: u32,
    pub stop: u32,
    pub step: u32,
}

impl NRange {
    pub fn values(&self) -> Vec<u32> {
        (self.start..=self.stop).step_by(self.step as usize).collect()
    }
}

fn parse_decimal(s: &str) -> Result<f64, String> {
    let ok = !s.is_empty()
        && s.chars().all(|c| c.is_ascii_digit() || c == '.')
        && s.chars().filter(|&c| c == '.').count() <= 1
        && s.chars().any(|c| c.is_ascii_digit());
    if !ok {
        return Err(format!("`{s}` is not a plain decimal number"));
    }
    s.parse().map_err(|e| format!("`{s}`: {e}"))
}

/// `A`, `A+Bi`, `A-Bi`, `Bi` or `-Bi` with plain decimals and no whitespace.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    if s.chars().any(char::is_whitespace) {
        return Err("complex values must not contain whitespace".into());
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let sign = |neg: bool, x: f64| if neg { -x } else { x };
    let Some(body_i) = body.strip_suffix('i') else {
        return Ok(Complex64::new(sign(neg, parse_decimal(body)?), 0.0));
    };
    match body_i.rfind(['+', '-']) {
        Some(pos) => {
            let re = sign(neg, parse_decimal(&body_i[..pos])?);
            let im = parse_decimal(&body_i[pos + 1..])?;
            let im = if body_i.as_bytes()[pos] == b'-' { -im } else { im };
            Ok(Complex64::new(re, im))
        }
        None => Ok(Complex64::new(0.0, sign(neg, parse_decimal(body_i)?))),
    }
}

pub fn parse_range(s: &str) -> Result<NRange, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(format!("`{s}` is not of the form start:stop:step"));
    };
    let num = |p: &str| p.parse::<u32>().map_err(|e| format!("`{p}`: {e}"));
    let range = NRange {
        start: num(start)?,
        stop: num(stop)?,
        step: num(step)?,
    };
    if range.start == 0 || range.step == 0 || range.stop < range.start {
        return Err("ranges need 1 <= start <= stop and step >= 1".into());
    }
    Ok(range)
}

fn parse_im_value(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("`{s}`: {e}"))?;
    if v == 0.0 {
        return Err("the scan grid must not contain Im r = 0".into());
    }
    if !v.is_finite() {
        return Err(format!("`{s}` is not finite"));
    }
    Ok(v)
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("`{s}`: {e}"))?;
    if !(v > 0.0 && v < 1.0) {
        return Err("the tolerance must lie in (0, 1)".into());
    }
    Ok(v)
}
