//! The single object every invocation emits.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::args::NRange;
use torus_jones::LogComplex;

pub const SCHEMA_VERSION: &str = "1.0";

/// Values whose magnitude exceeds `e^LOG_MAG_LIMIT` are reported in log form only.
pub const LOG_MAG_LIMIT: f64 = 700.0;

/// One table row; keys keep their insertion order.
pub type Row = Map<String, Value>;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexInput {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for ComplexInput {
    fn from(z: Complex64) -> Self {
        ComplexInput { re: z.re, im: z.im }
    }
}

/// The parameters a run was invoked with, echoed back verbatim.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Inputs {
    pub a: u32,
    pub b: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<ComplexInput>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(rename = "n", default, skip_serializing_if = "Option::is_none")]
    pub n_range: Option<NRange>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub re: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

impl Inputs {
    pub fn knot(a: u32, b: u32) -> Self {
        Inputs {
            a,
            b,
            r: None,
            n: None,
            n_range: None,
            method: None,
            re: None,
            im: None,
            tol: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub inputs: Inputs,
    pub rows: Vec<Row>,
    pub warnings: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &str, inputs: Inputs) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            inputs,
            rows: Vec::new(),
            warnings: Vec::new(),
        }
    }
}

pub fn put(row: &mut Row, key: &str, value: impl Into<Value>) {
    row.insert(key.to_string(), value.into());
}

pub fn put_complex(row: &mut Row, key: &str, z: Complex64) {
    put(row, &format!("{key}_re"), z.re);
    put(row, &format!("{key}_im"), z.im);
}

/// `log_mag`, the phase under `phase_key` and, when representable, `re` and
/// `im` of `value` with the phase replaced by `phase`. Returns `false` when
/// `re`/`im` had to be left out.
pub fn put_value(row: &mut Row, prefix: &str, phase_key: &str, value: &LogComplex, phase: f64) -> bool {
    let key = |s: &str| if prefix.is_empty() { s.to_string() } else { format!("{prefix}_{s}") };
    put(row, &key("log_mag"), value.log_mag);
    put(row, &key(phase_key), phase);
    if value.log_mag > LOG_MAG_LIMIT {
        return false;
    }
    match LogComplex::new(value.log_mag, phase).to_complex() {
        Ok(z) => {
            put(row, &key("re"), z.re);
            put(row, &key("im"), z.im);
            true
        }
        Err(_) => false,
    }
}
