use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::domain::knot::TorusKnot;
use crate::error::{Error, Result};
use crate::evaluators::{evaluate, Method};
use crate::logc::{wrap_phase, LogComplex};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SequenceSample {
    pub n: u32,
    pub value: LogComplex,
    /// `(log|J_N| + i arg J_N) / N` with the argument unwrapped along `N`.
    pub log_over_n: Complex64,
}

/// `J_N` together with the phase step `arg(J_{N+1} / J_N)`, which is what
/// lets samples several `N` apart be unwrapped consistently.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Probe {
    pub n: u32,
    pub value: LogComplex,
    pub step: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Sequence {
    pub r: Complex64,
    pub samples: Vec<SequenceSample>,
}

fn check_ascending<I: Iterator<Item = u32>>(ns: I) -> Result<()> {
    let mut last = 0;
    for n in ns {
        if n == 0 {
            return Err(Error::InvalidInput("N must be at least 1"));
        }
        if n <= last {
            return Err(Error::InvalidInput("N values must be strictly increasing"));
        }
        last = n;
    }
    Ok(())
}

/// Evaluates `J_N` and `J_{N+1}` for one sample.
pub fn probe(knot: &TorusKnot, r: Complex64, n: u32, method: Method) -> Result<Probe> {
    let value = evaluate(knot, n, r, method)?.value;
    let next = evaluate(knot, n + 1, r, method)?.value;
    Ok(Probe {
        n,
        value,
        step: wrap_phase(next.phase - value.phase),
    })
}

fn nearest_turn(phase: f64, target: f64) -> f64 {
    phase + TAU * libm::round((target - phase) / TAU)
}

fn sample(n: u32, value: LogComplex, phase: f64) -> SequenceSample {
    let nf = n as f64;
    SequenceSample {
        n,
        value: LogComplex::new(value.log_mag, phase),
        log_over_n: Complex64::new(value.log_mag / nf, phase / nf),
    }
}

impl Sequence {
    /// Unwraps with the trapezoid prediction
    /// `phase_i ~ phase_{i-1} + (N_i - N_{i-1}) (step_{i-1} + step_i) / 2`.
    pub fn from_probes(r: Complex64, probes: &[Probe]) -> Result<Self> {
        check_ascending(probes.iter().map(|p| p.n))?;
        let mut samples = Vec::with_capacity(probes.len());
        let mut prev: Option<(&Probe, f64)> = None;
        for p in probes {
            let phase = match prev {
                None => wrap_phase(p.value.phase),
                Some((q, q_phase)) => {
                    let gap = (p.n - q.n) as f64;
                    let target = q_phase + gap * 0.5 * (q.step + p.step);
                    nearest_turn(p.value.phase, target)
                }
            };
            samples.push(sample(p.n, p.value, phase));
            prev = Some((p, phase));
        }
        Ok(Sequence { r, samples })
    }

    /// Takes the phases of `values` as already unwrapped.
    pub fn from_values(r: Complex64, values: &[(u32, LogComplex)]) -> Result<Self> {
        check_ascending(values.iter().map(|v| v.0))?;
        let samples = values.iter().map(|&(n, v)| sample(n, v, v.phase)).collect();
        Ok(Sequence { r, samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

/// Evaluates `J_N` over `ns` and unwraps the phases.
pub fn collect_sequence(knot: &TorusKnot, r: Complex64, ns: &[u32], method: Method) -> Result<Sequence> {
    check_ascending(ns.iter().copied())?;
    let probes = ns
        .iter()
        .map(|&n| probe(knot, r, n, method))
        .collect::<Result<Vec<_>>>()?;
    Sequence::from_probes(r, &probes)
}
