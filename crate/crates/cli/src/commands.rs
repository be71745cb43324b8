//! One function per subcommand, each producing an [`OutputRecord`].

use num_complex::Complex64;
use rayon::prelude::*;

use torus_jones::analysis::{fit_limit, fit_value_limit, kashaev_growth_check, predicted_log_limit, wrapped_distance};
use torus_jones::analysis::{FitReport, Probe, Sequence};
use torus_jones::*;

use crate::args::{AsymptArgs, Command, Common, EvalArgs, LimitArgs, MethodArg, ResiduesArgs, ScanArgs};
use crate::record::{put, put_complex, put_value, ComplexInput, Inputs, OutputRecord, Row, LOG_MAG_LIMIT};
use crate::CliError;

type Outcome = std::result::Result<OutputRecord, CliError>;

pub fn run(command: &Command) -> Outcome {
    match command {
        Command::Eval(args) => eval(args),
        Command::Limit(args) => limit(args),
        Command::Asympt(args) => asympt(args),
        Command::Scan(args) => scan(args),
        Command::Residues(args) => residues(args),
    }
}

pub fn common(command: &Command) -> &Common {
    match command {
        Command::Eval(a) => &a.common,
        Command::Limit(a) => &a.common,
        Command::Asympt(a) => &a.common,
        Command::Scan(a) => &a.common,
        Command::Residues(a) => &a.common,
    }
}

fn inputs(common: &Common, r: Option<Complex64>) -> Inputs {
    let mut inputs = Inputs::knot(common.a, common.b);
    inputs.r = r.map(ComplexInput::from);
    inputs.tol = common.tol;
    inputs
}

/// `evaluate`, with the integral's tolerance taken from `--tol` when given.
fn evaluate_with(knot: &TorusKnot, n: u32, r: Complex64, method: Method, tol: Option<f64>) -> Result<JonesResult> {
    match (method, tol) {
        (Method::Integral, Some(tol)) => {
            let mut spec = ContourSpec::auto(knot, r, n);
            spec.target_tol = tol;
            evaluate_integral(knot, n, r, Some(spec))
        }
        _ => evaluate(knot, n, r, method),
    }
}

/// Unwrapped sequence over `ns`, evaluated in parallel, in input order.
fn sequence(knot: &TorusKnot, r: Complex64, ns: &[u32], method: Method, tol: Option<f64>) -> Result<Sequence> {
    let probes = ns
        .par_iter()
        .map(|&n| {
            let value = evaluate_with(knot, n, r, method, tol)?.value;
            let next = evaluate_with(knot, n + 1, r, method, tol)?.value;
            Ok(Probe {
                n,
                value,
                step: wrap_phase(next.phase - value.phase),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Sequence::from_probes(r, &probes)
}

fn omitted_warning(record: &mut OutputRecord, ns: &[u32]) {
    if ns.is_empty() {
        return;
    }
    let list: Vec<String> = ns.iter().map(u32::to_string).collect();
    record.warnings.push(format!(
        "re/im omitted where log_mag > {LOG_MAG_LIMIT} (N = {}); use log_mag and phase",
        list.join(", ")
    ));
}

fn put_fit(row: &mut Row, fit: &FitReport) {
    put(row, "model", fit.model);
    put(row, "p", fit.prefactor_poly_exponent);
    put_complex(row, "correction", fit.correction);
    put(row, "residual_rms", fit.residual_rms);
    put(row, "condition", fit.condition);
    put(row, "samples", fit.samples as u64);
}

pub fn eval(args: &EvalArgs) -> Outcome {
    let c = &args.common;
    let knot = TorusKnot::new(c.a, c.b)?;
    let methods = match args.method {
        MethodArg::Sum => vec![Method::Sum],
        MethodArg::Recursion => vec![Method::Recursion],
        MethodArg::Integral => vec![Method::Integral],
        MethodArg::All => vec![Method::Sum, Method::Recursion, Method::Integral],
    };
    let results = methods
        .par_iter()
        .map(|&m| evaluate_with(&knot, args.n, args.r, m, c.tol))
        .collect::<Result<Vec<_>>>()?;

    let mut inp = inputs(c, Some(args.r));
    inp.n = Some(args.n);
    inp.method = Some(format!("{:?}", args.method).to_lowercase());
    let mut record = OutputRecord::new("eval", inp);
    let reference = results[0].value;
    let mut omitted = Vec::new();
    for res in &results {
        let mut row = Row::new();
        put(&mut row, "method", res.method.name());
        // a single N has no neighbours to unwrap against: principal value
        if !put_value(&mut row, "", "phase_unwrapped", &res.value, wrap_phase(res.value.phase)) {
            omitted.push(res.n);
        }
        if let Some(err) = res.quad_error_estimate {
            put(&mut row, "quad_error_estimate", err);
        }
        if results.len() > 1 {
            put(&mut row, "rel_diff_vs_first", res.value.rel_diff(&reference));
        }
        record.rows.push(row);
    }
    omitted.dedup();
    omitted_warning(&mut record, &omitted);
    Ok(record)
}

pub fn limit(args: &LimitArgs) -> Outcome {
    let c = &args.common;
    let knot = TorusKnot::new(c.a, c.b)?;
    let ns = args.n.values();
    let mut inp = inputs(c, Some(args.r));
    inp.n_range = Some(args.n);
    inp.method = Some(args.method.method().name().to_string());
    let mut record = OutputRecord::new("limit", inp);

    if args.r.im == 0.0 {
        return kashaev_limit(&knot, args.r, &ns, record);
    }

    let r = args.r;
    let predicted = if r.im < 0.0 {
        predict_limit_negative(&knot, r)?
    } else {
        predict_growth_positive(&knot, r)?
    };
    let seq = sequence(&knot, r, &ns, args.method.method(), c.tol)?;
    let mut omitted = Vec::new();
    for s in &seq.samples {
        let mut row = Row::new();
        put(&mut row, "row", "sample");
        put(&mut row, "N", s.n);
        if !put_value(&mut row, "", "phase_unwrapped", &s.value, s.value.phase) {
            omitted.push(s.n);
        }
        put_complex(&mut row, "log_over_n", s.log_over_n);
        record.rows.push(row);
    }
    omitted_warning(&mut record, &omitted);

    let (fit, distance) = if r.im < 0.0 {
        let fit = fit_value_limit(&seq)?;
        (fit, (fit.limit_estimate - predicted).norm())
    } else {
        let fit = fit_limit(&seq)?;
        (fit, wrapped_distance(fit.limit_estimate, predicted))
    };
    let mut row = Row::new();
    put(&mut row, "row", "fit");
    put(&mut row, "quantity", if r.im < 0.0 { "lim J_N" } else { "lim log J_N / N" });
    put_complex(&mut row, "fitted", fit.limit_estimate);
    put_complex(&mut row, "predicted", predicted);
    put(&mut row, "distance", distance);
    put_fit(&mut row, &fit);
    record.rows.push(row);
    if r.im > 0.0 {
        record
            .warnings
            .push("distance compares Im of the log-limit mod 2 pi".to_string());
    }
    Ok(record)
}

/// Real `r`: only `r = 1` is supported, as the polynomial growth check.
fn kashaev_limit(knot: &TorusKnot, r: Complex64, ns: &[u32], mut record: OutputRecord) -> Outcome {
    if r.re != 1.0 {
        return Err(Error::Regime {
            reason: "for real r only r = 1 is supported",
        }
        .into());
    }
    record
        .warnings
        .push("r is real: routed to the growth check |J_N| ~ C N^p at r = 1".to_string());
    let values = ns
        .par_iter()
        .map(|&n| Ok(evaluate_sum_root_of_unity(knot, n, 1)?.value.log_mag))
        .collect::<Result<Vec<_>>>()?;
    for (&n, &log_abs) in ns.iter().zip(&values) {
        let mut row = Row::new();
        put(&mut row, "row", "sample");
        put(&mut row, "N", n);
        put(&mut row, "log_abs", log_abs);
        record.rows.push(row);
    }
    let fit = kashaev_growth_check(knot, ns)?;
    let mut row = Row::new();
    put(&mut row, "row", "fit");
    put(&mut row, "quantity", "p in |J_N| ~ C N^p");
    put(&mut row, "constant", fit.limit_estimate.re);
    put_fit(&mut row, &fit);
    record.rows.push(row);
    Ok(record)
}

fn dominant_label(d: Dominant) -> String {
    match d {
        Dominant::Saddle => "Saddle".to_string(),
        Dominant::Residue(k) => format!("Residue({k})"),
    }
}

pub fn asympt(args: &AsymptArgs) -> Outcome {
    let c = &args.common;
    let knot = TorusKnot::new(c.a, c.b)?;
    let (r, n) = (args.r, args.n);
    let expansion = AsymptoticExpansion::new(&knot, r)?;
    let mut inp = inputs(c, Some(r));
    inp.n = Some(n);
    let mut record = OutputRecord::new("asympt", inp);
    let mut omitted = false;

    let mut row = Row::new();
    put(&mut row, "term", "saddle");
    put_complex(&mut row, "exponent", expansion.saddle_exponent);
    put_complex(&mut row, "prefactor", expansion.saddle_prefactor(n)?);
    let value = saddle_term(&knot, r, n)?;
    omitted |= !put_value(&mut row, "term", "phase", &value, value.phase);
    record.rows.push(row);

    for t in &expansion.residues {
        let mut row = Row::new();
        put(&mut row, "term", "residue");
        put(&mut row, "k", t.k);
        put_complex(&mut row, "exponent", t.exponent);
        put_complex(&mut row, "prefactor", t.prefactor);
        let value = residue_term(&knot, r, t.k, n);
        omitted |= !put_value(&mut row, "term", "phase", &value, value.phase);
        record.rows.push(row);
    }

    let asy = asymptotic_value(&knot, r, n)?;
    let exact = evaluate_sum(&knot, n, r)?.value;
    let mut row = Row::new();
    put(&mut row, "term", "total");
    put(&mut row, "dominant", dominant_label(expansion.dominant));
    put_complex(&mut row, "dominant_exponent", expansion.dominant_exponent());
    omitted |= !put_value(&mut row, "asymptotic", "phase", &asy, wrap_phase(asy.phase));
    omitted |= !put_value(&mut row, "exact", "phase", &exact, wrap_phase(exact.phase));
    let ratio = asy / exact;
    put(&mut row, "ratio_log_mag", ratio.log_mag);
    put(&mut row, "ratio_phase", wrap_phase(ratio.phase));
    put(&mut row, "rel_diff", asy.rel_diff(&exact));
    record.rows.push(row);

    record.warnings.push(
        "term rows are residues of e^{N f} tau; the total is Phi(N) (saddle + 2 pi i sum of residues)".to_string(),
    );
    if omitted {
        record
            .warnings
            .push(format!("re/im omitted where log_mag > {LOG_MAG_LIMIT}; use log_mag and phase"));
    }
    Ok(record)
}

pub fn scan(args: &ScanArgs) -> Outcome {
    let c = &args.common;
    let knot = TorusKnot::new(c.a, c.b)?;
    let ns = args.n.values();
    let method = args.method.method();
    let mut inp = inputs(c, None);
    inp.re = Some(args.re);
    inp.im = Some(args.im.clone());
    inp.n_range = Some(args.n);
    inp.method = Some(method.name().to_string());
    let mut record = OutputRecord::new("scan", inp);

    let rows = args
        .im
        .par_iter()
        .map(|&y| {
            let r = Complex64::new(args.re, y);
            let predicted = predicted_log_limit(&knot, r)?;
            let fit = fit_limit(&sequence(&knot, r, &ns, method, c.tol)?)?;
            let mut row = Row::new();
            put(&mut row, "im_r", y);
            put(&mut row, "side", if y < 0.0 { "below" } else { "above" });
            put_complex(&mut row, "fitted", fit.limit_estimate);
            put_complex(&mut row, "predicted", predicted);
            put(&mut row, "distance", wrapped_distance(fit.limit_estimate, predicted));
            put_fit(&mut row, &fit);
            Ok(row)
        })
        .collect::<Result<Vec<_>>>()?;
    record.rows = rows;
    record
        .warnings
        .push("limits of log J_N / N; Im is compared mod 2 pi".to_string());
    Ok(record)
}

pub fn residues(args: &ResiduesArgs) -> Outcome {
    let c = &args.common;
    let knot = TorusKnot::new(c.a, c.b)?;
    let terms = enumerate_residues(&knot, args.r)?;
    let bound = knot.ab() as f64 * args.r.norm() * h_theta(args.r.arg())?;
    let mut record = OutputRecord::new("residues", inputs(c, Some(args.r)));
    for t in &terms {
        let mut row = Row::new();
        put(&mut row, "k", t.k);
        put_complex(&mut row, "exponent", t.exponent);
        put_complex(&mut row, "prefactor", t.prefactor);
        put(&mut row, "bound", bound);
        record.rows.push(row);
    }
    if terms.is_empty() {
        record
            .warnings
            .push(format!("no pole lies below the bound ab |r| h(theta) = {bound}"));
    }
    Ok(record)
}
