//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Run with `cargo test -p torus-jones --test acceptance`.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torus_jones::analysis::{collect_sequence, discontinuity_scan, fit_limit, kashaev_growth_check, wrapped_distance};
use torus_jones::cmath::lift;
use torus_jones::*;

const KNOTS: [(u32, u32); 4] = [(2, 3), (2, 5), (3, 4), (3, 5)];

struct Outcome {
    pass: bool,
    detail: String,
}

type Criterion = (&'static str, fn() -> Outcome);

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn knot(a: u32, b: u32) -> TorusKnot {
    TorusKnot::new(a, b).unwrap()
}

/// `Re r` in (0.7, 1.3), `|Im r|` in (0.02, 0.3), either sign.
fn random_r(rng: &mut ChaCha8Rng) -> Complex64 {
    let re = rng.gen_range(0.7..1.3);
    let im = rng.gen_range(0.02..0.3);
    Complex64::new(re, if rng.gen_bool(0.5) { im } else { -im })
}

fn random_r_signed(rng: &mut ChaCha8Rng, below: bool) -> Complex64 {
    let r = random_r(rng);
    Complex64::new(r.re, if below { -r.im.abs() } else { r.im.abs() })
}

fn oracle_triple_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let rs: Vec<Complex64> = (0..20).map(|_| random_r(&mut rng)).collect();
    let (mut worst_rec, mut worst_int) = (0.0f64, 0.0f64);
    let mut failures = Vec::new();
    for (a, b) in KNOTS {
        let k = knot(a, b);
        for &r in &rs {
            for n in 1..=40 {
                let sum = evaluate_sum(&k, n, r).unwrap().value;
                let rec = evaluate_recursive(&k, n, r).unwrap().value;
                let int = match evaluate_integral(&k, n, r, None) {
                    Ok(v) => v.value,
                    Err(e) => {
                        failures.push(format!("T({a},{b}) N={n} r={r}: {e}"));
                        continue;
                    }
                };
                let (dr, di) = (sum.rel_diff(&rec), sum.rel_diff(&int));
                worst_rec = worst_rec.max(dr);
                worst_int = worst_int.max(di);
                if dr >= 1e-10 || di >= 1e-7 {
                    failures.push(format!("T({a},{b}) N={n} r={r}: rec {dr:.1e} int {di:.1e}"));
                }
            }
        }
    }
    let detail = format!(
        "max |sum/rec - 1| = {worst_rec:.2e} (< 1e-10), max |sum/int - 1| = {worst_int:.2e} (< 1e-7), {} failures{}",
        failures.len(),
        failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
    );
    outcome(failures.is_empty(), detail)
}

fn negative_limit() -> Outcome {
    let k = knot(2, 3);
    let r = Complex64::new(1.0, -0.2);
    let inv_delta = 1.0 / alexander_eval(&k, r).unwrap();
    let err = |n: u32| {
        let j = evaluate_sum(&k, n, r).unwrap().value.to_complex().unwrap();
        (j - inv_delta).norm()
    };
    let (e200, e400) = (err(200), err(400));
    let ratio = e400 / e200;
    let pass = e400 < 1e-2 && (0.35..=0.65).contains(&ratio);
    outcome(
        pass,
        format!("|J_400 - 1/Delta| = {e400:.4e} (< 1e-2), err(400)/err(200) = {ratio:.4} (in [0.35, 0.65])"),
    )
}

fn positive_growth() -> Outcome {
    let k = knot(2, 3);
    let r = Complex64::new(1.0, 0.1);
    let ns: Vec<u32> = (60..=300).step_by(20).collect();
    let seq = collect_sequence(&k, r, &ns, Method::Sum).unwrap();
    let fit = fit_limit(&seq).unwrap();
    let predicted = predict_growth_positive(&k, r).unwrap();
    let dist = wrapped_distance(fit.limit_estimate, predicted);
    let pass = dist < 1e-2 && fit.limit_estimate.re > 0.0;
    outcome(
        pass,
        format!(
            "fitted L = {:.6}, closed form = {:.6}, distance (Im mod 2pi) = {dist:.2e} (< 1e-2), Re L > 0: {}",
            fit.limit_estimate,
            predicted,
            fit.limit_estimate.re > 0.0
        ),
    )
}

fn kashaev_growth() -> Outcome {
    let ns: Vec<u32> = (50..=500).step_by(25).collect();
    let mut parts = Vec::new();
    let mut pass = true;
    for (a, b) in [(2, 3), (2, 5)] {
        let fit = kashaev_growth_check(&knot(a, b), &ns).unwrap();
        let p = fit.prefactor_poly_exponent;
        pass &= (1.35..=1.65).contains(&p);
        parts.push(format!("T({a},{b}) p = {p:.4}"));
    }
    outcome(pass, format!("{} (in [1.35, 1.65])", parts.join(", ")))
}

fn expansion_fidelity() -> Outcome {
    let k = knot(2, 3);
    let mut parts = Vec::new();
    let mut pass = true;
    for r in [Complex64::new(1.0, -0.1), Complex64::new(1.0, 0.1)] {
        let rd = lift::<Dd>(r);
        let err = |n: u32| {
            let asy = asymptotic_value(&k, rd, n).unwrap();
            let exact = evaluate_sum(&k, n, rd).unwrap().value;
            asy.rel_diff(&exact).to_f64()
        };
        let (e50, e400) = (err(50), err(400));
        let factor = e50 / e400;
        pass &= factor >= 4.0;
        parts.push(format!("r={r}: err(50) = {e50:.3e}, err(400) = {e400:.3e}, drop x{factor:.3e}"));
    }
    outcome(pass, format!("{} (need >= 4)", parts.join("; ")))
}

/// `(1/2 pi i) * contour integral of e^{N f} tau` around `k pi i/(ab)` by
/// the trapezoid rule on a circle.
fn circle_residue(k: &TorusKnot, r: Complex64, pole: i64, n: u32) -> Complex64 {
    const NODES: usize = 512;
    let ab = k.ab() as f64;
    let center = Complex64::new(0.0, pole as f64 * PI / ab);
    let gap = PI / ab;
    let radius = (0.3 / ab).min(gap / 2.0);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..NODES {
        let w = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / NODES as f64);
        let z = center + w * radius;
        let g = (f_abr(k, r, z) * n as f64).exp() * tau(k, z).unwrap();
        acc += g * w * radius;
    }
    // dz = i rho w dtheta, so (1/(2 pi i)) * sum g i rho w (2 pi/NODES)
    acc / NODES as f64
}

fn residue_closed_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut worst = 0.0f64;
    let mut checked = 0;
    for (a, b) in KNOTS {
        let k = knot(a, b);
        for _ in 0..3 {
            let r = random_r(&mut rng);
            for term in enumerate_residues(&k, r).unwrap() {
                for n in [1, 5] {
                    let closed = residue_term(&k, r, term.k, n).to_complex().unwrap();
                    let quad = circle_residue(&k, r, term.k, n);
                    worst = worst.max(((closed - quad) / closed).norm());
                    checked += 1;
                }
            }
        }
    }
    outcome(
        worst < 1e-8 && checked > 0,
        format!("{checked} residues, max relative deviation {worst:.2e} (< 1e-8)"),
    )
}

fn identity_suite() -> Outcome {
    const CASES: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut notes = Vec::new();
    let mut pass = true;
    let mut record = |name: &str, worst: f64, tol: f64| {
        let ok = worst <= tol;
        pass &= ok;
        notes.push(format!("{name} {worst:.1e}"));
    };

    let (mut alex, mut fixed) = (0.0f64, 0.0f64);
    for i in 0..CASES {
        let (a, b) = KNOTS[i % 4];
        let k = knot(a, b);
        let r = random_r_signed(&mut rng, true);
        let lim = predict_limit_negative(&k, r).unwrap();
        alex = alex.max((lim * alexander_eval(&k, r).unwrap() - 1.0).norm());
        let fp = recursion_fixed_point(&k, r).unwrap();
        fixed = fixed.max(((fp - lim) / lim).norm());
    }
    record("sinh-ratio*Alexander", alex, 1e-12);
    record("fixed-point", fixed, 1e-12);

    let mut argmax_bad = 0;
    for i in 0..CASES {
        let (a, b) = KNOTS[i % 4];
        let k = knot(a, b);
        let r = random_r(&mut rng);
        let terms = enumerate_residues(&k, r).unwrap();
        let saddle = Complex64::new(0.0, k.ab() as f64 * PI / 2.0) * r;
        // brute force over every enumerated exponent
        let mut best = (saddle.re, saddle);
        for t in &terms {
            if t.exponent.re > best.0 {
                best = (t.exponent.re, t.exponent);
            }
        }
        let closed = if r.im < 0.0 {
            saddle
        } else {
            Complex64::new(0.0, PI) * (1.0 - 1.0 / (2.0 * k.ab() as f64 * r))
        };
        let got = dominant_exponent(&k, r).unwrap();
        let label_ok = matches!(
            (dominant_term(&k, r).unwrap(), r.im < 0.0),
            (Dominant::Saddle, true) | (Dominant::Residue(1), false)
        );
        if got != best.1 || (got - closed).norm() > 1e-12 * closed.norm() || !label_ok {
            argmax_bad += 1;
        }
    }
    record("argmax mismatches", argmax_bad as f64, 0.0);

    let (mut odd, mut saddle_grad) = (0.0f64, 0.0f64);
    for i in 0..CASES {
        let (a, b) = KNOTS[i % 4];
        let k = knot(a, b);
        let ab = k.ab() as f64;
        let z = loop {
            let z = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let m = (z.im * ab / PI).round();
            if (z - Complex64::new(0.0, m * PI / ab)).norm() > 0.05 {
                break z;
            }
        };
        let p = tau(&k, z).unwrap();
        odd = odd.max((p + tau(&k, -z).unwrap()).norm() / p.norm());
        let r = random_r(&mut rng);
        let sp = Complex64::new(0.0, PI) * r;
        saddle_grad = saddle_grad.max(f_abr_prime(&k, r, sp).norm() / ab);
    }
    record("tau oddness", odd, 1e-12);
    record("f'(pi r i)", saddle_grad, 1e-12);

    let mut h_bad = 0;
    for _ in 0..CASES {
        let theta: f64 = rng.gen_range(-1.5..1.5);
        if theta == 0.0 {
            continue;
        }
        let h = h_theta(theta).unwrap();
        if (h - 1.0).signum() != theta.signum() || h <= 0.0 {
            h_bad += 1;
        }
    }
    record("h sign violations", h_bad as f64, 0.0);
    outcome(pass, format!("{CASES} inputs each: {}", notes.join(", ")))
}

fn discontinuity() -> Outcome {
    let k = knot(2, 3);
    let ns: Vec<u32> = (60..=300).step_by(20).collect();
    let mags = [0.05, 0.1, 0.15, 0.2, 0.25, 0.3];
    let grid: Vec<f64> = mags.iter().map(|m| -m).chain(mags.iter().copied()).collect();
    let rows = discontinuity_scan(&k, 1.0, &grid, &ns, Method::Sum).unwrap();
    let mut worst_lower = 0.0f64;
    let mut worst_upper = 0.0f64;
    for row in &rows {
        if row.im_r < 0.0 {
            worst_lower = worst_lower.max(wrapped_distance(row.fitted, Complex64::new(0.0, 0.0)));
        } else {
            worst_upper = worst_upper.max(row.distance);
        }
    }
    outcome(
        worst_lower < 0.02 && worst_upper < 0.05,
        format!(
            "lower half max |L| = {worst_lower:.2e} (< 0.02), upper half max |L - closed form| = {worst_upper:.2e} (< 0.05)"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 oracle triple agreement", oracle_triple_agreement),
        ("2 limit below the axis", negative_limit),
        ("3 growth above the axis", positive_growth),
        ("4 growth at r = 1", kashaev_growth),
        ("5 asymptotic expansion fidelity", expansion_fidelity),
        ("6 residue closed forms", residue_closed_forms),
        ("7 identity suite", identity_suite),
        ("8 discontinuity scan", discontinuity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        if !o.pass {
            failed += 1;
        }
        println!("[{tag}] criterion {name}: {} [{:.1?}]", o.detail, start.elapsed());
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
