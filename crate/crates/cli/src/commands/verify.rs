//! `fquad verify`: closed forms against the dense solve over a grid, plus
//! the lattice-operator identities.

use num_complex::Complex64;

use fourier_quad::coefficients::{coeffs_interval, CoefficientSet, Frequency, Interval};
use fourier_quad::kernel::{self, KernelContext, StepSize};
use fourier_quad::oracle::{compare, solve_interval};

use crate::config::{resolve, CliError};
use crate::VerifyArgs;

const WEIGHT_TOLERANCE: f64 = 1e-8;
const DELTA_TOLERANCE: f64 = 1e-8;
const WINDOW: usize = 200;

pub fn run(args: VerifyArgs) -> Result<(), CliError> {
    let config = resolve(&args.common, None, None, false)?;
    let ns = config.ns.clone().unwrap_or_else(|| vec![2, 5, 10, 20, 50]);
    if let Some(&bad) = ns.iter().find(|&&n| n < 2) {
        return Err(CliError::usage(format!(
            "verify compares the closed forms, which need N >= 2; got N = {bad}"
        )));
    }

    let mut report = String::new();
    let mut offenders = Vec::new();
    let mut worst_gap = 0.0f64;

    for &n in &ns {
        let omegas = config.omegas.clone().unwrap_or_else(|| {
            vec![
                0.0,
                0.3,
                0.505,
                1.01,
                10.01,
                f64::from(n),
                2.0 * f64::from(n),
            ]
        });
        for &omega in &omegas {
            let interval = Interval::new(config.a, config.b, n)?;
            let frequency = Frequency::new(omega)?;
            let mut closed = coeffs_interval(frequency, interval, config.eps_res)?;
            if args.inject_perturbation {
                let mut weights = closed.weights().to_vec();
                weights[0] += Complex64::new(1e-3, 0.0);
                closed = CoefficientSet::from_parts(
                    weights,
                    closed.interval(),
                    closed.omega(),
                    closed.regime(),
                    closed.aux().copied(),
                )?;
            }
            let oracle = solve_interval(frequency, interval)?;
            let gap = compare(&oracle, &closed)?;
            worst_gap = worst_gap.max(gap);
            let ok = gap <= WEIGHT_TOLERANCE;
            report.push_str(&format!(
                "N={n:<4} omega={omega:<10} regime={:<9} max|closed-oracle| = {gap:.3e} {}\n",
                closed.regime().to_string(),
                if ok { "ok" } else { "BREACH" }
            ));
            if !ok {
                offenders.push((omega, n));
            }
        }
    }

    // lattice-operator identities at h = 0.1 over the standard window
    let ctx = KernelContext::new(StepSize::new(0.1)?)?;
    let conv = kernel::convolve_check(&ctx, WINDOW)?;
    let mut delta_defect = 0.0f64;
    for beta in -50..=50i64 {
        let target = if beta == 0 { 1.0 } else { 0.0 };
        delta_defect = delta_defect.max((conv.get(beta) - target).abs());
    }
    let delta_ok = delta_defect <= DELTA_TOLERANCE;
    report.push_str(&format!(
        "kernel delta identity (h=0.1, M={WINDOW}, |beta|<=50): defect {delta_defect:.3e} {}\n",
        if delta_ok { "ok" } else { "BREACH" }
    ));

    let h = ctx.h();
    let lam_abs = ctx.lambda1().abs();
    type Sample = (&'static str, fn(f64) -> f64);
    let functions: [Sample; 4] = [
        ("exp(x)", |x| x.exp()),
        ("exp(-x)", |x| (-x).exp()),
        ("1", |_| 1.0),
        ("x", |x| x),
    ];
    let mut annihilation_ok = true;
    for (name, f) in functions {
        let conv = kernel::convolve_d2(&ctx, WINDOW, f)?;
        let mut worst_ratio = 0.0f64;
        for beta in -(WINDOW as i64 / 2)..=(WINDOW as i64 / 2) {
            let max_sample = (-(WINDOW as i64)..=WINDOW as i64)
                .map(|g| f(h * (beta - g) as f64).abs())
                .fold(0.0f64, f64::max);
            let term_sum: f64 = (-(WINDOW as i64)..=WINDOW as i64)
                .map(|g| (kernel::d2(g, &ctx) * f(h * (beta - g) as f64)).abs())
                .sum();
            let bound = 2.0 * lam_abs.powi((WINDOW / 2) as i32) * max_sample
                + 100.0 * f64::EPSILON * term_sum;
            worst_ratio = worst_ratio.max(conv.get(beta).abs() / bound);
        }
        let ok = worst_ratio <= 1.0;
        annihilation_ok &= ok;
        report.push_str(&format!(
            "kernel annihilation of {name:<7}: at {worst_ratio:.2} of the truncation bound {}\n",
            if ok { "ok" } else { "BREACH" }
        ));
    }

    report.push_str(&format!(
        "summary: max weight deviation {worst_gap:.3e} (tolerance {WEIGHT_TOLERANCE:e})\n"
    ));
    config.emit(&report)?;

    if offenders.is_empty() && delta_ok && annihilation_ok {
        Ok(())
    } else if offenders.is_empty() {
        Err(CliError::numeric(
            "kernel identity check breached tolerance",
        ))
    } else {
        Err(CliError::numeric(format!(
            "closed-form/oracle deviation exceeded {WEIGHT_TOLERANCE:e} at (omega, N) = {offenders:?}"
        )))
    }
}
