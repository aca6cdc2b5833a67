//! Kernel-level identities checked against oracles that live entirely in
//! test code.

mod common;

use fourier_quad::kernel::{self, KernelContext, StepSize};

/// The contracting root against plain bisection on an independent
/// transcription of the quadratic over (−1, 0).
#[test]
fn stable_branch_agrees_with_bisection() {
    for &h in &[0.5f64, 0.25, 0.75, 1.0] {
        let root = kernel::lambda1(StepSize::new(h).unwrap());
        let bisected = common::bisect(-1.0 + 1e-12, -1e-12, |x| common::quadratic_direct(x, h));
        assert!(
            (root - bisected).abs() <= 1e-12,
            "h = {h}: stable branch {root} vs bisected {bisected}"
        );
    }
}

/// `g₂` against its extended-precision series/`sinh` definition.
#[test]
fn g2_matches_extended_precision_values() {
    use common::dd::Dd;
    for &x in &[1e-4, 0.01, 0.3, 0.499, 0.5, 1.0, 5.0, 20.0] {
        let xd = Dd::from_f64(x);
        // sgn(x)/2 (sinh x − x) with sinh from the dd exponential
        let sinh = xd.exp().sub(xd.neg().exp()).mul_f64(0.5);
        let expect = sinh.sub(xd).mul_f64(0.5).to_f64();
        let got = kernel::g2(x);
        assert!(
            (got - expect).abs() <= 1e-15 * expect.abs().max(1e-300),
            "g2({x}) = {got:e} vs {expect:e}"
        );
    }
}

/// The delta identity at a second spacing, exercising the whole context
/// construction once more.
#[test]
fn delta_identity_at_a_coarser_spacing() {
    let ctx = KernelContext::new(StepSize::new(0.25).unwrap()).unwrap();
    let conv = kernel::convolve_check(&ctx, 120).unwrap();
    for beta in -30..=30i64 {
        let target = if beta == 0 { 1.0 } else { 0.0 };
        assert!(
            (conv.get(beta) - target).abs() <= 1e-8,
            "beta = {beta}: {}",
            conv.get(beta)
        );
    }
}

/// The operator annihilates the lattice samples of `e^{±x}`, `1` and `x`
/// within the documented truncation-plus-roundoff bound.
#[test]
fn annihilation_bound_documented_by_the_window() {
    let ctx = KernelContext::new(StepSize::new(0.1).unwrap()).unwrap();
    let h = ctx.h();
    let m = 200usize;
    let lam_abs = ctx.lambda1().abs();
    type Sample = (&'static str, fn(f64) -> f64);
    let functions: [Sample; 4] = [
        ("exp(x)", |x| x.exp()),
        ("exp(-x)", |x| (-x).exp()),
        ("1", |_| 1.0),
        ("x", |x| x),
    ];
    for (name, f) in functions {
        let conv = kernel::convolve_d2(&ctx, m, f).unwrap();
        for beta in -(m as i64 / 2)..=(m as i64 / 2) {
            let max_sample = (-(m as i64)..=m as i64)
                .map(|g| f(h * (beta - g) as f64).abs())
                .fold(0.0f64, f64::max);
            let term_sum: f64 = (-(m as i64)..=m as i64)
                .map(|g| (kernel::d2(g, &ctx) * f(h * (beta - g) as f64)).abs())
                .sum();
            let bound =
                2.0 * lam_abs.powi((m / 2) as i32) * max_sample + 100.0 * f64::EPSILON * term_sum;
            assert!(
                conv.get(beta).abs() <= bound,
                "{name} at beta = {beta}: |conv| = {:e} > bound {bound:e}",
                conv.get(beta).abs()
            );
        }
    }
}
