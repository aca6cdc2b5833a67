//! Reduced-argument evaluation of unit-circle phases.
//!
//! All oscillatory factors in this crate have the shape `e^{2πi t}` with a
//! real `t` that can be large (e.g. `t = ωhβ` with `ω ~ 10⁴`). Evaluating
//! `cos(2πt)`/`sin(2πt)` directly loses accuracy to argument reduction, and
//! differences like `1 − e^{2πit}` cancel catastrophically when `t` is close
//! to an integer. Both helpers therefore reduce `t` modulo 1 first; the
//! reduction is exact because `e^{2πik} = 1` for integer `k`.

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

/// `e^{2πi t}` with the argument reduced to `t - round(t)` before evaluation.
pub(crate) fn cis_2pi(t: f64) -> Complex64 {
    let r = t - t.round();
    let theta = TAU * r;
    Complex64::new(theta.cos(), theta.sin())
}

/// `1 − e^{2πi t}`, accurate for `t` near integers.
///
/// Uses `1 − e^{iθ} = 2 sin²(θ/2) − i sin θ`, which keeps full relative
/// accuracy as `θ → 0` where the naive difference would cancel.
pub(crate) fn one_minus_cis_2pi(t: f64) -> Complex64 {
    let r = t - t.round();
    let half = (PI * r).sin();
    Complex64::new(2.0 * half * half, -(TAU * r).sin())
}
