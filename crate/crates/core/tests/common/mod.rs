//! Shared oracles for the integration tests.
//!
//! Everything here is deliberately independent of the library's own
//! computation paths: the bisection root finder re-transcribes the
//! quadratic, the Gauss-Kronrod integrator knows nothing about closed
//! forms, and the double-double evaluation of the collocation right-hand
//! side re-derives every factor from scratch.

#![allow(dead_code)]

pub mod dd;

use dd::{Cdd, Dd};
use num_complex::Complex64;

/// Independent transcription of the palindromic quadratic: coefficients
/// `p λ² − 2Bλ + p` evaluated directly from exponentials.
pub fn quadratic_direct(lambda: f64, h: f64) -> f64 {
    let p = 1.0 + 2.0 * h * h.exp() - (2.0 * h).exp();
    let b = 1.0 - (2.0 * h).exp() + h * ((2.0 * h).exp() + 1.0);
    p * lambda * lambda - 2.0 * b * lambda + p
}

/// Bisection to machine tolerance on a bracketing interval.
pub fn bisect(mut lo: f64, mut hi: f64, f: impl Fn(f64) -> f64) -> f64 {
    let flo = f(lo);
    assert!(
        flo * f(hi) < 0.0,
        "bisection bracket does not straddle a root"
    );
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[allow(clippy::excessive_precision)]
const GK_NODES: [f64; 8] = [
    0.0,
    0.207_784_955_007_898_47,
    0.405_845_151_377_397_17,
    0.586_087_235_467_691_1,
    0.741_531_185_599_394_4,
    0.864_864_423_359_769_1,
    0.949_107_912_342_758_5,
    0.991_455_371_120_812_6,
];

#[allow(clippy::excessive_precision)]
const GK_WEIGHTS: [f64; 8] = [
    0.209_482_141_084_727_83,
    0.204_432_940_075_298_9,
    0.190_350_578_064_785_4,
    0.169_004_726_639_267_9,
    0.140_653_259_715_525_92,
    0.104_790_010_322_250_18,
    0.063_092_092_629_978_55,
    0.022_935_322_010_529_224,
];

#[allow(clippy::excessive_precision)]
const GAUSS_WEIGHTS: [f64; 4] = [
    0.417_959_183_673_469_4,
    0.381_830_050_505_118_94,
    0.279_705_391_489_276_7,
    0.129_484_966_168_869_7,
];

fn gk15_complex(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64) -> (Complex64, f64) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_mid = f(mid);
    let mut kronrod = GK_WEIGHTS[0] * f_mid;
    let mut gauss = GAUSS_WEIGHTS[0] * f_mid;
    for i in 1..8 {
        let offset = half * GK_NODES[i];
        let pair = f(mid - offset) + f(mid + offset);
        kronrod += GK_WEIGHTS[i] * pair;
        if i % 2 == 0 {
            gauss += GAUSS_WEIGHTS[i / 2] * pair;
        }
    }
    let value = half * kronrod;
    let err = (value - half * gauss).norm();
    (value, err)
}

/// Adaptive complex Gauss-Kronrod integration to an absolute tolerance.
pub fn integrate_complex(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, abs_tol: f64) -> Complex64 {
    fn recurse(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, tol: f64, depth: u32) -> Complex64 {
        let (value, err) = gk15_complex(f, a, b);
        if err <= tol || depth >= 40 {
            return value;
        }
        let mid = 0.5 * (a + b);
        recurse(f, a, mid, tol / 2.0, depth + 1) + recurse(f, mid, b, tol / 2.0, depth + 1)
    }
    recurse(f, a, b, abs_tol, 0)
}

/// Extended-precision re-evaluation of the collocation right-hand side
/// (the four-term expression) at `t ∈ [0,1]`, `ω ≠ 0`.
///
/// Every factor is rebuilt in double-double arithmetic from the same `f64`
/// inputs the production code sees.
pub fn f2_extended(t: f64, omega: f64) -> Complex64 {
    let td = Dd::from_f64(t);
    let theta = Dd::TWO_PI.mul_f64(omega); // 2πω
    let w = Cdd::new(Dd::ZERO, theta); // 2πiω
    let one = Cdd::real(Dd::ONE);
    let two = Cdd::from_f64(2.0, 0.0);
    let four = Cdd::from_f64(4.0, 0.0);

    let e_w = w.exp(); // e^{2πiω}
    let e_wt = Cdd::new(Dd::ZERO, theta.mul(td)).exp(); // e^{2πiωt}
    let e_t = Cdd::real(td.exp());
    let e_mt = Cdd::real(td.neg().exp());
    let e_one = Cdd::real(Dd::ONE.exp());

    // e^{2πiω±1} and e^{(2πiω±1)t}
    let e_w_plus = e_w.mul(e_one);
    let e_w_minus = e_w.div(e_one);
    let e_wt_plus = e_wt.mul(e_t);
    let e_wt_minus = e_wt.mul(e_mt);

    let term1 = e_mt
        .mul(e_w_plus.sub(two.mul(e_wt_plus)).add(one))
        .div(four.mul(w.add(one)));
    let term2 = e_t
        .mul(e_w_minus.sub(two.mul(e_wt_minus)).add(one))
        .div(four.mul(w.sub(one)))
        .mul(Cdd::from_f64(-1.0, 0.0));
    let term3 = e_w.sub(two.mul(e_wt)).add(one).div(two.mul(w).mul(w));
    let term4 = Cdd::real(td).mul(e_w.add(one)).sub(e_w).div(two.mul(w));

    term1.add(term2).add(term3).add(term4).to_complex()
}

/// The kernel of the collocation rows, transcribed independently.
pub fn g2_direct(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.signum() / 2.0 * (x.sinh() - x)
    }
}
