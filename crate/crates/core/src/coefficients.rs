//! Closed-form optimal weights for every frequency regime.
//!
//! Three regimes are distinguished by the product `ωh`:
//!
//! - **Zero** (`ω = 0`): real weights; boundary layers of size `λ₁^β`
//!   around an interior plateau `h`.
//! - **Generic** (`ωh ∉ ℤ`): complex weights; an oscillatory interior term
//!   `K_{ω,2} e^{2πiωhβ}` plus the same geometric boundary layers.
//! - **Resonant** (`ωh ∈ ℤ`, `ω ≠ 0`): the oscillatory factor is constant on
//!   the lattice and the interior term disappears entirely.
//!
//! Weights for a general `[a,b]` follow from the substitution
//! `x = (b−a)y + a`, which maps the problem to the unit interval at the
//! effective frequency `ω(b−a)` and multiplies every weight by
//! `(b−a)e^{2πiωa}`. The interval formulas are transcribed independently of
//! the unit-interval ones and the two routes are required to agree, which
//! guards against transcription slips in either.
//!
//! Every closed form in this module is cross-validated against the dense
//! solve in [`crate::oracle`]; the boundary-weight and amplitude expressions
//! here are the ones that satisfy that system together with both moment
//! conditions (the sum rule and the `e^{-x}`-weighted sum rule).

use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::kernel::{self, StepSize};
use crate::phase::{cis_2pi, one_minus_cis_2pi};

/// Default width of the resonance band around integer `ωh`, relative to
/// `max(1, |ωh|)`. Inside the band the generic formulas divide by nearly
/// vanishing quantities, so inputs are routed to the resonant branch.
pub const DEFAULT_EPS_RES: f64 = 1e-12;

/// Distance to the nearest integer below which a generic-regime result
/// carries a near-resonance warning (conditioning of `K_{ω,2}` degrades).
pub const NEAR_RESONANCE_WARN: f64 = 1e-6;

/// A finite real frequency `ω` of the oscillatory factor `e^{2πiωx}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frequency(f64);

impl Frequency {
    pub fn new(omega: f64) -> Result<Self> {
        if omega.is_finite() {
            Ok(Self(omega))
        } else {
            Err(Error::InvalidFrequency { omega })
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0.0
    }
}

/// Integration interval `[a, b]` carrying the node count `N`; owns the
/// lattice `x_β = a + hβ`, `h = (b−a)/N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    a: f64,
    b: f64,
    n: u32,
}

impl Interval {
    pub fn new(a: f64, b: f64, n: u32) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::InvalidInterval { a, b });
        }
        if n < 1 {
            return Err(Error::NodeCountTooSmall { n, min: 1 });
        }
        Ok(Self { a, b, n })
    }

    pub fn unit(n: u32) -> Result<Self> {
        Self::new(0.0, 1.0, n)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn width(&self) -> f64 {
        self.b - self.a
    }

    pub fn h(&self) -> f64 {
        (self.b - self.a) / f64::from(self.n)
    }

    pub fn node(&self, beta: u32) -> f64 {
        self.a + self.h() * f64::from(beta)
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..=self.n).map(|beta| self.node(beta))
    }
}

/// Frequency regime of a `(ω, h)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Zero,
    Resonant,
    Generic,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::Zero => "zero",
            Regime::Resonant => "resonant",
            Regime::Generic => "generic",
        })
    }
}

/// Scalars of the closed forms, recorded alongside the weights.
///
/// `k` is the interior amplitude (`K` at zero frequency, `K_{ω,2}` in the
/// generic regime, `0` in the resonant regime where the interior term is
/// absent); `a1` and `b1` multiply the boundary layers `λ₁^β` and
/// `λ₁^{N−β}`. At zero frequency `a1 = K(e^h − λ₁)` and
/// `b1 = K(1 − λ₁e^h)` are the layer amplitudes in the same sense.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Auxiliaries {
    pub k: Complex64,
    pub a1: Complex64,
    pub b1: Complex64,
}

/// An optimal weight set `C_0..C_N` for one `(ω, [a,b], N)` problem.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSet {
    weights: Vec<Complex64>,
    interval: Interval,
    omega: Frequency,
    regime: Regime,
    aux: Option<Auxiliaries>,
    near_resonance: Option<f64>,
}

impl CoefficientSet {
    /// Assembles a set from raw parts, validating length and finiteness.
    pub fn from_parts(
        weights: Vec<Complex64>,
        interval: Interval,
        omega: Frequency,
        regime: Regime,
        aux: Option<Auxiliaries>,
    ) -> Result<Self> {
        if weights.len() != interval.n() as usize + 1 {
            return Err(Error::IncomparableSets {
                reason: format!(
                    "expected {} weights for N = {}, got {}",
                    interval.n() + 1,
                    interval.n(),
                    weights.len()
                ),
            });
        }
        if let Some(index) = weights
            .iter()
            .position(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::NonFiniteWeight {
                index,
                omega: omega.get(),
                n: interval.n(),
            });
        }
        Ok(Self {
            weights,
            interval,
            omega,
            regime,
            aux,
            near_resonance: None,
        })
    }

    fn with_warning(mut self, near_resonance: Option<f64>) -> Self {
        self.near_resonance = near_resonance;
        self
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn omega(&self) -> Frequency {
        self.omega
    }

    pub fn regime(&self) -> Regime {
        self.regime
    }

    pub fn aux(&self) -> Option<&Auxiliaries> {
        self.aux.as_ref()
    }

    /// Distance of `ωh` to the nearest integer when the set was produced in
    /// the warning band (conditioning caveat), `None` otherwise.
    pub fn near_resonance(&self) -> Option<f64> {
        self.near_resonance
    }

    pub fn n(&self) -> u32 {
        self.interval.n()
    }

    /// Plain sum of the weights (the `φ ≡ 1` moment).
    pub fn weight_sum(&self) -> Complex64 {
        self.weights.iter().sum()
    }
}

fn resonance_gap(omega_h: f64) -> (f64, f64) {
    let nearest = omega_h.round();
    ((omega_h - nearest).abs(), nearest)
}

/// Classifies `(ω, h)` into its frequency regime.
///
/// `Zero` requires `ω = 0` exactly. `Resonant` means `ωh` is within
/// `eps_res · max(1, |ωh|)` of a **nonzero** integer: `ωh ∈ ℤ` together with
/// `ω ≠ 0` implies `|ωh| ≥ 1`, so a tiny-but-nonzero `ωh` near 0 is generic,
/// not resonant (the resonant denominators `1/ω` would blow up there).
///
/// # Panics
/// Panics if `eps_res` is outside `(0, 1e-6]`.
pub fn classify(omega: Frequency, interval: &Interval, eps_res: f64) -> Regime {
    assert!(
        eps_res > 0.0 && eps_res <= 1e-6,
        "eps_res = {eps_res} outside (0, 1e-6]"
    );
    if omega.is_zero() {
        return Regime::Zero;
    }
    let omega_h = omega.get() * interval.h();
    let (gap, nearest) = resonance_gap(omega_h);
    if nearest != 0.0 && gap <= eps_res * omega_h.abs().max(1.0) {
        Regime::Resonant
    } else {
        Regime::Generic
    }
}

fn near_resonance_warning(omega_h: f64, eps_res: f64) -> Option<f64> {
    let (gap, nearest) = resonance_gap(omega_h);
    let scale = omega_h.abs().max(1.0);
    if nearest != 0.0 && gap > eps_res * scale && gap < NEAR_RESONANCE_WARN * scale {
        Some(gap)
    } else {
        None
    }
}

fn contracting_root(n: u32) -> Result<f64> {
    let h = StepSize::unit_interval(n)?;
    let lam = kernel::lambda1(h);
    if lam.is_finite() && lam.abs() < 1.0 {
        Ok(lam)
    } else {
        Err(Error::UnstableRoot {
            h: h.get(),
            magnitude: lam.abs(),
        })
    }
}

/// Zero-frequency weights on `[0,1]`: interior plateau `h` plus geometric
/// boundary layers. Real-valued; stored as complex with zero imaginary part.
pub fn coeffs_unit_zero(n: u32) -> Result<CoefficientSet> {
    let inner = zero_unit_inner(n)?;
    CoefficientSet::from_parts(
        inner.weights,
        Interval::unit(n)?,
        Frequency::new(0.0)?,
        Regime::Zero,
        Some(inner.aux),
    )
}

struct InnerWeights {
    weights: Vec<Complex64>,
    aux: Auxiliaries,
}

fn zero_unit_inner(n: u32) -> Result<InnerWeights> {
    if n < 2 {
        return Err(Error::NodeCountTooSmall { n, min: 2 });
    }
    let lam = contracting_root(n)?;
    let h = 1.0 / f64::from(n);
    let eh = h.exp();
    let ehm1 = h.exp_m1();
    let lam_n = lam.powi(n as i32);
    let k = (2.0 * ehm1 - h * (eh + 1.0)) * (lam - 1.0)
        / (2.0 * ehm1 * ehm1 * (lam + lam.powi(n as i32 + 1)));
    let mut weights = Vec::with_capacity(n as usize + 1);
    weights.push(Complex64::new(1.0 - h / ehm1 - k * (lam - lam_n), 0.0));
    for beta in 1..n {
        let layers =
            (eh - lam) * lam.powi(beta as i32) + (1.0 - lam * eh) * lam.powi((n - beta) as i32);
        weights.push(Complex64::new(h + k * layers, 0.0));
    }
    weights.push(Complex64::new(
        -1.0 + eh * h / ehm1 - k * (lam - lam_n) * eh,
        0.0,
    ));
    Ok(InnerWeights {
        weights,
        aux: Auxiliaries {
            k: Complex64::new(k, 0.0),
            a1: Complex64::new(k * (eh - lam), 0.0),
            b1: Complex64::new(k * (1.0 - lam * eh), 0.0),
        },
    })
}

/// Generic-regime weights on `[0,1]` (`ωh ∉ ℤ`, `ω ≠ 0`).
pub fn coeffs_unit_generic(omega: Frequency, n: u32) -> Result<CoefficientSet> {
    let interval = Interval::unit(n)?;
    let regime = classify(omega, &interval, DEFAULT_EPS_RES);
    if regime != Regime::Generic {
        return Err(Error::WrongRegime {
            op: "coeffs_unit_generic",
            expected: Regime::Generic,
            actual: regime,
            omega: omega.get(),
            omega_h: omega.get() * interval.h(),
        });
    }
    let inner = generic_unit_inner(omega.get(), n)?;
    let warn = near_resonance_warning(omega.get() * interval.h(), DEFAULT_EPS_RES);
    Ok(CoefficientSet::from_parts(
        inner.weights,
        interval,
        omega,
        Regime::Generic,
        Some(inner.aux),
    )?
    .with_warning(warn))
}

fn generic_unit_inner(omega: f64, n: u32) -> Result<InnerWeights> {
    if n < 2 {
        return Err(Error::NodeCountTooSmall { n, min: 2 });
    }
    let lam = contracting_root(n)?;
    let h = 1.0 / f64::from(n);
    let w = Complex64::new(0.0, TAU * omega);
    let t = omega * h;
    let mu = cis_2pi(t);
    let one_minus_mu = one_minus_cis_2pi(t); // 1 − e^{2πiωh}, stable near resonance
    let mu_minus_one = -one_minus_mu;
    let eh = h.exp();
    let ehm1 = h.exp_m1();
    let e2hm1 = (2.0 * h).exp_m1();
    let eh_minus_mu = ehm1 + one_minus_mu; // e^h − μ
    let one_minus_mu_eh = eh * one_minus_mu - ehm1; // 1 − μe^h
    let ew = cis_2pi(omega); // e^{2πiω}
    let lam_n = lam.powi(n as i32);

    // Interior amplitude K_{ω,2}; equals the plateau h in the ω → 0 limit.
    let two_pi2_o2 = 2.0 * PI * PI * omega * omega;
    let four_pi2_o2 = 4.0 * PI * PI * omega * omega;
    let k_num = eh_minus_mu * (-one_minus_mu_eh) * one_minus_mu * one_minus_mu;
    let k_den = (two_pi2_o2 * (four_pi2_o2 + 1.0))
        * mu
        * (-e2hm1 * one_minus_mu * one_minus_mu + 2.0 * h * eh_minus_mu * one_minus_mu_eh);
    let k = k_num / k_den;

    // Shared bracket of both boundary-layer amplitudes.
    let s = 1.0 / (w * (w - 1.0) * ehm1) + k * mu / (mu_minus_one * eh_minus_mu);
    let geo = lam * (1.0 - lam_n * lam_n);
    let a1 = (lam - 1.0) * (lam - eh) / geo * ((1.0 - lam_n * ew) * s);
    let b1 = (lam - 1.0) * (1.0 - lam * eh) / geo * ((lam_n - ew) * s);

    let mut weights = Vec::with_capacity(n as usize + 1);
    weights.push(
        k * mu / mu_minus_one - 1.0 / w + a1 * (lam / (lam - 1.0)) + b1 * (lam_n / (1.0 - lam)),
    );
    for beta in 1..n {
        weights.push(
            cis_2pi(t * f64::from(beta)) * k
                + a1 * lam.powi(beta as i32)
                + b1 * lam.powi((n - beta) as i32),
        );
    }
    // The trailing weight follows from the sum rule applied to the others.
    weights.push(
        ew / w - k * ew / mu_minus_one - a1 * (lam_n / (lam - 1.0)) - b1 * (lam / (1.0 - lam)),
    );
    Ok(InnerWeights {
        weights,
        aux: Auxiliaries { k, a1, b1 },
    })
}

/// Resonant-regime weights on `[0,1]` (`ωh ∈ ℤ`, `ω ≠ 0`): pure boundary
/// layers, no interior oscillatory term.
pub fn coeffs_unit_resonant(omega: Frequency, n: u32) -> Result<CoefficientSet> {
    let interval = Interval::unit(n)?;
    let regime = classify(omega, &interval, DEFAULT_EPS_RES);
    if regime != Regime::Resonant {
        return Err(Error::WrongRegime {
            op: "coeffs_unit_resonant",
            expected: Regime::Resonant,
            actual: regime,
            omega: omega.get(),
            omega_h: omega.get() * interval.h(),
        });
    }
    let inner = resonant_unit_inner(omega.get(), n)?;
    CoefficientSet::from_parts(
        inner.weights,
        interval,
        omega,
        Regime::Resonant,
        Some(inner.aux),
    )
}

fn resonant_unit_inner(omega: f64, n: u32) -> Result<InnerWeights> {
    if n < 2 {
        return Err(Error::NodeCountTooSmall { n, min: 2 });
    }
    let lam = contracting_root(n)?;
    let h = 1.0 / f64::from(n);
    let w = Complex64::new(0.0, TAU * omega);
    let eh = h.exp();
    let ehm1 = h.exp_m1();
    let lam_n = lam.powi(n as i32);

    let denom = w * (w - 1.0) * (lam * ehm1 * (lam_n + 1.0));
    let a1 = (eh - lam) * (1.0 - lam) / denom;
    let b1 = (1.0 - eh * lam) * (1.0 - lam) / denom;

    let boundary_den = w * (1.0 - w) * (-ehm1); // 2πiω(1−2πiω)(1−e^h)
    let mut weights = Vec::with_capacity(n as usize + 1);
    weights.push(
        (w * (-ehm1) - 1.0) / boundary_den
            + a1 * (lam * lam / ((1.0 - lam) * (eh - lam)))
            + b1 * (lam_n / ((1.0 - lam) * (1.0 - lam * eh))),
    );
    for beta in 1..n {
        weights.push(a1 * lam.powi(beta as i32) + b1 * lam.powi((n - beta) as i32));
    }
    weights.push(
        (w * ehm1 - eh) / boundary_den
            + a1 * (eh * lam_n / ((1.0 - lam) * (eh - lam)))
            + b1 * (eh * lam * lam / ((1.0 - lam) * (1.0 - lam * eh))),
    );
    Ok(InnerWeights {
        weights,
        aux: Auxiliaries {
            k: Complex64::new(0.0, 0.0),
            a1,
            b1,
        },
    })
}

/// Weights on a general `[a,b]`, dispatching on the regime of `ωh` with
/// `h = (b−a)/N`. The formulas are transcribed for the interval directly
/// (effective frequency `ω(b−a)`, lattice factor `e^{1/N}`, prefactor
/// `(b−a)e^{2πiωa}`); [`coeffs_interval_via_unit`] reaches the same weights
/// through the unit-interval operations and the two must agree.
pub fn coeffs_interval(
    omega: Frequency,
    interval: Interval,
    eps_res: f64,
) -> Result<CoefficientSet> {
    if !(eps_res > 0.0 && eps_res <= 1e-6) {
        return Err(Error::InvalidResonanceTolerance { eps_res });
    }
    let regime = classify(omega, &interval, eps_res);
    match regime {
        Regime::Zero => interval_zero(interval),
        Regime::Generic => interval_generic(omega, interval, eps_res),
        Regime::Resonant => interval_resonant(omega, interval),
    }
}

fn interval_zero(interval: Interval) -> Result<CoefficientSet> {
    let n = interval.n();
    let inner = zero_unit_inner(n)?;
    let len = interval.width();
    let weights = inner.weights.iter().map(|c| c * len).collect();
    let aux = Auxiliaries {
        k: inner.aux.k * len,
        a1: inner.aux.a1 * len,
        b1: inner.aux.b1 * len,
    };
    CoefficientSet::from_parts(
        weights,
        interval,
        Frequency::new(0.0)?,
        Regime::Zero,
        Some(aux),
    )
}

fn interval_generic(omega: Frequency, interval: Interval, eps_res: f64) -> Result<CoefficientSet> {
    let n = interval.n();
    if n < 2 {
        return Err(Error::NodeCountTooSmall { n, min: 2 });
    }
    let lam = contracting_root(n)?;
    let om = omega.get();
    let len = interval.width();
    let h_ab = interval.h();
    let inv_n = 1.0 / f64::from(n);

    let cap_w = Complex64::new(0.0, TAU * om * len); // 2πiω(b−a)
    let t = om * h_ab; // ωh on the interval lattice
    let mu = cis_2pi(t);
    let one_minus_mu = one_minus_cis_2pi(t);
    let mu_minus_one = -one_minus_mu;
    let e1n = inv_n.exp();
    let e1nm1 = inv_n.exp_m1();
    let e2nm1 = (2.0 * inv_n).exp_m1();
    let e1n_minus_mu = e1nm1 + one_minus_mu; // e^{1/N} − μ
    let one_minus_mu_e1n = e1n * one_minus_mu - e1nm1; // 1 − μe^{1/N}
    let e_eff = cis_2pi(om * len); // e^{2πiω(b−a)}
    let lam_n = lam.powi(n as i32);

    // K_{ω,2} in its interval shape: the reciprocal-phase factor
    // e^{-2πiωh} replaces the 1/μ of the unit form.
    let e1n_minus_conj_mu = e1nm1 + one_minus_cis_2pi(-t); // e^{1/N} − e^{−2πiωh}
    let tw = TAU * om * len; // 2πω(b−a)
    let k_den_real = tw * tw * (tw * tw + 1.0);
    let k = 2.0 * e1n_minus_mu * e1n_minus_conj_mu * one_minus_mu * one_minus_mu
        / (k_den_real
            * (-e2nm1 * one_minus_mu * one_minus_mu
                + 2.0 * inv_n * e1n_minus_mu * one_minus_mu_e1n));

    let s = 1.0 / (cap_w * (cap_w - 1.0) * e1nm1) + k * mu / (mu_minus_one * e1n_minus_mu);
    let geo = lam * (1.0 - lam_n * lam_n);
    let a1 = (lam - 1.0) * (lam - e1n) / geo * ((1.0 - lam_n * e_eff) * s);
    let b1 = (lam - 1.0) * (1.0 - lam * e1n) / geo * ((lam_n - e_eff) * s);

    let phase = len * cis_2pi(om * interval.a()); // (b−a)e^{2πiωa}
    let mut weights = Vec::with_capacity(n as usize + 1);
    weights.push(
        phase
            * (k * mu / mu_minus_one - 1.0 / cap_w
                + a1 * (lam / (lam - 1.0))
                + b1 * (lam_n / (1.0 - lam))),
    );
    for beta in 1..n {
        weights.push(
            phase
                * (cis_2pi(t * f64::from(beta)) * k
                    + a1 * lam.powi(beta as i32)
                    + b1 * lam.powi((n - beta) as i32)),
        );
    }
    weights.push(
        phase
            * (e_eff / cap_w
                - k * e_eff / mu_minus_one
                - a1 * (lam_n / (lam - 1.0))
                - b1 * (lam / (1.0 - lam))),
    );
    let aux = Auxiliaries {
        k: phase * k,
        a1: phase * a1,
        b1: phase * b1,
    };
    let warn = near_resonance_warning(t, eps_res);
    Ok(
        CoefficientSet::from_parts(weights, interval, omega, Regime::Generic, Some(aux))?
            .with_warning(warn),
    )
}

fn interval_resonant(omega: Frequency, interval: Interval) -> Result<CoefficientSet> {
    let n = interval.n();
    if n < 2 {
        return Err(Error::NodeCountTooSmall { n, min: 2 });
    }
    let lam = contracting_root(n)?;
    let om = omega.get();
    let len = interval.width();
    let inv_n = 1.0 / f64::from(n);
    let cap_w = Complex64::new(0.0, TAU * om * len);
    let e1n = inv_n.exp();
    let e1nm1 = inv_n.exp_m1();
    let lam_n = lam.powi(n as i32);

    let denom = cap_w * (cap_w - 1.0) * (lam * e1nm1 * (lam_n + 1.0));
    let a1 = (e1n - lam) * (1.0 - lam) / denom;
    let b1 = (1.0 - e1n * lam) * (1.0 - lam) / denom;

    // The oscillatory prefactor e^{2πiωa} is part of the substitution that
    // maps [a,b] to the unit interval; dropping it would break both moment
    // conditions whenever ωa ∉ ℤ.
    let phase = len * cis_2pi(om * interval.a());
    let boundary_den = cap_w * (1.0 - cap_w) * (-e1nm1);
    let mut weights = Vec::with_capacity(n as usize + 1);
    weights.push(
        phase
            * ((cap_w * (-e1nm1) - 1.0) / boundary_den
                + a1 * (lam * lam / ((1.0 - lam) * (e1n - lam)))
                + b1 * (lam_n / ((1.0 - lam) * (1.0 - lam * e1n)))),
    );
    for beta in 1..n {
        weights.push(phase * (a1 * lam.powi(beta as i32) + b1 * lam.powi((n - beta) as i32)));
    }
    weights.push(
        phase
            * ((cap_w * e1nm1 - e1n) / boundary_den
                + a1 * (e1n * lam_n / ((1.0 - lam) * (e1n - lam)))
                + b1 * (e1n * lam * lam / ((1.0 - lam) * (1.0 - lam * e1n)))),
    );
    let aux = Auxiliaries {
        k: Complex64::new(0.0, 0.0),
        a1: phase * a1,
        b1: phase * b1,
    };
    CoefficientSet::from_parts(weights, interval, omega, Regime::Resonant, Some(aux))
}

/// Weights on `[a,b]` obtained through the unit-interval operations at the
/// effective frequency `ω(b−a)` and the prefactor `(b−a)e^{2πiωa}`.
///
/// Algebraically identical to [`coeffs_interval`]; kept as an independent
/// code path for cross-checking.
pub fn coeffs_interval_via_unit(
    omega: Frequency,
    interval: Interval,
    eps_res: f64,
) -> Result<CoefficientSet> {
    if !(eps_res > 0.0 && eps_res <= 1e-6) {
        return Err(Error::InvalidResonanceTolerance { eps_res });
    }
    let n = interval.n();
    let regime = classify(omega, &interval, eps_res);
    let om = omega.get();
    let len = interval.width();
    let effective = om * len;
    let inner = match regime {
        Regime::Zero => zero_unit_inner(n)?,
        Regime::Generic => generic_unit_inner(effective, n)?,
        Regime::Resonant => resonant_unit_inner(effective, n)?,
    };
    let phase = len * cis_2pi(om * interval.a());
    let weights = inner.weights.iter().map(|c| c * phase).collect();
    let aux = Auxiliaries {
        k: inner.aux.k * phase,
        a1: inner.aux.a1 * phase,
        b1: inner.aux.b1 * phase,
    };
    let warn = near_resonance_warning(om * interval.h(), eps_res);
    Ok(CoefficientSet::from_parts(weights, interval, omega, regime, Some(aux))?.with_warning(warn))
}

/// The production entry point: closed forms for `N ≥ 2`, the dense-solve
/// route for `N = 1` (the closed forms assume at least one interior node).
pub fn optimal_coefficients(
    omega: Frequency,
    interval: Interval,
    eps_res: f64,
) -> Result<CoefficientSet> {
    if interval.n() == 1 {
        crate::oracle::solve_interval(omega, interval).map(|solution| solution.coefficients)
    } else {
        coeffs_interval(omega, interval, eps_res)
    }
}
