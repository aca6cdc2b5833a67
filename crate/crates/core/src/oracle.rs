//! Independent verification route: assemble and densely solve the
//! optimality system that the closed-form weights must satisfy.
//!
//! For the unit interval the unknowns are the weights `C_0..C_N` plus two
//! multipliers `p₀` and `d` (for which no closed forms exist; this module is
//! the only way to obtain them). The equations are
//!
//! ```text
//!     Σ_γ C_γ G₂(hβ − hγ) + p₀ + d e^{−hβ} = f₂(hβ),    β = 0..N,
//!     Σ_γ C_γ          = (e^{2πiω} − 1) / (2πiω),
//!     Σ_γ C_γ e^{−hγ}  = (e^{2πiω−1} − 1) / (2πiω − 1),
//! ```
//!
//! a square system of size N+3 solved by LU with partial pivoting. At
//! `ω = 0` the right-hand side is replaced by its zero-frequency limit
//! (`f₂` has a removable singularity there), which makes the dense route
//! cover the zero-frequency closed forms as well.

use num_complex::Complex64;
use std::f64::consts::{E, TAU};

use crate::coefficients::{classify, CoefficientSet, Frequency, Interval, DEFAULT_EPS_RES};
use crate::error::{Error, Result};
use crate::kernel;
use crate::linalg;
use crate::phase::{cis_2pi, one_minus_cis_2pi};

/// Assembled optimality system. Unknown layout: `(C_0, …, C_N, p₀, d)`.
#[derive(Debug, Clone)]
pub struct OptimalitySystem {
    n: u32,
    omega: Frequency,
    dim: usize,
    matrix: Vec<Complex64>,
    rhs: Vec<Complex64>,
}

impl OptimalitySystem {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn omega(&self) -> Frequency {
        self.omega
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[row * self.dim + col]
    }

    pub fn rhs(&self, row: usize) -> Complex64 {
        self.rhs[row]
    }

    /// Largest entry magnitude; the residual tolerance is stated relative to
    /// this so that it does not depend on `h`.
    pub fn max_norm(&self) -> f64 {
        self.matrix.iter().map(|c| c.norm()).fold(0.0f64, f64::max)
    }
}

/// Dense solution of the optimality system.
#[derive(Debug, Clone)]
pub struct OracleSolution {
    pub coefficients: CoefficientSet,
    pub p0: Complex64,
    pub d: Complex64,
    /// Max row residual `|A x − b|` of the returned solution.
    pub residual: f64,
}

/// Right-hand side `f₂(hβ)` of the collocation rows, `ω ≠ 0`.
///
/// The zero-frequency value is a removable limit handled by
/// [`f2_rhs_zero`]; calling this with `ω = 0` is reported as a branch error.
pub fn f2_rhs(beta: u32, omega: Frequency, n: u32) -> Result<Complex64> {
    if beta > n {
        return Err(Error::NodeIndexOutOfRange { beta, n });
    }
    if omega.is_zero() {
        return Err(Error::ZeroFrequencyRhs);
    }
    Ok(f2_eval(f64::from(beta) / f64::from(n), omega.get()))
}

/// Zero-frequency limit of the collocation right-hand side.
pub fn f2_rhs_zero(beta: u32, n: u32) -> Result<f64> {
    if beta > n {
        return Err(Error::NodeIndexOutOfRange { beta, n });
    }
    Ok(f2_zero_eval(f64::from(beta) / f64::from(n)))
}

/// Four-term expression for `f₂(t)`, `t = hβ ∈ [0,1]`, at `ω ≠ 0`.
fn f2_eval(t: f64, omega: f64) -> Complex64 {
    let w = Complex64::new(0.0, TAU * omega);
    let cw = cis_2pi(omega); // e^{2πiω}
    let cwt = cis_2pi(omega * t); // e^{2πiωt}
    let et = t.exp();
    let emt = (-t).exp();
    let term1 = emt / 4.0 * (E * cw - 2.0 * et * cwt + 1.0) / (w + 1.0);
    let term2 = -(et / 4.0) * (cw / E - 2.0 * emt * cwt + 1.0) / (w - 1.0);
    let term3 = (cw - 2.0 * cwt + 1.0) / (2.0 * w * w);
    let term4 = (t * cw + t - cw) / (2.0 * w);
    term1 + term2 + term3 + term4
}

/// `lim_{ω→0} f₂(t)`: the two divergent terms cancel and the limit collapses
/// to `(cosh(1−t) + cosh t)/2 − t²/2 + t/2 − 5/4`.
fn f2_zero_eval(t: f64) -> f64 {
    0.5 * ((1.0 - t).cosh() + t.cosh()) - 0.5 * t * t + 0.5 * t - 1.25
}

/// Assembles the `(N+3)`-square system on the unit interval.
///
/// Row `β ≤ N` carries `G₂(hβ − hγ)` for `γ = 0..N`, then `1` (for `p₀`) and
/// `e^{−hβ}` (for `d`); the last two rows carry the sum rule and the
/// `e^{−hγ}`-weighted sum rule.
pub fn assemble(omega: Frequency, n: u32) -> OptimalitySystem {
    assert!(n >= 1, "the system needs at least one interval");
    let dim = n as usize + 3;
    let h = 1.0 / f64::from(n);
    let om = omega.get();
    let mut matrix = vec![Complex64::new(0.0, 0.0); dim * dim];
    let mut rhs = vec![Complex64::new(0.0, 0.0); dim];

    for beta in 0..=n as usize {
        for gamma in 0..=n as usize {
            let x = h * (beta as f64 - gamma as f64);
            matrix[beta * dim + gamma] = Complex64::new(kernel::g2(x), 0.0);
        }
        matrix[beta * dim + n as usize + 1] = Complex64::new(1.0, 0.0);
        matrix[beta * dim + n as usize + 2] = Complex64::new((-(beta as f64) * h).exp(), 0.0);
        rhs[beta] = if om == 0.0 {
            Complex64::new(f2_zero_eval(beta as f64 * h), 0.0)
        } else {
            f2_eval(beta as f64 * h, om)
        };
    }
    let sum_row = (n as usize + 1) * dim;
    let weighted_row = (n as usize + 2) * dim;
    for gamma in 0..=n as usize {
        matrix[sum_row + gamma] = Complex64::new(1.0, 0.0);
        matrix[weighted_row + gamma] = Complex64::new((-(gamma as f64) * h).exp(), 0.0);
    }
    if om == 0.0 {
        rhs[n as usize + 1] = Complex64::new(1.0, 0.0);
        rhs[n as usize + 2] = Complex64::new(1.0 - (-1.0f64).exp(), 0.0);
    } else {
        let w = Complex64::new(0.0, TAU * om);
        rhs[n as usize + 1] = -one_minus_cis_2pi(om) / w;
        rhs[n as usize + 2] = (cis_2pi(om) / E - 1.0) / (w - 1.0);
    }
    OptimalitySystem {
        n,
        omega,
        dim,
        matrix,
        rhs,
    }
}

/// LU-solves an assembled system and packages weights, multipliers and the
/// max row residual.
pub fn solve(system: &OptimalitySystem) -> Result<OracleSolution> {
    let factors = linalg::factor(&system.matrix, system.dim)?;
    let x = factors.solve(&system.rhs);
    let mut residual = 0.0f64;
    for row in 0..system.dim {
        let mut acc = -system.rhs[row];
        for (col, value) in x.iter().enumerate() {
            acc += system.matrix[row * system.dim + col] * value;
        }
        residual = residual.max(acc.norm());
    }
    let n = system.n as usize;
    let interval = Interval::unit(system.n)?;
    let regime = classify(system.omega, &interval, DEFAULT_EPS_RES);
    let coefficients =
        CoefficientSet::from_parts(x[..=n].to_vec(), interval, system.omega, regime, None)?;
    Ok(OracleSolution {
        coefficients,
        p0: x[n + 1],
        d: x[n + 2],
        residual,
    })
}

/// Assemble-and-solve on the unit interval.
pub fn solve_unit(omega: Frequency, n: u32) -> Result<OracleSolution> {
    solve(&assemble(omega, n))
}

/// Dense-solve route for a general `[a,b]`: solve at the effective frequency
/// `ω(b−a)` and scale by `(b−a)e^{2πiωa}`. The multipliers `p₀`, `d` and the
/// residual refer to the underlying unit-interval system.
pub fn solve_interval(omega: Frequency, interval: Interval) -> Result<OracleSolution> {
    let om = omega.get();
    let len = interval.width();
    let effective = Frequency::new(om * len)?;
    let unit = solve_unit(effective, interval.n())?;
    let phase = len * cis_2pi(om * interval.a());
    let weights = unit
        .coefficients
        .weights()
        .iter()
        .map(|c| c * phase)
        .collect();
    let regime = classify(omega, &interval, DEFAULT_EPS_RES);
    let coefficients = CoefficientSet::from_parts(weights, interval, omega, regime, None)?;
    Ok(OracleSolution {
        coefficients,
        p0: unit.p0,
        d: unit.d,
        residual: unit.residual,
    })
}

/// Max entrywise absolute difference between an oracle solution and a
/// closed-form set for the same `(ω, [a,b], N)` problem.
pub fn compare(oracle: &OracleSolution, closed: &CoefficientSet) -> Result<f64> {
    let oc = &oracle.coefficients;
    if oc.interval() != closed.interval() {
        return Err(Error::IncomparableSets {
            reason: format!(
                "intervals differ: [{}, {}] N = {} vs [{}, {}] N = {}",
                oc.interval().a(),
                oc.interval().b(),
                oc.interval().n(),
                closed.interval().a(),
                closed.interval().b(),
                closed.interval().n()
            ),
        });
    }
    if oc.omega() != closed.omega() {
        return Err(Error::IncomparableSets {
            reason: format!(
                "frequencies differ: {} vs {}",
                oc.omega().get(),
                closed.omega().get()
            ),
        });
    }
    Ok(oc
        .weights()
        .iter()
        .zip(closed.weights())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max))
}
