//! Optimal quadrature rules for Fourier integrals.
//!
//! This crate computes weights `C_0..C_N` for the approximation
//!
//! ```text
//!     ∫_a^b e^{2πiωx} φ(x) dx  ≈  Σ_{β=0}^{N} C_β φ(a + hβ),      h = (b − a)/N,
//! ```
//!
//! where the weights are optimal in the sense of Sard over the Hilbert space
//! `W₂^{(2,1)}[a,b]` of complex-valued functions (absolutely continuous first
//! derivative, `φ'' + φ'` square integrable). By construction the rule is
//! exact on `span{1, e^{−(x−a)/(b−a)}}` and its accuracy improves like `ω⁻²`
//! as the integrand oscillates faster, which is what makes it useful for
//! highly oscillatory integrands where classical rules stall.
//!
//! # Modules
//!
//! - [`kernel`] — the discrete analogue of `d⁴/dx⁴ − d²/dx²`: the palindromic
//!   quadratic `𝒫₂`, its stable root `λ₁`, the kernel `G₂`, and truncated
//!   convolution identities on the lattice.
//! - [`coefficients`] — closed-form weight construction for the three
//!   frequency regimes (zero, generic, resonant `ωh ∈ ℤ`) on `[0,1]` and on
//!   a general `[a,b]`.
//! - [`oracle`] — an independent route to the same weights: assemble the
//!   optimality system and solve it densely. Used to cross-validate every
//!   closed form and to recover the Lagrange-type multipliers `p₀` and `d`.
//! - [`quadrature`] — application of a weight set to integrand samples,
//!   reference integrals on `[−1,1]`, and absolute-error records.
//!
//! The two coefficient routes (closed form vs. dense solve) are kept fully
//! independent so each can catch defects in the other.

pub mod coefficients;
pub mod error;
pub mod kernel;
mod linalg;
pub mod oracle;
mod phase;
pub mod quadrature;

pub use coefficients::{
    classify, optimal_coefficients, Auxiliaries, CoefficientSet, Frequency, Interval, Regime,
    DEFAULT_EPS_RES,
};
pub use error::{Error, Result};
pub use kernel::{KernelContext, StepSize};
pub use oracle::{OptimalitySystem, OracleSolution};
pub use quadrature::{
    ErrorRecord, Integrand, ReferenceIntegrand, ReferenceTable, REFERENCE_NS, REFERENCE_OMEGAS,
    REFERENCE_TABLES,
};
