//! Crate-wide error type.

use crate::coefficients::Regime;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("step size must be positive and finite, got {h}")]
    InvalidStepSize { h: f64 },

    #[error("|lambda1| = {magnitude} >= 1 at h = {h}; the formulas assume a contracting root")]
    UnstableRoot { h: f64, magnitude: f64 },

    #[error("convolution window M = {m} is too small (minimum {min})")]
    WindowTooSmall { m: usize, min: usize },

    #[error("interval requires finite a < b, got [{a}, {b}]")]
    InvalidInterval { a: f64, b: f64 },

    #[error("node count N = {n} is below the minimum {min} for this construction")]
    NodeCountTooSmall { n: u32, min: u32 },

    #[error("frequency must be finite, got {omega}")]
    InvalidFrequency { omega: f64 },

    #[error("resonance tolerance must lie in (0, 1e-6], got {eps_res}")]
    InvalidResonanceTolerance { eps_res: f64 },

    #[error("{op} requires the {expected} regime, but (omega = {omega}, omega*h = {omega_h}) is {actual}")]
    WrongRegime {
        op: &'static str,
        expected: Regime,
        actual: Regime,
        omega: f64,
        omega_h: f64,
    },

    #[error("non-finite weight at index {index} (omega = {omega}, N = {n})")]
    NonFiniteWeight { index: usize, omega: f64, n: u32 },

    #[error("the zero-frequency right-hand side is handled by its own branch")]
    ZeroFrequencyRhs,

    #[error("node index beta = {beta} is outside 0..={n}")]
    NodeIndexOutOfRange { beta: u32, n: u32 },

    #[error("system is singular to working precision at pivot {pivot_index} (|pivot| = {pivot_magnitude:e})")]
    SingularSystem {
        pivot_index: usize,
        pivot_magnitude: f64,
    },

    #[error("coefficient sets are incomparable: {reason}")]
    IncomparableSets { reason: String },

    #[error("integrand sample at node beta = {beta} (x = {x}) is not finite")]
    NonFiniteSample { beta: usize, x: f64 },

    #[error("unknown integrand id `{id}`")]
    UnknownIntegrand { id: String },

    #[error("{what} grid must not be empty")]
    EmptyGrid { what: &'static str },
}
