//! Numerical tolerances used across the crate.
//!
//! Every threshold lives here. Functions that take a [`Tolerances`] argument
//! accept per-call overrides; the plain variants use [`Tolerances::default`].

/// Max-abs deviation from Hermiticity accepted by the eigensolver.
pub const HERMITICITY: f64 = 1e-12;
/// Jacobi stops when the off-diagonal Frobenius norm falls below this
/// fraction of the input Frobenius norm.
pub const EIG_RELATIVE_OFF_NORM: f64 = 1e-14;
pub const EIG_MAX_SWEEPS: usize = 100;
/// Trace of a density matrix must equal one within this.
pub const TRACE: f64 = 1e-12;
/// Smallest eigenvalue a density matrix may have.
pub const PSD: f64 = -1e-10;
/// Default degeneracy tolerance relative to the spectral range.
pub const DEGENERACY_RELATIVE: f64 = 1e-9;
/// Poisson tail mass left out of a truncated Kraus sum.
pub const KRAUS_TAIL: f64 = 1e-14;
pub const KRAUS_MAX_TERMS: usize = 400;
/// RK4 stability guard on `dt * (spread + gamma * spread^2)`.
pub const RK4_STABILITY: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub hermiticity: f64,
    pub eig_relative_off_norm: f64,
    pub eig_max_sweeps: usize,
    pub trace: f64,
    pub psd: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermiticity: HERMITICITY,
            eig_relative_off_norm: EIG_RELATIVE_OFF_NORM,
            eig_max_sweeps: EIG_MAX_SWEEPS,
            trace: TRACE,
            psd: PSD,
        }
    }
}
