//! Intrinsic-decoherence evolution.
//!
//! In the eigenbasis of `H` the coherence `<E_k| rho |E_j>` is multiplied by
//! `exp(-(gamma t / 2)(E_k - E_j)^2 - i t (E_k - E_j))`. [`Propagator`] applies
//! that kernel directly; [`kraus`] and [`master`] reach the same state through
//! the operator-sum form and through RK4 integration of the second-order
//! master equation, and [`analytic`] holds the closed-form two-qutrit solution.

pub mod analytic;
pub mod kraus;
pub mod master;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix, Spectrum};
use crate::model::{build_hamiltonian, ModelParams};
use crate::states::DensityMatrix;
use crate::tolerances::DEGENERACY_RELATIVE;

pub use analytic::{analytic_rho_computational, analytic_rho_energy_basis, AnalyticFactors};
pub use kraus::KrausSet;
pub use master::{integrate_master, integrate_master_at, rhs_master};

/// Eigendecomposition of `H` together with the decoherence rate.
#[derive(Debug, Clone)]
pub struct Propagator {
    spectrum: Spectrum,
    gamma: f64,
}

impl Propagator {
    pub fn new(h: &ComplexMatrix, gamma: f64) -> Result<Self> {
        Self::from_spectrum(hermitian_eig(h)?, gamma)
    }

    pub fn from_spectrum(spectrum: Spectrum, gamma: f64) -> Result<Self> {
        if !(gamma >= 0.0) || !gamma.is_finite() {
            return Err(Error::NegativeGamma(gamma));
        }
        Ok(Self { spectrum, gamma })
    }

    pub fn for_model(params: &ModelParams, gamma: f64) -> Result<Self> {
        Self::new(&build_hamiltonian(params), gamma)
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn dim(&self) -> usize {
        self.spectrum.dim()
    }

    /// Entrywise damping-phase factors in the eigenbasis at time `t`.
    pub fn kernel(&self, t: f64) -> ComplexMatrix {
        let e = &self.spectrum.eigenvalues;
        ComplexMatrix::from_fn(e.len(), e.len(), |k, j| {
            let gap = e[k] - e[j];
            Complex64::new(-0.5 * self.gamma * t * gap * gap, -t * gap).exp()
        })
    }

    /// `rho(t)` without validating the result.
    pub fn evolve_matrix(&self, rho0: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
        self.check_input(rho0, t)?;
        let in_basis = self.spectrum.to_eigenbasis(rho0);
        let evolved = in_basis.hadamard(&self.kernel(t))?;
        Ok(self.spectrum.from_eigenbasis(&evolved).hermitian_part())
    }

    /// `rho(t)`, checked against the density-matrix invariants.
    pub fn evolve(&self, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
        DensityMatrix::new(self.evolve_matrix(rho0.matrix(), t)?)
    }

    pub fn evolve_unchecked(&self, rho0: &DensityMatrix, t: f64) -> Result<DensityMatrix> {
        Ok(DensityMatrix::new_unchecked(self.evolve_matrix(rho0.matrix(), t)?))
    }

    /// `1e-9` of the spectral range (or `1e-12` for a flat spectrum).
    pub fn default_deg_tol(&self) -> f64 {
        let range = self.spectrum.spread();
        if range > 0.0 {
            DEGENERACY_RELATIVE * range
        } else {
            1e-12
        }
    }

    /// The `t -> inf` limit: eigenbasis coherences survive only between
    /// levels closer than `deg_tol`.
    pub fn steady_state(&self, rho0: &DensityMatrix, deg_tol: f64) -> Result<DensityMatrix> {
        Ok(DensityMatrix::new_unchecked(self.steady_matrix(rho0.matrix(), deg_tol)?))
    }

    pub fn steady_matrix(&self, rho0: &ComplexMatrix, deg_tol: f64) -> Result<ComplexMatrix> {
        if self.gamma == 0.0 {
            return Err(Error::NoSteadyState);
        }
        if !(deg_tol > 0.0) {
            return Err(Error::InvalidTolerance(deg_tol));
        }
        self.check_input(rho0, 0.0)?;
        let e = &self.spectrum.eigenvalues;
        let mask = ComplexMatrix::from_fn(e.len(), e.len(), |k, j| {
            if (e[k] - e[j]).abs() <= deg_tol {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let kept = self.spectrum.to_eigenbasis(rho0).hadamard(&mask)?;
        Ok(self.spectrum.from_eigenbasis(&kept).hermitian_part())
    }

    fn check_input(&self, rho: &ComplexMatrix, t: f64) -> Result<()> {
        if rho.rows() != self.dim() || rho.cols() != self.dim() {
            return Err(Error::dims(
                format!("{0}x{0}", self.dim()),
                format!("{}x{}", rho.rows(), rho.cols()),
            ));
        }
        if !(t >= 0.0) {
            return Err(Error::NegativeTime(t));
        }
        Ok(())
    }
}

pub fn evolve(rho0: &DensityMatrix, prop: &Propagator, t: f64) -> Result<DensityMatrix> {
    prop.evolve(rho0, t)
}

pub fn steady_state(rho0: &DensityMatrix, prop: &Propagator, deg_tol: f64) -> Result<DensityMatrix> {
    prop.steady_state(rho0, deg_tol)
}
