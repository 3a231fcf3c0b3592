//! Density matrices and the two-qutrit isotropic family.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::model::DIM;
use crate::tolerances::Tolerances;

/// Hermitian, unit-trace, positive semidefinite matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        Self::new_with(matrix, &Tolerances::default())
    }

    pub fn new_with(matrix: ComplexMatrix, tol: &Tolerances) -> Result<Self> {
        check_state(&matrix, tol)?;
        Ok(Self { matrix })
    }

    /// Skips validation. For hot loops whose inputs come from a validated
    /// state through a trace- and positivity-preserving map.
    pub fn new_unchecked(matrix: ComplexMatrix) -> Self {
        Self { matrix }
    }

    pub fn from_pure(psi: &[Complex64]) -> Result<Self> {
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::InvalidState("zero state vector".into()));
        }
        let unit: Vec<Complex64> = psi.iter().map(|z| z / norm).collect();
        Self::new(ComplexMatrix::outer(&unit, &unit))
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        Self {
            matrix: ComplexMatrix::identity(dim).scale_real(1.0 / dim as f64),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    /// `Tr rho^2`
    pub fn purity(&self) -> f64 {
        // rho is Hermitian, so Tr rho^2 = sum |rho_ij|^2
        self.matrix.as_slice().iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn validate(&self) -> Result<()> {
        check_state(&self.matrix, &Tolerances::default())
    }
}

fn check_state(m: &ComplexMatrix, tol: &Tolerances) -> Result<()> {
    if !m.is_square() {
        return Err(Error::dims("square matrix", format!("{}x{}", m.rows(), m.cols())));
    }
    let herm = m.hermiticity_defect();
    if herm > tol.hermiticity {
        return Err(Error::InvalidState(format!("not Hermitian (defect {herm:e})")));
    }
    let tr = m.trace();
    if (tr.re - 1.0).abs() > tol.trace || tr.im.abs() > tol.trace {
        return Err(Error::InvalidState(format!("trace {tr} != 1")));
    }
    let min = hermitian_eig(&m.hermitian_part())?.eigenvalues[0];
    if min < tol.psd {
        return Err(Error::InvalidState(format!("negative eigenvalue {min:e}")));
    }
    Ok(())
}

/// Mixing weight of the isotropic state, `0 <= p <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsotropicParams {
    p: f64,
}

impl IsotropicParams {
    pub fn new(p: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&p) {
            Ok(Self { p })
        } else {
            Err(Error::InvalidP(p))
        }
    }

    pub fn p(&self) -> f64 {
        self.p
    }
}

/// Mixing weight at which the isotropic state becomes entangled.
pub const ENTANGLEMENT_THRESHOLD: f64 = 0.25;

/// Crossing point of the negativity and linear-entropy curves as reported
/// alongside the original figure; the exact root is [`werner_crossing`].
pub const REPORTED_CROSSING: f64 = 0.6672;

/// `(|0,0> + |1,1> + |2,2>) / sqrt(3)`
pub fn max_entangled_vector() -> Vec<Complex64> {
    let amp = Complex64::new(1.0 / 3f64.sqrt(), 0.0);
    (0..DIM).map(|i| if i % 4 == 0 { amp } else { Complex64::new(0.0, 0.0) }).collect()
}

pub fn max_entangled_qutrit() -> DensityMatrix {
    let psi = max_entangled_vector();
    DensityMatrix::new_unchecked(ComplexMatrix::outer(&psi, &psi))
}

/// `(1 - p)/9 · I + p |psi><psi|`
pub fn isotropic_state(q: IsotropicParams) -> DensityMatrix {
    let p = q.p();
    let psi = max_entangled_vector();
    let mixed = ComplexMatrix::identity(DIM).scale_real((1.0 - p) / DIM as f64);
    let pure = ComplexMatrix::outer(&psi, &psi).scale_real(p);
    DensityMatrix::new_unchecked(&mixed + &pure)
}

/// Convenience wrapper validating `p`.
pub fn isotropic(p: f64) -> Result<DensityMatrix> {
    Ok(isotropic_state(IsotropicParams::new(p)?))
}

/// Negativity of the isotropic state, `3 max{0, (4p - 1)/9}`.
pub fn werner_negativity(p: f64) -> f64 {
    3.0 * f64::max(0.0, (4.0 * p - 1.0) / 9.0)
}

/// Linear entropy of the isotropic state, `1 - p^2`.
pub fn werner_linear_entropy(p: f64) -> f64 {
    1.0 - p * p
}

/// Positive root of `1 - p^2 = (4p - 1)/3`, i.e. `3p^2 + 4p - 4 = 0`.
pub fn werner_crossing() -> f64 {
    let (a, b, c) = (3.0, 4.0, -4.0);
    (-b + f64::sqrt(b * b - 4.0 * a * c)) / (2.0 * a)
}
