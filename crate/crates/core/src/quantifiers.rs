//! Coherence, entanglement and mixedness of a density matrix.

use crate::dynamics::AnalyticFactors;
use crate::error::Result;
use crate::linalg::{hermitian_eig, partial_transpose, Subsystem};
use crate::model::ModelParams;
use crate::states::DensityMatrix;

/// `l1`-norm of coherence in the computational basis: the sum of
/// `|rho_ij|` over `i != j`.
pub fn l1_coherence(rho: &DensityMatrix) -> f64 {
    let m = rho.matrix();
    let n = m.rows();
    let mut sum = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                sum += m[(r, c)].norm();
            }
        }
    }
    sum
}

/// Sum of the magnitudes of the negative eigenvalues of the partial
/// transpose on subsystem A.
pub fn negativity(rho: &DensityMatrix, dim_a: usize, dim_b: usize) -> Result<f64> {
    negativity_on(rho, dim_a, dim_b, Subsystem::A)
}

pub fn negativity_on(rho: &DensityMatrix, dim_a: usize, dim_b: usize, subsystem: Subsystem) -> Result<f64> {
    let pt = partial_transpose(rho.matrix(), dim_a, dim_b, subsystem)?;
    let spectrum = hermitian_eig(&pt.hermitian_part())?;
    Ok(spectrum
        .eigenvalues
        .iter()
        .map(|&mu| f64::max(0.0, -mu))
        .sum())
}

/// `N/(N-1) (1 - Tr rho^2)`, zero for a one-dimensional state.
pub fn linear_entropy(rho: &DensityMatrix) -> f64 {
    let n = rho.dim() as f64;
    if n <= 1.0 {
        return 0.0;
    }
    n / (n - 1.0) * (1.0 - rho.purity())
}

/// Closed-form `l1` coherence of the evolved isotropic state.
pub fn l1_coherence_closed(mp: &ModelParams, p: f64, gamma: f64, t: f64) -> f64 {
    let f = AnalyticFactors::new(mp, gamma, t);
    let one = num_complex::Complex64::new(1.0, 0.0);
    let (a, b, c, d, eps) = (f.a, f.b, f.c, f.d, f.eps);
    let outer = 12.0 * (a - b).norm()
        + 6.0 * (a * 2.0 + b).norm()
        + 18.0 * (-8.0 * mp.bz * mp.bz * gamma * t).exp()
        + 12.0 * (a - c).norm()
        + 6.0 * (a * 2.0 + c).norm();
    let central = (d * (one + eps) - 2.0).norm()
        + (one + d * (one - eps * 2.0)).norm()
        + (one + d * (eps - 2.0)).norm();
    p / 27.0 * (outer + 2.0 * central)
}

/// Closed-form linear entropy of the evolved isotropic state.
pub fn linear_entropy_closed(mp: &ModelParams, p: f64, gamma: f64, t: f64) -> f64 {
    let delta = mp.j - mp.k;
    let bz = mp.bz;
    let gt = gamma * t;
    let x = 2.0 * bz + 3.0 * delta;
    let y = 2.0 * bz - 3.0 * delta;
    let bracket = -9.0 * (-16.0 * bz * bz * gt).exp()
        - 12.0 * (-4.0 * bz * bz * gt).exp()
        - 3.0 * (-gt * x * x).exp()
        - 3.0 * (-gt * y * y).exp()
        - 2.0 * (-9.0 * gt * delta * delta).exp()
        - 7.0;
    1.0 + p * p / 36.0 * bracket
}
