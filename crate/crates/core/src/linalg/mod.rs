//! Dense complex linear algebra for small operators.

mod eig;
mod matrix;

pub use eig::{hermitian_eig, hermitian_eig_with, Spectrum};
pub use matrix::{ComplexMatrix, ONE, ZERO};

use crate::error::{Error, Result};
use crate::tolerances::HERMITICITY;

/// Which tensor factor of a bipartite operator to transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (br, bc) = (b.rows(), b.cols());
    ComplexMatrix::from_fn(a.rows() * br, a.cols() * bc, |r, c| {
        a[(r / br, c / bc)] * b[(r % br, c % bc)]
    })
}

/// Partial transpose of an operator on `C^dim_a ⊗ C^dim_b`.
///
/// With row index `i*dim_b + j` and column index `k*dim_b + l`, transposing
/// subsystem A swaps `i <-> k`, transposing B swaps `j <-> l`.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
    subsystem: Subsystem,
) -> Result<ComplexMatrix> {
    let n = dim_a * dim_b;
    if rho.rows() != n || rho.cols() != n {
        return Err(Error::dims(
            format!("{n}x{n}"),
            format!("{}x{}", rho.rows(), rho.cols()),
        ));
    }
    Ok(ComplexMatrix::from_fn(n, n, |r, c| {
        let (i, j) = (r / dim_b, r % dim_b);
        let (k, l) = (c / dim_b, c % dim_b);
        match subsystem {
            Subsystem::A => rho[(k * dim_b + j, i * dim_b + l)],
            Subsystem::B => rho[(i * dim_b + l, k * dim_b + j)],
        }
    }))
}

/// Trace norm of a Hermitian matrix: the sum of absolute eigenvalues.
pub fn trace_norm(x: &ComplexMatrix) -> Result<f64> {
    if x.is_square() && x.hermiticity_defect() > HERMITICITY {
        return Err(Error::NotHermitian {
            deviation: x.hermiticity_defect(),
        });
    }
    Ok(hermitian_eig(x)?.eigenvalues.iter().map(|e| e.abs()).sum())
}
