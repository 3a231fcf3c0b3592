//! Cyclic Jacobi eigensolver for complex Hermitian matrices.

use num_complex::Complex64;

use super::matrix::{ComplexMatrix, ZERO};
use crate::error::{Error, Result};
use crate::tolerances::Tolerances;

/// Eigenvalues in ascending order with the matching orthonormal eigenvectors
/// stored as the columns of a unitary matrix.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvector(&self, k: usize) -> Vec<Complex64> {
        self.eigenvectors.column(k)
    }

    /// `V diag(E) V^H`
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.from_eigenbasis(&ComplexMatrix::from_real_diag(&self.eigenvalues))
    }

    /// Matrix elements `<E_k| A |E_j>`.
    pub fn to_eigenbasis(&self, a: &ComplexMatrix) -> ComplexMatrix {
        let v = &self.eigenvectors;
        &(&v.adjoint() * a) * v
    }

    /// Inverse of [`Spectrum::to_eigenbasis`].
    pub fn from_eigenbasis(&self, a: &ComplexMatrix) -> ComplexMatrix {
        let v = &self.eigenvectors;
        &(v * a) * &v.adjoint()
    }

    /// `max |V^H V - I|`
    pub fn orthonormality_defect(&self) -> f64 {
        let v = &self.eigenvectors;
        (&v.adjoint() * v).max_abs_diff(&ComplexMatrix::identity(self.dim()))
    }

    pub fn spread(&self) -> f64 {
        match (self.eigenvalues.first(), self.eigenvalues.last()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0.0,
        }
    }

    /// Eigenvalue indices grouped into clusters whose neighbours lie within `tol`.
    pub fn degenerate_blocks(&self, tol: f64) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (k, &e) in self.eigenvalues.iter().enumerate() {
            match blocks.last_mut() {
                Some(block) if (e - self.eigenvalues[*block.last().unwrap()]).abs() <= tol => {
                    block.push(k)
                }
                _ => blocks.push(vec![k]),
            }
        }
        blocks
    }
}

pub fn hermitian_eig(h: &ComplexMatrix) -> Result<Spectrum> {
    hermitian_eig_with(h, &Tolerances::default())
}

pub fn hermitian_eig_with(h: &ComplexMatrix, tol: &Tolerances) -> Result<Spectrum> {
    if !h.is_square() {
        return Err(Error::dims(
            "square matrix",
            format!("{}x{}", h.rows(), h.cols()),
        ));
    }
    let deviation = h.hermiticity_defect();
    if deviation > tol.hermiticity {
        return Err(Error::NotHermitian { deviation });
    }

    let n = h.rows();
    let mut a = h.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let threshold = tol.eig_relative_off_norm * a.frobenius_norm();

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= threshold {
            break;
        }
        if sweeps == tol.eig_max_sweeps {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let eigenvalues = order.iter().map(|&i| a[(i, i)].re).collect();
    let eigenvectors = ComplexMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for r in 0..n {
        for c in 0..n {
            if r != c {
                s += a[(r, c)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Annihilate `a[p][q]` with the unitary `G = diag(1, e^{-i phi}) R(theta)`
/// acting on the (p, q) plane: `a <- G^H a G`, `v <- v G`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let phase = apq / mag;

    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.is_infinite() {
        0.0
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    if t == 0.0 {
        // |a_pq| is below the resolution of the diagonal gap.
        a[(p, q)] = ZERO;
        a[(q, p)] = ZERO;
        return;
    }
    let cos = 1.0 / (t * t + 1.0).sqrt();
    let sin = t * cos;

    // Columns of G in the (p, q) plane.
    let g_pp = Complex64::new(cos, 0.0);
    let g_pq = Complex64::new(sin, 0.0);
    let g_qp = -phase.conj() * sin;
    let g_qq = phase.conj() * cos;

    let n = a.rows();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * g_pp + akq * g_qp;
        a[(k, q)] = akp * g_pq + akq * g_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
        a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
    }
    a[(p, q)] = ZERO;
    a[(q, p)] = ZERO;
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * g_pp + vkq * g_qp;
        v[(k, q)] = vkp * g_pq + vkq * g_qq;
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
        let a = ComplexMatrix::from_fn(n, n, |_, _| {
            Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
        });
        a.hermitian_part()
    }

    #[test]
    fn diagonal_input_sorts_eigenvalues() {
        let h = ComplexMatrix::from_real_diag(&[3.0, 1.0, 2.0]);
        let s = hermitian_eig(&h).unwrap();
        assert_eq!(s.eigenvalues, vec![1.0, 2.0, 3.0]);
        // permutation eigenvectors: column k is the unit vector of the k-th smallest entry
        let expected = [1usize, 2, 0];
        for (k, &row) in expected.iter().enumerate() {
            assert!((s.eigenvectors[(row, k)].norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut h = ComplexMatrix::identity(3);
        h[(0, 1)] = Complex64::new(1e-6, 0.0);
        assert!(matches!(hermitian_eig(&h), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn rejects_non_square() {
        assert!(matches!(
            hermitian_eig(&ComplexMatrix::zeros(2, 3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn zero_and_identity_matrices() {
        let s = hermitian_eig(&ComplexMatrix::zeros(4, 4)).unwrap();
        assert!(s.eigenvalues.iter().all(|&e| e == 0.0));
        let s = hermitian_eig(&ComplexMatrix::identity(5)).unwrap();
        assert!(s.eigenvalues.iter().all(|&e| e == 1.0));
        assert!(s.orthonormality_defect() < 1e-15);
    }

    #[test]
    fn too_few_sweeps_reports_no_convergence() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let h = random_hermitian(&mut rng, 9);
        let tol = Tolerances {
            eig_max_sweeps: 1,
            ..Tolerances::default()
        };
        assert!(matches!(
            hermitian_eig_with(&h, &tol),
            Err(Error::NoConvergence { sweeps: 1, .. })
        ));
    }

    #[test]
    fn seeded_random_reconstruction_and_orthonormality() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for &n in &[3usize, 9] {
            for _ in 0..1000 {
                let h = random_hermitian(&mut rng, n);
                let s = hermitian_eig(&h).unwrap();
                assert!(s.reconstruct().max_abs_diff(&h) < 1e-10);
                assert!(s.orthonormality_defect() < 1e-10);
                assert!(s.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
            }
        }
    }

    #[test]
    fn degenerate_blocks_cluster_neighbours() {
        let s = Spectrum {
            eigenvalues: vec![-1.0, -1.0 + 1e-12, 0.5, 2.0, 2.0],
            eigenvectors: ComplexMatrix::identity(5),
        };
        assert_eq!(s.degenerate_blocks(1e-9), vec![vec![0, 1], vec![2], vec![3, 4]]);
    }
}
