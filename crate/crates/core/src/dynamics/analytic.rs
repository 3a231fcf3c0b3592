//! Closed-form `rho(t)` for the isotropic initial state of the two-qutrit
//! model, in the computational basis and in the analytic energy basis.
//!
//! The coupling-dependent factor of the central `{|0,2>, |1,1>, |2,0>}` block
//! is carried as `d = exp(-(9/2) gamma t (J-K)^2 - 3 i t (J-K))`, which is the
//! reciprocal of the growing exponential `exp(+(9/2) gamma t (J-K)^2 + 3 i t (J-K))`
//! that usually accompanies these element tables. Writing the elements in
//! terms of the decaying factor keeps them bounded for all `t`.

use num_complex::Complex64;

use crate::linalg::ComplexMatrix;
use crate::model::{ModelParams, DIM};

fn cexp(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im).exp()
}

/// Time-dependent factors entering the closed-form elements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticFactors {
    /// `exp(-2 Bz t (Bz gamma + i))`
    pub a: Complex64,
    /// `exp(-t X (gamma X / 2 + i))`, `X = 2Bz + 3(J-K)`
    pub b: Complex64,
    /// `exp(-t Y (gamma Y / 2 + i))`, `Y = 2Bz - 3(J-K)`
    pub c: Complex64,
    /// `exp(-(9/2) gamma t (J-K)^2 - 3 i t (J-K))`
    pub d: Complex64,
    /// `exp(6 i t (J-K))`
    pub eps: Complex64,
}

impl AnalyticFactors {
    pub fn new(mp: &ModelParams, gamma: f64, t: f64) -> Self {
        let delta = mp.j - mp.k;
        let bz = mp.bz;
        let x = 2.0 * bz + 3.0 * delta;
        let y = 2.0 * bz - 3.0 * delta;
        Self {
            a: cexp(-2.0 * gamma * t * bz * bz, -2.0 * bz * t),
            b: cexp(-0.5 * gamma * t * x * x, -t * x),
            c: cexp(-0.5 * gamma * t * y * y, -t * y),
            d: cexp(-4.5 * gamma * t * delta * delta, -3.0 * t * delta),
            eps: cexp(0.0, 6.0 * t * delta),
        }
    }
}

/// `rho(t)` in the computational basis (index `3a + b` for `|a, b>`).
pub fn analytic_rho_computational(mp: &ModelParams, p: f64, gamma: f64, t: f64) -> ComplexMatrix {
    let f = AnalyticFactors::new(mp, gamma, t);
    let one = Complex64::new(1.0, 0.0);
    let two = Complex64::new(2.0, 0.0);
    let mut m = ComplexMatrix::zeros(DIM, DIM);

    let outer = (2.0 * p + 1.0) / 9.0;
    let side = (1.0 - p) / 9.0;
    let d_sum = f.d * (one + f.eps);

    // diagonal
    m[(0, 0)] = outer.into();
    m[(8, 8)] = outer.into();
    for i in [1, 3, 5, 7] {
        m[(i, i)] = side.into();
    }
    let rho33 = ((3.0 - p) - p * d_sum.re) / 27.0;
    m[(2, 2)] = rho33.into();
    m[(6, 6)] = rho33.into();
    m[(4, 4)] = ((3.0 + 2.0 * p + 2.0 * p * d_sum.re) / 27.0).into();

    // couplings of |0,0> and |2,2> to the central block
    let r13 = (f.a - f.b) * (p / 9.0);
    m[(0, 2)] = r13;
    m[(0, 6)] = r13;
    m[(0, 4)] = (f.a * 2.0 + f.b) * (p / 9.0);
    m[(0, 8)] = cexp(-8.0 * gamma * t * mp.bz * mp.bz, -4.0 * mp.bz * t) * (p / 3.0);
    let r39 = (f.a - f.c) * (p / 9.0);
    m[(2, 8)] = r39;
    m[(6, 8)] = r39;
    m[(4, 8)] = (f.a * 2.0 + f.c) * (p / 9.0);

    // central block
    let r35 = (one + f.d * (one - two * f.eps)) * (p / 27.0);
    m[(2, 4)] = r35;
    m[(4, 6)] = r35.conj();
    m[(2, 6)] = ((2.0 - d_sum.re) * p / 27.0).into();

    fill_lower(&mut m);
    m
}

/// `rho(t)` in the analytic energy basis, levels in label order `E_1..E_9`.
/// Nonzero off-diagonal elements couple only labels 1, 5, 6 and 9.
pub fn analytic_rho_energy_basis(mp: &ModelParams, p: f64, gamma: f64, t: f64) -> ComplexMatrix {
    let f = AnalyticFactors::new(mp, gamma, t);
    let delta = mp.j - mp.k;
    let bz = mp.bz;
    let y = 2.0 * bz - 3.0 * delta;
    let sqrt3 = 3f64.sqrt();
    let mut m = ComplexMatrix::zeros(DIM, DIM);

    let side = (1.0 - p) / 9.0;
    let diag = [
        1.0 / 9.0,
        side,
        side,
        side,
        (p + 1.0) / 9.0,
        (2.0 * p + 1.0) / 9.0,
        side,
        side,
        (2.0 * p + 1.0) / 9.0,
    ];
    for (i, &v) in diag.iter().enumerate() {
        m[(i, i)] = v.into();
    }

    // exponent (3/2) t (J-K) (3 gamma (K-J) + 2i)
    let e15 = Complex64::new(0.0, 2.0) + 3.0 * gamma * (mp.k - mp.j);
    m[(0, 4)] = (e15 * (1.5 * t * delta)).exp() * (-(p / 9.0) * 2f64.sqrt());
    m[(0, 5)] = cexp(-0.5 * t * y * gamma * y, -t * y) * (-p / (3.0 * sqrt3));
    m[(0, 8)] = f.b.conj() * (-p / (3.0 * sqrt3));
    let r56 = f.a * (p / 3.0 * (2.0f64 / 3.0).sqrt());
    m[(4, 5)] = r56;
    m[(4, 8)] = r56.conj();
    m[(5, 8)] = cexp(-8.0 * gamma * t * bz * bz, 4.0 * bz * t) * (p / 3.0);

    fill_lower(&mut m);
    m
}

fn fill_lower(m: &mut ComplexMatrix) {
    for r in 0..m.rows() {
        for c in 0..r {
            m[(r, c)] = m[(c, r)].conj();
        }
    }
}

/// Element tables exactly as they are usually printed, with the central block
/// carrying the growing factor `D = exp(+(9/2) gamma t (J-K)^2 + 3 i t (J-K))`
/// as a prefactor. Only the validation report uses these, to show which
/// printed entries disagree with the propagator.
pub mod printed {
    use super::*;

    /// Growing factor as printed.
    pub fn d_printed(mp: &ModelParams, gamma: f64, t: f64) -> Complex64 {
        let delta = mp.j - mp.k;
        cexp(4.5 * gamma * t * delta * delta, 3.0 * t * delta)
    }

    /// `(label, row, col, value)` for the central-block entries that use `D`.
    pub fn central_block(mp: &ModelParams, p: f64, gamma: f64, t: f64) -> Vec<(&'static str, usize, usize, Complex64)> {
        let d = d_printed(mp, gamma, t);
        let eps = AnalyticFactors::new(mp, gamma, t).eps;
        let one = Complex64::new(1.0, 0.0);
        vec![
            ("rho_33 = d/27 (-eps p - (p-3) d - p)", 2, 2, d / 27.0 * (-eps * p - d * (p - 3.0) - p)),
            ("rho_35 = p d/27 (-2 eps + d + 1)", 2, 4, d * (p / 27.0) * (-eps * 2.0 + d + one)),
            ("rho_37 = -p d/27 (eps - 2 d + 1)", 2, 6, -d * (p / 27.0) * (eps - d * 2.0 + one)),
            ("rho_55 = d/27 (2 eps p + (2p+3) d + 2p)", 4, 4, d / 27.0 * (eps * 2.0 * p + d * (2.0 * p + 3.0) + 2.0 * p)),
        ]
    }

    /// The same printed expressions with only the prefactor `D` replaced
    /// by `1/D`; the `D` inside the brackets is kept.
    pub fn central_block_corrected(mp: &ModelParams, p: f64, gamma: f64, t: f64) -> Vec<(&'static str, usize, usize, Complex64)> {
        let d = d_printed(mp, gamma, t);
        central_block(mp, p, gamma, t)
            .into_iter()
            .map(|(name, r, c, v)| (name, r, c, v / (d * d)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::Propagator;
    use crate::model::{analytic_eigenvectors, build_hamiltonian};
    use crate::states::isotropic;

    #[test]
    fn factors_bounded() {
        let mp = ModelParams::new(0.8, -0.4, 1.8);
        for t in [0.0, 0.5, 5.0, 500.0] {
            let f = AnalyticFactors::new(&mp, 0.03, t);
            for z in [f.a, f.b, f.c, f.d] {
                assert!(z.norm() <= 1.0 + 1e-15);
            }
            assert!((f.eps.norm() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn time_zero_is_isotropic() {
        for p in [0.0, 0.3, 0.7, 1.0] {
            let rho = analytic_rho_computational(&ModelParams::new(0.8, -0.4, 1.8), p, 0.03, 0.0);
            assert!(rho.approx_eq(isotropic(p).unwrap().matrix(), 1e-15));
        }
    }

    #[test]
    fn p_zero_is_maximally_mixed() {
        let id9 = ComplexMatrix::identity(9).scale_real(1.0 / 9.0);
        for t in [0.0, 1.0, 7.5] {
            let rho = analytic_rho_computational(&ModelParams::new(0.8, -0.4, 1.0), 0.0, 0.3, t);
            assert!(rho.approx_eq(&id9, 1e-16));
        }
    }

    #[test]
    fn computational_form_matches_propagator() {
        let mp = ModelParams::new(0.8, -0.4, 1.8);
        let prop = Propagator::for_model(&mp, 0.03).unwrap();
        let rho0 = isotropic(0.7).unwrap();
        for t in [0.5, 5.0, 50.0] {
            let exact = prop.evolve(&rho0, t).unwrap();
            let closed = analytic_rho_computational(&mp, 0.7, 0.03, t);
            assert!(closed.approx_eq(exact.matrix(), 1e-12), "t = {t}");
        }
    }

    #[test]
    fn energy_form_matches_rotated_propagator() {
        let v = analytic_eigenvectors();
        for bz in [0.0, 1.0, 1.8, 4.0] {
            let mp = ModelParams::new(0.8, -0.4, bz);
            let prop = Propagator::new(&build_hamiltonian(&mp), 0.03).unwrap();
            let rho0 = isotropic(0.7).unwrap();
            for t in [0.5, 5.0, 20.0] {
                let exact = prop.evolve(&rho0, t).unwrap();
                let rotated = &(&v.adjoint() * exact.matrix()) * &v;
                let closed = analytic_rho_energy_basis(&mp, 0.7, 0.03, t);
                assert!(closed.approx_eq(&rotated, 1e-12), "bz {bz} t {t}");
            }
        }
    }

    #[test]
    fn energy_form_block_structure() {
        let mp = ModelParams::new(0.8, -0.4, 1.3);
        let block = [0usize, 4, 5, 8];
        let first = analytic_rho_energy_basis(&mp, 0.7, 0.03, 0.0);
        for t in [0.0, 2.0, 30.0] {
            let m = analytic_rho_energy_basis(&mp, 0.7, 0.03, t);
            for r in 0..9 {
                for c in 0..9 {
                    if r != c && !(block.contains(&r) && block.contains(&c)) {
                        assert!(m[(r, c)].norm() < 1e-14);
                    }
                }
                assert_eq!(m[(r, r)], first[(r, r)]);
            }
        }
    }

    #[test]
    fn resonant_coherence_does_not_decay() {
        let mp = ModelParams::new(0.8, -0.4, 1.5 * (0.8 + 0.4));
        let start = analytic_rho_energy_basis(&mp, 0.7, 0.03, 0.0)[(0, 5)].norm();
        for t in [1.0, 10.0, 1000.0] {
            let now = analytic_rho_energy_basis(&mp, 0.7, 0.03, t)[(0, 5)].norm();
            assert!((now - start).abs() < 1e-14);
        }
    }

    #[test]
    fn printed_central_block_disagrees_but_correction_agrees() {
        let mp = ModelParams::new(0.8, -0.4, 1.0);
        let prop = Propagator::for_model(&mp, 0.03).unwrap();
        let exact = prop.evolve(&isotropic(0.7).unwrap(), 5.0).unwrap();
        for (name, r, c, v) in printed::central_block(&mp, 0.7, 0.03, 5.0) {
            assert!((v - exact.matrix()[(r, c)]).norm() > 1e-3, "{name}");
        }
        for (name, r, c, v) in printed::central_block_corrected(&mp, 0.7, 0.03, 5.0) {
            assert!((v - exact.matrix()[(r, c)]).norm() < 1e-12, "{name}");
        }
    }
}
