//! Operator-sum form of the evolution:
//! `M_p(t) = sqrt((gamma t)^p / p!) H^p exp(-iHt) exp(-(gamma t / 2) H^2)`.

use num_complex::Complex64;

use super::Propagator;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::tolerances::{KRAUS_MAX_TERMS, KRAUS_TAIL};

#[derive(Debug, Clone)]
pub struct KrausSet {
    pub operators: Vec<ComplexMatrix>,
    /// `max |sum_p M_p^H M_p - I|`
    pub completeness_defect: f64,
}

impl KrausSet {
    /// `sum_p M_p rho M_p^H`
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = rho.rows();
        let mut out = ComplexMatrix::zeros(n, n);
        for m in &self.operators {
            out = &out + &m.matmul(rho)?.matmul(&m.adjoint())?;
        }
        Ok(out)
    }
}

fn ln_factorial(p: usize) -> f64 {
    (2..=p).map(|k| (k as f64).ln()).sum()
}

/// Smallest `p_max` whose Poisson(`lambda`) tail `P(X > p_max)` is below `tail`.
pub fn poisson_truncation(lambda: f64, tail: f64, cap: usize) -> Result<usize> {
    if lambda == 0.0 {
        return Ok(0);
    }
    if !(lambda > 0.0) || !lambda.is_finite() || lambda > cap as f64 {
        return Err(Error::TailNotConverged { cap, lambda });
    }
    // pmf well past the mode; the remainder beyond `top` is negligible
    let top = cap + 600;
    let ln_lambda = lambda.ln();
    let mut ln_fact = 0.0;
    let mut pmf = Vec::with_capacity(top + 1);
    for k in 0..=top {
        if k > 0 {
            ln_fact += (k as f64).ln();
        }
        pmf.push((k as f64 * ln_lambda - lambda - ln_fact).exp());
    }
    // suffix[k] = sum_{i >= k} pmf[i]
    let mut suffix = vec![0.0; top + 2];
    for k in (0..=top).rev() {
        suffix[k] = suffix[k + 1] + pmf[k];
    }
    (0..=cap)
        .find(|&p| suffix[p + 1] < tail)
        .ok_or(Error::TailNotConverged { cap, lambda })
}

impl Propagator {
    /// Poisson mean `gamma t max_k E_k^2` governing the Kraus weights.
    pub fn kraus_lambda(&self, t: f64) -> f64 {
        let max_e2 = self
            .spectrum()
            .eigenvalues
            .iter()
            .map(|e| e * e)
            .fold(0.0, f64::max);
        self.gamma() * t * max_e2
    }

    pub fn kraus_truncation(&self, t: f64) -> Result<usize> {
        if !(t >= 0.0) {
            return Err(Error::NegativeTime(t));
        }
        poisson_truncation(self.kraus_lambda(t), KRAUS_TAIL, KRAUS_MAX_TERMS)
    }

    /// `M_0 ..= M_{p_max}`, each built in the eigenbasis of `H`.
    pub fn kraus_operators(&self, t: f64, p_max: usize) -> Result<KrausSet> {
        if !(t >= 0.0) {
            return Err(Error::NegativeTime(t));
        }
        let s = self.spectrum();
        let n = s.dim();
        let gt = self.gamma() * t;
        let mut operators = Vec::with_capacity(p_max + 1);
        for p in 0..=p_max {
            let diag: Vec<Complex64> = s
                .eigenvalues
                .iter()
                .map(|&e| weight(p, gt, e) * Complex64::new(0.0, -e * t).exp())
                .collect();
            operators.push(s.from_eigenbasis(&ComplexMatrix::from_diag(&diag)));
        }
        let mut completeness = ComplexMatrix::zeros(n, n);
        for m in &operators {
            completeness = &completeness + &(&m.adjoint() * m);
        }
        let completeness_defect = completeness.max_abs_diff(&ComplexMatrix::identity(n));
        Ok(KrausSet {
            operators,
            completeness_defect,
        })
    }

    /// Truncated operator sum with the automatically chosen `p_max`.
    pub fn kraus_evolve(&self, rho0: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
        let set = self.kraus_operators(t, self.kraus_truncation(t)?)?;
        Ok(set.apply(rho0)?.hermitian_part())
    }
}

/// `sqrt((gt)^p / p!) e^p exp(-gt e^2 / 2)`, evaluated in log space.
fn weight(p: usize, gt: f64, e: f64) -> f64 {
    let x = gt * e * e;
    if x == 0.0 {
        return if p == 0 { 1.0 } else { 0.0 };
    }
    let magnitude = (0.5 * (p as f64 * x.ln() - ln_factorial(p)) - 0.5 * x).exp();
    if e < 0.0 && p % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}
