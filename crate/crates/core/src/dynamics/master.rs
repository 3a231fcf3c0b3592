//! Classical RK4 integration of
//! `d rho / dt = -i[H, rho] - (gamma / 2)[H, [H, rho]]`.
//!
//! Works in the computational basis and touches the eigensolver only for the
//! step-size guard, so it serves as an independent check on [`Propagator`].
//!
//! [`Propagator`]: super::Propagator

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eig, ComplexMatrix};
use crate::states::DensityMatrix;
use crate::tolerances::RK4_STABILITY;

const MINUS_I: Complex64 = Complex64 { re: 0.0, im: -1.0 };

pub fn rhs_master(rho: &ComplexMatrix, h: &ComplexMatrix, gamma: f64) -> Result<ComplexMatrix> {
    rho.check_same_shape(h)?;
    let inner = h.commutator(rho)?;
    let outer = h.commutator(&inner)?;
    Ok(&inner.scale(MINUS_I) - &outer.scale_real(0.5 * gamma))
}

fn rk4_step(rho: &ComplexMatrix, h: &ComplexMatrix, gamma: f64, dt: f64) -> Result<ComplexMatrix> {
    let k1 = rhs_master(rho, h, gamma)?;
    let k2 = rhs_master(&(rho + &k1.scale_real(0.5 * dt)), h, gamma)?;
    let k3 = rhs_master(&(rho + &k2.scale_real(0.5 * dt)), h, gamma)?;
    let k4 = rhs_master(&(rho + &k3.scale_real(dt)), h, gamma)?;
    let incr = &(&k1 + &k2.scale_real(2.0)) + &(&k3.scale_real(2.0) + &k4);
    Ok(rho + &incr.scale_real(dt / 6.0))
}

fn check_step(h: &ComplexMatrix, gamma: f64, dt: f64) -> Result<()> {
    if !(dt > 0.0) {
        return Err(Error::ConfigInvalid(format!("step must be positive, got {dt}")));
    }
    let spread = hermitian_eig(h)?.spread();
    let measure = dt * (spread + gamma * spread * spread);
    if measure > RK4_STABILITY {
        return Err(Error::StepTooLarge {
            dt,
            measure,
            limit: RK4_STABILITY,
        });
    }
    Ok(())
}

/// Snapshots of the RK4 solution at the ascending `times`. Each segment
/// between samples is split into equal steps no longer than `dt`.
pub fn integrate_master_at(
    rho0: &DensityMatrix,
    h: &ComplexMatrix,
    gamma: f64,
    times: &[f64],
    dt: f64,
) -> Result<Vec<ComplexMatrix>> {
    rho0.matrix().check_same_shape(h)?;
    check_step(h, gamma, dt)?;
    if let Some(&t) = times.iter().find(|t| !(**t >= 0.0)) {
        return Err(Error::NegativeTime(t));
    }
    if times.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::ConfigInvalid("sample times must be ascending".into()));
    }

    let mut rho = rho0.matrix().clone();
    let mut now = 0.0;
    let mut out = Vec::with_capacity(times.len());
    for &target in times {
        let span = target - now;
        if span > 0.0 {
            let steps = (span / dt - 1e-9).ceil().max(1.0) as usize;
            let h_step = span / steps as f64;
            for _ in 0..steps {
                rho = rk4_step(&rho, h, gamma, h_step)?;
            }
        }
        now = target;
        out.push(rho.hermitian_part());
    }
    Ok(out)
}

/// RK4 solution at `t_end`. The result is not re-validated: RK4 preserves
/// trace exactly but positivity only up to truncation error.
pub fn integrate_master(
    rho0: &DensityMatrix,
    h: &ComplexMatrix,
    gamma: f64,
    t_end: f64,
    dt: f64,
) -> Result<DensityMatrix> {
    let mut snaps = integrate_master_at(rho0, h, gamma, &[t_end], dt)?;
    Ok(DensityMatrix::new_unchecked(snaps.pop().expect("one sample")))
}
