//! Three independent routes to rho(t): the eigenbasis propagator, the Kraus
//! sum and a fourth-order Runge-Kutta integration of the master equation.

use intrinsic_decoherence::dynamics::{integrate_master_at, Propagator};
use intrinsic_decoherence::model::{build_hamiltonian, ModelParams};
use intrinsic_decoherence::states::isotropic;

fn main() -> intrinsic_decoherence::Result<()> {
    let rho0 = isotropic(0.7)?;
    let times = [0.5, 5.0, 20.0];
    for bz in [0.0, 1.8] {
        let h = build_hamiltonian(&ModelParams::new(0.8, -0.4, bz));
        let prop = Propagator::new(&h, 0.03)?;
        let rk4 = integrate_master_at(&rho0, &h, 0.03, &times, 1e-3)?;
        for (t, m) in times.iter().zip(&rk4) {
            let exact = prop.evolve_matrix(rho0.matrix(), *t)?;
            let kraus = prop.kraus_evolve(rho0.matrix(), *t)?;
            println!(
                "Bz = {bz:<3} t = {t:<4}  Kraus terms {:>3}  |exact - Kraus| {:.1e}  |exact - RK4| {:.1e}",
                prop.kraus_truncation(*t)? + 1,
                exact.max_abs_diff(&kraus),
                exact.max_abs_diff(m),
            );
        }
    }
    Ok(())
}
