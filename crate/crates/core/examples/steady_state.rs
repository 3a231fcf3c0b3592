//! Long-time limits. Only coherences between degenerate levels survive, so
//! the limit does not depend on the decoherence rate.

use intrinsic_decoherence::dynamics::Propagator;
use intrinsic_decoherence::model::ModelParams;
use intrinsic_decoherence::quantifiers::{l1_coherence, linear_entropy, negativity};
use intrinsic_decoherence::states::isotropic;

fn main() -> intrinsic_decoherence::Result<()> {
    let rho0 = isotropic(0.7)?;
    println!("{:>4} {:>7} {:>10} {:>10} {:>10}", "Bz", "gamma", "N", "C", "S_L");
    for bz in [0.0, 1.0, 1.8, 4.0] {
        for gamma in [0.001, 0.03, 0.3] {
            let prop = Propagator::for_model(&ModelParams::new(0.8, -0.4, bz), gamma)?;
            let rho = prop.steady_state(&rho0, prop.default_deg_tol())?;
            println!(
                "{bz:>4} {gamma:>7} {:>10.6} {:>10.6} {:>10.6}",
                negativity(&rho, 3, 3)?,
                l1_coherence(&rho),
                linear_entropy(&rho)
            );
        }
    }
    Ok(())
}
