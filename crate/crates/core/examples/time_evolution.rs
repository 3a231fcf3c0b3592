//! Evolve the isotropic state and track entanglement, coherence and
//! mixedness; the closed forms for coherence and entropy ride along.

use intrinsic_decoherence::dynamics::Propagator;
use intrinsic_decoherence::model::ModelParams;
use intrinsic_decoherence::quantifiers::{l1_coherence, l1_coherence_closed, linear_entropy, linear_entropy_closed, negativity};
use intrinsic_decoherence::states::isotropic;

fn main() -> intrinsic_decoherence::Result<()> {
    let params = ModelParams::new(0.8, -0.4, 1.8);
    let (p, gamma) = (0.7, 0.03);
    let prop = Propagator::for_model(&params, gamma)?;
    let rho0 = isotropic(p)?;

    println!("{:>6} {:>10} {:>10} {:>10} {:>10}", "t", "N", "C", "C closed", "S_L");
    for t in [0.0, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 200.0] {
        let rho = prop.evolve(&rho0, t)?;
        let s = linear_entropy(&rho);
        assert!((s - linear_entropy_closed(&params, p, gamma, t)).abs() < 1e-10);
        println!(
            "{t:>6.1} {:>10.6} {:>10.6} {:>10.6} {s:>10.6}",
            negativity(&rho, 3, 3)?,
            l1_coherence(&rho),
            l1_coherence_closed(&params, p, gamma, t),
        );
    }
    Ok(())
}
