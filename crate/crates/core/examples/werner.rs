//! Negativity and linear entropy of the isotropic two-qutrit family.

use intrinsic_decoherence::quantifiers::{l1_coherence, linear_entropy, negativity};
use intrinsic_decoherence::states::{isotropic, werner_crossing, ENTANGLEMENT_THRESHOLD};

fn main() -> intrinsic_decoherence::Result<()> {
    println!("{:>5} {:>11} {:>11} {:>11}", "p", "negativity", "coherence", "S_L");
    for i in 0..=10 {
        let p = i as f64 / 10.0;
        let rho = isotropic(p)?;
        println!(
            "{p:>5.2} {:>11.6} {:>11.6} {:>11.6}",
            negativity(&rho, 3, 3)?,
            l1_coherence(&rho),
            linear_entropy(&rho)
        );
    }
    println!("\nentangled for p > {ENTANGLEMENT_THRESHOLD}");
    println!("negativity equals linear entropy at p = {:.10}", werner_crossing());
    Ok(())
}
