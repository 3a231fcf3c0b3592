//! Effective couplings of spin-1 bosons in a double well and the resulting
//! resonance fields.

use intrinsic_decoherence::model::{hubbard_couplings, singlet_resonances, HubbardParams};

fn main() -> intrinsic_decoherence::Result<()> {
    for (u0, u2) in [(10.0, 2.0), (10.0, -2.0), (4.0, 8.0)] {
        let params = hubbard_couplings(&HubbardParams { hop: 1.0, u0, u2 })?;
        let [lo, hi] = singlet_resonances(&params);
        println!(
            "U0 = {u0:>5}, U2 = {u2:>5}:  J = {:>8.4}  K = {:>8.4}  chi = {:>8.4}  resonances at {lo:.4}, {hi:.4}",
            params.j,
            params.k,
            params.chi()
        );
    }
    Ok(())
}
