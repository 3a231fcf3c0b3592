//! Scan the steady state over the field and locate the resonance peaks.

use intrinsic_decoherence::model::{singlet_resonances, ModelParams};
use intrinsic_decoherence::sweep::{field_scan, local_maxima, SweepConfig, Values};

fn main() -> intrinsic_decoherence::Result<()> {
    for (j, k) in [(0.8, -0.4), (-0.8, 0.4)] {
        let cfg = SweepConfig {
            params: ModelParams::new(j, k, 0.0),
            bz: Values::Range { start: -4.0, end: 4.0, step: 0.01 },
            ..SweepConfig::default()
        };
        let table = field_scan(&cfg)?;
        let bz = table.column("bz").unwrap();
        let neg = table.column("negativity").unwrap();
        let coh = table.column("coherence").unwrap();
        println!("J = {j}, K = {k}");
        println!("  negativity peaks at {:?}", local_maxima(&bz, &neg, 1e-9));
        println!("  coherence peaks at  {:?}", local_maxima(&bz, &coh, 1e-9));
        println!("  predicted singlet resonances {:?}", singlet_resonances(&cfg.params));
    }
    Ok(())
}
