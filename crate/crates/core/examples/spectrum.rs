//! Diagonalise the Hamiltonian numerically and compare with the closed-form
//! levels, then list the fields where levels cross.

use intrinsic_decoherence::linalg::hermitian_eig;
use intrinsic_decoherence::model::{analytic_spectrum, build_hamiltonian, resonance_fields, ModelParams};

fn main() -> intrinsic_decoherence::Result<()> {
    for bz in [0.0, 1.0, 1.8] {
        let params = ModelParams::new(0.8, -0.4, bz);
        let numeric = hermitian_eig(&build_hamiltonian(&params))?;
        let mut levels: Vec<_> = analytic_spectrum(&params).into_iter().map(|e| (e.energy, e.label)).collect();
        levels.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut sorted = numeric.eigenvalues.clone();
        sorted.sort_by(f64::total_cmp);
        println!("Bz = {bz}");
        for ((e, label), n) in levels.iter().zip(&sorted) {
            println!("  E{label:<2} {e:>8.4}   numeric {n:>8.4}");
        }
    }

    let res = resonance_fields(&ModelParams::new(0.8, -0.4, 0.0));
    println!("\ncrossings for J = 0.8, K = -0.4:");
    for c in res.crossings.iter().filter(|c| c.labels.0 == 1) {
        println!("  E{} meets E{} at Bz = {:.4}", c.labels.0, c.labels.1, c.bz);
    }
    Ok(())
}
