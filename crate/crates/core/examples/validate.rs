//! Run the full cross-check suite, then again with a deliberately wrong
//! propagator to show that the report catches it.

use intrinsic_decoherence::dynamics::Propagator;
use intrinsic_decoherence::linalg::ComplexMatrix;
use intrinsic_decoherence::model::{build_hamiltonian, ModelParams};
use intrinsic_decoherence::validate::{validate, validate_with};

fn main() {
    let report = validate(42);
    print!("{}", report.render());

    let reversed = |mp: &ModelParams, gamma: f64, rho: &ComplexMatrix, t: f64| {
        Propagator::new(&build_hamiltonian(mp).scale_real(-1.0), gamma)?.evolve_matrix(rho, t)
    };
    let broken = validate_with(42, &reversed);
    println!("\nwith time-reversed phases: overall {}", if broken.passed() { "PASS" } else { "FAIL" });
    for section in broken.sections.iter().filter(|s| !s.passed()) {
        let names: Vec<_> = section.failures().map(|c| c.name.as_str()).take(6).collect();
        println!("  [{}] {}: {}", section.id, section.title, names.join(", "));
    }
}
