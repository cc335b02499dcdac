//! Compares propagator-based evolution with dense diagonalization of the
//! many-body Hamiltonian.

use tripent::prelude::*;

fn main() -> Result<()> {
    let params = LatticeParams::new(6, 0.5, 1.0)?;
    for stats in [Statistics::Bosons, Statistics::Fermions] {
        let init = OccupationState::parse("111000", stats)?;
        for tau in [0.5, 3.0, 8.7, 17.2] {
            let fast = evolve_state(&init, &params, tau)?;
            let exact = evolve_state_oracle(&init, &params, tau)?;
            let diff = (fast.amplitudes() - exact.amplitudes()).norm();
            println!("{stats:>8} tau = {tau:5.2}: |difference| = {diff:.2e}");
        }
    }
    Ok(())
}
