//! Single-particle density, pair correlations and interparticle distance
//! at τ = 8.7, checked against direct Fock-space expectation values.

use tripent::observables::NormalOrdered;
use tripent::prelude::*;

fn main() -> Result<()> {
    let params = LatticeParams::six_site();
    let tau = 8.7;
    let n = [1, 1, 1, 0, 0, 0];
    let c = single_particle_propagator(&params, tau);
    println!("rho = {:.4?}", single_particle_density(&c, &n)?.rho);
    for stats in [Statistics::Bosons, Statistics::Fermions] {
        let gamma = two_particle_correlation(&c, &n, stats)?;
        println!("{stats}:");
        for row in gamma.rows() {
            println!("  {row:.4?}");
        }
        println!("  g = {:.4?}", interparticle_distance(&gamma));
        let psi = evolve_state_oracle(&OccupationState::parse("111000", stats)?, &params, tau)?;
        let direct = expectation_oracle(&psi, &Observable::Term(NormalOrdered::pair_density(1, 2)))?;
        println!("  Gamma_23 closed form {:.12}, state {:.12}", gamma.gamma[(1, 2)], direct);
    }
    Ok(())
}
