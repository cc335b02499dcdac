//! Local particle-number sectors of an evolved three-fermion state and
//! their contribution to the entanglement of particles.

use tripent::prelude::*;

fn main() -> Result<()> {
    let init = OccupationState::parse("111000", Statistics::Fermions)?;
    let psi = evolve_state(&init, &LatticeParams::six_site(), 8.7)?;
    for part in [Partition::adjacent_pairs(), Partition::interleaved_pairs()] {
        let report = entanglement_of_particles(&psi, &part)?;
        println!("partition {part}: eps_T = {:.6}", report.eps_t);
        for s in report.sectors.iter().filter(|s| s.prob > 1e-3) {
            println!(
                "  {:?}  P = {:.4}  N = [{:.4}, {:.4}, {:.4}]  TPN = {:.4}",
                s.counts, s.prob, s.negativities[0], s.negativities[1], s.negativities[2], s.tpn
            );
        }
    }
    Ok(())
}
