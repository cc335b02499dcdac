//! One particle spread over three modes: mode entanglement without
//! entanglement of particles.

use tripent::prelude::*;

fn main() -> Result<()> {
    let chi = chi_state();
    let report = full_report(&chi, &Partition::single_modes())?;
    println!("eps_G = {:.12}  (sqrt(33)/3 - 1 = {:.12})", report.eps_g.unwrap_or(f64::NAN), 33f64.sqrt() / 3.0 - 1.0);
    println!("eps_T = {}", report.eps_t);
    for s in &report.sectors {
        println!("  sector {:?}: P = {:.6}, TPN = {}", s.counts, s.prob, s.tpn);
    }
    Ok(())
}
