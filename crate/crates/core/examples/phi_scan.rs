//! Both measures over a coarse (α, β) grid of the three-fermion family.
//!
//! Pass the number of grid points per axis as the first argument (default 9).

use tripent::scenario::{run_phi_scan, RunConfig, Scenario};

fn main() -> tripent::Result<()> {
    let points = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(9);
    let mut cfg = RunConfig::new(Scenario::PhiScan);
    cfg.alpha_steps = points;
    cfg.beta_steps = points;
    println!("{:>8} {:>8} {:>10} {:>10}", "α/π", "β/π", "eps_T", "eps_G");
    for row in run_phi_scan(&cfg)? {
        println!(
            "{:8.3} {:8.3} {:10.6} {:10.6}",
            row.alpha / std::f64::consts::PI,
            row.beta / std::f64::consts::PI,
            row.eps_t,
            row.eps_g
        );
    }
    Ok(())
}
