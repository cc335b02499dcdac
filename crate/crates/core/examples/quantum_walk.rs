//! Entanglement of particles along the walk from |111000⟩ for both
//! statistics and both two-mode partitions.

use tripent::prelude::*;
use tripent::scenario::{run_walk, RunConfig, Scenario};

fn main() -> Result<()> {
    for part in ["1,2|3,4|5,6", "1,4|2,5|3,6"] {
        let mut curves = Vec::new();
        for stats in [Statistics::Fermions, Statistics::Bosons] {
            let mut cfg = RunConfig::new(Scenario::Walk);
            cfg.stats = stats;
            cfg.partition = Some(part.into());
            curves.push(run_walk(&cfg)?);
        }
        let mean = |i: usize| curves[i].iter().map(|r| r.eps_t).sum::<f64>() / curves[i].len() as f64;
        println!("partition {part}: mean eps_T fermions {:.4}, bosons {:.4}", mean(0), mean(1));
        println!("{:>6} {:>10} {:>10}", "tau", "fermions", "bosons");
        for (f, b) in curves[0].iter().zip(&curves[1]).step_by(20) {
            println!("{:6.2} {:10.6} {:10.6}", f.tau, f.eps_t, b.eps_t);
        }
    }
    Ok(())
}
