//! Fock bases and ladder operators for bosons and fermions.

use tripent::fock::{apply_annihilation, apply_creation};
use tripent::prelude::*;

fn main() -> Result<()> {
    for stats in [Statistics::Bosons, Statistics::Fermions] {
        let basis = enumerate_basis(3, 6, stats)?;
        println!("{stats}: {} states, first {} last {}", basis.len(), basis.state(0), basis.state(basis.len() - 1));
    }

    let ket = OccupationState::parse("010001", Statistics::Fermions)?;
    let up = apply_creation(&Term::unit(ket.clone()), 3)?.expect("mode 4 is empty");
    println!("c†_4 {ket} = {:+} {}", up.amp.re, up.state);
    let down = apply_annihilation(&up, 5)?.expect("mode 6 is occupied");
    println!("c_6 c†_4 {ket} = {:+} {}", down.amp.re, down.state);
    println!("c†_2 {ket} = {:?}", apply_creation(&Term::unit(ket.clone()), 1)?.map(|t| t.amp));

    let bosons = OccupationState::parse("200", Statistics::Bosons)?;
    let t = apply_creation(&Term::unit(bosons.clone()), 0)?.expect("bosons never block");
    println!("b†_1 {bosons} = {:.6} {}", t.amp.re, t.state);
    Ok(())
}
