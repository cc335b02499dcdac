//! Reference states used throughout the scenarios.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::Result;
use crate::fock::{FockBasis, ManyBodyState, OccupationState, Statistics};

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// One particle in an equal superposition of three modes,
/// `(|001⟩ + |010⟩ + |100⟩)/√3`.
pub fn chi_state() -> ManyBodyState {
    let basis = Arc::new(FockBasis::enumerate(1, 3, Statistics::Bosons).expect("valid basis"));
    let a = real(1.0 / 3f64.sqrt());
    let terms = ["001", "010", "100"]
        .map(|k| (a, OccupationState::parse(k, Statistics::Bosons).expect("valid ket")));
    ManyBodyState::from_terms(basis, terms).expect("kets belong to the basis")
}

/// Three fermions on six modes:
/// `cos α cos β |010101⟩ + cos α sin β |101010⟩ + sin α/√2 (|111000⟩ + |000111⟩)`.
pub fn phi_state(alpha: f64, beta: f64) -> ManyBodyState {
    let basis = Arc::new(FockBasis::enumerate(3, 6, Statistics::Fermions).expect("valid basis"));
    phi_state_on(&basis, alpha, beta)
}

/// [`phi_state`] on a caller-supplied three-fermion six-mode basis.
pub fn phi_state_on(basis: &Arc<FockBasis>, alpha: f64, beta: f64) -> ManyBodyState {
    let s = alpha.sin() / 2f64.sqrt();
    let terms = [
        (alpha.cos() * beta.cos(), "010101"),
        (alpha.cos() * beta.sin(), "101010"),
        (s, "111000"),
        (s, "000111"),
    ]
    .map(|(a, k)| (real(a), OccupationState::parse(k, Statistics::Fermions).expect("valid ket")));
    ManyBodyState::from_terms(basis.clone(), terms).expect("kets belong to the basis")
}

/// `particles` particles on the leftmost sites of a `modes`-site chain.
pub fn packed_initial_state(modes: usize, particles: usize, stats: Statistics) -> Result<OccupationState> {
    let occ = (0..modes).map(|i| u8::from(i < particles)).collect();
    let state = OccupationState::new(occ, stats)?;
    if state.particles() != particles {
        return Err(crate::Error::PauliOverflow { particles, modes });
    }
    Ok(state)
}
