//! Tripartite entanglement of three identical particles on a mode lattice.
//!
//! The crate enumerates bosonic and fermionic Fock spaces, evolves Fock states
//! under a tight-binding continuous-time quantum walk, and measures tripartite
//! entanglement in two ways:
//!
//! * the entanglement of particles `ε_T`, which respects the local
//!   particle-number superselection rule by averaging the tripartite
//!   negativity over fixed local-particle-number sectors;
//! * the geometric mode-entanglement measure `ε_G`, built from generator
//!   correlation tensors on the occupation-qubit picture.
//!
//! ```
//! use tripent::prelude::*;
//!
//! let phi = phi_state(0.0, std::f64::consts::FRAC_PI_4);
//! let report = entanglement_of_particles(&phi, &Partition::adjacent_pairs()).unwrap();
//! assert!((report.eps_t - 1.0).abs() < 1e-9);
//! ```

pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod fock;
pub mod observables;
pub mod scenario;
pub mod states;

pub use error::{Error, Result};

pub mod prelude {
    pub use crate::dynamics::{
        evolve_state, evolve_state_oracle, many_body_hamiltonian, single_particle_propagator, LatticeParams,
        Propagator,
    };
    pub use crate::entanglement::{
        bipartite_negativity, entanglement_of_particles, full_report, geometric_measure, partial_transpose,
        project_sector, tripartite_negativity, EntanglementReport, Partition,
    };
    pub use crate::fock::{
        enumerate_basis, DensityMatrix, FockBasis, ManyBodyState, OccupationState, Statistics, Term,
    };
    pub use crate::observables::{
        expectation_oracle, interparticle_distance, single_particle_density, two_particle_correlation,
        Observable,
    };
    pub use crate::states::{chi_state, packed_initial_state, phi_state};
    pub use crate::{Error, Result};
}
