//! Tripartite entanglement of identical particles.
//!
//! The entanglement of particles `ε_T` averages a standard tripartite measure
//! over local-particle-number sectors: `ε_T = Σ P_{nA,nB,nC} · TPN(ρ_{nA,nB,nC})`,
//! where `ρ_{nA,nB,nC}` is the trace-normalized projection onto the sector and
//! TPN is the geometric mean of the three one-versus-rest negativities.
//! The geometric mode measure `ε_G` is provided for comparison.

mod geometric;
mod negativity;
mod partition;
mod sector;

pub use geometric::{correlation_norm, correlation_sum, gell_mann, geometric_measure, mode_qubit_amplitudes};
pub use negativity::{
    bipartite_negativity, cut_negativities, geometric_mean, hermitian_eigenvalues, partial_transpose,
    tripartite_negativity, HERMITICITY_TOLERANCE, NEGATIVITY_FLOOR,
};
pub use partition::Partition;
pub use sector::{
    local_counts, project_sector, reordering_sign, sector_decomposition, FockStateRef, Sector, SectorState,
};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fock::ManyBodyState;

/// Sectors at or below this probability are not analyzed.
pub const SECTOR_PROBABILITY_CUTOFF: f64 = 1e-14;

/// Per-sector contribution to `ε_T`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SectorRecord {
    pub counts: [usize; 3],
    pub prob: f64,
    /// `N_{A−BC}`, `N_{B−AC}`, `N_{C−AB}` of the normalized sector state.
    pub negativities: [f64; 3],
    pub tpn: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntanglementReport {
    pub sectors: Vec<SectorRecord>,
    pub eps_t: f64,
    pub eps_g: Option<f64>,
}

impl EntanglementReport {
    pub fn sector(&self, counts: [usize; 3]) -> Option<&SectorRecord> {
        self.sectors.iter().find(|s| s.counts == counts)
    }

    /// Sum of all sector probabilities.
    pub fn total_probability(&self) -> f64 {
        self.sectors.iter().map(|s| s.prob).sum()
    }
}

fn analyze(s: &SectorState) -> Result<SectorRecord> {
    let counts = s.sector.counts();
    let rho = match &s.rho {
        Some(rho) if s.prob > SECTOR_PROBABILITY_CUTOFF => rho,
        _ => return Ok(SectorRecord { counts, prob: s.prob, negativities: [0.0; 3], tpn: 0.0 }),
    };
    let negativities = cut_negativities(rho)?;
    // a party with a one-dimensional local space factors out exactly
    let tpn = if s.sector.is_trivially_separable() { 0.0 } else { geometric_mean(negativities) };
    Ok(SectorRecord { counts, prob: s.prob, negativities, tpn })
}

/// `ε_T` with its per-sector breakdown.
pub fn entanglement_of_particles<'a>(
    state: impl Into<FockStateRef<'a>>,
    part: &Partition,
) -> Result<EntanglementReport> {
    let sectors = sector_decomposition(state, part)?
        .iter()
        .map(analyze)
        .collect::<Result<Vec<_>>>()?;
    let eps_t = sectors.iter().map(|s| s.prob * s.tpn).sum();
    Ok(EntanglementReport { sectors, eps_t, eps_g: None })
}

/// Both `ε_T` and `ε_G` for a pure state.
pub fn full_report(state: &ManyBodyState, part: &Partition) -> Result<EntanglementReport> {
    let mut report = entanglement_of_particles(state, part)?;
    report.eps_g = Some(geometric_measure(state, part)?);
    Ok(report)
}
