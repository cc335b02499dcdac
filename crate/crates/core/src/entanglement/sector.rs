//! Projection onto fixed local-particle-number sectors.
//!
//! A global ket with every party's occupation fixed is re-expressed on the
//! product of the parties' local Fock bases. For fermions the global ket
//! creates particles in ascending mode order while the product ket creates
//! them party by party; the two differ by the parity of that reordering.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::Partition;
use crate::error::{Error, Result};
use crate::fock::{permutation_sign, DensityMatrix, FockBasis, ManyBodyState, OccupationState};

/// A pure or mixed state on a full Fock basis.
#[derive(Debug, Clone, Copy)]
pub enum FockStateRef<'a> {
    Pure(&'a ManyBodyState),
    Mixed { basis: &'a FockBasis, rho: &'a DensityMatrix },
}

impl<'a> From<&'a ManyBodyState> for FockStateRef<'a> {
    fn from(s: &'a ManyBodyState) -> Self {
        FockStateRef::Pure(s)
    }
}

impl FockStateRef<'_> {
    pub fn basis(&self) -> &FockBasis {
        match self {
            FockStateRef::Pure(s) => s.basis(),
            FockStateRef::Mixed { basis, .. } => basis,
        }
    }

    fn check(&self) -> Result<()> {
        if let FockStateRef::Mixed { basis, rho } = self {
            let n = rho.matrix().nrows();
            if n != basis.len() {
                return Err(Error::DimensionMismatch { expected: basis.len(), found: n });
            }
        }
        Ok(())
    }
}

/// Local particle numbers `(n_A, n_B, n_C)` with the parties' local bases.
#[derive(Debug, Clone)]
pub struct Sector {
    counts: [usize; 3],
    local_bases: [FockBasis; 3],
}

impl Sector {
    pub fn new(part: &Partition, stats: crate::fock::Statistics, counts: [usize; 3]) -> Result<Self> {
        let local_bases = [0, 1, 2].map(|i| {
            let modes = part.party(i).len();
            FockBasis::enumerate(counts[i], modes, stats)
                .unwrap_or_else(|_| FockBasis::empty(counts[i], modes, stats))
        });
        Ok(Self { counts, local_bases })
    }

    pub fn counts(&self) -> [usize; 3] {
        self.counts
    }

    pub fn local_basis(&self, party: usize) -> &FockBasis {
        &self.local_bases[party]
    }

    pub fn dims(&self) -> [usize; 3] {
        [0, 1, 2].map(|i| self.local_bases[i].len())
    }

    pub fn dim(&self) -> usize {
        self.dims().iter().product()
    }

    /// True when some party's local space is one-dimensional (no particles
    /// or no empty mode), making the sector biseparable.
    pub fn is_trivially_separable(&self) -> bool {
        self.dims().iter().any(|&d| d <= 1)
    }

    fn flat_index(&self, local: [usize; 3]) -> usize {
        let d = self.dims();
        (local[0] * d[1] + local[1]) * d[2] + local[2]
    }
}

/// Projected, renormalized sector state with its probability.
#[derive(Debug, Clone)]
pub struct SectorState {
    pub sector: Sector,
    pub prob: f64,
    /// Trace-one state on `A ⊗ B ⊗ C`; absent when `prob == 0`.
    pub rho: Option<DensityMatrix>,
}

/// Where one global ket lands inside its sector.
#[derive(Debug, Clone, Copy)]
struct Placement {
    global: usize,
    local: usize,
    sign: f64,
}

/// Local particle numbers of `ket` with respect to `part`.
pub fn local_counts(ket: &OccupationState, part: &Partition) -> [usize; 3] {
    [0, 1, 2].map(|i| part.party(i).iter().map(|&m| ket.occupation(m) as usize).sum())
}

/// Sign relating a global ket to its party-blocked product ket.
pub fn reordering_sign(ket: &OccupationState, part: &Partition) -> f64 {
    if !ket.stats().is_fermionic() {
        return 1.0;
    }
    let blocked: Vec<usize> = part
        .parties()
        .iter()
        .flat_map(|p| p.iter().copied().filter(|&m| ket.occupation(m) == 1))
        .collect();
    permutation_sign(&blocked)
}

fn local_occupations(ket: &OccupationState, modes: &[usize]) -> Vec<u8> {
    modes.iter().map(|&m| ket.occupation(m)).collect()
}

fn check_partition(basis: &FockBasis, part: &Partition) -> Result<()> {
    if part.modes() != basis.modes() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} modes but the state has {}",
            part.modes(),
            basis.modes()
        )));
    }
    Ok(())
}

type SectorMap = BTreeMap<[usize; 3], (Sector, Vec<Placement>)>;

fn placements(basis: &FockBasis, part: &Partition) -> Result<SectorMap> {
    check_partition(basis, part)?;
    let mut out = SectorMap::new();
    for (global, ket) in basis.states().iter().enumerate() {
        let counts = local_counts(ket, part);
        let (sector, list) = match out.entry(counts) {
            std::collections::btree_map::Entry::Occupied(e) => e.into_mut(),
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert((Sector::new(part, basis.stats(), counts)?, Vec::new()))
            }
        };
        let local = [0, 1, 2].map(|i| {
            sector.local_bases[i]
                .index_of_occupations(&local_occupations(ket, part.party(i)))
                .expect("local pattern belongs to its local basis")
        });
        list.push(Placement { global, local: sector.flat_index(local), sign: reordering_sign(ket, part) });
    }
    Ok(out)
}

fn project(state: FockStateRef<'_>, sector: Sector, list: &[Placement]) -> SectorState {
    let dim = sector.dim();
    let dims = sector.dims().to_vec();
    let (prob, rho) = match state {
        FockStateRef::Pure(psi) => {
            let amp = psi.amplitudes();
            let mut v = DVector::<Complex64>::zeros(dim);
            for p in list {
                v[p.local] += amp[p.global] * p.sign;
            }
            let prob = v.norm_squared();
            let rho = (prob > 0.0).then(|| DensityMatrix::from_pure(&v, dims).scaled(1.0 / prob));
            (prob, rho)
        }
        FockStateRef::Mixed { rho, .. } => {
            let full = rho.matrix();
            let mut m = DMatrix::<Complex64>::zeros(dim, dim);
            for p in list {
                for q in list {
                    m[(p.local, q.local)] += full[(p.global, q.global)] * (p.sign * q.sign);
                }
            }
            let prob = m.trace().re;
            let rho = (prob > 0.0).then(|| {
                DensityMatrix::new(dims, m).expect("sector dims match").scaled(1.0 / prob)
            });
            (prob, rho)
        }
    };
    SectorState { sector, prob, rho }
}

/// `Π ρ Π` for the sector `counts`, normalized, with its probability.
///
/// Counts that cannot be realized give `prob = 0` rather than an error.
pub fn project_sector<'a>(
    state: impl Into<FockStateRef<'a>>,
    part: &Partition,
    counts: [usize; 3],
) -> Result<SectorState> {
    let state = state.into();
    state.check()?;
    let basis = state.basis();
    check_partition(basis, part)?;
    if counts.iter().sum::<usize>() != basis.particles() {
        return Err(Error::Config(format!(
            "sector {counts:?} does not hold {} particles",
            basis.particles()
        )));
    }
    let mut all = placements(basis, part)?;
    match all.remove(&counts) {
        Some((sector, list)) => Ok(project(state, sector, &list)),
        None => Ok(SectorState { sector: Sector::new(part, basis.stats(), counts)?, prob: 0.0, rho: None }),
    }
}

/// Every realizable sector of the state's basis, ordered by `(n_A, n_B, n_C)`.
pub fn sector_decomposition<'a>(state: impl Into<FockStateRef<'a>>, part: &Partition) -> Result<Vec<SectorState>> {
    let state = state.into();
    state.check()?;
    Ok(placements(state.basis(), part)?
        .into_values()
        .map(|(sector, list)| project(state, sector, &list))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::Statistics;
    use std::sync::Arc;

    #[test]
    fn sector_dims() {
        let part = Partition::adjacent_pairs();
        let s = Sector::new(&part, Statistics::Fermions, [1, 1, 1]).unwrap();
        assert_eq!(s.dims(), [2, 2, 2]);
        let s = Sector::new(&part, Statistics::Bosons, [3, 0, 0]).unwrap();
        assert_eq!(s.dims(), [4, 1, 1]);
        assert!(s.is_trivially_separable());
        let s = Sector::new(&part, Statistics::Fermions, [3, 0, 0]).unwrap();
        assert_eq!(s.dims(), [0, 1, 1]);
    }

    #[test]
    fn unrealizable_sector_has_zero_probability() {
        let basis = Arc::new(FockBasis::enumerate(3, 6, Statistics::Fermions).unwrap());
        let ket = OccupationState::parse("111000", Statistics::Fermions).unwrap();
        let psi = ManyBodyState::basis_state(basis, &ket).unwrap();
        let s = project_sector(&psi, &Partition::adjacent_pairs(), [3, 0, 0]).unwrap();
        assert_eq!(s.prob, 0.0);
        assert!(s.rho.is_none());
        assert!(project_sector(&psi, &Partition::adjacent_pairs(), [1, 1, 0]).is_err());
    }

    #[test]
    fn interleaved_signs() {
        let part = Partition::interleaved_pairs();
        let k = OccupationState::parse("111000", Statistics::Fermions).unwrap();
        assert_eq!(reordering_sign(&k, &part), 1.0);
        let k = OccupationState::parse("011100", Statistics::Fermions).unwrap();
        assert_eq!(reordering_sign(&k, &part), 1.0);
        // occupied 1,2,4 → blocked 1,4,2: one inversion
        let k = OccupationState::parse("110100", Statistics::Fermions).unwrap();
        assert_eq!(reordering_sign(&k, &part), -1.0);
    }

    #[test]
    fn mixed_matches_pure() {
        let basis = Arc::new(FockBasis::enumerate(3, 6, Statistics::Fermions).unwrap());
        let amp = DVector::from_fn(basis.len(), |i, _| Complex64::new((i as f64 * 0.37).sin(), (i as f64).cos() * 0.2));
        let psi = ManyBodyState::new(basis.clone(), amp).unwrap().normalized();
        let rho = psi.to_density();
        let part = Partition::interleaved_pairs();
        let a = project_sector(&psi, &part, [1, 1, 1]).unwrap();
        let b = project_sector(FockStateRef::Mixed { basis: &basis, rho: &rho }, &part, [1, 1, 1]).unwrap();
        assert!((a.prob - b.prob).abs() < 1e-14);
        let diff = a.rho.unwrap().into_matrix() - b.rho.unwrap().into_matrix();
        assert!(diff.iter().all(|z| z.norm() < 1e-13));
    }
}
