//! Tight-binding chain with reflecting ends and its continuous-time walk.
//!
//! Time is the dimensionless `τ = tT/ħ`; every evolution operator is
//! `exp(−i Ĥ τ / T)`.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fock::{apply_product, build_monomial_state, FockBasis, Ladder, ManyBodyState, OccupationState, Term};

/// Largest Fock dimension the dense oracle will diagonalize.
pub const ORACLE_DIM_LIMIT: usize = 1000;

/// Chain of `modes` sites with on-site energy `onsite` and hopping `tunneling`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LatticeParams {
    pub modes: usize,
    pub onsite: f64,
    pub tunneling: f64,
}

impl LatticeParams {
    pub fn new(modes: usize, onsite: f64, tunneling: f64) -> Result<Self> {
        if modes == 0 {
            return Err(Error::Config("lattice needs at least one site".into()));
        }
        if tunneling == 0.0 || !tunneling.is_finite() {
            return Err(Error::Config(format!("tunneling rate must be finite and nonzero, got {tunneling}")));
        }
        if !onsite.is_finite() {
            return Err(Error::Config("on-site energy must be finite".into()));
        }
        Ok(Self { modes, onsite, tunneling })
    }

    /// Six sites, `G = 0`, `T = 1`.
    pub fn six_site() -> Self {
        Self { modes: 6, onsite: 0.0, tunneling: 1.0 }
    }

    /// Single-particle Hamiltonian in units of `T`.
    pub fn hopping_matrix(&self) -> DMatrix<f64> {
        let l = self.modes;
        let mut h = DMatrix::from_diagonal_element(l, l, self.onsite / self.tunneling);
        for i in 0..l.saturating_sub(1) {
            h[(i, i + 1)] = 1.0;
            h[(i + 1, i)] = 1.0;
        }
        h
    }

    /// Single-particle energies `G + 2T cos(kπ/(L+1))`, `k = 1..L`.
    pub fn single_particle_energies(&self) -> Vec<f64> {
        let l = self.modes as f64;
        (1..=self.modes)
            .map(|k| self.onsite + 2.0 * self.tunneling * (k as f64 * PI / (l + 1.0)).cos())
            .collect()
    }
}

/// Single-particle transition amplitudes; `mat[(r, s)]` takes site `s` to site `r`.
#[derive(Debug, Clone, PartialEq)]
pub struct Propagator {
    pub modes: usize,
    pub tau: f64,
    pub mat: DMatrix<Complex64>,
}

impl Propagator {
    pub fn amplitude(&self, r: usize, s: usize) -> Complex64 {
        self.mat[(r, s)]
    }
}

/// Closed-form sine-mode expansion of `exp(−i h τ)` on the open chain.
pub fn single_particle_propagator(params: &LatticeParams, tau: f64) -> Propagator {
    let l = params.modes;
    if tau == 0.0 {
        return Propagator { modes: l, tau, mat: DMatrix::identity(l, l) };
    }
    let lp1 = (l + 1) as f64;
    let phase = Complex64::from_polar(1.0, -params.onsite * tau / params.tunneling);
    let kphase: Vec<Complex64> = (1..=l)
        .map(|k| Complex64::from_polar(1.0, -2.0 * tau * (k as f64 * PI / lp1).cos()))
        .collect();
    let sines = DMatrix::from_fn(l, l, |r, k| ((r + 1) as f64 * (k + 1) as f64 * PI / lp1).sin());
    let mat = DMatrix::from_fn(l, l, |r, s| {
        let sum: Complex64 = (0..l).map(|k| kphase[k] * (sines[(r, k)] * sines[(s, k)])).sum();
        phase * sum * (2.0 / lp1)
    });
    Propagator { modes: l, tau, mat }
}

/// `H/T` on `basis`, assembled from ladder-operator matrix elements.
///
/// All matrix elements are real, so the result is real symmetric.
pub fn many_body_hamiltonian(basis: &FockBasis, params: &LatticeParams) -> Result<DMatrix<f64>> {
    if basis.modes() != params.modes {
        return Err(Error::DimensionMismatch { expected: params.modes, found: basis.modes() });
    }
    let dim = basis.len();
    let l = params.modes;
    let g = params.onsite / params.tunneling;
    let mut h = DMatrix::zeros(dim, dim);
    let mut terms: Vec<(f64, [Ladder; 2])> = (0..l)
        .map(|i| (g, [Ladder::Create(i), Ladder::Annihilate(i)]))
        .collect();
    for i in 0..l.saturating_sub(1) {
        terms.push((1.0, [Ladder::Create(i), Ladder::Annihilate(i + 1)]));
        terms.push((1.0, [Ladder::Create(i + 1), Ladder::Annihilate(i)]));
    }
    for (col, ket) in basis.states().iter().enumerate() {
        let term = Term::unit(ket.clone());
        for (w, ops) in &terms {
            if *w == 0.0 {
                continue;
            }
            if let Some(t) = apply_product(&term, ops)? {
                let row = basis.index_of(&t.state).expect("hopping conserves particle number");
                h[(row, col)] += w * t.amp.re;
            }
        }
    }
    Ok(h)
}

/// Schrödinger-picture state at `τ` built from the analytic propagator.
///
/// `e^{−iHt} c†_p e^{iHt} = Σ_s U_{sp} c†_s` with `U = e^{−iht}`, so row `p`
/// of `Uᵀ` is the substitution for `c†_p`.
pub fn evolve_state(init: &OccupationState, params: &LatticeParams, tau: f64) -> Result<ManyBodyState> {
    if init.modes() != params.modes {
        return Err(Error::DimensionMismatch { expected: params.modes, found: init.modes() });
    }
    let basis = Arc::new(FockBasis::enumerate(init.particles(), init.modes(), init.stats())?);
    evolve_on_basis(&basis, init, params, tau)
}

/// [`evolve_state`] reusing an existing basis for `init`.
pub fn evolve_on_basis(
    basis: &Arc<FockBasis>,
    init: &OccupationState,
    params: &LatticeParams,
    tau: f64,
) -> Result<ManyBodyState> {
    let c = single_particle_propagator(params, tau);
    let substitution = c.mat.transpose();
    build_monomial_state(basis, &substitution, init)
}

/// Dense eigendecomposition of the many-body Hamiltonian.
#[derive(Debug, Clone)]
pub struct SpectralOracle {
    basis: Arc<FockBasis>,
    energies: DVector<f64>,
    vectors: DMatrix<f64>,
}

impl SpectralOracle {
    pub fn new(basis: Arc<FockBasis>, params: &LatticeParams) -> Result<Self> {
        if basis.len() > ORACLE_DIM_LIMIT {
            return Err(Error::DimensionTooLarge { dim: basis.len(), limit: ORACLE_DIM_LIMIT });
        }
        let h = many_body_hamiltonian(&basis, params)?;
        let eig = SymmetricEigen::new(h);
        Ok(Self { basis, energies: eig.eigenvalues, vectors: eig.eigenvectors })
    }

    /// Eigenvalues of `H/T`, ascending.
    pub fn energies(&self) -> Vec<f64> {
        let mut e: Vec<f64> = self.energies.iter().copied().collect();
        e.sort_by(f64::total_cmp);
        e
    }

    /// `V diag(E) Vᵀ`.
    pub fn reconstruct(&self) -> DMatrix<f64> {
        &self.vectors * DMatrix::from_diagonal(&self.energies) * self.vectors.transpose()
    }

    /// `exp(−i H τ/T) ψ`.
    pub fn evolve(&self, psi: &ManyBodyState, tau: f64) -> Result<ManyBodyState> {
        if **psi.basis() != *self.basis {
            return Err(Error::DimensionMismatch { expected: self.basis.len(), found: psi.basis().len() });
        }
        let v = self.vectors.map(|x| Complex64::new(x, 0.0));
        let mut coeffs = v.transpose() * psi.amplitudes();
        for (c, e) in coeffs.iter_mut().zip(self.energies.iter()) {
            *c *= Complex64::from_polar(1.0, -e * tau);
        }
        ManyBodyState::new(self.basis.clone(), v * coeffs)
    }
}

/// Independent evolution path: exact `exp(−iĤτ/T)` through dense
/// diagonalization, without the single-particle propagator.
pub fn evolve_state_oracle(init: &OccupationState, params: &LatticeParams, tau: f64) -> Result<ManyBodyState> {
    if init.modes() != params.modes {
        return Err(Error::DimensionMismatch { expected: params.modes, found: init.modes() });
    }
    let basis = Arc::new(FockBasis::enumerate(init.particles(), init.modes(), init.stats())?);
    let oracle = SpectralOracle::new(basis.clone(), params)?;
    oracle.evolve(&ManyBodyState::basis_state(basis, init)?, tau)
}

/// `⟨ψ|Ĥ|ψ⟩ / T`.
pub fn energy(psi: &ManyBodyState, params: &LatticeParams) -> Result<f64> {
    let h = many_body_hamiltonian(psi.basis(), params)?.map(|x| Complex64::new(x, 0.0));
    Ok(psi.amplitudes().dotc(&(h * psi.amplitudes())).re)
}
