//! One- and two-particle observables of the walk.
//!
//! The closed forms evaluate `⟨c†_r c_r⟩` and `⟨c†_r c†_s c_s c_r⟩` for an
//! initial Fock state directly from the single-particle propagator, without
//! touching the many-body state. [`expectation_oracle`] computes the same
//! quantities on an explicit Fock-space state.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dynamics::Propagator;
use crate::error::{Error, Result};
use crate::fock::{apply_product, Ladder, ManyBodyState, Statistics};

/// Mean occupation of every site.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityProfile {
    pub rho: Vec<f64>,
}

impl DensityProfile {
    pub fn total(&self) -> f64 {
        self.rho.iter().sum()
    }
}

/// `Γ_rs = ⟨c†_r c†_s c_s c_r⟩`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationMatrix {
    pub gamma: DMatrix<f64>,
}

impl CorrelationMatrix {
    pub fn modes(&self) -> usize {
        self.gamma.nrows()
    }

    pub fn total(&self) -> f64 {
        self.gamma.sum()
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        (0..self.modes())
            .map(|r| self.gamma.row(r).iter().copied().collect())
            .collect()
    }
}

fn check_occupations(c: &Propagator, n: &[u32]) -> Result<()> {
    if n.len() != c.modes {
        return Err(Error::DimensionMismatch { expected: c.modes, found: n.len() });
    }
    Ok(())
}

/// `ρ_r = Σ_s |C_rs|² n_s`; the same for both statistics.
pub fn single_particle_density(c: &Propagator, n: &[u32]) -> Result<DensityProfile> {
    check_occupations(c, n)?;
    let rho = (0..c.modes)
        .map(|r| {
            n.iter()
                .enumerate()
                .map(|(s, &ns)| c.mat[(r, s)].norm_sqr() * ns as f64)
                .sum()
        })
        .collect();
    Ok(DensityProfile { rho })
}

/// Two-particle correlation from the closed form: pairs of distinct initial
/// sites interfere with `+` (bosons) or `−` (fermions); doubly occupied
/// bosonic sites add `|C_rp|²|C_sp|² n_p(n_p − 1)`.
pub fn two_particle_correlation(c: &Propagator, n: &[u32], stats: Statistics) -> Result<CorrelationMatrix> {
    check_occupations(c, n)?;
    if stats.is_fermionic() && n.iter().any(|&x| x > 1) {
        return Err(Error::IllegalOccupation {
            occ: n.iter().map(|&x| x as u8).collect(),
            reason: "fermionic occupation above 1",
        });
    }
    let l = c.modes;
    let sign = if stats.is_fermionic() { -1.0 } else { 1.0 };
    let gamma = DMatrix::from_fn(l, l, |r, s| {
        let mut g = 0.0;
        for p in 0..l {
            let np = n[p] as f64;
            if np == 0.0 {
                continue;
            }
            for (q, &nq) in n.iter().enumerate().take(p) {
                let nq = nq as f64;
                if nq == 0.0 {
                    continue;
                }
                let amp = c.mat[(r, p)] * c.mat[(s, q)] + c.mat[(r, q)] * c.mat[(s, p)] * sign;
                g += amp.norm_sqr() * np * nq;
            }
            if !stats.is_fermionic() {
                g += c.mat[(r, p)].norm_sqr() * c.mat[(s, p)].norm_sqr() * np * (np - 1.0);
            }
        }
        g
    });
    Ok(CorrelationMatrix { gamma })
}

/// `g(Δ) = Σ_q Γ_{q,q+Δ}` for `Δ = 0..L−1`.
pub fn interparticle_distance(gamma: &CorrelationMatrix) -> Vec<f64> {
    let l = gamma.modes();
    (0..l)
        .map(|delta| (0..l - delta).map(|q| gamma.gamma[(q, q + delta)]).sum())
        .collect()
}

/// A normal-ordered product `c†_{a1} … c†_{ak} c_{b1} … c_{bk}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalOrdered {
    pub creators: Vec<usize>,
    pub annihilators: Vec<usize>,
}

impl NormalOrdered {
    pub fn new(creators: Vec<usize>, annihilators: Vec<usize>) -> Self {
        Self { creators, annihilators }
    }

    /// `c†_r c_r`.
    pub fn density(r: usize) -> Self {
        Self::new(vec![r], vec![r])
    }

    /// `c†_r c†_s c_s c_r`.
    pub fn pair_density(r: usize, s: usize) -> Self {
        Self::new(vec![r, s], vec![s, r])
    }

    /// The adjoint is `c†_{bk} … c†_{b1} c_{ak} … c_{a1}`, so the product is
    /// Hermitian exactly when the annihilators mirror the creators.
    pub fn is_hermitian(&self) -> bool {
        self.creators.iter().eq(self.annihilators.iter().rev())
    }

    fn ladders(&self) -> Vec<Ladder> {
        self.creators
            .iter()
            .map(|&m| Ladder::Create(m))
            .chain(self.annihilators.iter().map(|&m| Ladder::Annihilate(m)))
            .collect()
    }
}

/// Observables accepted by [`expectation_oracle`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Observable {
    /// `Σ_i c†_i c_i`.
    Number,
    Term(NormalOrdered),
}

/// `⟨ψ|O|ψ⟩` by explicit ladder-operator application.
pub fn expectation_oracle(state: &ManyBodyState, observable: &Observable) -> Result<f64> {
    let terms: Vec<NormalOrdered> = match observable {
        Observable::Number => (0..state.basis().modes()).map(NormalOrdered::density).collect(),
        Observable::Term(t) => {
            if !t.is_hermitian() {
                return Err(Error::NonHermitianObservable);
            }
            vec![t.clone()]
        }
    };
    let basis = state.basis();
    let amp = state.amplitudes();
    let mut total = Complex64::new(0.0, 0.0);
    for term in &terms {
        let ops = term.ladders();
        for t in state.terms() {
            if let Some(out) = apply_product(&t, &ops)? {
                if let Some(i) = basis.index_of(&out.state) {
                    total += amp[i].conj() * out.amp;
                }
            }
        }
    }
    debug_assert!(total.im.abs() <= 1e-12 * (1.0 + total.re.abs()));
    Ok(total.re)
}
