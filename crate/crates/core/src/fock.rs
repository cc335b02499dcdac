//! Occupation-number bases and second-quantized ladder operators.
//!
//! Kets follow the canonical ordering
//! `|n_1 … n_L⟩ = (c†_1)^{n_1} … (c†_L)^{n_L} |0⟩ / √(Π n_i!)`, so a ket label
//! carries no sign of its own; fermionic signs appear only when an operator is
//! applied. Modes are indexed from zero in code.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exchange statistics of the particles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Bosons,
    Fermions,
}

impl Statistics {
    /// Largest occupation a single mode may hold when `particles` are present.
    pub fn max_occupation(self, particles: usize) -> usize {
        match self {
            Statistics::Bosons => particles,
            Statistics::Fermions => particles.min(1),
        }
    }

    pub fn is_fermionic(self) -> bool {
        matches!(self, Statistics::Fermions)
    }
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statistics::Bosons => "bosons",
            Statistics::Fermions => "fermions",
        })
    }
}

impl std::str::FromStr for Statistics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bosons" | "boson" | "b" => Ok(Statistics::Bosons),
            "fermions" | "fermion" | "f" => Ok(Statistics::Fermions),
            other => Err(Error::Config(format!("unknown statistics '{other}'"))),
        }
    }
}

/// A Fock basis label: the occupation of every mode.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccupationState {
    occ: Vec<u8>,
    stats: Statistics,
}

impl OccupationState {
    pub fn new(occ: Vec<u8>, stats: Statistics) -> Result<Self> {
        if occ.is_empty() {
            return Err(Error::IllegalOccupation { occ, reason: "no modes" });
        }
        if stats.is_fermionic() && occ.iter().any(|&n| n > 1) {
            return Err(Error::IllegalOccupation {
                occ,
                reason: "fermionic occupation above 1",
            });
        }
        Ok(Self { occ, stats })
    }

    /// Parses a digit string such as `"010101"`, one digit per mode.
    pub fn parse(digits: &str, stats: Statistics) -> Result<Self> {
        let occ = digits
            .chars()
            .filter(|c| !matches!(c, ',' | ' '))
            .map(|c| {
                c.to_digit(10).map(|d| d as u8).ok_or_else(|| {
                    Error::Config(format!("'{c}' is not an occupation digit"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(occ, stats)
    }

    pub fn vacuum(modes: usize, stats: Statistics) -> Self {
        Self { occ: vec![0; modes], stats }
    }

    pub fn occupations(&self) -> &[u8] {
        &self.occ
    }

    pub fn occupation(&self, mode: usize) -> u8 {
        self.occ[mode]
    }

    pub fn modes(&self) -> usize {
        self.occ.len()
    }

    pub fn particles(&self) -> usize {
        self.occ.iter().map(|&n| n as usize).sum()
    }

    pub fn stats(&self) -> Statistics {
        self.stats
    }

    /// Occupied modes in ascending order, each repeated by its occupation.
    pub fn occupied_modes(&self) -> Vec<usize> {
        self.occ
            .iter()
            .enumerate()
            .flat_map(|(m, &n)| std::iter::repeat_n(m, n as usize))
            .collect()
    }

    /// Particles sitting strictly left of `mode`.
    fn particles_before(&self, mode: usize) -> usize {
        self.occ[..mode].iter().map(|&n| n as usize).sum()
    }

    fn check_mode(&self, mode: usize) -> Result<()> {
        if mode >= self.occ.len() {
            return Err(Error::ModeOutOfRange { mode, modes: self.occ.len() });
        }
        Ok(())
    }

    /// Relabels modes: old mode `m` becomes `perm[m]`. Returns the reordering
    /// sign (always `+1` for bosons) together with the relabeled ket.
    pub fn permute_modes(&self, perm: &[usize]) -> Result<(f64, OccupationState)> {
        check_permutation(perm, self.modes())?;
        let mut occ = vec![0u8; self.modes()];
        for (m, &n) in self.occ.iter().enumerate() {
            occ[perm[m]] = n;
        }
        let sign = if self.stats.is_fermionic() {
            let seq: Vec<usize> = self.occupied_modes().into_iter().map(|m| perm[m]).collect();
            permutation_sign(&seq)
        } else {
            1.0
        };
        Ok((sign, Self { occ, stats: self.stats }))
    }
}

impl fmt::Display for OccupationState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("|")?;
        for (i, n) in self.occ.iter().enumerate() {
            if i > 0 && self.occ.iter().any(|&n| n > 9) {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("⟩")
    }
}

fn check_permutation(perm: &[usize], modes: usize) -> Result<()> {
    if perm.len() != modes {
        return Err(Error::DimensionMismatch { expected: modes, found: perm.len() });
    }
    let mut seen = vec![false; modes];
    for &p in perm {
        if p >= modes || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Config(format!("{perm:?} is not a permutation")));
        }
    }
    Ok(())
}

/// `(-1)^inversions` of a sequence of distinct labels.
pub(crate) fn permutation_sign(seq: &[usize]) -> f64 {
    let inversions = seq
        .iter()
        .enumerate()
        .map(|(i, a)| seq[i + 1..].iter().filter(|&b| b < a).count())
        .sum::<usize>();
    if inversions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// An occupation ket with a complex weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub amp: Complex64,
    pub state: OccupationState,
}

impl Term {
    pub fn new(amp: Complex64, state: OccupationState) -> Self {
        Self { amp, state }
    }

    pub fn unit(state: OccupationState) -> Self {
        Self::new(Complex64::new(1.0, 0.0), state)
    }
}

/// Single creation or annihilation operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ladder {
    Create(usize),
    Annihilate(usize),
}

impl Ladder {
    pub fn adjoint(self) -> Self {
        match self {
            Ladder::Create(m) => Ladder::Annihilate(m),
            Ladder::Annihilate(m) => Ladder::Create(m),
        }
    }
}

/// `c†_mode` acting on a weighted ket; `None` is the zero vector.
pub fn apply_creation(term: &Term, mode: usize) -> Result<Option<Term>> {
    let state = &term.state;
    state.check_mode(mode)?;
    let n = state.occ[mode];
    let factor = match state.stats {
        Statistics::Bosons => ((n as f64) + 1.0).sqrt(),
        Statistics::Fermions => {
            if n == 1 {
                return Ok(None);
            }
            if state.particles_before(mode).is_multiple_of(2) {
                1.0
            } else {
                -1.0
            }
        }
    };
    let mut occ = state.occ.clone();
    occ[mode] += 1;
    Ok(Some(Term::new(
        term.amp * factor,
        OccupationState { occ, stats: state.stats },
    )))
}

/// `c_mode` acting on a weighted ket; `None` is the zero vector.
pub fn apply_annihilation(term: &Term, mode: usize) -> Result<Option<Term>> {
    let state = &term.state;
    state.check_mode(mode)?;
    let n = state.occ[mode];
    if n == 0 {
        return Ok(None);
    }
    let factor = match state.stats {
        Statistics::Bosons => (n as f64).sqrt(),
        Statistics::Fermions => {
            if state.particles_before(mode).is_multiple_of(2) {
                1.0
            } else {
                -1.0
            }
        }
    };
    let mut occ = state.occ.clone();
    occ[mode] -= 1;
    Ok(Some(Term::new(
        term.amp * factor,
        OccupationState { occ, stats: state.stats },
    )))
}

pub fn apply_ladder(term: &Term, op: Ladder) -> Result<Option<Term>> {
    match op {
        Ladder::Create(m) => apply_creation(term, m),
        Ladder::Annihilate(m) => apply_annihilation(term, m),
    }
}

/// Applies an operator product written left to right, so the last entry of
/// `ops` acts first.
pub fn apply_product(term: &Term, ops: &[Ladder]) -> Result<Option<Term>> {
    let mut current = term.clone();
    for &op in ops.iter().rev() {
        match apply_ladder(&current, op)? {
            Some(next) => current = next,
            None => return Ok(None),
        }
    }
    Ok(Some(current))
}

/// All occupation vectors of `particles` identical particles on `modes`
/// modes, ordered lexicographically from the most left-loaded vector.
#[derive(Debug, Clone)]
pub struct FockBasis {
    particles: usize,
    modes: usize,
    stats: Statistics,
    states: Vec<OccupationState>,
    index: HashMap<Vec<u8>, usize>,
}

impl PartialEq for FockBasis {
    fn eq(&self, other: &Self) -> bool {
        self.particles == other.particles && self.modes == other.modes && self.stats == other.stats
    }
}

impl FockBasis {
    pub fn enumerate(particles: usize, modes: usize, stats: Statistics) -> Result<Self> {
        if modes == 0 {
            return Err(Error::Config("a Fock basis needs at least one mode".into()));
        }
        if stats.is_fermionic() && particles > modes {
            return Err(Error::PauliOverflow { particles, modes });
        }
        let mut states = Vec::new();
        let mut occ = vec![0u8; modes];
        fill(&mut occ, 0, particles, stats.max_occupation(particles), &mut states);
        let states: Vec<OccupationState> = states
            .into_iter()
            .map(|occ| OccupationState { occ, stats })
            .collect();
        let index = states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.occ.clone(), i))
            .collect();
        Ok(Self { particles, modes, stats, states, index })
    }

    /// A basis with no states, used for local particle numbers that cannot
    /// be realized (more fermions than modes).
    pub(crate) fn empty(particles: usize, modes: usize, stats: Statistics) -> Self {
        Self { particles, modes, stats, states: Vec::new(), index: HashMap::new() }
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn stats(&self) -> Statistics {
        self.stats
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[OccupationState] {
        &self.states
    }

    pub fn state(&self, i: usize) -> &OccupationState {
        &self.states[i]
    }

    pub fn index_of(&self, state: &OccupationState) -> Option<usize> {
        if state.stats != self.stats {
            return None;
        }
        self.index_of_occupations(&state.occ)
    }

    pub fn index_of_occupations(&self, occ: &[u8]) -> Option<usize> {
        self.index.get(occ).copied()
    }
}

fn fill(occ: &mut [u8], mode: usize, remaining: usize, cap: usize, out: &mut Vec<Vec<u8>>) {
    let last = occ.len() - 1;
    if mode == last {
        if remaining <= cap {
            occ[mode] = remaining as u8;
            out.push(occ.to_vec());
        }
        return;
    }
    for n in (0..=remaining.min(cap)).rev() {
        occ[mode] = n as u8;
        fill(occ, mode + 1, remaining - n, cap, out);
    }
    occ[mode] = 0;
}

/// Enumerates the Fock basis of `particles` particles on `modes` modes.
pub fn enumerate_basis(particles: usize, modes: usize, stats: Statistics) -> Result<FockBasis> {
    FockBasis::enumerate(particles, modes, stats)
}

/// A pure state expanded on a Fock basis.
#[derive(Debug, Clone)]
pub struct ManyBodyState {
    basis: Arc<FockBasis>,
    amp: DVector<Complex64>,
}

impl ManyBodyState {
    pub fn new(basis: Arc<FockBasis>, amp: DVector<Complex64>) -> Result<Self> {
        if amp.len() != basis.len() {
            return Err(Error::DimensionMismatch { expected: basis.len(), found: amp.len() });
        }
        Ok(Self { basis, amp })
    }

    pub fn zeros(basis: Arc<FockBasis>) -> Self {
        let amp = DVector::zeros(basis.len());
        Self { basis, amp }
    }

    pub fn basis_state(basis: Arc<FockBasis>, state: &OccupationState) -> Result<Self> {
        let i = basis.index_of(state).ok_or_else(|| Error::IllegalOccupation {
            occ: state.occ.clone(),
            reason: "not a member of the basis",
        })?;
        let mut out = Self::zeros(basis);
        out.amp[i] = Complex64::new(1.0, 0.0);
        Ok(out)
    }

    /// Builds a state from `(amplitude, ket)` pairs; repeated kets add up.
    pub fn from_terms<I>(basis: Arc<FockBasis>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Complex64, OccupationState)>,
    {
        let mut out = Self::zeros(basis);
        for (a, ket) in terms {
            let i = out.basis.index_of(&ket).ok_or_else(|| Error::IllegalOccupation {
                occ: ket.occ.clone(),
                reason: "not a member of the basis",
            })?;
            out.amp[i] += a;
        }
        Ok(out)
    }

    pub fn basis(&self) -> &Arc<FockBasis> {
        &self.basis
    }

    pub fn amplitudes(&self) -> &DVector<Complex64> {
        &self.amp
    }

    pub fn amplitude(&self, state: &OccupationState) -> Complex64 {
        self.basis
            .index_of(state)
            .map_or(Complex64::new(0.0, 0.0), |i| self.amp[i])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amp.norm_squared()
    }

    pub fn normalized(mut self) -> Self {
        let n = self.amp.norm();
        if n > 0.0 {
            self.amp /= Complex64::new(n, 0.0);
        }
        self
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &ManyBodyState) -> Result<Complex64> {
        if *self.basis != *other.basis {
            return Err(Error::DimensionMismatch {
                expected: self.basis.len(),
                found: other.basis.len(),
            });
        }
        Ok(self.amp.dotc(&other.amp))
    }

    /// Nonzero `(amplitude, ket)` pairs in basis order.
    pub fn terms(&self) -> impl Iterator<Item = Term> + '_ {
        self.basis
            .states()
            .iter()
            .zip(self.amp.iter())
            .filter(|(_, a)| a.norm_sqr() > 0.0)
            .map(|(s, &a)| Term::new(a, s.clone()))
    }

    /// Applies `Σ_s coeffs[s] c†_s`, expanding onto `target` (one more particle).
    pub fn create_combination(
        &self,
        coeffs: &[Complex64],
        target: &Arc<FockBasis>,
    ) -> Result<ManyBodyState> {
        let modes = self.basis.modes();
        if coeffs.len() != modes {
            return Err(Error::DimensionMismatch { expected: modes, found: coeffs.len() });
        }
        if target.modes() != modes
            || target.stats() != self.basis.stats()
            || target.particles() != self.basis.particles() + 1
        {
            return Err(Error::Config("target basis does not hold one more particle".into()));
        }
        let mut out = ManyBodyState::zeros(target.clone());
        for term in self.terms() {
            for (s, &c) in coeffs.iter().enumerate() {
                if c == Complex64::new(0.0, 0.0) {
                    continue;
                }
                if let Some(t) = apply_creation(&term, s)? {
                    let i = target
                        .index_of(&t.state)
                        .expect("creation stays inside the target basis");
                    out.amp[i] += t.amp * c;
                }
            }
        }
        Ok(out)
    }

    /// Applies an operator product (last entry acts first) that conserves
    /// particle number, staying on the same basis.
    pub fn apply_number_conserving(&self, ops: &[Ladder]) -> Result<ManyBodyState> {
        let creators = ops.iter().filter(|o| matches!(o, Ladder::Create(_))).count();
        if 2 * creators != ops.len() {
            return Err(Error::Unsupported("operator does not conserve particle number".into()));
        }
        let mut out = ManyBodyState::zeros(self.basis.clone());
        for term in self.terms() {
            if let Some(t) = apply_product(&term, ops)? {
                let i = self.basis.index_of(&t.state).expect("number conserved");
                out.amp[i] += t.amp;
            }
        }
        Ok(out)
    }

    /// Relabels modes (old `m` → `perm[m]`), including fermionic reordering signs.
    pub fn permute_modes(&self, perm: &[usize]) -> Result<ManyBodyState> {
        let mut out = ManyBodyState::zeros(self.basis.clone());
        for term in self.terms() {
            let (sign, ket) = term.state.permute_modes(perm)?;
            let i = self.basis.index_of(&ket).expect("permutation preserves the basis");
            out.amp[i] += term.amp * sign;
        }
        Ok(out)
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix::from_pure(&self.amp, vec![self.amp.len()])
    }
}

/// `Π_p (Σ_s coeffs[p][s] c†_s)^{n_p} |0⟩ / √(Π_p n_p!)` expanded on `basis`.
///
/// Row `p` of `coeffs` is the mode combination substituted for `c†_p`.
/// Operators are applied right to left, matching the ket ordering.
pub fn build_monomial_state(
    basis: &Arc<FockBasis>,
    coeffs: &DMatrix<Complex64>,
    init: &OccupationState,
) -> Result<ManyBodyState> {
    let modes = basis.modes();
    if init.modes() != modes {
        return Err(Error::DimensionMismatch { expected: modes, found: init.modes() });
    }
    if init.stats() != basis.stats() || init.particles() != basis.particles() {
        return Err(Error::Config(format!(
            "initial state {init} does not belong to the {}-particle {} basis",
            basis.particles(),
            basis.stats()
        )));
    }
    if coeffs.ncols() != modes {
        return Err(Error::DimensionMismatch { expected: modes, found: coeffs.ncols() });
    }
    let stats = basis.stats();
    let mut state =
        ManyBodyState::basis_state(Arc::new(FockBasis::enumerate(0, modes, stats)?), &OccupationState::vacuum(modes, stats))?;
    let mut created = 0;
    let mut norm = 1.0;
    for p in (0..modes).rev() {
        let n = init.occupation(p) as usize;
        if n > 0 && p >= coeffs.nrows() {
            return Err(Error::DimensionMismatch { expected: p + 1, found: coeffs.nrows() });
        }
        let row: Vec<Complex64> = if n > 0 { coeffs.row(p).iter().copied().collect() } else { Vec::new() };
        for k in 0..n {
            created += 1;
            let target = if created == basis.particles() {
                basis.clone()
            } else {
                Arc::new(FockBasis::enumerate(created, modes, stats)?)
            };
            state = state.create_combination(&row, &target)?;
            norm *= (k + 1) as f64;
        }
    }
    state.amp /= Complex64::new(norm.sqrt(), 0.0);
    Ok(state)
}

/// Complex matrix on a (possibly factored) Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: Vec<usize>,
    mat: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn new(dims: Vec<usize>, mat: DMatrix<Complex64>) -> Result<Self> {
        let size: usize = dims.iter().product();
        if mat.nrows() != size || mat.ncols() != size {
            return Err(Error::DimensionMismatch { expected: size, found: mat.nrows() });
        }
        Ok(Self { dims, mat })
    }

    /// `|v⟩⟨v|`; the caller guarantees `v.len() == Π dims`.
    pub fn from_pure(v: &DVector<Complex64>, dims: Vec<usize>) -> Self {
        debug_assert_eq!(v.len(), dims.iter().product::<usize>());
        Self { dims, mat: v * v.adjoint() }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn into_matrix(self) -> DMatrix<Complex64> {
        self.mat
    }

    pub fn trace(&self) -> Complex64 {
        self.mat.trace()
    }

    /// Largest entry of `|ρ − ρ†|`.
    pub fn hermiticity_defect(&self) -> f64 {
        hermiticity_defect(&self.mat)
    }

    /// Checks Hermiticity (1e-12) and positivity (eigenvalues ≥ −1e-10).
    pub fn validate(&self) -> Result<()> {
        let deviation = self.hermiticity_defect();
        if deviation > 1e-12 {
            return Err(Error::NotHermitian { deviation });
        }
        let min = crate::entanglement::hermitian_eigenvalues(&self.mat)?
            .first()
            .copied()
            .unwrap_or(0.0);
        if min < -1e-10 {
            return Err(Error::Unsupported(format!("density matrix has eigenvalue {min:e}")));
        }
        Ok(())
    }

    pub(crate) fn scaled(mut self, s: f64) -> Self {
        self.mat *= Complex64::new(s, 0.0);
        self
    }
}

pub(crate) fn hermiticity_defect(m: &DMatrix<Complex64>) -> f64 {
    let n = m.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}
