//! Geometric mode-entanglement measure `ε_G = ||τ|| − ||τ||_sep`.
//!
//! Each mode is mapped to a qubit holding its occupation, so a party of `m`
//! modes carries a `2^m`-level space. `τ` is the tensor of expectation values
//! of generator triples `λ_i ⊗ λ_j ⊗ λ_k`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::Partition;
use crate::error::{Error, Result};
use crate::fock::ManyBodyState;

/// Generalized Gell-Mann matrices of `SU(d)`, normalized to `Tr(λ_a λ_b) = 2δ_ab`.
///
/// Order: for each pair `j < k` the symmetric then antisymmetric matrix,
/// followed by the `d − 1` diagonal ones. For `d = 2` these are `σ_x, σ_y, σ_z`.
pub fn gell_mann(d: usize) -> Vec<DMatrix<Complex64>> {
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(d * d - 1);
    for j in 0..d {
        for k in j + 1..d {
            let mut s = DMatrix::from_element(d, d, zero);
            s[(j, k)] = Complex64::new(1.0, 0.0);
            s[(k, j)] = Complex64::new(1.0, 0.0);
            out.push(s);
            let mut a = DMatrix::from_element(d, d, zero);
            a[(j, k)] = Complex64::new(0.0, -1.0);
            a[(k, j)] = Complex64::new(0.0, 1.0);
            out.push(a);
        }
    }
    for l in 1..d {
        let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
        let mut m = DMatrix::from_element(d, d, zero);
        for j in 0..l {
            m[(j, j)] = Complex64::new(norm, 0.0);
        }
        m[(l, l)] = Complex64::new(-(l as f64) * norm, 0.0);
        out.push(m);
    }
    out
}

type Sparse = Vec<(usize, usize, Complex64)>;

fn sparse(m: &DMatrix<Complex64>) -> Sparse {
    let mut out = Vec::new();
    for i in 0..m.nrows() {
        for j in 0..m.ncols() {
            if m[(i, j)] != Complex64::new(0.0, 0.0) {
                out.push((i, j, m[(i, j)]));
            }
        }
    }
    out
}

/// Normalization of `||τ||` for parties of `m` modes: `(weight, separable norm)`.
///
/// The weight folds in the generator scale. For `m = 2` the generators enter
/// with `Tr(λ_a λ_b) = 4δ_ab` on top of the prefactor 8, which is what makes
/// every product state reach exactly `||τ|| = 6√6`.
fn normalization(m: usize) -> Result<(f64, f64)> {
    match m {
        1 => Ok((1.0, 1.0)),
        2 => Ok((8.0 * 8.0, 6.0 * 6f64.sqrt())),
        _ => Err(Error::Unsupported(format!(
            "geometric measure needs parties of 1 or 2 modes, got {m}"
        ))),
    }
}

/// Maps `state` onto the `d ⊗ d ⊗ d` mode-qubit space of `part`.
///
/// The first mode of a party is the most significant bit of its local index.
pub fn mode_qubit_amplitudes(state: &ManyBodyState, part: &Partition) -> Result<(usize, Vec<Complex64>)> {
    let m = part.party(0).len();
    if part.parties().iter().any(|p| p.len() != m) {
        return Err(Error::Unsupported("geometric measure needs equally sized parties".into()));
    }
    if part.modes() != state.basis().modes() {
        return Err(Error::InvalidPartition("partition does not cover the state's modes".into()));
    }
    let d = 1usize << m;
    let mut psi = vec![Complex64::new(0.0, 0.0); d * d * d];
    for term in state.terms() {
        let mut idx = 0;
        for party in part.parties() {
            let mut local = 0;
            for &mode in party {
                let n = term.state.occupation(mode);
                if n > 1 {
                    return Err(Error::Unsupported(format!(
                        "mode occupation {n} has no qubit image"
                    )));
                }
                local = 2 * local + n as usize;
            }
            idx = idx * d + local;
        }
        psi[idx] += term.amp;
    }
    Ok((d, psi))
}

/// `Σ_{ijk} |⟨λ_i ⊗ λ_j ⊗ λ_k⟩|²` for unit-trace-2 Gell-Mann generators.
pub fn correlation_sum(d: usize, psi: &[Complex64]) -> f64 {
    let gens: Vec<Sparse> = gell_mann(d).iter().map(sparse).collect();
    let dd = d * d;
    let zero = Complex64::new(0.0, 0.0);

    // φ_k = (1 ⊗ 1 ⊗ λ_k) ψ
    let apply_c = |g: &Sparse, v: &[Complex64]| {
        let mut out = vec![zero; v.len()];
        for ab in 0..dd {
            for &(r, s, x) in g {
                out[ab * d + r] += x * v[ab * d + s];
            }
        }
        out
    };
    // (1 ⊗ λ_j ⊗ 1) v
    let apply_b = |g: &Sparse, v: &[Complex64]| {
        let mut out = vec![zero; v.len()];
        for a in 0..d {
            for &(r, s, x) in g {
                for c in 0..d {
                    out[(a * d + r) * d + c] += x * v[(a * d + s) * d + c];
                }
            }
        }
        out
    };

    let phis: Vec<Vec<Complex64>> = gens.iter().map(|g| apply_c(g, psi)).collect();
    let mut total = 0.0;
    let mut x = vec![zero; d * d];
    for gb in &gens {
        for phi in &phis {
            let chi = apply_b(gb, phi);
            // X[a, a'] = Σ_bc ψ*(a, bc) χ(a', bc)
            for a in 0..d {
                for ap in 0..d {
                    let mut acc = zero;
                    for bc in 0..dd {
                        acc += psi[a * dd + bc].conj() * chi[ap * dd + bc];
                    }
                    x[a * d + ap] = acc;
                }
            }
            for ga in &gens {
                let t: Complex64 = ga.iter().map(|&(r, s, v)| v * x[r * d + s]).sum();
                total += t.norm_sqr();
            }
        }
    }
    total
}

/// `||τ||` for a pure state.
pub fn correlation_norm(state: &ManyBodyState, part: &Partition) -> Result<f64> {
    let (weight, _) = normalization(part.party(0).len())?;
    let (d, psi) = mode_qubit_amplitudes(state, part)?;
    Ok((weight * correlation_sum(d, &psi)).sqrt())
}

/// `ε_G = ||τ|| − ||τ||_sep` for a pure state and parties of 1 or 2 modes.
///
/// Values within `1e-12` of zero are reported as exactly zero.
pub fn geometric_measure(state: &ManyBodyState, part: &Partition) -> Result<f64> {
    let (_, sep) = normalization(part.party(0).len())?;
    let eps = correlation_norm(state, part)? - sep;
    Ok(if eps.abs() <= 1e-12 { 0.0 } else { eps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gell_mann_orthonormality() {
        for d in [2, 3, 4] {
            let g = gell_mann(d);
            assert_eq!(g.len(), d * d - 1);
            for (a, ga) in g.iter().enumerate() {
                assert!(ga.trace().norm() < 1e-14);
                assert_eq!(ga, &ga.adjoint());
                for (b, gb) in g.iter().enumerate() {
                    let t = (ga * gb).trace();
                    let want = if a == b { 2.0 } else { 0.0 };
                    assert!((t - Complex64::new(want, 0.0)).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn pauli_order() {
        let g = gell_mann(2);
        let i = Complex64::i();
        assert_eq!(g[1][(0, 1)], -i);
        assert_eq!(g[2][(1, 1)], Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn product_qubits_have_unit_norm() {
        // |000⟩
        let mut psi = vec![Complex64::new(0.0, 0.0); 8];
        psi[0] = Complex64::new(1.0, 0.0);
        assert!((correlation_sum(2, &psi) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn unsupported_party_size() {
        assert!(normalization(3).is_err());
    }
}
