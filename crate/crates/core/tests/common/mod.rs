//! Independent reference computations shared by the integration tests.
//!
//! Nothing here calls into the code paths it is used to check.
#![allow(dead_code)]

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Cyclic Jacobi rotations on a real symmetric matrix. Returns eigenvalues
/// (unsorted) and the matrix whose columns are eigenvectors.
pub fn jacobi_symmetric(a: &DMatrix<f64>) -> (Vec<f64>, DMatrix<f64>) {
    let n = a.nrows();
    let mut a = a.clone();
    let mut v = DMatrix::<f64>::identity(n, n);
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[(p, q)].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * a[(p, q)]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let cs = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * cs;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = cs * akp - sn * akq;
                    a[(k, q)] = sn * akp + cs * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = cs * apk - sn * aqk;
                    a[(q, k)] = sn * apk + cs * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = cs * vkp - sn * vkq;
                    v[(k, q)] = sn * vkp + cs * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| a[(i, i)]).collect(), v)
}

/// Eigenvalues of a Hermitian matrix via Jacobi on its real embedding
/// `[[Re, −Im], [Im, Re]]`, whose spectrum is the original one doubled.
pub fn brute_eigenvalues(m: &DMatrix<Complex64>) -> Vec<f64> {
    let n = m.nrows();
    let big = DMatrix::from_fn(2 * n, 2 * n, |i, j| {
        let z = m[(i % n, j % n)];
        match (i < n, j < n) {
            (true, true) | (false, false) => z.re,
            (true, false) => -z.im,
            (false, true) => z.im,
        }
    });
    let (mut ev, _) = jacobi_symmetric(&big);
    ev.sort_by(f64::total_cmp);
    ev.into_iter().step_by(2).collect()
}

/// `Σ|eig(ρ^{T_party})| − 1` with the transpose done by explicit index
/// decoding on three subsystems.
pub fn brute_negativity(rho: &DMatrix<Complex64>, dims: [usize; 3], party: usize) -> f64 {
    let n = rho.nrows();
    let decode = |i: usize| [i / (dims[1] * dims[2]), (i / dims[2]) % dims[1], i % dims[2]];
    let encode = |d: [usize; 3]| (d[0] * dims[1] + d[1]) * dims[2] + d[2];
    let pt = DMatrix::from_fn(n, n, |i, j| {
        let (mut a, mut b) = (decode(i), decode(j));
        std::mem::swap(&mut a[party], &mut b[party]);
        rho[(encode(a), encode(b))]
    });
    brute_eigenvalues(&pt).iter().map(|x| x.abs()).sum::<f64>() - 1.0
}

pub fn pure_density(v: &[Complex64]) -> DMatrix<Complex64> {
    let v = DVector::from_column_slice(v);
    let n = v.norm();
    let v = v / c(n);
    &v * v.adjoint()
}

pub fn ghz() -> Vec<Complex64> {
    let mut v = vec![c(0.0); 8];
    v[0] = c(1.0);
    v[7] = c(1.0);
    v
}

pub fn w_state() -> Vec<Complex64> {
    let mut v = vec![c(0.0); 8];
    v[1] = c(1.0);
    v[2] = c(1.0);
    v[4] = c(1.0);
    v
}

/// Parity of a sequence of distinct labels from its cycle decomposition.
pub fn parity_by_cycles(seq: &[usize]) -> f64 {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    let perm: Vec<usize> = seq.iter().map(|x| sorted.binary_search(x).unwrap()).collect();
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    if transpositions % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

pub fn random_complex(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
        .collect()
}

pub fn kron(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

/// `exp(−i h τ)` for real symmetric `h` via Jacobi.
pub fn expm_i(h: &DMatrix<f64>, tau: f64) -> DMatrix<Complex64> {
    let (ev, v) = jacobi_symmetric(h);
    let n = h.nrows();
    DMatrix::from_fn(n, n, |r, s| {
        (0..n)
            .map(|k| Complex64::from_polar(1.0, -ev[k] * tau) * (v[(r, k)] * v[(s, k)]))
            .sum()
    })
}

/// Tight-binding hopping matrix (units of T) with on-site `g`.
pub fn chain(l: usize, g: f64) -> DMatrix<f64> {
    DMatrix::from_fn(l, l, |i, j| {
        if i == j {
            g
        } else if i.abs_diff(j) == 1 {
            1.0
        } else {
            0.0
        }
    })
}

/// First-quantized (1,1,1)-sector amplitudes for one particle launched
/// from each of `sources`: the amplitude for particles at `(a, b, c)` is
/// the determinant (fermions) or permanent (bosons) of `U[x][p]`.
pub fn first_quantized_sector(
    u: &DMatrix<Complex64>,
    sources: [usize; 3],
    parties: [[usize; 2]; 3],
    fermions: bool,
) -> Vec<Complex64> {
    let perms: [([usize; 3], f64); 6] = [
        ([0, 1, 2], 1.0),
        ([1, 2, 0], 1.0),
        ([2, 0, 1], 1.0),
        ([0, 2, 1], -1.0),
        ([2, 1, 0], -1.0),
        ([1, 0, 2], -1.0),
    ];
    let mut out = Vec::with_capacity(8);
    for &a in &parties[0] {
        for &b in &parties[1] {
            for &cc in &parties[2] {
                let sites = [a, b, cc];
                let mut acc = c(0.0);
                for (p, sgn) in perms {
                    let mut prod = c(if fermions { sgn } else { 1.0 });
                    for i in 0..3 {
                        prod *= u[(sites[i], sources[p[i]])];
                    }
                    acc += prod;
                }
                out.push(acc);
            }
        }
    }
    out
}

/// Tripartite negativity of a pure 2⊗2⊗2 vector via the brute-force route.
pub fn brute_tpn(v: &[Complex64]) -> (f64, f64) {
    let p: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    if p < 1e-14 {
        return (p, 0.0);
    }
    let rho = pure_density(v);
    let negs: Vec<f64> = (0..3).map(|k| brute_negativity(&rho, [2, 2, 2], k).max(0.0)).collect();
    let tpn = if negs.iter().any(|&n| n < 1e-12) { 0.0 } else { (negs[0] * negs[1] * negs[2]).cbrt() };
    (p, tpn)
}

/// `Σ_{ijk} |⟨λ_i⊗λ_j⊗λ_k⟩|²` for trace-2 generators from the identity
/// `Σ_a λ_a ⊗ λ_a = 2(SWAP − 1/d)`, i.e. a signed sum of subsystem purities.
pub fn correlation_sum_from_purities(d: usize, psi: &[Complex64]) -> f64 {
    let mut total = 0.0;
    for mask in 0u8..8 {
        let kept: Vec<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
        let purity = subsystem_purity(d, psi, &kept);
        let k = kept.len() as i32;
        total += (-1.0 / d as f64).powi(3 - k) * purity;
    }
    8.0 * total
}

fn subsystem_purity(d: usize, psi: &[Complex64], kept: &[usize]) -> f64 {
    if kept.is_empty() {
        return psi.iter().map(|z| z.norm_sqr()).sum::<f64>().powi(2);
    }
    let traced: Vec<usize> = (0..3).filter(|i| !kept.contains(i)).collect();
    let dk = d.pow(kept.len() as u32);
    let dt = d.pow(traced.len() as u32);
    let index = |k: usize, t: usize| {
        let mut digits = [0usize; 3];
        let mut kk = k;
        for &i in kept.iter().rev() {
            digits[i] = kk % d;
            kk /= d;
        }
        let mut tt = t;
        for &i in traced.iter().rev() {
            digits[i] = tt % d;
            tt /= d;
        }
        (digits[0] * d + digits[1]) * d + digits[2]
    };
    let red = DMatrix::from_fn(dk, dk, |a, b| {
        (0..dt).map(|t| psi[index(a, t)] * psi[index(b, t)].conj()).sum::<Complex64>()
    });
    (&red * &red).trace().re
}
