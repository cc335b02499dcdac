use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fock::{hermiticity_defect, DensityMatrix};

/// Inputs further than this from Hermitian are rejected.
pub const HERMITICITY_TOLERANCE: f64 = 1e-10;

/// Negativities within this distance of zero are reported as exactly zero.
pub const NEGATIVITY_FLOOR: f64 = 1e-12;

/// All eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(mat: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    if mat.nrows() != mat.ncols() {
        return Err(Error::DimensionMismatch { expected: mat.nrows(), found: mat.ncols() });
    }
    let deviation = hermiticity_defect(mat);
    if deviation > HERMITICITY_TOLERANCE {
        return Err(Error::NotHermitian { deviation });
    }
    let sym = (mat + mat.adjoint()) * Complex64::new(0.5, 0.0);
    let mut ev: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    Ok(ev)
}

/// Transposes the indices of subsystem `party`, leaving the others alone.
pub fn partial_transpose(rho: &DensityMatrix, party: usize) -> Result<DMatrix<Complex64>> {
    let dims = rho.dims();
    if party >= dims.len() {
        return Err(Error::DimensionMismatch { expected: dims.len(), found: party + 1 });
    }
    let mat = rho.matrix();
    let n = mat.nrows();
    // stride of the chosen subsystem in the row-major multi-index
    let stride: usize = dims[party + 1..].iter().product();
    let d = dims[party];
    let digit = |i: usize| (i / stride) % d;
    let mut out = DMatrix::zeros(n, n);
    for i in 0..n {
        let di = digit(i);
        for j in 0..n {
            let dj = digit(j);
            let ii = i - di * stride + dj * stride;
            let jj = j - dj * stride + di * stride;
            out[(ii, jj)] = mat[(i, j)];
        }
    }
    Ok(out)
}

/// `Σ|γ_i(ρ^{T_I})| − 1`, snapped to zero inside [`NEGATIVITY_FLOOR`].
pub fn bipartite_negativity(rho: &DensityMatrix, party: usize) -> Result<f64> {
    let trace = rho.trace();
    if (trace.re - 1.0).abs() > 1e-10 || trace.im.abs() > 1e-10 {
        return Err(Error::NotNormalized { trace: trace.re });
    }
    let pt = partial_transpose(rho, party)?;
    let sum: f64 = hermitian_eigenvalues(&pt)?.iter().map(|g| g.abs()).sum();
    let n = sum - 1.0;
    Ok(if n <= NEGATIVITY_FLOOR { 0.0 } else { n })
}

/// The three one-versus-rest negativities `(A−BC, B−AC, C−AB)`.
pub fn cut_negativities(rho: &DensityMatrix) -> Result<[f64; 3]> {
    if rho.dims().len() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: rho.dims().len() });
    }
    Ok([
        bipartite_negativity(rho, 0)?,
        bipartite_negativity(rho, 1)?,
        bipartite_negativity(rho, 2)?,
    ])
}

pub fn geometric_mean(negs: [f64; 3]) -> f64 {
    if negs.contains(&0.0) {
        0.0
    } else {
        (negs[0] * negs[1] * negs[2]).cbrt()
    }
}

/// Geometric mean of the three bipartite negativities.
pub fn tripartite_negativity(rho: &DensityMatrix) -> Result<f64> {
    Ok(geometric_mean(cut_negativities(rho)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DVector;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn pure(v: &[f64], dims: Vec<usize>) -> DensityMatrix {
        let v = DVector::from_iterator(v.len(), v.iter().map(|&x| c(x))).normalize();
        DensityMatrix::from_pure(&v, dims)
    }

    #[test]
    fn small_spectra() {
        let m = DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(1.0), c(0.0)]);
        let ev = hermitian_eigenvalues(&m).unwrap();
        assert!((ev[0] + 1.0).abs() < 1e-14 && (ev[1] - 1.0).abs() < 1e-14);
        let d = DMatrix::from_diagonal(&DVector::from_vec(vec![c(0.7), c(0.1), c(0.2)]));
        let ev = hermitian_eigenvalues(&d).unwrap();
        for (a, b) in ev.iter().zip([0.1, 0.2, 0.7]) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = DMatrix::from_row_slice(2, 2, &[c(0.0), c(1.0), c(0.0), c(0.0)]);
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn partial_transpose_is_involution() {
        let v = DVector::from_fn(8, |i, _| Complex64::new(i as f64 + 1.0, 0.5 * i as f64)).normalize();
        let rho = DensityMatrix::from_pure(&v, vec![2, 2, 2]);
        for party in 0..3 {
            let once = DensityMatrix::new(vec![2, 2, 2], partial_transpose(&rho, party).unwrap()).unwrap();
            assert_eq!(partial_transpose(&once, party).unwrap(), *rho.matrix());
        }
        assert!(partial_transpose(&rho, 3).is_err());
    }

    #[test]
    fn bell_pair_negativity() {
        let rho = pure(&[1.0, 0.0, 0.0, 1.0], vec![2, 2]);
        assert!((bipartite_negativity(&rho, 0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_is_ppt() {
        let rho = pure(&[0.3, 0.4, 0.6, 0.8], vec![2, 2]);
        assert_eq!(bipartite_negativity(&rho, 0).unwrap(), 0.0);
        let unnormalized = DensityMatrix::new(vec![2], DMatrix::identity(2, 2)).unwrap();
        assert!(matches!(bipartite_negativity(&unnormalized, 0), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn bell_times_pure_is_biseparable() {
        let mut v = vec![0.0; 8];
        v[0] = 1.0; // |000⟩
        v[6] = 1.0; // |110⟩
        let rho = pure(&v, vec![2, 2, 2]);
        assert_eq!(tripartite_negativity(&rho).unwrap(), 0.0);
        let pt = partial_transpose(&rho, 0).unwrap();
        let min = hermitian_eigenvalues(&pt).unwrap()[0];
        assert!((min + 0.5).abs() < 1e-12);
    }
}
