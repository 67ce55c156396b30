//! Small dense linear-algebra helpers shared by the modules.

use nalgebra::{DMatrix, DVector, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

pub type CMat = DMatrix<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn max_diff(a: &CMat, b: &CMat) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Eigen-decomposition of a Hermitian matrix with eigenvalues ascending.
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let n = m.nrows();
    if n == 0 {
        return (vec![], CMat::zeros(0, 0));
    }
    let h = (m + m.adjoint()) * c(0.5);
    let eig = SymmetricEigen::new(h);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let vals = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vecs = CMat::from_fn(n, n, |r, k| eig.eigenvectors[(r, order[k])]);
    (vals, vecs)
}

/// Orthonormal basis of the kernel of `a`, from the Hermitian eigenproblem of `a†a`.
pub fn nullspace(a: &CMat, tol: f64) -> Vec<DVector<Complex64>> {
    let (vals, vecs) = hermitian_eigen(&(a.adjoint() * a));
    vals.iter()
        .enumerate()
        .filter(|(_, &v)| v < tol)
        .map(|(k, _)| fix_phase(vecs.column(k).into_owned()))
        .collect()
}

/// Rotates a vector so its first non-negligible entry is real positive.
pub fn fix_phase(mut v: DVector<Complex64>) -> DVector<Complex64> {
    let scale = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if let Some(p) = v.iter().find(|z| z.norm() > 1e-6 * scale).copied() {
        let ph = p.conj() / p.norm();
        v *= ph;
    }
    v
}

/// Complex Gaussian sample `(x + iy)/√2`.
pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMat {
    CMat::from_fn(rows, cols, |_, _| gaussian(rng))
}
