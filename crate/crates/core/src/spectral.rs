//! Eigenvalue computations on dense symmetric matrices.
//!
//! Two independent routes are provided: [`perron`] (shifted power
//! iteration, for the dominant eigenpair of a connected nonnegative matrix)
//! and [`full_spectrum`] (cyclic Jacobi rotations, for the whole spectrum).
//! The second serves as the oracle for the first.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{SymMatrix, dot, norm};

/// Default residual tolerance for [`perron`].
pub const PERRON_TOL: f64 = 1e-11;

/// Diagonal shift applied during power iteration. It keeps `λ1 + c`
/// strictly dominant when `-λ1` is also an eigenvalue (bipartite graphs).
const POWER_SHIFT: f64 = 1.0;

const JACOBI_OFF_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    Empty,
    NegativeEntry,
    Disconnected { components: usize },
    NoConvergence { iterations: usize, residual: f64 },
    ZeroVector,
    NotNormalized { norm: f64 },
    DimensionMismatch { expected: usize, found: usize },
    InvalidTolerance(f64),
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => f.write_str("matrix has dimension 0"),
            Self::NegativeEntry => f.write_str("matrix has a negative entry"),
            Self::Disconnected { components } => {
                write!(f, "matrix is not connected ({components} components)")
            }
            Self::NoConvergence { iterations, residual } => write!(
                f,
                "eigensolver did not converge after {iterations} iterations (residual {residual:e})"
            ),
            Self::ZeroVector => f.write_str("zero vector"),
            Self::NotNormalized { norm } => write!(f, "vector has norm {norm}, expected 1"),
            Self::DimensionMismatch { expected, found } => {
                write!(f, "expected a vector of length {expected}, found {found}")
            }
            Self::InvalidTolerance(tol) => write!(f, "invalid tolerance {tol}"),
        }
    }
}

impl core::error::Error for SpectralError {}

/// Spectral radius with its unit, entrywise nonnegative eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct PerronPair {
    pub lambda: f64,
    pub x: Vec<f64>,
}

impl PerronPair {
    /// `‖A x − λ x‖₂`.
    pub fn residual(&self, a: &SymMatrix) -> f64 {
        let ax = a.mul_vec(&self.x);
        let r: Vec<f64> = ax.iter().zip(&self.x).map(|(p, q)| p - self.lambda * q).collect();
        norm(&r)
    }

    pub fn min_entry(&self) -> f64 {
        self.x.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Perron pair of a connected nonnegative symmetric matrix, starting the
/// iteration from the normalized all-ones vector.
///
/// Iterates until `‖Ax − λx‖₂ ≤ tol · max(1, λ)`.
pub fn perron(a: &SymMatrix, tol: f64) -> Result<PerronPair, SpectralError> {
    perron_from(a, tol, None)
}

/// As [`perron`], optionally warm-started from `start` (used to follow the
/// eigenvector along a continuous family of matrices).
pub fn perron_from(
    a: &SymMatrix,
    tol: f64,
    start: Option<&[f64]>,
) -> Result<PerronPair, SpectralError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectralError::InvalidTolerance(tol));
    }
    let n = a.dim();
    if n == 0 {
        return Err(SpectralError::Empty);
    }
    if !a.is_nonnegative() {
        return Err(SpectralError::NegativeEntry);
    }
    let components = a.components().len();
    if components > 1 {
        return Err(SpectralError::Disconnected { components });
    }
    if n == 1 {
        return Ok(PerronPair { lambda: a.get(0, 0), x: vec![1.0] });
    }

    let mut x = match start {
        Some(s) if s.len() != n => {
            return Err(SpectralError::DimensionMismatch { expected: n, found: s.len() });
        }
        Some(s) => s.iter().map(|v| v.abs()).collect(),
        None => vec![1.0; n],
    };
    let nx = norm(&x);
    if nx == 0.0 {
        return Err(SpectralError::ZeroVector);
    }
    x.iter_mut().for_each(|v| *v /= nx);

    let cap = libm::ceil(200.0 * n as f64 * libm::log(n as f64).max(1.0)) as usize;
    let mut y = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for _ in 0..cap {
        a.mul_vec_into(&x, &mut y);
        let lambda = dot(&x, &y);
        residual = libm::sqrt(
            y.iter().zip(&x).map(|(p, q)| (p - lambda * q) * (p - lambda * q)).sum::<f64>(),
        );
        if residual <= tol * lambda.max(1.0) {
            return Ok(PerronPair { lambda, x });
        }
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += POWER_SHIFT * xi;
        }
        let ny = norm(&y);
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / ny;
        }
    }
    Err(SpectralError::NoConvergence { iterations: cap, residual })
}

/// Dominant eigenpair from the Jacobi decomposition, with the eigenvector
/// sign chosen to make its entries nonnegative.
pub fn perron_by_rotation(a: &SymMatrix) -> Result<PerronPair, SpectralError> {
    if !a.is_nonnegative() {
        return Err(SpectralError::NegativeEntry);
    }
    let eig = symmetric_eigen(a)?;
    let mut x = eig.vectors.into_iter().next().ok_or(SpectralError::Empty)?;
    if x.iter().sum::<f64>() < 0.0 {
        x.iter_mut().for_each(|v| *v = -*v);
    }
    Ok(PerronPair { lambda: eig.values[0], x })
}

/// Largest eigenvalue of a nonnegative symmetric matrix, which equals its
/// spectral radius. Disconnected matrices are split into components and
/// the largest component value is returned.
pub fn spectral_radius(a: &SymMatrix) -> Result<f64, SpectralError> {
    if a.dim() == 0 {
        return Err(SpectralError::Empty);
    }
    if !a.is_nonnegative() {
        return Err(SpectralError::NegativeEntry);
    }
    let mut best = f64::NEG_INFINITY;
    for comp in a.components() {
        let sub = a.principal_submatrix(&comp);
        let value = match perron(&sub, PERRON_TOL) {
            Ok(p) => p.lambda,
            Err(SpectralError::NoConvergence { .. }) => full_spectrum(&sub)?[0],
            Err(e) => return Err(e),
        };
        best = best.max(value);
    }
    Ok(best)
}

/// Perron pair of a possibly disconnected nonnegative matrix: the pair of
/// the dominant component, extended by zeros.
pub fn dominant_component_pair(a: &SymMatrix) -> Result<PerronPair, SpectralError> {
    if a.dim() == 0 {
        return Err(SpectralError::Empty);
    }
    let mut best: Option<PerronPair> = None;
    for comp in a.components() {
        let sub = a.principal_submatrix(&comp);
        let local = match perron(&sub, PERRON_TOL) {
            Ok(p) => p,
            Err(SpectralError::NoConvergence { .. }) => perron_by_rotation(&sub)?,
            Err(e) => return Err(e),
        };
        if best.as_ref().is_none_or(|b| local.lambda > b.lambda) {
            let mut x = vec![0.0; a.dim()];
            for (k, &i) in comp.iter().enumerate() {
                x[i] = local.x[k];
            }
            best = Some(PerronPair { lambda: local.lambda, x });
        }
    }
    best.ok_or(SpectralError::Empty)
}

/// Eigen-decomposition with eigenvalues in nonincreasing order;
/// `vectors[k]` is the unit eigenvector of `values[k]`.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// All eigenvalues, in nonincreasing order.
pub fn full_spectrum(a: &SymMatrix) -> Result<Vec<f64>, SpectralError> {
    jacobi(a, false).map(|e| e.values)
}

pub fn symmetric_eigen(a: &SymMatrix) -> Result<Eigen, SpectralError> {
    jacobi(a, true)
}

fn jacobi(a: &SymMatrix, want_vectors: bool) -> Result<Eigen, SpectralError> {
    let n = a.dim();
    if n == 0 {
        return Err(SpectralError::Empty);
    }
    let mut m: Vec<f64> = (0..n).flat_map(|i| a.row(i).iter().copied()).collect();
    let mut v = Vec::new();
    if want_vectors {
        v = vec![0.0; n * n];
        for i in 0..n {
            v[i * n + i] = 1.0;
        }
    }
    let scale = libm::sqrt(m.iter().map(|x| x * x).sum::<f64>()).max(1.0);
    let threshold = JACOBI_OFF_TOL * scale;
    let off = |m: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[i * n + j] * m[i * n + j];
                }
            }
        }
        libm::sqrt(s)
    };

    let mut sweeps = 0;
    let mut current = off(&m);
    while current >= threshold {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(SpectralError::NoConvergence { iterations: sweeps, residual: current });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = libm::copysign(1.0, theta) / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                if want_vectors {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        current = off(&m);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j * n + j].total_cmp(&m[i * n + i]));
    let values = order.iter().map(|&i| m[i * n + i]).collect();
    let vectors = if want_vectors {
        order.iter().map(|&c| (0..n).map(|k| v[k * n + c]).collect()).collect()
    } else {
        Vec::new()
    };
    Ok(Eigen { values, vectors })
}

/// `<A x, x> / <x, x>`.
pub fn rayleigh_quotient(a: &SymMatrix, x: &[f64]) -> Result<f64, SpectralError> {
    if x.len() != a.dim() {
        return Err(SpectralError::DimensionMismatch { expected: a.dim(), found: x.len() });
    }
    let xx = dot(x, x);
    if xx == 0.0 {
        return Err(SpectralError::ZeroVector);
    }
    Ok(a.quadratic_form(x) / xx)
}

/// Derivative of the spectral radius along `A(t) = A_I + t P`, evaluated
/// from the unit Perron vector `x` of `A(t)`: `λ'(t) = <P x, x>`.
pub fn lambda_derivative(p: &SymMatrix, x: &[f64]) -> Result<f64, SpectralError> {
    if x.len() != p.dim() {
        return Err(SpectralError::DimensionMismatch { expected: p.dim(), found: x.len() });
    }
    let nx = norm(x);
    if (nx - 1.0).abs() > 1e-9 {
        return Err(SpectralError::NotNormalized { norm: nx });
    }
    Ok(p.quadratic_form(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Graph, Perturbation};
    use core::f64::consts::SQRT_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn perron_small_graphs() {
        let k2 = perron(&Graph::complete(2).adjacency(), PERRON_TOL).unwrap();
        assert!(close(k2.lambda, 1.0, 1e-12));
        assert!(k2.x.iter().all(|&v| close(v, 1.0 / SQRT_2, 1e-11)));

        let c4 = perron(&Graph::cycle(4).adjacency(), PERRON_TOL).unwrap();
        assert!(close(c4.lambda, 2.0, 1e-12));
        assert!(c4.x.iter().all(|&v| close(v, 0.5, 1e-11)));

        // λ(λ² − 2) = 0
        let p3 = perron(&Graph::path(3).adjacency(), PERRON_TOL).unwrap();
        assert!(close(p3.lambda, SQRT_2, 1e-12));
        assert!(p3.residual(&Graph::path(3).adjacency()) <= PERRON_TOL);
        assert!(p3.min_entry() > 0.0);
    }

    #[test]
    fn perron_rejects_bad_input() {
        let a = Graph::empty(2).adjacency();
        assert_eq!(perron(&a, PERRON_TOL), Err(SpectralError::Disconnected { components: 2 }));
        let mut neg = Graph::complete(2).adjacency();
        neg.set(0, 1, -1.0);
        assert_eq!(perron(&neg, PERRON_TOL), Err(SpectralError::NegativeEntry));
        assert_eq!(
            perron(&Graph::complete(2).adjacency(), 0.0),
            Err(SpectralError::InvalidTolerance(0.0))
        );
        assert_eq!(perron(&SymMatrix::zeros(0), 1e-9), Err(SpectralError::Empty));
    }

    #[test]
    fn jacobi_spectra() {
        let k2 = full_spectrum(&Graph::complete(2).adjacency()).unwrap();
        assert!(close(k2[0], 1.0, 1e-12) && close(k2[1], -1.0, 1e-12));
        // 4-cycle: eigenvalues 2cos(2πk/4)
        let c4 = full_spectrum(&Graph::cycle(4).adjacency()).unwrap();
        for (got, want) in c4.iter().zip([2.0, 0.0, 0.0, -2.0]) {
            assert!(close(*got, want, 1e-10), "{c4:?}");
        }
        assert_eq!(full_spectrum(&SymMatrix::zeros(3)).unwrap(), vec![0.0; 3]);
    }

    #[test]
    fn jacobi_vectors_are_eigenvectors() {
        let a = Graph::path(5).adjacency();
        let eig = symmetric_eigen(&a).unwrap();
        for (val, vec) in eig.values.iter().zip(&eig.vectors) {
            let pair = PerronPair { lambda: *val, x: vec.clone() };
            assert!(pair.residual(&a) < 1e-10);
            assert!(close(norm(vec), 1.0, 1e-12));
        }
        let via_rotation = perron_by_rotation(&a).unwrap();
        assert!(via_rotation.min_entry() > 0.0);
        assert!(close(via_rotation.lambda, 3f64.sqrt(), 1e-12));
    }

    #[test]
    fn spectral_radius_of_disconnected() {
        let g = Graph::empty(1).disjoint_union(&Graph::cycle(4));
        assert!(close(spectral_radius(&g.adjacency()).unwrap(), 2.0, 1e-12));
        assert_eq!(spectral_radius(&Graph::empty(3).adjacency()).unwrap(), 0.0);
        let pair = dominant_component_pair(&g.adjacency()).unwrap();
        assert_eq!(pair.x[0], 0.0);
        assert!(close(pair.lambda, 2.0, 1e-12));
    }

    #[test]
    fn rayleigh() {
        let c4 = Graph::cycle(4).adjacency();
        assert!(close(rayleigh_quotient(&c4, &[1.0; 4]).unwrap(), 2.0, 1e-15));
        let p3 = Graph::path(3).adjacency();
        let v = [1.0, -SQRT_2, 1.0];
        assert!(close(rayleigh_quotient(&p3, &v).unwrap(), -SQRT_2, 1e-14));
        assert_eq!(rayleigh_quotient(&SymMatrix::zeros(2), &[3.0, 1.0]).unwrap(), 0.0);
        assert_eq!(rayleigh_quotient(&c4, &[0.0; 4]), Err(SpectralError::ZeroVector));
    }

    #[test]
    fn derivative_identity_basics() {
        assert_eq!(lambda_derivative(&SymMatrix::zeros(2), &[0.6, 0.8]).unwrap(), 0.0);
        let p = Perturbation::EdgeAddition { u: 0, v: 1 }.matrix(&Graph::empty(2)).unwrap();
        let x = [1.0 / SQRT_2, 1.0 / SQRT_2];
        assert!(close(lambda_derivative(&p, &x).unwrap(), 1.0, 1e-15));
        assert!(matches!(
            lambda_derivative(&p, &[1.0, 1.0]),
            Err(SpectralError::NotNormalized { .. })
        ));
    }

    #[test]
    fn derivative_matches_finite_difference_on_chord() {
        let c4 = Graph::cycle(4);
        let pert = Perturbation::EdgeAddition { u: 0, v: 2 };
        let a0 = pert.initial_matrix(&c4).unwrap();
        let p = pert.matrix(&c4).unwrap();
        let lam = |t: f64| perron(&a0.add_scaled(&p, t), PERRON_TOL).unwrap();
        let h = 1e-5;
        let fd = (lam(0.5 + h).lambda - lam(0.5 - h).lambda) / (2.0 * h);
        let exact = lambda_derivative(&p, &lam(0.5).x).unwrap();
        assert!(close(fd, exact, 1e-6), "fd {fd} vs {exact}");
    }
}
