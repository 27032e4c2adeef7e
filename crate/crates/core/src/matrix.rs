//! Dense real symmetric matrices.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Dense symmetric matrix stored row-major. Every write goes to both
/// `(i, j)` and `(j, i)`, so symmetry is exact.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![0.0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, 1.0);
        }
        m
    }

    /// Builds a matrix from rows, returning `None` if the rows are ragged
    /// or the entries are not exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Option<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return None;
        }
        for i in 0..dim {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return None;
                }
            }
        }
        Some(Self { dim, data: rows.concat() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.dim + j] = value;
        self.data[j * self.dim + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    /// `self + t * other`.
    pub fn add_scaled(&self, other: &SymMatrix, t: f64) -> SymMatrix {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + t * b).collect();
        SymMatrix { dim: self.dim, data }
    }

    /// Writes `self * x` into `out`.
    pub fn mul_vec_into(&self, x: &[f64], out: &mut [f64]) {
        assert_eq!(x.len(), self.dim);
        assert_eq!(out.len(), self.dim);
        for (i, o) in out.iter_mut().enumerate() {
            *o = dot(self.row(i), x);
        }
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.dim];
        self.mul_vec_into(x, &mut out);
        out
    }

    /// The quadratic form `<self x, x>`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.dim);
        (0..self.dim).map(|i| x[i] * dot(self.row(i), x)).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&v| v >= 0.0)
    }

    /// Connected components of the off-diagonal nonzero pattern.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.dim;
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in 0..n {
                    if w != v && !seen[w] && self.get(v, w) != 0.0 {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connectivity in the sense of irreducibility: any two indices are
    /// linked by a chain of nonzero entries.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn principal_submatrix(&self, indices: &[usize]) -> SymMatrix {
        let k = indices.len();
        let mut m = SymMatrix::zeros(k);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate().skip(a) {
                m.set(a, b, self.get(i, j));
            }
        }
        m
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}
