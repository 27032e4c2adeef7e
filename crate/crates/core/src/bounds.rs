//! Upper bounds for the index of a graph after a local perturbation.
//!
//! Each bound is written as `F⁻¹(G(λ_I))` for a pair of increasing
//! bijections built from degree data only:
//!
//! * connecting an isolated vertex to `g` vertices: `H(ξ) = ξ − g/ξ`,
//!   bound `H⁻¹(λ_I)`;
//! * adding an edge between vertices of degrees `δu`, `δv`:
//!   `K(ξ) = ξ − (δu+δv)/ξ`, bound `1 + K⁻¹(K(λ_I) − 1)`;
//! * attaching a pendant edge at a vertex of degree `δu`:
//!   `L1(ξ) = ξ − δu/ξ`, `L2(ξ) = ξ − δu/(ξ − 1/ξ)`, bound `L2⁻¹(L1(λ_I))`.
//!
//! Besides the bounds themselves the module provides their increments
//! `bound − λ_I` in a cancellation-free form, the first-order asymptotic
//! gaps, and the iterated bound for turning a coclique into a clique.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, GraphError, Perturbation, PerturbationKind};

#[derive(Debug, Clone, PartialEq)]
pub enum BoundError {
    /// An argument lies outside the domain of the function it feeds.
    OutOfDomain { argument: &'static str, value: f64 },
    /// A vertex connection must reach at least one vertex.
    NoTargets,
    /// The pendant cubic has no root in `(1, ∞)` for this right-hand side.
    NoAdmissibleRoot { y: f64, delta_u: f64 },
    /// The coclique formula needs at least two vertices.
    CocliqueTooSmall { m: usize },
    Graph(GraphError),
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OutOfDomain { argument, value } => {
                write!(f, "{argument} = {value} is outside the admissible domain")
            }
            Self::NoTargets => f.write_str("vertex connection needs g >= 1"),
            Self::NoAdmissibleRoot { y, delta_u } => write!(
                f,
                "no root above 1 of nu^3 - {y} nu^2 - ({delta_u} + 1) nu + {y} = 0"
            ),
            Self::CocliqueTooSmall { m } => write!(f, "coclique of size {m}, need at least 2"),
            Self::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BoundError {}

impl From<GraphError> for BoundError {
    fn from(e: GraphError) -> Self {
        Self::Graph(e)
    }
}

fn positive(argument: &'static str, value: f64) -> Result<f64, BoundError> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(BoundError::OutOfDomain { argument, value })
    }
}

fn nonnegative(argument: &'static str, value: f64) -> Result<f64, BoundError> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(BoundError::OutOfDomain { argument, value })
    }
}

/// Positive root of `ξ² − yξ − c = 0` for `c > 0`, without cancellation.
fn positive_quadratic_root(y: f64, c: f64) -> f64 {
    let disc = libm::sqrt(y * y + 4.0 * c);
    if y >= 0.0 { (y + disc) / 2.0 } else { 2.0 * c / (disc - y) }
}

/// `H(ξ) = ξ − g/ξ` on `(0, ∞)`.
pub fn h_fn(xi: f64, g: f64) -> Result<f64, BoundError> {
    positive("xi", xi)?;
    Ok(xi - g / xi)
}

/// Inverse of [`h_fn`]: the positive root of `ξ² − yξ − g = 0`.
pub fn h_inv(y: f64, g: f64) -> Result<f64, BoundError> {
    positive("g", g)?;
    Ok(positive_quadratic_root(y, g))
}

/// `K(ξ) = ξ − d/ξ` on `(0, ∞)` with `d = δu + δv`.
pub fn k_fn(xi: f64, d: f64) -> Result<f64, BoundError> {
    positive("xi", xi)?;
    nonnegative("d", d)?;
    Ok(xi - d / xi)
}

/// Inverse of [`k_fn`]: the positive root of `ξ² − yξ − d = 0`.
pub fn k_inv(y: f64, d: f64) -> Result<f64, BoundError> {
    nonnegative("d", d)?;
    if d == 0.0 {
        // K is the identity on (0, ∞)
        return positive("y", y);
    }
    Ok(positive_quadratic_root(y, d))
}

/// `L1(ξ) = ξ − δu/ξ` on `(0, ∞)`.
pub fn l1(xi: f64, delta_u: f64) -> Result<f64, BoundError> {
    positive("xi", xi)?;
    nonnegative("delta_u", delta_u)?;
    Ok(xi - delta_u / xi)
}

/// `L2(ξ) = ξ − δu/(ξ − 1/ξ)` on `(1, ∞)`.
pub fn l2(xi: f64, delta_u: f64) -> Result<f64, BoundError> {
    if !(xi > 1.0 && xi.is_finite()) {
        return Err(BoundError::OutOfDomain { argument: "xi", value: xi });
    }
    nonnegative("delta_u", delta_u)?;
    Ok(xi - delta_u * xi / (xi * xi - 1.0))
}

fn pendant_cubic(nu: f64, y: f64, delta_u: f64) -> (f64, f64) {
    let value = ((nu - y) * nu - (delta_u + 1.0)) * nu + y;
    let slope = (3.0 * nu - 2.0 * y) * nu - (delta_u + 1.0);
    (value, slope)
}

/// Inverse of [`l2`]: the unique root in `(1, ∞)` of
/// `ν³ − yν² − (δu+1)ν + y = 0`.
///
/// `L2` increases from `−∞` to `∞` on `(1, ∞)`, so the root exists and is
/// unique whenever `δu > 0`. It satisfies `ν ≥ √(δu+1)` exactly when
/// `y ≥ 0`, which holds for `y = L1(λ_I)` whenever `λ_I ≥ √δu`, i.e. for
/// every graph having a vertex of degree `δu`.
pub fn l2_inv(y: f64, delta_u: f64) -> Result<f64, BoundError> {
    nonnegative("delta_u", delta_u)?;
    if !y.is_finite() {
        return Err(BoundError::OutOfDomain { argument: "y", value: y });
    }
    if delta_u == 0.0 {
        // L2 is the identity on (1, ∞)
        return if y > 1.0 { Ok(y) } else { Err(BoundError::NoAdmissibleRoot { y, delta_u }) };
    }
    // p(1) = −δu < 0 and p(|y| + δu + 2) > 0.
    let mut lo = 1.0;
    let mut hi = y.abs() + delta_u + 2.0;
    let mut nu = hi;
    for _ in 0..200 {
        let (value, slope) = pendant_cubic(nu, y, delta_u);
        if value == 0.0 {
            return Ok(nu);
        }
        if value < 0.0 {
            lo = nu;
        } else {
            hi = nu;
        }
        let mut next = nu - value / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - nu).abs();
        nu = next;
        if step <= 4.0 * f64::EPSILON * nu || hi - lo <= 4.0 * f64::EPSILON * nu {
            break;
        }
    }
    if nu > 1.0 { Ok(nu) } else { Err(BoundError::NoAdmissibleRoot { y, delta_u }) }
}

/// Upper bound for the index after joining an isolated vertex to `g`
/// vertices of a graph with index `lambda_i` (`0` allowed: empty host).
pub fn bound_vertex_connection(lambda_i: f64, g: usize) -> Result<f64, BoundError> {
    if g == 0 {
        return Err(BoundError::NoTargets);
    }
    nonnegative("lambda_I", lambda_i)?;
    h_inv(lambda_i, g as f64)
}

/// Upper bound for the index after adding an edge between nonadjacent
/// vertices of degrees `delta_u`, `delta_v`.
pub fn bound_edge_addition(lambda_i: f64, delta_u: usize, delta_v: usize) -> Result<f64, BoundError> {
    positive("lambda_I", lambda_i)?;
    let d = (delta_u + delta_v) as f64;
    Ok(1.0 + k_inv(k_fn(lambda_i, d)? - 1.0, d)?)
}

/// Upper bound for the index after attaching a pendant edge to a vertex of
/// degree `delta_u`.
pub fn bound_pendant_edge(lambda_i: f64, delta_u: usize) -> Result<f64, BoundError> {
    bound_pendant_edge_with(lambda_i, delta_u, PendantConvention::AsProved)
}

/// Which form of `L1`, `L2` to use for the pendant bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PendantConvention {
    /// `L1(ξ) = ξ − δu/ξ`, `L2(ξ) = ξ − δu/(ξ − 1/ξ)`.
    AsProved,
    /// The variant carrying an extra factor `g` in front of `δu` in both
    /// functions, kept for comparison only.
    WithFactor { g: f64 },
}

pub fn bound_pendant_edge_with(
    lambda_i: f64,
    delta_u: usize,
    convention: PendantConvention,
) -> Result<f64, BoundError> {
    positive("lambda_I", lambda_i)?;
    let weight = match convention {
        PendantConvention::AsProved => delta_u as f64,
        PendantConvention::WithFactor { g } => nonnegative("g", g)? * delta_u as f64,
    };
    l2_inv(l1(lambda_i, weight)?, weight)
}

/// Degree data for one of the three bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundInput {
    VertexConnection { lambda_i: f64, g: usize },
    EdgeAddition { lambda_i: f64, delta_u: usize, delta_v: usize },
    PendantEdge { lambda_i: f64, delta_u: usize },
}

impl BoundInput {
    /// Reads `g` or the relevant degrees from the initial graph.
    pub fn for_perturbation(
        graph: &Graph,
        perturbation: &Perturbation,
        lambda_i: f64,
    ) -> Result<Self, BoundError> {
        perturbation.validate(graph)?;
        Ok(match perturbation {
            Perturbation::VertexConnection { targets, .. } => {
                Self::VertexConnection { lambda_i, g: targets.len() }
            }
            Perturbation::EdgeAddition { u, v } => Self::EdgeAddition {
                lambda_i,
                delta_u: graph.degree(*u)?,
                delta_v: graph.degree(*v)?,
            },
            Perturbation::PendantEdge { u } => {
                Self::PendantEdge { lambda_i, delta_u: graph.degree(*u)? }
            }
        })
    }

    pub fn kind(&self) -> PerturbationKind {
        match self {
            Self::VertexConnection { .. } => PerturbationKind::VertexConnection,
            Self::EdgeAddition { .. } => PerturbationKind::EdgeAddition,
            Self::PendantEdge { .. } => PerturbationKind::PendantEdge,
        }
    }

    pub fn lambda_i(&self) -> f64 {
        match *self {
            Self::VertexConnection { lambda_i, .. }
            | Self::EdgeAddition { lambda_i, .. }
            | Self::PendantEdge { lambda_i, .. } => lambda_i,
        }
    }

    pub fn with_lambda_i(self, value: f64) -> Self {
        match self {
            Self::VertexConnection { g, .. } => Self::VertexConnection { lambda_i: value, g },
            Self::EdgeAddition { delta_u, delta_v, .. } => {
                Self::EdgeAddition { lambda_i: value, delta_u, delta_v }
            }
            Self::PendantEdge { delta_u, .. } => Self::PendantEdge { lambda_i: value, delta_u },
        }
    }

    pub fn bound(&self) -> Result<f64, BoundError> {
        match *self {
            Self::VertexConnection { lambda_i, g } => bound_vertex_connection(lambda_i, g),
            Self::EdgeAddition { lambda_i, delta_u, delta_v } => {
                bound_edge_addition(lambda_i, delta_u, delta_v)
            }
            Self::PendantEdge { lambda_i, delta_u } => bound_pendant_edge(lambda_i, delta_u),
        }
    }

    /// `bound − λ_I`, evaluated without subtracting nearly equal numbers.
    ///
    /// * vertex: `2g / (λ + √(λ² + 4g))`;
    /// * edge: the positive root `ε` of `λε² + (λ(λ−1) + d)ε − d = 0`;
    /// * pendant: `δu / (λ(ν² − 1) + δuν)` with `ν` the bound.
    pub fn increment(&self) -> Result<f64, BoundError> {
        match *self {
            Self::VertexConnection { lambda_i, g } => {
                if g == 0 {
                    return Err(BoundError::NoTargets);
                }
                nonnegative("lambda_I", lambda_i)?;
                let g = g as f64;
                Ok(2.0 * g / (lambda_i + libm::sqrt(lambda_i * lambda_i + 4.0 * g)))
            }
            Self::EdgeAddition { lambda_i, delta_u, delta_v } => {
                positive("lambda_I", lambda_i)?;
                let d = (delta_u + delta_v) as f64;
                if d == 0.0 {
                    // K is the identity and the bound collapses to λ_I.
                    return Ok(0.0);
                }
                let b = lambda_i * (lambda_i - 1.0) + d;
                let disc = libm::sqrt(b * b + 4.0 * lambda_i * d);
                Ok(if b >= 0.0 { 2.0 * d / (b + disc) } else { (disc - b) / (2.0 * lambda_i) })
            }
            Self::PendantEdge { lambda_i, delta_u } => {
                let nu = bound_pendant_edge(lambda_i, delta_u)?;
                let d = delta_u as f64;
                Ok(d / (lambda_i * (nu * nu - 1.0) + d * nu))
            }
        }
    }

    /// First-order size of the increment for large `λ_I`:
    /// `g/λ`, `(δu+δv)/λ²` or `δu/λ³`.
    pub fn asymptotic_gap(&self) -> Result<f64, BoundError> {
        let lambda = positive("lambda_I", self.lambda_i())?;
        Ok(match *self {
            Self::VertexConnection { g, .. } => g as f64 / lambda,
            Self::EdgeAddition { delta_u, delta_v, .. } => {
                (delta_u + delta_v) as f64 / (lambda * lambda)
            }
            Self::PendantEdge { delta_u, .. } => delta_u as f64 / (lambda * lambda * lambda),
        })
    }

    /// `λ_I` plus [`asymptotic_gap`](Self::asymptotic_gap).
    pub fn asymptotic_estimate(&self) -> Result<f64, BoundError> {
        Ok(self.lambda_i() + self.asymptotic_gap()?)
    }
}

/// Bounds for joining every pair of an `m`-vertex coclique.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CocliqueBound {
    /// `λ_I + (m−1) Σδi / λ_I²`.
    pub asymptotic: f64,
    /// [`bound_edge_addition`] applied once per pair in lexicographic
    /// order, each result feeding the next step, with both endpoint degrees
    /// raised by one after every added edge.
    pub iterated: f64,
}

pub fn coclique_bound(lambda_i: f64, degrees: &[usize]) -> Result<CocliqueBound, BoundError> {
    let m = degrees.len();
    if m < 2 {
        return Err(BoundError::CocliqueTooSmall { m });
    }
    positive("lambda_I", lambda_i)?;
    let total: usize = degrees.iter().sum();
    let asymptotic = lambda_i + (m - 1) as f64 * total as f64 / (lambda_i * lambda_i);

    let mut current: Vec<usize> = degrees.to_vec();
    let mut lambda = lambda_i;
    for i in 0..m {
        for j in i + 1..m {
            lambda = bound_edge_addition(lambda, current[i], current[j])?;
            current[i] += 1;
            current[j] += 1;
        }
    }
    Ok(CocliqueBound { asymptotic, iterated: lambda })
}
