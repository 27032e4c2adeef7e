//! Sharp upper bounds for the index (spectral radius) of a graph after a
//! local perturbation, together with the continuous-perturbation machinery
//! that produces and certifies them.
//!
//! Three perturbations are covered: joining an isolated vertex to `g`
//! vertices, adding an edge, and attaching a pendant edge. For each, the
//! index `λ(t)` of `A(t) = A_I + tP` satisfies `λ'(t) = <P x(t), x(t)>`
//! with `x(t)` the unit Perron vector; bounding the right-hand side by a
//! function of `t` and `λ` alone gives a differential inequality whose
//! comparison solution at `t = 1` is the bound.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod closed_form;
pub mod graph;
pub mod matrix;
pub mod path;
pub mod report;
pub mod spectral;

use core::fmt;

pub use bounds::{BoundError, BoundInput, CocliqueBound, PendantConvention};
pub use closed_form::{ExtremalInstance, JoinSolution};
pub use graph::{Graph, GraphError, Perturbation, PerturbationKind};
pub use matrix::SymMatrix;
pub use path::{ComparisonReport, InequalityReport, PathSample, PerturbationPath};
pub use report::BoundReport;
pub use spectral::{PerronPair, SpectralError};

/// Errors from the composite operations (reports, paths, constructions).
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    Graph(GraphError),
    Spectral(SpectralError),
    Bound(BoundError),
    /// The final graph is disconnected, so no bound applies.
    DisconnectedFinal,
    InvalidArgument { argument: &'static str, reason: &'static str },
    KindMismatch { expected: PerturbationKind, found: PerturbationKind },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Graph(e) => write!(f, "{e}"),
            Self::Spectral(e) => write!(f, "{e}"),
            Self::Bound(e) => write!(f, "{e}"),
            Self::DisconnectedFinal => f.write_str("the perturbed graph is not connected"),
            Self::InvalidArgument { argument, reason } => write!(f, "{argument}: {reason}"),
            Self::KindMismatch { expected, found } => {
                write!(f, "expected a {expected} perturbation, found {found}")
            }
        }
    }
}

impl core::error::Error for Error {}

impl From<GraphError> for Error {
    fn from(e: GraphError) -> Self {
        Self::Graph(e)
    }
}

impl From<SpectralError> for Error {
    fn from(e: SpectralError) -> Self {
        Self::Spectral(e)
    }
}

impl From<BoundError> for Error {
    fn from(e: BoundError) -> Self {
        match e {
            BoundError::Graph(g) => Self::Graph(g),
            other => Self::Bound(other),
        }
    }
}
