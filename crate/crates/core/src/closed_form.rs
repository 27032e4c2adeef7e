//! Exact eigenpairs along the perturbation path for the extremal
//! configurations, where the Perron vector is constant on the regular part.
//!
//! Vector layouts follow the graphs built by [`extremal_instance`]:
//!
//! * vertex connection, cone `{u} + G`: `[α, β, …, β]`;
//! * edge addition, double cone `({u} ∪ {v}) + G`: `[α, α, γ, …, γ]`;
//! * pendant edge at the apex of `{u} + G`: `[β, γ, …, γ, α]`, where `α`
//!   sits on the new pendant vertex.

use alloc::vec;
use alloc::vec::Vec;

use crate::bounds::{bound_edge_addition, bound_pendant_edge, bound_vertex_connection};
use crate::graph::{Graph, Perturbation, PerturbationKind};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JoinSolution {
    pub kind: PerturbationKind,
    pub lambda: f64,
    pub alpha: f64,
    pub beta: Option<f64>,
    pub gamma: Option<f64>,
}

impl JoinSolution {
    /// The unit eigenvector of `A(t)`, for a regular part on `n` vertices.
    pub fn eigenvector(&self, n: usize) -> Vec<f64> {
        let beta = self.beta.unwrap_or(0.0);
        let gamma = self.gamma.unwrap_or(0.0);
        match self.kind {
            PerturbationKind::VertexConnection => {
                let mut x = vec![beta; n + 1];
                x[0] = self.alpha;
                x
            }
            PerturbationKind::EdgeAddition => {
                let mut x = vec![gamma; n + 2];
                x[0] = self.alpha;
                x[1] = self.alpha;
                x
            }
            PerturbationKind::PendantEdge => {
                let mut x = vec![gamma; n + 2];
                x[0] = beta;
                x[n + 1] = self.alpha;
                x
            }
        }
    }

    /// Sum of squares of the eigenvector entries (1 when normalized).
    pub fn norm_squared(&self, n: usize) -> f64 {
        self.eigenvector(n).iter().map(|v| v * v).sum()
    }
}

fn check(n: usize, delta: usize, t: f64, allow_zero_t: bool) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::InvalidArgument { argument: "n", reason: "must be at least 1" });
    }
    if delta >= n {
        return Err(Error::InvalidArgument { argument: "delta", reason: "must be below n" });
    }
    let lower_ok = if allow_zero_t { t >= 0.0 } else { t > 0.0 };
    if !(lower_ok && t <= 1.0) {
        return Err(Error::InvalidArgument { argument: "t", reason: "outside the unit interval" });
    }
    Ok(())
}

/// Perron pair of `A(t)` for the cone over a `delta`-regular graph on `n`
/// vertices whose apex edges carry weight `t ∈ (0, 1]`.
pub fn closed_form_vertex_join(n: usize, delta: usize, t: f64) -> Result<JoinSolution, Error> {
    check(n, delta, t, false)?;
    let (nf, d) = (n as f64, delta as f64);
    let lambda = d / 2.0 + libm::sqrt(d * d / 4.0 + nf * t * t);
    let alpha = libm::sqrt((lambda - d) / (2.0 * lambda - d));
    let beta = libm::sqrt(lambda / (nf * (2.0 * lambda - d)));
    Ok(JoinSolution {
        kind: PerturbationKind::VertexConnection,
        lambda,
        alpha,
        beta: Some(beta),
        gamma: None,
    })
}

/// Perron pair of `A(t)` for the double cone over a `delta`-regular graph
/// on `n` vertices with the apex-apex edge weighted `t ∈ [0, 1]`.
pub fn closed_form_edge_join(n: usize, delta: usize, t: f64) -> Result<JoinSolution, Error> {
    check(n, delta, t, true)?;
    let (nf, d) = (n as f64, delta as f64);
    let root = libm::sqrt((d - t) * (d - t) + 8.0 * nf);
    let ratio = (d - t) / root;
    Ok(JoinSolution {
        kind: PerturbationKind::EdgeAddition,
        lambda: 0.5 * (t + d + root),
        alpha: 0.5 * libm::sqrt(1.0 - ratio),
        beta: None,
        gamma: Some(libm::sqrt(1.0 + ratio) / libm::sqrt(2.0 * nf)),
    })
}

/// Largest real root of `λ³ − δλ² − (n+t²)λ + δt²`, by Newton iteration
/// from above (monotone once past the largest inflection point `δ/3`).
fn pendant_cubic_root(n: f64, d: f64, t: f64) -> f64 {
    let b = n + t * t;
    let c = d * t * t;
    let q = |x: f64| ((x - d) * x - b) * x + c;
    let dq = |x: f64| (3.0 * x - 2.0 * d) * x - b;
    let mut x = 1.0 + d.max(b).max(c);
    for _ in 0..200 {
        let next = x - q(x) / dq(x);
        if !(next < x) {
            break;
        }
        x = next;
    }
    x
}

/// Perron pair of `A(t)` for the cone `{u} + G` over a `delta`-regular
/// graph on `n` vertices with a pendant edge of weight `t ∈ (0, 1]` at the
/// apex. The eigenvector direction `((λ−δ)t, (λ−δ)λ, λ)` is normalized by
/// its actual length; see [`pendant_normalizers`].
pub fn closed_form_pendant_join(n: usize, delta: usize, t: f64) -> Result<JoinSolution, Error> {
    check(n, delta, t, false)?;
    let (nf, d) = (n as f64, delta as f64);
    let lambda = pendant_cubic_root(nf, d, t);
    let (norm_sq, _) = pendant_normalizers(n, delta, t, lambda);
    let scale = 1.0 / libm::sqrt(norm_sq);
    Ok(JoinSolution {
        kind: PerturbationKind::PendantEdge,
        lambda,
        alpha: (lambda - d) * t * scale,
        beta: Some((lambda - d) * lambda * scale),
        gamma: Some(lambda * scale),
    })
}

/// Squared length of the unnormalized pendant eigenvector
/// `((λ−δ)t, (λ−δ)λ, λ, …, λ)`, paired with the printed closed-form
/// expression `2(n+t²)λ² − δ(n+t+3t²)λ + 2t²δ²`. The two agree at `t = 1`
/// but not for general `t`.
pub fn pendant_normalizers(n: usize, delta: usize, t: f64, lambda: f64) -> (f64, f64) {
    let (nf, d) = (n as f64, delta as f64);
    let exact = (lambda - d) * (lambda - d) * (t * t + lambda * lambda) + nf * lambda * lambda;
    let printed = 2.0 * (nf + t * t) * lambda * lambda - d * (nf + t + 3.0 * t * t) * lambda
        + 2.0 * t * t * d * d;
    (exact, printed)
}

/// An extremal configuration for one of the bounds, with its closed-form
/// indices.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtremalInstance {
    pub kind: PerturbationKind,
    pub graph: Graph,
    pub perturbation: Perturbation,
    pub lambda_i: f64,
    pub lambda_f: f64,
    pub bound: f64,
}

/// Builds the configuration attaining the bound of `kind` over the
/// `delta`-regular circulant on `n` vertices:
///
/// * vertex: `{u} ∪ G`, `u = 0` joined to all of `G`;
/// * edge: `({u} ∪ {v}) + G`, `u = 0`, `v = 1`;
/// * pendant: `{u} + G`, pendant at `u = 0`.
pub fn extremal_instance(
    kind: PerturbationKind,
    n: usize,
    delta: usize,
) -> Result<ExtremalInstance, Error> {
    let regular = Graph::circulant_regular(n, delta).ok_or(Error::InvalidArgument {
        argument: "delta",
        reason: "no regular graph with this order and degree (need delta < n, n*delta even)",
    })?;
    let d = delta as f64;
    let (graph, perturbation, lambda_i, lambda_f, bound) = match kind {
        PerturbationKind::VertexConnection => {
            let graph = Graph::empty(1).disjoint_union(&regular);
            let perturbation =
                Perturbation::VertexConnection { apex: 0, targets: (1..=n).collect() };
            let lambda_f = closed_form_vertex_join(n, delta, 1.0)?.lambda;
            (graph, perturbation, d, lambda_f, bound_vertex_connection(d, n)?)
        }
        PerturbationKind::EdgeAddition => {
            let graph = Graph::empty(2).join(&regular);
            let lambda_i = closed_form_edge_join(n, delta, 0.0)?.lambda;
            let lambda_f = closed_form_edge_join(n, delta, 1.0)?.lambda;
            let bound = bound_edge_addition(lambda_i, n, n)?;
            (graph, Perturbation::EdgeAddition { u: 0, v: 1 }, lambda_i, lambda_f, bound)
        }
        PerturbationKind::PendantEdge => {
            let graph = Graph::empty(1).join(&regular);
            let lambda_i = closed_form_vertex_join(n, delta, 1.0)?.lambda;
            let lambda_f = closed_form_pendant_join(n, delta, 1.0)?.lambda;
            let bound = bound_pendant_edge(lambda_i, n)?;
            (graph, Perturbation::PendantEdge { u: 0 }, lambda_i, lambda_f, bound)
        }
    };
    Ok(ExtremalInstance { kind, graph, perturbation, lambda_i, lambda_f, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{PERRON_TOL, PerronPair, full_spectrum, perron};
    use core::f64::consts::SQRT_2;

    const SQRT_5: f64 = 2.236_067_977_499_79;

    #[test]
    fn vertex_join_values() {
        let s = closed_form_vertex_join(4, 2, 1.0).unwrap();
        assert!((s.lambda - (1.0 + SQRT_5)).abs() < 1e-14);
        let star = closed_form_vertex_join(3, 0, 1.0).unwrap();
        assert!((star.lambda - 3f64.sqrt()).abs() < 1e-14);
        for (n, d) in [(4, 2), (3, 0), (7, 4)] {
            let s = closed_form_vertex_join(n, d, 0.3).unwrap();
            assert!((s.norm_squared(n) - 1.0).abs() < 1e-12);
        }
        assert!(closed_form_vertex_join(3, 3, 1.0).is_err());
        assert!(closed_form_vertex_join(3, 1, 0.0).is_err());
    }

    #[test]
    fn edge_join_values() {
        let tri = closed_form_edge_join(1, 0, 1.0).unwrap();
        assert!((tri.lambda - 2.0).abs() < 1e-14);
        // K4 minus an edge: eigenvalue (1 + √17)/2
        let k4e = closed_form_edge_join(2, 0, 1.0).unwrap();
        assert!((k4e.lambda - (1.0 + 17f64.sqrt()) / 2.0).abs() < 1e-14);
        let k4_minus = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let oracle = full_spectrum(&k4_minus.adjacency()).unwrap();
        assert!((oracle[0] - k4e.lambda).abs() < 1e-12);
        for t in [0.0, 0.4, 1.0] {
            assert!((closed_form_edge_join(5, 2, t).unwrap().norm_squared(5) - 1.0).abs() < 1e-12);
        }
        assert!(closed_form_edge_join(2, 2, 1.0).is_err());
    }

    #[test]
    fn pendant_join_values() {
        let p3 = closed_form_pendant_join(1, 0, 1.0).unwrap();
        assert!((p3.lambda - SQRT_2).abs() < 1e-14);
        let big = closed_form_pendant_join(4, 2, 1.0).unwrap();
        // largest root of λ³ − 2λ² − 5λ + 2 (companion-matrix oracle)
        assert!((big.lambda - 3.323_404_276_086_479).abs() < 1e-12);
        assert!((big.norm_squared(4) - 1.0).abs() < 1e-12);
        assert!(closed_form_pendant_join(4, 4, 1.0).is_err());
    }

    #[test]
    fn printed_normalizer_only_matches_at_one() {
        let s = closed_form_pendant_join(4, 2, 1.0).unwrap();
        let (exact, printed) = pendant_normalizers(4, 2, 1.0, s.lambda);
        assert!((exact - printed).abs() < 1e-10 * exact);
        let s = closed_form_pendant_join(4, 2, 0.5).unwrap();
        let (exact, printed) = pendant_normalizers(4, 2, 0.5, s.lambda);
        assert!((exact - printed).abs() > 1.0);
    }

    #[test]
    fn closed_forms_are_eigenpairs() {
        for n in 1..=6 {
            for delta in 0..n {
                let Some(g) = Graph::circulant_regular(n, delta) else { continue };
                for t in [0.25, 0.5, 1.0] {
                    let cone = Graph::empty(1).join(&g);
                    let s = closed_form_vertex_join(n, delta, t).unwrap();
                    let mut a = cone.adjacency();
                    for j in 1..=n {
                        a.set(0, j, t);
                    }
                    let pair = PerronPair { lambda: s.lambda, x: s.eigenvector(n) };
                    assert!(pair.residual(&a) < 1e-10, "vertex n={n} d={delta} t={t}");

                    let dc = Graph::empty(2).join(&g);
                    let mut a = dc.adjacency();
                    a.set(0, 1, t);
                    let s = closed_form_edge_join(n, delta, t).unwrap();
                    let pair = PerronPair { lambda: s.lambda, x: s.eigenvector(n) };
                    assert!(pair.residual(&a) < 1e-10, "edge n={n} d={delta} t={t}");

                    let mut a = cone.padded_adjacency(n + 2);
                    a.set(0, n + 1, t);
                    let s = closed_form_pendant_join(n, delta, t).unwrap();
                    let pair = PerronPair { lambda: s.lambda, x: s.eigenvector(n) };
                    assert!(pair.residual(&a) < 1e-10, "pendant n={n} d={delta} t={t}");
                    let p = perron(&a, PERRON_TOL).unwrap();
                    assert!((p.lambda - s.lambda).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn extremal_instances_are_tight() {
        for kind in PerturbationKind::ALL {
            for (n, delta) in [(1, 0), (3, 0), (4, 2), (5, 4), (6, 3)] {
                let inst = extremal_instance(kind, n, delta).unwrap();
                assert!((inst.bound - inst.lambda_f).abs() < 1e-9, "{kind} n={n} d={delta}");
                assert!(inst.perturbation.is_extremal(&inst.graph).unwrap());
            }
            assert!(extremal_instance(kind, 3, 1).is_err());
        }
    }
}
