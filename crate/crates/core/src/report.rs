use crate::bounds::BoundInput;
use crate::graph::{Graph, Perturbation, PerturbationKind};
use crate::spectral::full_spectrum;
use crate::Error;

/// Exact and bounded indices for one perturbation instance.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub kind: PerturbationKind,
    pub input: BoundInput,
    pub lambda_i: f64,
    pub lambda_f_exact: Option<f64>,
    pub bound: f64,
    /// `λ_I` plus the first-order gap; absent when `λ_I = 0`.
    pub asymptotic_estimate: Option<f64>,
    /// The instance is one of the extremal configurations.
    pub equality_case: bool,
    /// `bound − λ_F`.
    pub slack: Option<f64>,
}

impl BoundReport {
    /// Builds a report from the bound data alone, without an exact `λ_F`.
    pub fn from_input(input: BoundInput, equality_case: bool) -> Result<Self, Error> {
        Ok(Self {
            kind: input.kind(),
            input,
            lambda_i: input.lambda_i(),
            lambda_f_exact: None,
            bound: input.bound()?,
            asymptotic_estimate: input.asymptotic_estimate().ok(),
            equality_case,
            slack: None,
        })
    }

    pub fn with_exact(mut self, lambda_f: f64) -> Self {
        self.lambda_f_exact = Some(lambda_f);
        self.slack = Some(self.bound - lambda_f);
        self
    }
}

/// Computes `λ_I` and `λ_F` with the Jacobi eigensolver and evaluates the
/// matching bound. The final graph must be connected.
pub fn evaluate(graph: &Graph, perturbation: &Perturbation) -> Result<BoundReport, Error> {
    let a_i = perturbation.initial_matrix(graph)?;
    let a_f = perturbation.apply(graph)?;
    if !a_f.is_connected() {
        return Err(Error::DisconnectedFinal);
    }
    let lambda_i = full_spectrum(&a_i)?[0].max(0.0);
    let lambda_f = full_spectrum(&a_f.adjacency())?[0];
    let input = BoundInput::for_perturbation(graph, perturbation, lambda_i)?;
    let equality = perturbation.is_extremal(graph)?;
    Ok(BoundReport::from_input(input, equality)?.with_exact(lambda_f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::SQRT_2;

    #[test]
    fn edge_on_path_is_tight() {
        let r = evaluate(&Graph::path(3), &Perturbation::EdgeAddition { u: 0, v: 2 }).unwrap();
        assert!((r.bound - 2.0).abs() < 1e-12);
        assert!((r.lambda_f_exact.unwrap() - 2.0).abs() < 1e-12);
        assert!(r.equality_case);
        assert!(r.slack.unwrap().abs() < 1e-12);
        assert!((r.lambda_i - SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn pendant_on_path_is_strict() {
        let r = evaluate(&Graph::path(3), &Perturbation::PendantEdge { u: 0 }).unwrap();
        assert!(!r.equality_case);
        assert!((r.bound - 1.656_696_799_630_228_6).abs() < 1e-12);
        assert!((r.lambda_f_exact.unwrap() - 1.618_033_988_749_895).abs() < 1e-12);
        assert!(r.slack.unwrap() > 1e-7);
    }

    #[test]
    fn star_from_empty_host() {
        let host = Graph::empty(4);
        let p = Perturbation::VertexConnection { apex: 0, targets: alloc::vec![1, 2, 3] };
        let r = evaluate(&host, &p).unwrap();
        assert_eq!(r.lambda_i, 0.0);
        assert!(r.equality_case);
        assert!(r.asymptotic_estimate.is_none());
        assert!(r.slack.unwrap().abs() < 1e-12);
    }

    #[test]
    fn disconnected_final_graph() {
        let host = Graph::empty(4);
        let p = Perturbation::VertexConnection { apex: 0, targets: alloc::vec![1] };
        assert_eq!(evaluate(&host, &p), Err(Error::DisconnectedFinal));
    }
}
