//! Continuous perturbation `A(t) = A_I + tP`, `t ∈ [0, 1]`.
//!
//! [`sample_path`] follows the Perron pair along a uniform grid and records
//! both sides of `λ'(t) = <P x(t), x(t)>`. The sampled path is then checked
//! against the differential inequality `λ' ≤ f(t, λ)` of its perturbation
//! kind ([`rate_bound`]) and against the solution `u(t)` of the Cauchy
//! problem `u' = f(t, u)`, `u(0) = λ_I` ([`comparison_solution`]), which
//! must dominate `λ(t)`.

use alloc::vec::Vec;

use crate::bounds::{BoundInput, k_fn};
use crate::graph::{Graph, Perturbation, PerturbationKind};
use crate::matrix::SymMatrix;
use crate::spectral::{
    PERRON_TOL, PerronPair, SpectralError, dominant_component_pair, lambda_derivative,
    perron_from, perron_by_rotation,
};
use crate::Error;

/// Largest central-difference step.
pub const DERIVATIVE_STEP: f64 = 1e-5;

/// Fixed RK4 step for the pendant comparison problem.
const RK4_STEP: f64 = 1e-4;

/// Tolerance of [`ComparisonReport::dominated`].
pub const DOMINANCE_TOL: f64 = 1e-9;

/// Tolerance of [`ComparisonReport::tight`].
pub const TIGHT_TOL: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq)]
pub struct PathSample {
    pub t: f64,
    pub lambda: f64,
    pub x: Vec<f64>,
    /// Central difference of `λ` at `t`; absent at `t = 0`.
    pub derivative_lhs: Option<f64>,
    /// `<P x, x>`; absent at `t = 0`.
    pub derivative_rhs: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationPath {
    pub input: BoundInput,
    /// The instance is an extremal configuration of its bound.
    pub extremal: bool,
    pub step: f64,
    pub samples: Vec<PathSample>,
}

impl PerturbationPath {
    pub fn kind(&self) -> PerturbationKind {
        self.input.kind()
    }

    pub fn lambda_i(&self) -> f64 {
        self.samples[0].lambda
    }

    pub fn lambda_f(&self) -> f64 {
        self.samples.last().expect("a path has at least three samples").lambda
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.samples.windows(2).all(|w| w[1].lambda > w[0].lambda)
    }

    /// Largest `|derivative_lhs − derivative_rhs|` over the samples.
    pub fn max_derivative_mismatch(&self) -> f64 {
        self.samples
            .iter()
            .filter_map(|s| Some((s.derivative_lhs? - s.derivative_rhs?).abs()))
            .fold(0.0, f64::max)
    }
}

fn solve(a: &SymMatrix, warm: Option<&[f64]>) -> Result<PerronPair, SpectralError> {
    match perron_from(a, PERRON_TOL, warm) {
        Err(SpectralError::NoConvergence { .. }) => perron_by_rotation(a),
        other => other,
    }
}

/// Samples the Perron pair of `A(t)` at `t = k/steps`, `k = 0..=steps`,
/// warm-starting each solve from the previous eigenvector. At every `t > 0`
/// both sides of the derivative identity are recorded, the left one by
/// central differences with step `min(1e-5, 1/(4·steps))`.
///
/// When `A(0)` is disconnected, `λ(0)` is the largest component index and
/// `x(0)` the dominant component's vector padded with zeros.
pub fn sample_path(
    graph: &Graph,
    perturbation: &Perturbation,
    steps: usize,
) -> Result<PerturbationPath, Error> {
    if steps < 2 {
        return Err(Error::InvalidArgument { argument: "steps", reason: "must be at least 2" });
    }
    let a_i = perturbation.initial_matrix(graph)?;
    let p = perturbation.matrix(graph)?;
    let a_f = a_i.add_scaled(&p, 1.0);
    if !a_f.is_connected() {
        return Err(Error::DisconnectedFinal);
    }
    let start = if a_i.is_connected() { solve(&a_i, None)? } else { dominant_component_pair(&a_i)? };
    let input = BoundInput::for_perturbation(graph, perturbation, start.lambda)?;
    let extremal = perturbation.is_extremal(graph)?;

    let h = DERIVATIVE_STEP.min(1.0 / (4.0 * steps as f64));
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push(PathSample {
        t: 0.0,
        lambda: start.lambda,
        x: start.x,
        derivative_lhs: None,
        derivative_rhs: None,
    });
    let mut warm: Option<Vec<f64>> = None;
    for k in 1..=steps {
        let t = k as f64 / steps as f64;
        let pair = solve(&a_i.add_scaled(&p, t), warm.as_deref())?;
        let plus = solve(&a_i.add_scaled(&p, t + h), Some(&pair.x))?;
        let minus = solve(&a_i.add_scaled(&p, t - h), Some(&pair.x))?;
        let lhs = (plus.lambda - minus.lambda) / (2.0 * h);
        let rhs = lambda_derivative(&p, &pair.x)?;
        warm = Some(pair.x.clone());
        samples.push(PathSample {
            t,
            lambda: pair.lambda,
            x: pair.x,
            derivative_lhs: Some(lhs),
            derivative_rhs: Some(rhs),
        });
    }
    Ok(PerturbationPath { input, extremal, step: h, samples })
}

/// Right-hand side `f(t, λ)` of the differential inequality `λ' ≤ f`:
///
/// * vertex connection: `2gtλ / (λ² + gt²)`;
/// * edge addition: `(δu+δv) / ((λ−t)² + δu + δv)`;
/// * pendant edge: `2λtδu / ((λ²−t²)² + δu(λ² + t²))`.
pub fn rate_bound(law: &BoundInput, t: f64, lambda: f64) -> f64 {
    match *law {
        BoundInput::VertexConnection { g, .. } => {
            let g = g as f64;
            2.0 * g * t * lambda / (lambda * lambda + g * t * t)
        }
        BoundInput::EdgeAddition { delta_u, delta_v, .. } => {
            let d = (delta_u + delta_v) as f64;
            d / ((lambda - t) * (lambda - t) + d)
        }
        BoundInput::PendantEdge { delta_u, .. } => {
            let d = delta_u as f64;
            let diff = lambda * lambda - t * t;
            2.0 * lambda * t * d / (diff * diff + d * (lambda * lambda + t * t))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    /// `max (<P x, x> − f(t, λ))` over samples with `t > 0`.
    pub max_violation: f64,
    /// `min (f(t, λ) − <P x, x>)`; the negative of `max_violation`.
    pub min_slack: f64,
    /// `max |<P x, x> − f(t, λ)|`.
    pub max_abs_gap: f64,
    pub samples: usize,
}

impl InequalityReport {
    pub fn holds(&self, tol: f64) -> bool {
        self.max_violation <= tol
    }
}

/// Checks `λ' ≤ f(t, λ)` along a sampled path, using the law `law` (whose
/// `λ_I` is ignored).
pub fn check_differential_inequality(
    path: &PerturbationPath,
    law: &BoundInput,
) -> Result<InequalityReport, Error> {
    if law.kind() != path.kind() {
        return Err(Error::KindMismatch { expected: path.kind(), found: law.kind() });
    }
    let mut report = InequalityReport {
        max_violation: f64::NEG_INFINITY,
        min_slack: f64::INFINITY,
        max_abs_gap: 0.0,
        samples: 0,
    };
    for s in &path.samples {
        let Some(rhs) = s.derivative_rhs else { continue };
        let gap = rhs - rate_bound(law, s.t, s.lambda);
        report.max_violation = report.max_violation.max(gap);
        report.min_slack = report.min_slack.min(-gap);
        report.max_abs_gap = report.max_abs_gap.max(gap.abs());
        report.samples += 1;
    }
    Ok(report)
}

/// Classical fourth-order Runge–Kutta with `steps` equal steps.
pub fn rk4<F>(f: F, t0: f64, y0: f64, t1: f64, steps: usize) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    let h = (t1 - t0) / steps as f64;
    let mut y = y0;
    for k in 0..steps {
        let t = t0 + k as f64 * h;
        let k1 = f(t, y);
        let k2 = f(t + h / 2.0, y + h / 2.0 * k1);
        let k3 = f(t + h / 2.0, y + h / 2.0 * k2);
        let k4 = f(t + h, y + h * k3);
        y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    y
}

/// Solution at `t` of `u' = f(t, u)`, `u(0) = λ_I`, for the law's kind:
///
/// * vertex connection: the positive root of `u² − λ_I u − gt² = 0`;
/// * edge addition: the larger root of `u² − (t + C)u + tC − d = 0`,
///   `C = K(λ_I)`, `d = δu + δv`;
/// * pendant edge: RK4 with step `1e-4`.
pub fn comparison_solution(law: &BoundInput, t: f64) -> Result<f64, Error> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::InvalidArgument { argument: "t", reason: "must be nonnegative" });
    }
    let lambda_i = law.lambda_i();
    let domain_ok = match law {
        BoundInput::VertexConnection { g, .. } => *g > 0 && lambda_i >= 0.0,
        _ => lambda_i > 0.0,
    };
    if !domain_ok || !lambda_i.is_finite() {
        return Err(Error::InvalidArgument {
            argument: "lambda_I",
            reason: "outside the domain of the comparison problem",
        });
    }
    if t == 0.0 {
        return Ok(lambda_i);
    }
    Ok(match *law {
        BoundInput::VertexConnection { g, .. } => {
            let c = g as f64 * t * t;
            let disc = libm::sqrt(lambda_i * lambda_i + 4.0 * c);
            (lambda_i + disc) / 2.0
        }
        BoundInput::EdgeAddition { delta_u, delta_v, .. } => {
            let d = (delta_u + delta_v) as f64;
            let c = k_fn(lambda_i, d)?;
            if d == 0.0 {
                c
            } else {
                let s = t + c;
                let disc = libm::sqrt((c - t) * (c - t) + 4.0 * d);
                if s >= 0.0 { (s + disc) / 2.0 } else { 2.0 * (t * c - d) / (s - disc) }
            }
        }
        BoundInput::PendantEdge { .. } => {
            let steps = libm::ceil(t / RK4_STEP).max(1.0) as usize;
            rk4(|s, y| rate_bound(law, s, y), 0.0, lambda_i, t, steps)
        }
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    /// `(t, u(t), u(t) − λ(t))` per sample.
    pub profile: Vec<(f64, f64, f64)>,
    /// `λ(t) ≤ u(t) + 1e-9` at every sample.
    pub dominated: bool,
    /// `λ(t) < u(t)` at every sample with `t > 0`.
    pub strict: bool,
    /// `|λ(t) − u(t)| ≤ 1e-7` at every sample.
    pub tight: bool,
    /// `max (λ(t) − u(t))`.
    pub max_violation: f64,
}

impl ComparisonReport {
    /// Dominance plus the expected shape: tight on extremal instances,
    /// strict elsewhere.
    pub fn consistent(&self, extremal: bool) -> bool {
        self.dominated && if extremal { self.tight } else { self.strict }
    }
}

/// Compares the sampled `λ(t)` with the comparison solution started at the
/// path's own `λ(0)`.
pub fn check_comparison(path: &PerturbationPath) -> Result<ComparisonReport, Error> {
    let law = path.input.with_lambda_i(path.lambda_i());
    let mut profile = Vec::with_capacity(path.samples.len());
    let mut max_violation = f64::NEG_INFINITY;
    let (mut dominated, mut strict, mut tight) = (true, true, true);
    for s in &path.samples {
        let u = comparison_solution(&law, s.t)?;
        let margin = u - s.lambda;
        max_violation = max_violation.max(-margin);
        dominated &= margin >= -DOMINANCE_TOL;
        if s.t > 0.0 {
            strict &= margin > 0.0;
        }
        tight &= margin.abs() <= TIGHT_TOL;
        profile.push((s.t, u, margin));
    }
    Ok(ComparisonReport { profile, dominated, strict, tight, max_violation })
}
