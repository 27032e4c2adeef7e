//! Randomised and exhaustive verification of the bounds and of the path
//! machinery behind them.

use std::collections::BTreeMap;

use indexbound_core::path::{check_comparison, check_differential_inequality, sample_path};
use indexbound_core::report::evaluate;
use indexbound_core::PerturbationKind;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus::{EXHAUSTIVE_MAX, Instance, exhaustive_instances, random_instance};
use crate::edgelist::write_edge_list;
use crate::perturbation::format_perturbation;

/// `|bound − λ_F|` at or below this counts as attained.
pub const EQUALITY_TOL: f64 = 1e-8;
/// Smallest slack expected from a configuration that is not extremal.
pub const STRICT_TOL: f64 = 1e-7;
/// Tolerance for derivative and differential-inequality checks.
pub const DERIVATIVE_TOL: f64 = 1e-6;
/// Endpoint agreement between the path solver and the rotation solver.
pub const ENDPOINT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: u64,
    pub n_max: usize,
    pub steps: usize,
    /// Validity threshold: `λ_F ≤ bound + tolerance`.
    pub tolerance: f64,
    /// Exhaustive corpus order cap; clamped to [`EXHAUSTIVE_MAX`].
    pub exhaustive_max: usize,
    /// Lower the bound of the first random instance by 1 (harness self-test).
    pub inject_failure: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            trials: 500,
            n_max: 9,
            steps: 32,
            tolerance: 1e-9,
            exhaustive_max: 7,
            inject_failure: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    #[serde(serialize_with = "crate::output::kind_name")]
    pub kind: PerturbationKind,
    pub check: &'static str,
    pub detail: String,
    pub graph: String,
    pub perturbation: String,
    pub order: usize,
}

impl Failure {
    /// Edge list plus perturbation, ready to feed back to `bound` or `path`.
    pub fn reproducer(&self) -> String {
        format!(
            "# {} check failed: {}\n# perturbation: {}\n{}",
            self.check, self.detail, self.perturbation, self.graph
        )
    }
}

/// Everything measured on one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub slack: f64,
    pub extremal: bool,
    pub path: Option<PathOutcome>,
    pub failures: Vec<Failure>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathOutcome {
    pub max_derivative_mismatch: f64,
    pub max_inequality_violation: f64,
    pub min_inequality_slack: f64,
    pub max_inequality_gap: f64,
    pub max_comparison_violation: f64,
}

/// Runs the bound checks, and the path checks when `steps` is given, on
/// one instance. `bias` is subtracted from the bound.
pub fn check_instance(inst: &Instance, tolerance: f64, steps: Option<usize>, bias: f64) -> Outcome {
    let kind = inst.perturbation.kind();
    let mut failures = Vec::new();
    let mut fail = |check: &'static str, detail: String| {
        failures.push(Failure {
            kind,
            check,
            detail,
            graph: write_edge_list(&inst.graph),
            perturbation: format_perturbation(&inst.perturbation),
            order: inst.graph.order(),
        })
    };
    let report = match evaluate(&inst.graph, &inst.perturbation) {
        Ok(r) => r,
        Err(e) => {
            fail("evaluate", e.to_string());
            return Outcome { slack: f64::NAN, extremal: false, path: None, failures };
        }
    };
    let lambda_f = report.lambda_f_exact.unwrap();
    let slack = report.bound - bias - lambda_f;
    if slack < -tolerance {
        fail("validity", format!("lambda_F = {lambda_f} exceeds bound {}", report.bound - bias));
    }
    if report.equality_case && slack.abs() > EQUALITY_TOL {
        fail("equality", format!("extremal configuration with slack {slack:e}"));
    }
    if !report.equality_case && slack < STRICT_TOL {
        fail("strictness", format!("non-extremal configuration with slack {slack:e}"));
    }

    let path = steps.and_then(|steps| {
        let path = match sample_path(&inst.graph, &inst.perturbation, steps) {
            Ok(p) => p,
            Err(e) => {
                fail("path", e.to_string());
                return None;
            }
        };
        if !path.is_strictly_increasing() {
            fail("monotonicity", "lambda(t) is not strictly increasing".into());
        }
        let endpoint = (path.lambda_i() - report.lambda_i)
            .abs()
            .max((path.lambda_f() - lambda_f).abs());
        if endpoint > ENDPOINT_TOL {
            fail("endpoints", format!("path endpoints differ from direct solves by {endpoint:e}"));
        }
        let mismatch = path.max_derivative_mismatch();
        if mismatch > DERIVATIVE_TOL {
            fail("derivative", format!("|<Px,x> - finite difference| reaches {mismatch:e}"));
        }
        let ineq = check_differential_inequality(&path, &path.input).unwrap();
        if !ineq.holds(DERIVATIVE_TOL) {
            fail("inequality", format!("lambda' exceeds its bound by {:e}", ineq.max_violation));
        }
        if path.extremal && ineq.max_abs_gap > DERIVATIVE_TOL {
            fail("inequality-equality", format!("extremal path off by {:e}", ineq.max_abs_gap));
        }
        let comparison = match check_comparison(&path) {
            Ok(c) => c,
            Err(e) => {
                fail("comparison", e.to_string());
                return None;
            }
        };
        if !comparison.consistent(path.extremal) {
            fail(
                "comparison",
                format!(
                    "dominated={} strict={} tight={} max violation {:e}",
                    comparison.dominated,
                    comparison.strict,
                    comparison.tight,
                    comparison.max_violation
                ),
            );
        }
        Some(PathOutcome {
            max_derivative_mismatch: mismatch,
            max_inequality_violation: ineq.max_violation,
            min_inequality_slack: ineq.min_slack,
            max_inequality_gap: ineq.max_abs_gap,
            max_comparison_violation: comparison.max_violation,
        })
    });
    Outcome { slack, extremal: report.equality_case, path, failures }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KindSummary {
    pub exhaustive_instances: usize,
    pub random_instances: usize,
    pub equality_confirmations: usize,
    pub strict_confirmations: usize,
    pub min_bound_slack: f64,
    pub max_bound_slack: f64,
    /// `max (λ_F − bound)`; at most the tolerance when the bound holds.
    pub max_validity_violation: f64,
    pub max_derivative_mismatch: f64,
    pub max_inequality_violation: f64,
    pub max_comparison_violation: f64,
}

impl KindSummary {
    fn new() -> Self {
        Self {
            exhaustive_instances: 0,
            random_instances: 0,
            equality_confirmations: 0,
            strict_confirmations: 0,
            min_bound_slack: f64::INFINITY,
            max_bound_slack: f64::NEG_INFINITY,
            max_validity_violation: f64::NEG_INFINITY,
            max_derivative_mismatch: 0.0,
            max_inequality_violation: f64::NEG_INFINITY,
            max_comparison_violation: f64::NEG_INFINITY,
        }
    }

    fn absorb(&mut self, o: &Outcome) {
        if o.slack.is_nan() {
            return;
        }
        self.min_bound_slack = self.min_bound_slack.min(o.slack);
        self.max_bound_slack = self.max_bound_slack.max(o.slack);
        self.max_validity_violation = self.max_validity_violation.max(-o.slack);
        if o.extremal && o.slack.abs() <= EQUALITY_TOL {
            self.equality_confirmations += 1;
        }
        if !o.extremal && o.slack >= STRICT_TOL {
            self.strict_confirmations += 1;
        }
        if let Some(p) = o.path {
            self.max_derivative_mismatch = self.max_derivative_mismatch.max(p.max_derivative_mismatch);
            self.max_inequality_violation =
                self.max_inequality_violation.max(p.max_inequality_violation);
            self.max_comparison_violation =
                self.max_comparison_violation.max(p.max_comparison_violation);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub trials: u64,
    pub n_max: usize,
    pub exhaustive_max: usize,
    pub steps: usize,
    pub tolerance: f64,
    pub kinds: BTreeMap<String, KindSummary>,
    pub failure_count: usize,
    #[serde(skip)]
    pub failures: Vec<Failure>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// The failing instance of smallest order.
    pub fn smallest_failure(&self) -> Option<&Failure> {
        self.failures.iter().min_by_key(|f| (f.order, f.graph.len()))
    }
}

/// Checks every exhaustive instance (bounds only) and `trials` random
/// instances per kind (bounds and paths). Trials run in parallel; each one
/// draws from its own generator, so the summary does not depend on
/// scheduling.
pub fn run(config: &VerifyConfig) -> VerifySummary {
    let exhaustive_max = config.exhaustive_max.min(EXHAUSTIVE_MAX).min(config.n_max);
    let mut kinds = BTreeMap::new();
    let mut failures = Vec::new();
    for kind in PerturbationKind::ALL {
        let mut summary = KindSummary::new();
        let exhaustive = exhaustive_instances(kind, exhaustive_max);
        let outcomes: Vec<Outcome> = exhaustive
            .par_iter()
            .map(|inst| check_instance(inst, config.tolerance, None, 0.0))
            .collect();
        summary.exhaustive_instances = outcomes.len();
        for o in &outcomes {
            summary.absorb(o);
            failures.extend(o.failures.iter().cloned());
        }
        let outcomes: Vec<Outcome> = (0..config.trials)
            .into_par_iter()
            .map(|trial| {
                let inst = random_instance(config.seed, kind, trial, config.n_max);
                let bias = if config.inject_failure && trial == 0 && kind == PerturbationKind::ALL[0] {
                    1.0
                } else {
                    0.0
                };
                check_instance(&inst, config.tolerance, Some(config.steps), bias)
            })
            .collect();
        summary.random_instances = outcomes.len();
        for o in &outcomes {
            summary.absorb(o);
            failures.extend(o.failures.iter().cloned());
        }
        kinds.insert(kind.name().to_string(), summary);
    }
    VerifySummary {
        seed: config.seed,
        trials: config.trials,
        n_max: config.n_max,
        exhaustive_max,
        steps: config.steps,
        tolerance: config.tolerance,
        kinds,
        failure_count: failures.len(),
        failures,
    }
}
