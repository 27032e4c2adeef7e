use indexbound_core::closed_form::extremal_instance;
use indexbound_core::path::{check_comparison, sample_path};
use indexbound_core::report::evaluate;
use indexbound_core::{Graph, Perturbation, PerturbationKind};
use serde::Serialize;

use crate::edgelist::{parse_edge_list, write_edge_list};
use crate::error::CliError;
use crate::output::{BoundJson, PathRow, path_rows, sig12};
use crate::perturbation::{format_perturbation, parse_perturbation};

/// Tolerance for construction outputs against the eigensolver.
pub const CONSTRUCT_TOL: f64 = 1e-9;

pub fn load_graph(text: &str) -> Result<Graph, CliError> {
    parse_edge_list(text).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn load_perturbation(text: &str) -> Result<Perturbation, CliError> {
    parse_perturbation(text).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn bound(graph: &Graph, perturbation: &Perturbation) -> Result<BoundJson, CliError> {
    Ok(BoundJson::from(&evaluate(graph, perturbation)?))
}

pub fn path(graph: &Graph, perturbation: &Perturbation, steps: usize) -> Result<Vec<PathRow>, CliError> {
    if steps < 2 {
        return Err(CliError::Usage(format!("--steps must be at least 2, got {steps}")));
    }
    let sampled = sample_path(graph, perturbation, steps)?;
    let comparison = check_comparison(&sampled)?;
    Ok(path_rows(&sampled, &comparison))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Construction {
    #[serde(serialize_with = "crate::output::kind_name")]
    pub kind: PerturbationKind,
    pub n: usize,
    pub delta: usize,
    pub perturbation: String,
    pub graph: String,
    #[serde(rename = "lambda_I")]
    pub lambda_i: f64,
    #[serde(rename = "lambda_F")]
    pub lambda_f: f64,
    pub bound: f64,
    #[serde(rename = "lambda_I_oracle")]
    pub lambda_i_oracle: f64,
    #[serde(rename = "lambda_F_oracle")]
    pub lambda_f_oracle: f64,
    pub equality_case: bool,
    pub slack: f64,
}

pub fn parse_kind(text: &str) -> Result<PerturbationKind, CliError> {
    PerturbationKind::ALL
        .into_iter()
        .find(|k| k.name().eq_ignore_ascii_case(text))
        .ok_or_else(|| CliError::Usage(format!("unknown kind `{text}` (expected vertex, edge or pendant)")))
}

/// The extremal configuration of `kind` over the `delta`-regular circulant on
/// `n` vertices, with closed-form values checked against the eigensolver.
pub fn construct(kind: PerturbationKind, n: usize, delta: usize) -> Result<Construction, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    if delta >= n || (n * delta) % 2 == 1 {
        return Err(CliError::Structural(format!(
            "no {delta}-regular graph on {n} vertices (need delta < n and n*delta even)"
        )));
    }
    let inst = extremal_instance(kind, n, delta)?;
    let report = evaluate(&inst.graph, &inst.perturbation)?;
    let lambda_f_oracle = report.lambda_f_exact.unwrap();
    let disagreement = [
        (inst.lambda_i - report.lambda_i).abs(),
        (inst.lambda_f - lambda_f_oracle).abs(),
        (inst.bound - lambda_f_oracle).abs(),
        (inst.bound - report.bound).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    if disagreement > CONSTRUCT_TOL || !report.equality_case {
        return Err(CliError::Invariant(format!(
            "closed form and eigensolver disagree by {disagreement:e} (equality flag {})",
            report.equality_case
        )));
    }
    Ok(Construction {
        kind,
        n,
        delta,
        perturbation: format_perturbation(&inst.perturbation),
        graph: write_edge_list(&inst.graph),
        lambda_i: sig12(inst.lambda_i),
        lambda_f: sig12(inst.lambda_f),
        bound: sig12(inst.bound),
        lambda_i_oracle: sig12(report.lambda_i),
        lambda_f_oracle: sig12(lambda_f_oracle),
        equality_case: report.equality_case,
        slack: sig12(inst.bound - lambda_f_oracle),
    })
}
