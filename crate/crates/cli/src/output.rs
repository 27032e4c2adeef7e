//! JSON and TSV renderings of reports and paths.

use indexbound_core::path::ComparisonReport;
use indexbound_core::{BoundReport, PerturbationKind, PerturbationPath};
use serde::{Deserialize, Serialize, Serializer};

/// Serializes a kind as `vertex`, `edge` or `pendant`.
pub fn kind_name<S: Serializer>(kind: &PerturbationKind, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(kind.name())
}

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap()
}

/// A number at 12 significant digits, for TSV cells.
pub fn cell(x: Option<f64>) -> String {
    match x {
        Some(v) => format!("{}", sig12(v)),
        None => "NA".to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundJson {
    #[serde(rename = "lambda_I")]
    pub lambda_i: f64,
    #[serde(rename = "lambda_F_exact")]
    pub lambda_f_exact: Option<f64>,
    pub bound: f64,
    pub asymptotic_estimate: Option<f64>,
    pub equality_case: bool,
    pub slack: Option<f64>,
}

impl From<&BoundReport> for BoundJson {
    fn from(r: &BoundReport) -> Self {
        Self {
            lambda_i: sig12(r.lambda_i),
            lambda_f_exact: r.lambda_f_exact.map(sig12),
            bound: sig12(r.bound),
            asymptotic_estimate: r.asymptotic_estimate.map(sig12),
            equality_case: r.equality_case,
            slack: r.slack.map(sig12),
        }
    }
}

pub fn bound_tsv(r: &BoundJson) -> String {
    format!(
        "lambda_I\t{}\nlambda_F_exact\t{}\nbound\t{}\nasymptotic_estimate\t{}\nequality_case\t{}\nslack\t{}\n",
        cell(Some(r.lambda_i)),
        cell(r.lambda_f_exact),
        cell(Some(r.bound)),
        cell(r.asymptotic_estimate),
        r.equality_case,
        cell(r.slack),
    )
}

pub const PATH_COLUMNS: [&str; 6] =
    ["t", "lambda", "derivative_lhs", "derivative_rhs", "comparison_u", "margin"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathRow {
    pub t: f64,
    pub lambda: f64,
    pub derivative_lhs: Option<f64>,
    pub derivative_rhs: Option<f64>,
    pub comparison_u: f64,
    pub margin: f64,
}

pub fn path_rows(path: &PerturbationPath, comparison: &ComparisonReport) -> Vec<PathRow> {
    path.samples
        .iter()
        .zip(&comparison.profile)
        .map(|(s, &(_, u, margin))| PathRow {
            t: sig12(s.t),
            lambda: sig12(s.lambda),
            derivative_lhs: s.derivative_lhs.map(sig12),
            derivative_rhs: s.derivative_rhs.map(sig12),
            comparison_u: sig12(u),
            margin: sig12(margin),
        })
        .collect()
}

pub fn path_tsv(rows: &[PathRow]) -> String {
    let mut out = PATH_COLUMNS.join("\t");
    out.push('\n');
    for r in rows {
        let cells = [
            cell(Some(r.t)),
            cell(Some(r.lambda)),
            cell(r.derivative_lhs),
            cell(r.derivative_rhs),
            cell(Some(r.comparison_u)),
            cell(Some(r.margin)),
        ];
        out.push_str(&cells.join("\t"));
        out.push('\n');
    }
    out
}
