//! Textual perturbations: `vertex u v1 … vg`, `edge u v` or `pendant u`.

use indexbound_core::Perturbation;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("empty perturbation")]
    Empty,
    #[error("unknown perturbation kind `{0}` (expected vertex, edge or pendant)")]
    UnknownKind(String),
    #[error("`{0}` is not a vertex index")]
    BadVertex(String),
    #[error("{kind} takes {expected} vertices, found {found}")]
    Arity { kind: &'static str, expected: &'static str, found: usize },
}

pub fn parse_perturbation(text: &str) -> Result<Perturbation, SpecError> {
    let mut words = text.split_whitespace();
    let kind = words.next().ok_or(SpecError::Empty)?;
    let vertices = words
        .map(|w| w.parse::<usize>().map_err(|_| SpecError::BadVertex(w.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let found = vertices.len();
    match kind.to_ascii_lowercase().as_str() {
        "vertex" if found >= 2 => {
            Ok(Perturbation::VertexConnection { apex: vertices[0], targets: vertices[1..].to_vec() })
        }
        "vertex" => Err(SpecError::Arity { kind: "vertex", expected: "at least 2", found }),
        "edge" if found == 2 => Ok(Perturbation::EdgeAddition { u: vertices[0], v: vertices[1] }),
        "edge" => Err(SpecError::Arity { kind: "edge", expected: "2", found }),
        "pendant" if found == 1 => Ok(Perturbation::PendantEdge { u: vertices[0] }),
        "pendant" => Err(SpecError::Arity { kind: "pendant", expected: "1", found }),
        _ => Err(SpecError::UnknownKind(kind.to_string())),
    }
}

pub fn format_perturbation(p: &Perturbation) -> String {
    match p {
        Perturbation::VertexConnection { apex, targets } => {
            let mut out = format!("vertex {apex}");
            for t in targets {
                out.push(' ');
                out.push_str(&t.to_string());
            }
            out
        }
        Perturbation::EdgeAddition { u, v } => format!("edge {u} {v}"),
        Perturbation::PendantEdge { u } => format!("pendant {u}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(
            parse_perturbation("vertex 0 1 2 3"),
            Ok(Perturbation::VertexConnection { apex: 0, targets: vec![1, 2, 3] })
        );
        assert_eq!(parse_perturbation(" edge 0  2 "), Ok(Perturbation::EdgeAddition { u: 0, v: 2 }));
        assert_eq!(parse_perturbation("pendant 4"), Ok(Perturbation::PendantEdge { u: 4 }));
        assert_eq!(parse_perturbation(""), Err(SpecError::Empty));
        assert!(matches!(parse_perturbation("vertex 0"), Err(SpecError::Arity { .. })));
        assert!(matches!(parse_perturbation("edge 0 1 2"), Err(SpecError::Arity { .. })));
        assert!(matches!(parse_perturbation("pendant -1"), Err(SpecError::BadVertex(_))));
        assert!(matches!(parse_perturbation("chord 0 1"), Err(SpecError::UnknownKind(_))));
    }

    #[test]
    fn round_trip() {
        for text in ["vertex 3 0 1", "edge 1 5", "pendant 0"] {
            assert_eq!(format_perturbation(&parse_perturbation(text).unwrap()), text);
        }
    }
}
