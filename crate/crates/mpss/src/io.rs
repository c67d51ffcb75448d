//! Graph files: a plain edge list and a JSON object.
//!
//! Text: a header line `digraph <n>` followed by one `u v` pair per line with
//! 0-based endpoints. Blank lines and lines starting with `#` are skipped.
//!
//! JSON: `{"vertices": n, "edges": [[u, v], ...], "labels": [...]}` where
//! `labels` is optional.

use std::path::Path;

use mpss_core::digraph::DiGraph;
use serde::{Deserialize, Serialize};

/// Anything that keeps a graph or family from being read.
#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Text { line: usize, message: String },
    #[error("invalid JSON graph: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] mpss_core::Error),
    #[error("invalid family `{spec}`: {message}")]
    Family { spec: String, message: String },
    #[error("{0}")]
    Argument(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphFile {
    pub fn from_graph(g: &DiGraph) -> Self {
        GraphFile {
            vertices: g.vertex_count(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    pub fn into_graph(self) -> Result<DiGraph, InputError> {
        let g = DiGraph::new(self.vertices, self.edges.into_iter().map(|[u, v]| (u, v)))?;
        Ok(match self.labels {
            Some(labels) => g.with_labels(labels)?,
            None => g,
        })
    }
}

pub fn parse_text(s: &str) -> Result<DiGraph, InputError> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(InputError::Text {
        line: 1,
        message: "empty input".into(),
    })?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["digraph", n] => n.parse::<usize>().map_err(|e| InputError::Text {
            line,
            message: format!("vertex count: {e}"),
        })?,
        _ => {
            return Err(InputError::Text {
                line,
                message: "expected `digraph <vertex_count>`".into(),
            })
        }
    };
    let mut edges = Vec::new();
    for (line, text) in lines {
        let parts: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = parts[..] else {
            return Err(InputError::Text {
                line,
                message: format!("expected `u v`, found `{text}`"),
            });
        };
        let parse = |x: &str| {
            x.parse::<usize>().map_err(|e| InputError::Text {
                line,
                message: format!("`{x}`: {e}"),
            })
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if edges.contains(&(u, v)) {
            return Err(InputError::Text {
                line,
                message: format!("parallel edge {u} {v}"),
            });
        }
        edges.push((u, v));
    }
    Ok(DiGraph::new(n, edges)?)
}

pub fn parse_json(s: &str) -> Result<DiGraph, InputError> {
    serde_json::from_str::<GraphFile>(s)?.into_graph()
}

/// Chooses the format from the first non-blank character.
pub fn parse_graph(s: &str) -> Result<DiGraph, InputError> {
    if s.trim_start().starts_with('{') {
        parse_json(s)
    } else {
        parse_text(s)
    }
}

pub fn read_graph(path: &Path) -> Result<DiGraph, InputError> {
    let s = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph(&s)
}

pub fn to_text(g: &DiGraph) -> String {
    let mut out = format!("digraph {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_json(g: &DiGraph) -> String {
    serde_json::to_string(&GraphFile::from_graph(g)).expect("graph files serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = parse_text("# a triangle\ndigraph 3\n0 1\n1 2\n\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(parse_text(&to_text(&g)).unwrap(), g);
    }

    #[test]
    fn json_round_trip() {
        let g = parse_json(r#"{"vertices": 2, "edges": [[0, 1]], "labels": ["a", "b"]}"#).unwrap();
        assert_eq!(g.label(1), "b");
        assert_eq!(parse_graph(&to_json(&g)).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_text("digraph 2\n0 1\n0 1\n"),
            Err(InputError::Text { line: 3, .. })
        ));
        assert!(matches!(
            parse_json(r#"{"vertices": 2, "edges": [[0, 1], [0, 1]]}"#),
            Err(InputError::Graph(_))
        ));
        assert!(matches!(
            parse_text("graph 2\n"),
            Err(InputError::Text { line: 1, .. })
        ));
        assert!(matches!(
            parse_text("digraph 2\n0 2\n"),
            Err(InputError::Graph(_))
        ));
        assert!(matches!(
            parse_text("digraph 2\n0\n"),
            Err(InputError::Text { line: 2, .. })
        ));
        assert!(parse_json(r#"{"vertices": 1}"#).is_err());
    }
}
