//! Graph maps: vertex assignments that send every edge to an edge or collapse
//! it to a single vertex.

use alloc::format;
use alloc::vec::Vec;

use super::{DiGraph, Distance};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphMap {
    source: DiGraph,
    target: DiGraph,
    assignment: Vec<usize>,
}

impl GraphMap {
    /// Checks lengths, ranges and the edge condition.
    pub fn new(source: DiGraph, target: DiGraph, assignment: Vec<usize>) -> Result<Self, Error> {
        let f = Self::unchecked(source, target, assignment)?;
        if let Some((u, v)) = f.first_violation() {
            return Err(Error::NotAGraphMap(u, v));
        }
        Ok(f)
    }

    /// Checks lengths and ranges only, so that invalid maps can be represented
    /// and inspected with [`validate_map`].
    pub fn unchecked(
        source: DiGraph,
        target: DiGraph,
        assignment: Vec<usize>,
    ) -> Result<Self, Error> {
        if assignment.len() != source.vertex_count() {
            return Err(Error::InvalidParameters(format!(
                "assignment has {} entries for {} source vertices",
                assignment.len(),
                source.vertex_count()
            )));
        }
        if let Some(&v) = assignment.iter().find(|&&v| v >= target.vertex_count()) {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: target.vertex_count(),
            });
        }
        Ok(GraphMap {
            source,
            target,
            assignment,
        })
    }

    pub fn identity(g: &DiGraph) -> Self {
        GraphMap {
            source: g.clone(),
            target: g.clone(),
            assignment: (0..g.vertex_count()).collect(),
        }
    }

    pub fn constant(source: &DiGraph, target: &DiGraph, v: usize) -> Result<Self, Error> {
        Self::new(
            source.clone(),
            target.clone(),
            alloc::vec![v; source.vertex_count()],
        )
    }

    pub fn source(&self) -> &DiGraph {
        &self.source
    }

    pub fn target(&self) -> &DiGraph {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn apply(&self, x: usize) -> usize {
        self.assignment[x]
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &GraphMap) -> Result<GraphMap, Error> {
        if self.target != then.source {
            return Err(Error::MismatchedMaps);
        }
        let assignment = self
            .assignment
            .iter()
            .map(|&x| then.assignment[x])
            .collect();
        Ok(GraphMap {
            source: self.source.clone(),
            target: then.target.clone(),
            assignment,
        })
    }

    fn first_violation(&self) -> Option<(usize, usize)> {
        self.source.edges().find(|&(u, v)| {
            let (a, b) = (self.assignment[u], self.assignment[v]);
            a != b && !self.target.has_edge(a, b)
        })
    }
}

/// Whether every source edge maps to a target edge or to a single vertex.
pub fn validate_map(f: &GraphMap) -> bool {
    f.first_violation().is_none()
}

/// `max_x d(f(x), g(x))`; `f` is `r`-homotopic to `g` iff this is at most `r`.
pub fn r_homotopy_gap(f: &GraphMap, g: &GraphMap) -> Result<Distance, Error> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::MismatchedMaps);
    }
    let d = f.target.metric();
    Ok((0..f.source.vertex_count())
        .map(|x| d.get(f.apply(x), g.apply(x)))
        .max()
        .unwrap_or(Distance::Finite(0)))
}
