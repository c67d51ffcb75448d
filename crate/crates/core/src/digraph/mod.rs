//! Finite directed graphs, their shortest-path metric, graph maps, standard
//! families, products, cones, suspensions, cofibrations and pushouts.
//!
//! Loops may be present in the edge set but never influence distances or
//! chain complexes.

mod cofibration;
mod families;
mod map;

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

pub use cofibration::{
    induced_subgraph, is_cofibration, is_convex, projection_satisfies, pushout, reach,
    CofibrationFailure, CofibrationVerdict, Pushout,
};
pub use families::{
    bicycle_base, bicycle_collapse, bidirected_cycle, box_product, cone, directed_cycle,
    interval_i, interval_j, point, sphere, strong_product, suspension, transpose, BoxProduct, Cone,
};
pub use map::{r_homotopy_gap, validate_map, GraphMap};

use crate::Error;

/// A finite digraph on vertices `0..vertex_count`.
#[derive(Clone, Debug)]
pub struct DiGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    labels: Option<Vec<String>>,
    successors: Vec<Vec<usize>>,
}

impl PartialEq for DiGraph {
    /// Labels are display-only and do not take part in equality.
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for DiGraph {}

impl DiGraph {
    /// Rejects out-of-range endpoints and repeated edges.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
            if !set.insert((u, v)) {
                return Err(Error::ParallelEdge(u, v));
            }
        }
        Ok(Self::from_edge_set(vertex_count, set))
    }

    /// Builds from an edge set whose endpoints are known to be in range.
    pub(crate) fn from_edge_set(vertex_count: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut successors = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            assert!(
                u < vertex_count && v < vertex_count,
                "edge endpoint out of range"
            );
            if u != v {
                successors[u].push(v);
            }
        }
        DiGraph {
            vertex_count,
            edges,
            labels: None,
            successors,
        }
    }

    pub fn empty() -> Self {
        Self::from_edge_set(0, BTreeSet::new())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, Error> {
        if labels.len() != self.vertex_count {
            return Err(Error::InvalidParameters(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// All stored edges, loops included, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v)` with `u ≠ v`.
    pub fn proper_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied().filter(|(u, v)| u != v)
    }

    pub fn proper_edge_count(&self) -> usize {
        self.proper_edges().count()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    /// Out-neighbours other than `u` itself, ascending.
    pub fn successors(&self, u: usize) -> &[usize] {
        &self.successors[u]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label if present, else its index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => format!("{v}"),
        }
    }

    pub fn metric(&self) -> DistMatrix {
        shortest_path_metric(self)
    }
}

/// A value in ℕ ∪ {∞}; addition saturates at ∞.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn is_finite(&self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    pub fn finite(&self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(*d),
            Distance::Infinite => None,
        }
    }
}

impl Add for Distance {
    type Output = Distance;
    fn add(self, rhs: Distance) -> Distance {
        match (self, rhs) {
            (Distance::Finite(a), Distance::Finite(b)) => match a.checked_add(b) {
                Some(s) => Distance::Finite(s),
                None => Distance::Infinite,
            },
            _ => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// All-pairs shortest-path distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    dist: Vec<Distance>,
}

impl DistMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> Distance {
        self.dist[x * self.n + y]
    }

    /// Finite distance, or `None` if `y` is unreachable from `x`.
    pub fn finite(&self, x: usize, y: usize) -> Option<u32> {
        self.get(x, y).finite()
    }

    /// Largest finite distance (0 for graphs without proper edges).
    pub fn diameter(&self) -> u32 {
        self.dist
            .iter()
            .filter_map(Distance::finite)
            .max()
            .unwrap_or(0)
    }
}

/// Breadth-first search from every vertex; loops are ignored.
pub fn shortest_path_metric(g: &DiGraph) -> DistMatrix {
    let n = g.vertex_count();
    let mut dist = vec![Distance::Infinite; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = Distance::Finite(0);
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u].finite().expect("visited");
            for &v in g.successors(u) {
                if row[v] == Distance::Infinite {
                    row[v] = Distance::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
    }
    DistMatrix { n, dist }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            DiGraph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange {
                vertex: 2,
                count: 2
            })
        );
        assert_eq!(
            DiGraph::new(2, [(0, 1), (0, 1)]),
            Err(Error::ParallelEdge(0, 1))
        );
    }

    #[test]
    fn loops_do_not_affect_metric() {
        let g = DiGraph::new(2, [(0, 0), (0, 1), (1, 1)]).unwrap();
        let d = g.metric();
        assert_eq!(d.get(0, 1), Distance::Finite(1));
        assert_eq!(d.get(1, 0), Distance::Infinite);
        assert_eq!(d.get(0, 0), Distance::Finite(0));
        assert_eq!(g.successors(0), &[1]);
    }

    #[test]
    fn single_vertex_metric() {
        let d = point().metric();
        assert_eq!(d.vertex_count(), 1);
        assert_eq!(d.get(0, 0), Distance::Finite(0));
    }

    #[test]
    fn cycle_metric() {
        let z4 = directed_cycle(4).unwrap();
        let d = z4.metric();
        assert_eq!(d.get(0, 1), Distance::Finite(1));
        assert_eq!(d.get(1, 0), Distance::Finite(3));
        assert_eq!(d.diameter(), 3);
    }

    #[test]
    fn saturating_infinity() {
        assert_eq!(Distance::Finite(3) + Distance::Infinite, Distance::Infinite);
        assert_eq!(
            Distance::Finite(u32::MAX) + Distance::Finite(1),
            Distance::Infinite
        );
        assert!(Distance::Finite(1_000_000) < Distance::Infinite);
    }
}
