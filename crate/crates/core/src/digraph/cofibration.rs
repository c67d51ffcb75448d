//! Reach, convexity, cofibrations and pushouts along induced-subgraph
//! inclusions.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{DiGraph, DistMatrix, Distance, GraphMap};
use crate::Error;

fn check_vertices(a: &[usize], x: &DiGraph) -> Result<BTreeSet<usize>, Error> {
    let set: BTreeSet<usize> = a.iter().copied().collect();
    if let Some(&v) = set.iter().find(|&&v| v >= x.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            count: x.vertex_count(),
        });
    }
    Ok(set)
}

/// Vertices reachable by a directed path from some vertex of `a`, ascending.
pub fn reach(a: &[usize], x: &DiGraph) -> Result<Vec<usize>, Error> {
    let start = check_vertices(a, x)?;
    let mut seen = vec![false; x.vertex_count()];
    let mut queue: VecDeque<usize> = start.iter().copied().collect();
    for &v in &start {
        seen[v] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &v in x.successors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    Ok((0..x.vertex_count()).filter(|&v| seen[v]).collect())
}

/// The induced subgraph on `vertices` (sorted, deduplicated) and its
/// inclusion. Labels are carried over.
pub fn induced_subgraph(x: &DiGraph, vertices: &[usize]) -> Result<(DiGraph, GraphMap), Error> {
    let set = check_vertices(vertices, x)?;
    let order: Vec<usize> = set.iter().copied().collect();
    let mut index = BTreeMap::new();
    for (i, &v) in order.iter().enumerate() {
        index.insert(v, i);
    }
    let edges = x
        .edges()
        .filter_map(|(u, v)| Some((*index.get(&u)?, *index.get(&v)?)))
        .collect();
    let labels: Vec<String> = order.iter().map(|&v| x.label(v)).collect();
    let sub = DiGraph::from_edge_set(order.len(), edges).with_labels(labels)?;
    let inc = GraphMap::new(sub.clone(), x.clone(), order)?;
    Ok((sub, inc))
}

/// Whether distances inside the induced subgraph on `a` agree with those of
/// `x`.
pub fn is_convex(x: &DiGraph, a: &[usize]) -> Result<bool, Error> {
    let (sub, inc) = induced_subgraph(x, a)?;
    let dx = x.metric();
    let da = sub.metric();
    let n = sub.vertex_count();
    Ok((0..n).all(|i| (0..n).all(|j| da.get(i, j) == dx.get(inc.apply(i), inc.apply(j)))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CofibrationFailure {
    /// An edge from outside `A` into `A`.
    EdgeIntoSubgraph { from: usize, to: usize },
    /// No vertex of `A` satisfies the distance condition for this reach vertex.
    NoProjection { vertex: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CofibrationVerdict {
    Cofibration {
        reach: Vec<usize>,
        /// `π` on the reach; identity on `A`.
        projection: BTreeMap<usize, usize>,
    },
    NotCofibration(CofibrationFailure),
}

impl CofibrationVerdict {
    pub fn is_cofibration(&self) -> bool {
        matches!(self, CofibrationVerdict::Cofibration { .. })
    }
}

fn projects_through(d: &DistMatrix, a: &BTreeSet<usize>, via: usize, x: usize) -> bool {
    a.iter()
        .all(|&s| d.get(s, x) == d.get(s, via) + d.get(via, x))
}

/// Decides whether the induced inclusion `A ↪ X` is a cofibration, searching
/// every vertex of `A` for each projection value.
pub fn is_cofibration(a: &[usize], x: &DiGraph) -> Result<CofibrationVerdict, Error> {
    let set = check_vertices(a, x)?;
    if let Some((u, v)) = x
        .proper_edges()
        .find(|(u, v)| !set.contains(u) && set.contains(v))
    {
        return Ok(CofibrationVerdict::NotCofibration(
            CofibrationFailure::EdgeIntoSubgraph { from: u, to: v },
        ));
    }
    let d = x.metric();
    let r = reach(a, x)?;
    let mut projection = BTreeMap::new();
    for &v in &r {
        let image = if set.contains(&v) {
            Some(v)
        } else {
            set.iter()
                .copied()
                .find(|&c| d.get(c, v).is_finite() && projects_through(&d, &set, c, v))
        };
        match image {
            Some(c) => {
                projection.insert(v, c);
            }
            None => {
                return Ok(CofibrationVerdict::NotCofibration(
                    CofibrationFailure::NoProjection { vertex: v },
                ))
            }
        }
    }
    Ok(CofibrationVerdict::Cofibration {
        reach: r,
        projection,
    })
}

#[derive(Clone, Debug)]
pub struct Pushout {
    /// Vertices of `Y` first, then `X ∖ A` in increasing order.
    pub graph: DiGraph,
    pub g: GraphMap,
    pub j: GraphMap,
}

/// Pushout of `X ← A → Y` where `i: A → X` is an induced-subgraph inclusion.
/// Loops created by collapsing edges are kept.
pub fn pushout(i: &GraphMap, f: &GraphMap) -> Result<Pushout, Error> {
    if i.source() != f.source() {
        return Err(Error::MismatchedMaps);
    }
    let a = i.source();
    let x = i.target();
    let y = f.target();
    let image: BTreeSet<usize> = i.assignment().iter().copied().collect();
    if image.len() != a.vertex_count() {
        return Err(Error::NotAnInclusion("not injective on vertices".into()));
    }
    for s in 0..a.vertex_count() {
        for t in 0..a.vertex_count() {
            if a.has_edge(s, t) != x.has_edge(i.apply(s), i.apply(t)) {
                return Err(Error::NotAnInclusion(format!("edge ({s},{t}) not induced")));
            }
        }
    }
    let mut preimage = vec![None; x.vertex_count()];
    for s in 0..a.vertex_count() {
        preimage[i.apply(s)] = Some(s);
    }
    let ny = y.vertex_count();
    let mut g_assign = vec![0; x.vertex_count()];
    let mut labels: Vec<String> = (0..ny).map(|v| y.label(v)).collect();
    for v in 0..x.vertex_count() {
        g_assign[v] = match preimage[v] {
            Some(s) => f.apply(s),
            None => {
                labels.push(x.label(v));
                labels.len() - 1
            }
        };
    }
    let mut edges: BTreeSet<(usize, usize)> = y.edges().collect();
    edges.extend(x.edges().map(|(u, v)| (g_assign[u], g_assign[v])));
    let graph = DiGraph::from_edge_set(labels.len(), edges).with_labels(labels)?;
    let g = GraphMap::new(x.clone(), graph.clone(), g_assign)?;
    let j = GraphMap::new(y.clone(), graph.clone(), (0..ny).collect())?;
    Ok(Pushout { graph, g, j })
}

/// Convenience for the distance condition used in tests: whether
/// `d(a,x) = d(a,π(x)) + d(π(x),x)` for all `a ∈ A`, `x` in the table.
pub fn projection_satisfies(x: &DiGraph, a: &[usize], projection: &BTreeMap<usize, usize>) -> bool {
    let d = x.metric();
    let set: BTreeSet<usize> = a.iter().copied().collect();
    projection.iter().all(|(&v, &p)| {
        set.contains(&p) && d.get(p, v) != Distance::Infinite && projects_through(&d, &set, p, v)
    })
}
