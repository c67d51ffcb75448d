//! Standard graphs and constructions.
//!
//! Index layouts:
//! - `Z_m`: vertex `i` has the single out-edge `i → i+1 mod m`; `Z_1` is a
//!   single vertex without a loop.
//! - `C_{m,n}`: `0` is the initial vertex, `1..m` the top path (ending at the
//!   terminal vertex `m`), then `m+1..m+n−1` the interior of the bottom path.
//!   With `n = 1` the bottom path is the single edge `0 → m`, so vertex `i` is
//!   `a_i` of the top path.
//! - `I`: `−1 → 0 ← +1` as `0, 1, 2`. `J`: `−2 → −1 ← 0 → 1 ← 2` as `0..5`.
//! - cone of `X` on `n` vertices: `(x,−1)` is `x`, `(x,0)` is `n+x`, apex `2n`.
//! - suspension of `X` on `n` vertices: `n` and `n+1` are the two new sources.
//! - box and strong products: `(g,h)` is `g·|V(H)| + h`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{DiGraph, GraphMap};
use crate::Error;

fn labelled(g: DiGraph, labels: Vec<String>) -> DiGraph {
    g.with_labels(labels).expect("label count matches")
}

pub fn point() -> DiGraph {
    DiGraph::from_edge_set(1, BTreeSet::new())
}

pub fn directed_cycle(m: usize) -> Result<DiGraph, Error> {
    if m == 0 {
        return Err(Error::InvalidParameters(
            "directed cycle needs m >= 1".into(),
        ));
    }
    let edges: BTreeSet<_> = if m == 1 {
        BTreeSet::new()
    } else {
        (0..m).map(|i| (i, (i + 1) % m)).collect()
    };
    Ok(DiGraph::from_edge_set(m, edges))
}

/// `C_{m,n}`. `C_{1,1}` would need a doubled edge and is rejected.
pub fn bidirected_cycle(m: usize, n: usize) -> Result<DiGraph, Error> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameters(
            "bi-directed cycle needs m, n >= 1".into(),
        ));
    }
    if m == 1 && n == 1 {
        return Err(Error::InvalidParameters(
            "C_{1,1} would have parallel edges".into(),
        ));
    }
    let count = m + n;
    let mut edges = BTreeSet::new();
    for i in 0..m {
        edges.insert((i, i + 1));
    }
    // bottom path 0 → m+1 → … → m+n−1 → m
    let bottom: Vec<usize> = core::iter::once(0)
        .chain(m + 1..m + n)
        .chain(core::iter::once(m))
        .collect();
    for w in bottom.windows(2) {
        edges.insert((w[0], w[1]));
    }
    let mut labels: Vec<String> = (0..=m).map(|i| format!("a{i}")).collect();
    labels.extend((1..n).map(|j| format!("b{j}")));
    Ok(labelled(DiGraph::from_edge_set(count, edges), labels))
}

/// The vertices of `A_{m,n}`: the bottom path without its last edge.
pub fn bicycle_base(m: usize, n: usize) -> Vec<usize> {
    core::iter::once(0).chain(m + 1..m + n).collect()
}

/// The collapse `C_{m,n} → C_{𝔪,1}` contracting every edge of the shorter
/// path except its last one (the bottom path when `m = n`).
pub fn bicycle_collapse(m: usize, n: usize) -> Result<GraphMap, Error> {
    let src = bidirected_cycle(m, n)?;
    let big = m.max(n);
    let tgt = bidirected_cycle(big, 1)?;
    let assignment: Vec<usize> = if m >= n {
        (0..m + n).map(|v| if v <= m { v } else { 0 }).collect()
    } else {
        (0..m + n)
            .map(|v| match v {
                0 => 0,
                v if v < m => 0,
                v if v == m => big,
                v => v - m,
            })
            .collect()
    };
    GraphMap::new(src, tgt, assignment)
}

pub fn interval_i() -> DiGraph {
    let g = DiGraph::from_edge_set(3, [(0, 1), (2, 1)].into_iter().collect());
    labelled(g, ["-1", "0", "+1"].map(String::from).to_vec())
}

pub fn interval_j() -> DiGraph {
    let g = DiGraph::from_edge_set(5, [(0, 1), (2, 1), (2, 3), (4, 3)].into_iter().collect());
    labelled(g, ["-2", "-1", "0", "1", "2"].map(String::from).to_vec())
}

/// Adds two vertices with edges to every existing vertex.
pub fn suspension(x: &DiGraph) -> DiGraph {
    let n = x.vertex_count();
    let mut edges: BTreeSet<_> = x.edges().collect();
    for v in 0..n {
        edges.insert((n, v));
        edges.insert((n + 1, v));
    }
    let mut labels: Vec<String> = (0..n).map(|v| x.label(v)).collect();
    labels.push(format!("+{n}"));
    labels.push(format!("-{n}"));
    labelled(DiGraph::from_edge_set(n + 2, edges), labels)
}

/// `𝕊ⁿ`: the empty graph suspended `n+1` times.
pub fn sphere(n: usize) -> Result<DiGraph, Error> {
    let mut g = DiGraph::empty();
    for _ in 0..=n {
        g = suspension(&g);
    }
    Ok(g)
}

pub fn transpose(g: &DiGraph) -> DiGraph {
    let t = DiGraph::from_edge_set(g.vertex_count(), g.edges().map(|(u, v)| (v, u)).collect());
    match g.labels() {
        Some(l) => labelled(t, l.to_vec()),
        None => t,
    }
}

#[derive(Clone, Debug)]
pub struct BoxProduct {
    pub graph: DiGraph,
    pub proj_left: GraphMap,
    pub proj_right: GraphMap,
}

fn product_labels(g: &DiGraph, h: &DiGraph) -> Vec<String> {
    let mut out = Vec::with_capacity(g.vertex_count() * h.vertex_count());
    for a in 0..g.vertex_count() {
        for b in 0..h.vertex_count() {
            out.push(format!("({},{})", g.label(a), h.label(b)));
        }
    }
    out
}

pub fn box_product(g: &DiGraph, h: &DiGraph) -> BoxProduct {
    let nh = h.vertex_count();
    let n = g.vertex_count() * nh;
    let mut edges = BTreeSet::new();
    for (a, b) in g.edges() {
        for y in 0..nh {
            edges.insert((a * nh + y, b * nh + y));
        }
    }
    for x in 0..g.vertex_count() {
        for (a, b) in h.edges() {
            edges.insert((x * nh + a, x * nh + b));
        }
    }
    let graph = labelled(DiGraph::from_edge_set(n, edges), product_labels(g, h));
    let proj_left = GraphMap::new(
        graph.clone(),
        g.clone(),
        (0..n).map(|v| v / nh.max(1)).collect(),
    )
    .expect("projection is a graph map");
    let proj_right = GraphMap::new(
        graph.clone(),
        h.clone(),
        (0..n).map(|v| v % nh.max(1)).collect(),
    )
    .expect("projection is a graph map");
    BoxProduct {
        graph,
        proj_left,
        proj_right,
    }
}

/// Box product edges plus the diagonal steps.
pub fn strong_product(g: &DiGraph, h: &DiGraph) -> DiGraph {
    let nh = h.vertex_count();
    let mut edges: BTreeSet<_> = box_product(g, h).graph.edges().collect();
    for (a, b) in g.edges() {
        for (c, d) in h.edges() {
            edges.insert((a * nh + c, b * nh + d));
        }
    }
    labelled(
        DiGraph::from_edge_set(g.vertex_count() * nh, edges),
        product_labels(g, h),
    )
}

/// The cone `X□I` with `X□{+1}` collapsed to the apex.
#[derive(Clone, Debug)]
pub struct Cone {
    pub graph: DiGraph,
    /// `X ↪ CX` onto the level `−1` copy.
    pub inclusion: GraphMap,
    pub apex: usize,
}

impl Cone {
    /// Number of vertices of the base.
    pub fn base_count(&self) -> usize {
        self.apex / 2
    }

    /// The map `(x,j) ↦ (x, max(j,0))`, fixing the apex.
    pub fn fold_map(&self) -> GraphMap {
        let n = self.base_count();
        let assignment = (0..=2 * n).map(|v| if v < n { v + n } else { v }).collect();
        GraphMap::new(self.graph.clone(), self.graph.clone(), assignment)
            .expect("fold is a graph map")
    }
}

/// Built directly; the collapsed copy of `X` leaves no loop at the apex.
pub fn cone(x: &DiGraph) -> Cone {
    let n = x.vertex_count();
    let apex = 2 * n;
    let mut edges = BTreeSet::new();
    for (u, v) in x.edges() {
        edges.insert((u, v));
        edges.insert((n + u, n + v));
    }
    for v in 0..n {
        edges.insert((v, n + v));
        edges.insert((apex, n + v));
    }
    let mut labels: Vec<String> = (0..n).map(|v| format!("({},-1)", x.label(v))).collect();
    labels.extend((0..n).map(|v| format!("({},0)", x.label(v))));
    labels.push("apex".into());
    let graph = labelled(DiGraph::from_edge_set(2 * n + 1, edges), labels);
    let inclusion = GraphMap::new(x.clone(), graph.clone(), (0..n).collect())
        .expect("inclusion is a graph map");
    Cone {
        graph,
        inclusion,
        apex,
    }
}
