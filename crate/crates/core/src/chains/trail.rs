//! Trails (reachability tuples), their enumeration and boundary.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{DiGraph, DistMatrix};
use crate::Error;

/// A tuple `(x_0,…,x_k)` with consecutive entries distinct and each reachable
/// from the previous one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Trail {
    vertices: Vec<usize>,
    length: u32,
}

impl Trail {
    pub fn new(vertices: Vec<usize>, d: &DistMatrix) -> Result<Self, Error> {
        if vertices.is_empty() {
            return Err(Error::InvalidTrail("empty tuple".into()));
        }
        let mut length = 0u32;
        for w in vertices.windows(2) {
            if w[0] >= d.vertex_count() || w[1] >= d.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: w[0].max(w[1]),
                    count: d.vertex_count(),
                });
            }
            if w[0] == w[1] {
                return Err(Error::InvalidTrail(format!(
                    "repeated consecutive vertex {}",
                    w[0]
                )));
            }
            match d.finite(w[0], w[1]) {
                Some(s) => length += s,
                None => {
                    return Err(Error::InvalidTrail(format!(
                        "{} does not reach {}",
                        w[0], w[1]
                    )))
                }
            }
        }
        if vertices[0] >= d.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: vertices[0],
                count: d.vertex_count(),
            });
        }
        Ok(Trail { vertices, length })
    }

    pub(crate) fn from_parts(vertices: Vec<usize>, length: u32) -> Self {
        Trail { vertices, length }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn degree(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("nonempty")
    }

    /// Whether every entry satisfies `member`.
    pub fn lies_in(&self, member: &[bool]) -> bool {
        self.vertices.iter().all(|&v| member[v])
    }
}

/// Trails filed by `(degree, length)`, each list in lexicographic order.
pub type GradedBasis = BTreeMap<(usize, u32), Vec<Trail>>;

/// Every trail with degree at most `k_max` and length at most `l_max`.
pub fn enumerate_trails(g: &DiGraph, k_max: usize, l_max: u32) -> GradedBasis {
    let d = g.metric();
    let mut out = GradedBasis::new();
    for_each_trail(&d, k_max, l_max, |t, len| {
        out.entry((t.len() - 1, len))
            .or_default()
            .push(Trail::from_parts(t.to_vec(), len));
    });
    out
}

/// Depth-first enumeration in lexicographic order.
pub(crate) fn for_each_trail(
    d: &DistMatrix,
    k_max: usize,
    l_max: u32,
    mut visit: impl FnMut(&[usize], u32),
) {
    let n = d.vertex_count();
    let next: Vec<Vec<(usize, u32)>> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| y != x)
                .filter_map(|y| Some((y, d.finite(x, y)?)))
                .collect()
        })
        .collect();
    let mut stack = Vec::with_capacity(k_max + 1);
    for x in 0..n {
        stack.clear();
        stack.push(x);
        extend(&next, &mut stack, 0, k_max, l_max, &mut visit);
    }
}

fn extend(
    next: &[Vec<(usize, u32)>],
    stack: &mut Vec<usize>,
    len: u32,
    k_max: usize,
    l_max: u32,
    visit: &mut impl FnMut(&[usize], u32),
) {
    visit(stack, len);
    if stack.len() > k_max {
        return;
    }
    let x = *stack.last().expect("nonempty");
    for &(y, s) in &next[x] {
        if len + s <= l_max {
            stack.push(y);
            extend(next, stack, len + s, k_max, l_max, visit);
            stack.pop();
        }
    }
}

/// Which boundary terms are kept.
#[derive(Clone, Copy, Debug)]
pub enum BoundaryMode<'a> {
    /// The full reachability differential.
    Reachability,
    /// Only terms of the same length (the associated graded).
    Magnitude,
    /// Terms lying wholly in the marked subgraph are dropped.
    Relative(&'a [bool]),
}

/// `Σ (−1)^i` (delete entry `i`), omitting tuples with repeated consecutive
/// entries and the terms the mode excludes. Terms are listed by deleted
/// position.
pub fn rc_boundary(t: &Trail, d: &DistMatrix, mode: BoundaryMode<'_>) -> Vec<(Trail, i64)> {
    let v = t.vertices();
    let k = t.degree();
    if k == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(k + 1);
    for i in 0..=k {
        if i > 0 && i < k && v[i - 1] == v[i + 1] {
            continue;
        }
        let len = if i == 0 {
            t.length() - step(d, v[0], v[1])
        } else if i == k {
            t.length() - step(d, v[k - 1], v[k])
        } else {
            t.length() - step(d, v[i - 1], v[i]) - step(d, v[i], v[i + 1])
                + step(d, v[i - 1], v[i + 1])
        };
        if matches!(mode, BoundaryMode::Magnitude) && len != t.length() {
            continue;
        }
        let mut w = Vec::with_capacity(k);
        w.extend_from_slice(&v[..i]);
        w.extend_from_slice(&v[i + 1..]);
        let face = Trail::from_parts(w, len);
        if let BoundaryMode::Relative(member) = mode {
            if face.lies_in(member) {
                continue;
            }
        }
        out.push((face, if i % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn step(d: &DistMatrix, x: usize, y: usize) -> u32 {
    d.finite(x, y).expect("trail steps are finite")
}

/// Marks the vertices of `a` inside a graph on `n` vertices.
pub(crate) fn membership(n: usize, a: &[usize]) -> Result<Vec<bool>, Error> {
    let mut m = vec![false; n];
    for &v in a {
        if v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                count: n,
            });
        }
        m[v] = true;
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{bidirected_cycle, directed_cycle, point};

    #[test]
    fn enumeration_counts() {
        let b = enumerate_trails(&point(), 5, 5);
        assert_eq!(b.len(), 1);
        assert_eq!(b[&(0, 0)][0].vertices(), &[0]);
        let z3 = directed_cycle(3).unwrap();
        let b = enumerate_trails(&z3, 3, 3);
        assert_eq!(b[&(1, 1)].len(), 3);
        assert_eq!(b[&(2, 3)].len(), 6);
        // lexicographic within a cell
        for list in b.values() {
            assert!(list.windows(2).all(|w| w[0].vertices() < w[1].vertices()));
        }
    }

    #[test]
    fn boundary_examples() {
        let c = bidirected_cycle(2, 1).unwrap();
        let d = c.metric();
        let t = Trail::new(vec![0, 1, 2], &d).unwrap();
        let terms: Vec<(Vec<usize>, i64)> = rc_boundary(&t, &d, BoundaryMode::Reachability)
            .into_iter()
            .map(|(f, s)| (f.vertices().to_vec(), s))
            .collect();
        assert_eq!(
            terms,
            vec![(vec![1, 2], 1), (vec![0, 2], -1), (vec![0, 1], 1)]
        );

        let z3 = directed_cycle(3).unwrap();
        let d = z3.metric();
        let t = Trail::new(vec![0, 1, 0], &d).unwrap();
        assert_eq!(t.length(), 3);
        assert!(rc_boundary(&t, &d, BoundaryMode::Magnitude).is_empty());
        assert!(rc_boundary(
            &Trail::new(vec![2], &d).unwrap(),
            &d,
            BoundaryMode::Reachability
        )
        .is_empty());
    }

    #[test]
    fn invalid_trails() {
        let d = directed_cycle(3).unwrap().metric();
        assert!(Trail::new(vec![], &d).is_err());
        assert!(Trail::new(vec![0, 0], &d).is_err());
        let s0 = crate::digraph::sphere(0).unwrap().metric();
        assert!(Trail::new(vec![0, 1], &s0).is_err());
    }
}
