//! Lattice paths and the filtered Eilenberg–Zilber and Alexander–Whitney
//! maps between trails of two graphs and trails of their box product.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::chains::Trail;
use crate::digraph::{box_product, BoxProduct, DiGraph, DistMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Right,
    Up,
}

/// A monotone path from `(0,0)` to `(k, k′)` in unit steps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    /// Every path to `(k, k′)`, in lexicographic order of steps
    /// (`Right` before `Up`).
    pub fn all(k: usize, k2: usize) -> Vec<LatticePath> {
        let mut out = Vec::new();
        let mut steps = Vec::with_capacity(k + k2);
        fn go(k: usize, k2: usize, steps: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
            if k == 0 && k2 == 0 {
                out.push(LatticePath {
                    steps: steps.clone(),
                });
                return;
            }
            if k > 0 {
                steps.push(Step::Right);
                go(k - 1, k2, steps, out);
                steps.pop();
            }
            if k2 > 0 {
                steps.push(Step::Up);
                go(k, k2 - 1, steps, out);
                steps.pop();
            }
        }
        go(k, k2, &mut steps, &mut out);
        out
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn end(&self) -> (usize, usize) {
        let right = self.steps.iter().filter(|s| **s == Step::Right).count();
        (right, self.steps.len() - right)
    }

    /// The visited lattice points, starting at the origin.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut p = (0, 0);
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            match s {
                Step::Right => p.0 += 1,
                Step::Up => p.1 += 1,
            }
            out.push(p);
        }
        out
    }

    /// Lattice points on or above the x-axis lying strictly below the path.
    pub fn points_below(&self) -> usize {
        // in each column the path enters at its lowest point
        let mut lowest: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, j) in self.points() {
            lowest.entry(i).or_insert(j);
        }
        lowest.values().sum()
    }

    /// Pairs `(i, j)` in the bounding box such that every path point in
    /// column `i` lies above height `j`.
    pub fn pairs_below(&self) -> usize {
        let pts = self.points();
        let (k, k2) = self.end();
        let mut count = 0;
        for i in 0..=k {
            for j in 0..=k2 {
                if pts.iter().all(|&(is, js)| is != i || j < js) {
                    count += 1;
                }
            }
        }
        count
    }

    /// `(−1)^{points below}`.
    pub fn sign(&self) -> i64 {
        if self.points_below().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The same sign from the pair count; kept as a cross-check.
    pub fn sign_by_pairs(&self) -> i64 {
        if self.pairs_below().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// `∇(ξ ⊗ η)` on vertex tuples, with product vertex `(g, h)` encoded as
/// `g·nh + h`. Terms are sorted by tuple.
pub fn ez_map(xi: &[usize], eta: &[usize], nh: usize) -> Vec<(Vec<usize>, i64)> {
    let (k, k2) = (xi.len() - 1, eta.len() - 1);
    let mut out: Vec<(Vec<usize>, i64)> = LatticePath::all(k, k2)
        .into_iter()
        .map(|path| {
            let tuple = path
                .points()
                .into_iter()
                .map(|(i, j)| xi[i] * nh + eta[j])
                .collect();
            (tuple, path.sign())
        })
        .collect();
    out.sort();
    out
}

/// A pair of vertex sequences, one per factor.
pub type VertexPair = (Vec<usize>, Vec<usize>);

/// `Δ(t) = Σ_i (front_i of the first coordinates) ⊗ (back of the second
/// coordinates from i)`, dropping factors with repeated consecutive entries.
pub fn aw_map(t: &[usize], nh: usize) -> Vec<(VertexPair, i64)> {
    let g: Vec<usize> = t.iter().map(|v| v / nh).collect();
    let h: Vec<usize> = t.iter().map(|v| v % nh).collect();
    let degenerate = |s: &[usize]| s.windows(2).any(|w| w[0] == w[1]);
    (0..t.len())
        .filter_map(|i| {
            let front = &g[..=i];
            let back = &h[i..];
            (!degenerate(front) && !degenerate(back)).then(|| ((front.to_vec(), back.to_vec()), 1))
        })
        .collect()
}

/// A box product together with the factor metrics, for maps on trails.
#[derive(Clone, Debug)]
pub struct BoxContext {
    pub product: BoxProduct,
    pub left: DistMatrix,
    pub right: DistMatrix,
    nh: usize,
}

impl BoxContext {
    pub fn new(g: &DiGraph, h: &DiGraph) -> Self {
        BoxContext {
            product: box_product(g, h),
            left: g.metric(),
            right: h.metric(),
            nh: h.vertex_count(),
        }
    }

    pub fn graph(&self) -> &DiGraph {
        &self.product.graph
    }

    /// Product vertex of `(g, h)`.
    pub fn vertex(&self, g: usize, h: usize) -> usize {
        g * self.nh + h
    }

    /// `∇` on trails; every output has length `ℓ(ξ) + ℓ(η)`.
    pub fn ez(&self, xi: &Trail, eta: &Trail) -> Vec<(Trail, i64)> {
        let len = xi.length() + eta.length();
        ez_map(xi.vertices(), eta.vertices(), self.nh)
            .into_iter()
            .map(|(t, s)| (Trail::from_parts(t, len), s))
            .collect()
    }

    /// `Δ` on trails; factor lengths never exceed the input length.
    pub fn aw(&self, t: &Trail) -> Vec<((Trail, Trail), i64)> {
        aw_map(t.vertices(), self.nh)
            .into_iter()
            .map(|((a, b), s)| {
                let a = Trail::new(a, &self.left).expect("front factor is a trail");
                let b = Trail::new(b, &self.right).expect("back factor is a trail");
                ((a, b), s)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn two_by_one_paths() {
        let paths = LatticePath::all(1, 1);
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].steps(), &[Step::Right, Step::Up]);
        assert_eq!(paths[0].sign(), 1);
        assert_eq!(paths[1].sign(), -1);
    }

    #[test]
    fn sign_descriptions_agree() {
        for k in 0..=8 {
            for k2 in 0..=8 - k {
                for p in LatticePath::all(k, k2) {
                    assert_eq!(p.points_below(), p.pairs_below(), "{p:?}");
                }
            }
        }
    }

    #[test]
    fn ez_examples() {
        // (g0)⊗(h0,h1) with nh = 2
        assert_eq!(ez_map(&[0], &[0, 1], 2), vec![(vec![0, 1], 1)]);
        assert_eq!(ez_map(&[0], &[0], 2), vec![(vec![0], 1)]);
        // g0=0, g1=1, h0=0, h1=1, nh=2: (g,h) ↦ 2g+h
        assert_eq!(
            ez_map(&[0, 1], &[0, 1], 2),
            vec![(vec![0, 1, 3], -1), (vec![0, 2, 3], 1)]
        );
    }

    #[test]
    fn aw_examples() {
        assert_eq!(aw_map(&[0], 2), vec![((vec![0], vec![0]), 1)]);
        assert_eq!(
            aw_map(&[0, 3], 2),
            vec![((vec![0], vec![0, 1]), 1), ((vec![0, 1], vec![1]), 1)]
        );
        let mut total: BTreeMap<(Vec<usize>, Vec<usize>), i64> = BTreeMap::new();
        for (t, s) in ez_map(&[0, 1], &[0, 1], 2) {
            for (pair, c) in aw_map(&t, 2) {
                *total.entry(pair).or_default() += s * c;
            }
        }
        total.retain(|_, c| *c != 0);
        assert_eq!(
            total.into_iter().collect::<Vec<_>>(),
            vec![((vec![0, 1], vec![0, 1]), 1)]
        );
    }
}
