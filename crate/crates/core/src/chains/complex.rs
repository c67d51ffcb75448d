//! The length-filtered reachability complex, truncated at a maximal length,
//! in absolute or relative form.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use super::trail::{for_each_trail, membership, rc_boundary, BoundaryMode, Trail};
use crate::digraph::{is_convex, DiGraph, DistMatrix, GraphMap};
use crate::homalg::{FilteredBoundary, SparseMatrix};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexMode {
    Reachability,
    /// Quotient by the trails lying wholly in the subgraph on these vertices.
    Relative {
        subgraph: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RelativeOptions {
    /// Also require that no edge enters the subgraph from outside, which makes
    /// the magnitude-chain sequence of the pair split.
    pub require_no_entry: bool,
}

/// `F_{l_max} RC(G)` (or its relative version) with cells in each degree
/// ordered by length, then lexicographically.
#[derive(Clone, Debug)]
pub struct FilteredComplex {
    graph: DiGraph,
    metric: DistMatrix,
    l_max: u32,
    mode: ComplexMode,
    cells: Vec<Vec<Trail>>,
    lengths: Vec<Vec<u32>>,
    index: Vec<BTreeMap<Vec<usize>, usize>>,
    boundaries: Vec<SparseMatrix<i64>>,
}

/// Sparse triplet export of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBundle {
    /// Per degree: vertex tuples with their lengths.
    pub bases: Vec<Vec<(Vec<usize>, u32)>>,
    /// Per degree `k ≥ 1`: `(row, col, value)` of `d_k`.
    pub differentials: Vec<Vec<(usize, usize, i64)>>,
}

impl FilteredComplex {
    pub fn reachability(g: &DiGraph, l_max: u32) -> Self {
        Self::build(
            g,
            l_max,
            l_max as usize + 1,
            None,
            ComplexMode::Reachability,
        )
    }

    /// `F_{l_max} RC(G)` cut off above degree `max_degree`.
    pub fn reachability_to_degree(g: &DiGraph, l_max: u32, max_degree: usize) -> Self {
        Self::build(
            g,
            l_max,
            max_degree.min(l_max as usize + 1),
            None,
            ComplexMode::Reachability,
        )
    }

    /// The quotient `RC(X)/RC(A)`; fails unless `A` is convex in `X` (and, if
    /// requested, has no incoming edges from outside).
    pub fn relative(
        x: &DiGraph,
        a: &[usize],
        l_max: u32,
        opts: RelativeOptions,
    ) -> Result<Self, Error> {
        let member = membership(x.vertex_count(), a)?;
        if opts.require_no_entry {
            if let Some((u, v)) = x.proper_edges().find(|&(u, v)| !member[u] && member[v]) {
                return Err(Error::EdgeIntoSubgraph(u, v));
            }
        }
        check_convex(x, a)?;
        let mut sub: Vec<usize> = a.to_vec();
        sub.sort_unstable();
        sub.dedup();
        Ok(Self::build(
            x,
            l_max,
            l_max as usize + 1,
            Some(&member),
            ComplexMode::Relative { subgraph: sub },
        ))
    }

    fn build(
        g: &DiGraph,
        l_max: u32,
        top: usize,
        member: Option<&[bool]>,
        mode: ComplexMode,
    ) -> Self {
        let metric = g.metric();
        let mut by_degree: Vec<Vec<Trail>> = vec![Vec::new(); top + 1];
        for_each_trail(&metric, top, l_max, |t, len| {
            if member.is_some_and(|m| t.iter().all(|&v| m[v])) {
                return;
            }
            by_degree[t.len() - 1].push(Trail::from_parts(t.to_vec(), len));
        });
        for cells in &mut by_degree {
            // enumeration is lexicographic; a stable sort keeps it within lengths
            cells.sort_by_key(Trail::length);
        }
        let lengths: Vec<Vec<u32>> = by_degree
            .iter()
            .map(|c| c.iter().map(Trail::length).collect())
            .collect();
        let index: Vec<BTreeMap<Vec<usize>, usize>> = by_degree
            .iter()
            .map(|c| {
                c.iter()
                    .enumerate()
                    .map(|(i, t)| (t.vertices().to_vec(), i))
                    .collect()
            })
            .collect();
        let mode_b = match member {
            Some(m) => BoundaryMode::Relative(m),
            None => BoundaryMode::Reachability,
        };
        let mut boundaries = Vec::with_capacity(by_degree.len());
        boundaries.push(SparseMatrix::zero(0, by_degree[0].len()));
        for k in 1..by_degree.len() {
            let cols = by_degree[k]
                .iter()
                .map(|t| {
                    let mut col: Vec<(usize, i64)> = rc_boundary(t, &metric, mode_b)
                        .into_iter()
                        .map(|(f, s)| {
                            (
                                *index[k - 1]
                                    .get(f.vertices())
                                    .expect("faces stay in the truncation"),
                                s,
                            )
                        })
                        .collect();
                    col.sort_unstable_by_key(|e| e.0);
                    col
                })
                .collect();
            boundaries.push(SparseMatrix::new(by_degree[k - 1].len(), cols));
        }
        FilteredComplex {
            graph: g.clone(),
            metric,
            l_max,
            mode,
            cells: by_degree,
            lengths,
            index,
            boundaries,
        }
    }

    pub fn graph(&self) -> &DiGraph {
        &self.graph
    }

    pub fn metric(&self) -> &DistMatrix {
        &self.metric
    }

    pub fn l_max(&self) -> u32 {
        self.l_max
    }

    pub fn mode(&self) -> &ComplexMode {
        &self.mode
    }

    /// Number of stored degrees (`l_max + 2`; the top one is empty).
    pub fn degree_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self, k: usize) -> &[Trail] {
        self.cells.get(k).map_or(&[], |c| c.as_slice())
    }

    pub fn lengths(&self, k: usize) -> &[u32] {
        self.lengths.get(k).map_or(&[], |c| c.as_slice())
    }

    pub fn cell_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// `d_k: C_k → C_{k−1}`.
    pub fn boundary(&self, k: usize) -> &SparseMatrix<i64> {
        &self.boundaries[k]
    }

    pub fn index_of(&self, k: usize, vertices: &[usize]) -> Option<usize> {
        self.index.get(k)?.get(vertices).copied()
    }

    /// Number of degree-`k` cells of length at most `l` (negative `l` gives 0).
    pub fn level_end(&self, k: usize, l: i64) -> usize {
        if l < 0 {
            return 0;
        }
        self.lengths(k).partition_point(|&x| i64::from(x) <= l)
    }

    /// Cells of degree `k` and length exactly `l`.
    pub fn level_range(&self, k: usize, l: u32) -> Range<usize> {
        let lens = self.lengths(k);
        lens.partition_point(|&x| x < l)..lens.partition_point(|&x| x <= l)
    }

    /// The magnitude differential `MC_{k,l} → MC_{k−1,l}`.
    pub fn magnitude_differential(&self, k: usize, l: u32) -> SparseMatrix<i64> {
        let cols = self.level_range(k, l);
        if k == 0 {
            return SparseMatrix::zero(0, cols.len());
        }
        if k >= self.degree_count() {
            return SparseMatrix::zero(self.level_range(k - 1, l).len(), 0);
        }
        self.boundaries[k].submatrix(self.level_range(k - 1, l), cols)
    }

    pub fn filtered_boundary(&self) -> FilteredBoundary {
        FilteredBoundary {
            filtrations: self.lengths.clone(),
            boundaries: self.boundaries.clone(),
        }
    }

    pub fn bundle(&self) -> ComplexBundle {
        ComplexBundle {
            bases: self
                .cells
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|t| (t.vertices().to_vec(), t.length()))
                        .collect()
                })
                .collect(),
            differentials: self
                .boundaries
                .iter()
                .skip(1)
                .map(|m| {
                    m.columns()
                        .iter()
                        .enumerate()
                        .flat_map(|(j, col)| col.iter().map(move |&(i, v)| (i, j, v)))
                        .collect()
                })
                .collect(),
        }
    }

    /// Per degree, the matrix of `RC(f)` from this complex to `target`: a trail
    /// goes to its image tuple, or to zero if that has repeated consecutive
    /// entries or is absent from the (relative) target.
    pub fn chain_map(
        &self,
        f: &GraphMap,
        target: &FilteredComplex,
    ) -> Result<Vec<SparseMatrix<i64>>, Error> {
        if f.source() != &self.graph || f.target() != &target.graph {
            return Err(Error::MismatchedMaps);
        }
        if let (ComplexMode::Relative { subgraph: a }, ComplexMode::Relative { subgraph: b }) =
            (&self.mode, &target.mode)
        {
            let mb = membership(target.graph.vertex_count(), b)?;
            if a.iter().any(|&v| !mb[f.apply(v)]) {
                return Err(Error::NotWellDefined);
            }
        } else if matches!(self.mode, ComplexMode::Relative { .. }) {
            return Err(Error::NotWellDefined);
        }
        if target.l_max < self.l_max {
            return Err(Error::DimensionMismatch(
                "target truncation is shorter".into(),
            ));
        }
        let target_rel = matches!(target.mode, ComplexMode::Relative { .. });
        let mut out = Vec::with_capacity(self.degree_count());
        for k in 0..self.degree_count() {
            let mut cols = Vec::with_capacity(self.cells[k].len());
            for t in &self.cells[k] {
                let img: Vec<usize> = t.vertices().iter().map(|&v| f.apply(v)).collect();
                if img.windows(2).any(|w| w[0] == w[1]) {
                    cols.push(Vec::new());
                    continue;
                }
                match target.index_of(k, &img) {
                    Some(i) => cols.push(vec![(i, 1)]),
                    None if target_rel => cols.push(Vec::new()),
                    None => {
                        return Err(Error::InvalidTrail(
                            "image trail missing from target".into(),
                        ))
                    }
                }
            }
            out.push(SparseMatrix::new(target.cells(k).len(), cols));
        }
        Ok(out)
    }

    /// The splitting `p: MC(X) → MC(A)` keeping trails whose last entry lies
    /// in `A`; `sub` must be the absolute complex of the induced subgraph on
    /// `a` (vertices renumbered in increasing order). Requires no edges
    /// entering `A` from outside.
    pub fn splitting_map(
        &self,
        a: &[usize],
        sub: &FilteredComplex,
    ) -> Result<Vec<SparseMatrix<i64>>, Error> {
        let member = membership(self.graph.vertex_count(), a)?;
        if let Some((u, v)) = self
            .graph
            .proper_edges()
            .find(|&(u, v)| !member[u] && member[v])
        {
            return Err(Error::EdgeIntoSubgraph(u, v));
        }
        let mut order: Vec<usize> = a.to_vec();
        order.sort_unstable();
        order.dedup();
        let mut rename = vec![usize::MAX; self.graph.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            rename[v] = i;
        }
        let mut out = Vec::with_capacity(self.degree_count());
        for k in 0..self.degree_count() {
            let mut cols = Vec::with_capacity(self.cells[k].len());
            for t in &self.cells[k] {
                if !member[t.last()] {
                    cols.push(Vec::new());
                    continue;
                }
                let img: Vec<usize> = t.vertices().iter().map(|&v| rename[v]).collect();
                let i = sub.index_of(k, &img).ok_or_else(|| {
                    Error::InvalidTrail("trail ending in the subgraph is not inside it".into())
                })?;
                cols.push(vec![(i, 1)]);
            }
            out.push(SparseMatrix::new(sub.cells(k).len(), cols));
        }
        Ok(out)
    }
}

fn check_convex(x: &DiGraph, a: &[usize]) -> Result<(), Error> {
    if is_convex(x, a)? {
        return Ok(());
    }
    let (sub, inc) = crate::digraph::induced_subgraph(x, a)?;
    let dx = x.metric();
    let da = sub.metric();
    for i in 0..sub.vertex_count() {
        for j in 0..sub.vertex_count() {
            if da.get(i, j) != dx.get(inc.apply(i), inc.apply(j)) {
                return Err(Error::NotConvex(inc.apply(i), inc.apply(j)));
            }
        }
    }
    unreachable!("non-convex subgraph has a witnessing pair")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{bidirected_cycle, cone, directed_cycle, sphere};

    fn assert_dd_zero(c: &FilteredComplex) {
        for k in 1..c.degree_count() - 1 {
            let a = c.boundary(k).to_dense(0);
            let b = c.boundary(k + 1).to_dense(0);
            for i in 0..a.rows() {
                for j in 0..b.cols() {
                    let s: i64 = (0..a.cols()).map(|m| a.get(i, m) * b.get(m, j)).sum();
                    assert_eq!(s, 0);
                }
            }
        }
    }

    #[test]
    fn dd_zero_and_filtration() {
        for g in [
            directed_cycle(3).unwrap(),
            bidirected_cycle(3, 2).unwrap(),
            sphere(1).unwrap(),
        ] {
            let c = FilteredComplex::reachability(&g, 4);
            assert_dd_zero(&c);
            for k in 1..c.degree_count() {
                for (j, col) in c.boundary(k).columns().iter().enumerate() {
                    for &(i, _) in col {
                        assert!(c.lengths(k - 1)[i] <= c.lengths(k)[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn relative_modes() {
        let x = bidirected_cycle(4, 3).unwrap();
        let abs = FilteredComplex::reachability(&x, 5);
        let rel = FilteredComplex::relative(&x, &[], 5, RelativeOptions::default()).unwrap();
        assert_eq!(abs.cell_count(), rel.cell_count());
        let rel = FilteredComplex::relative(
            &x,
            &[0, 5, 6],
            5,
            RelativeOptions {
                require_no_entry: true,
            },
        )
        .unwrap();
        assert_dd_zero(&rel);
        // two vertices of Z_4 at distance 2 with no path inside the subgraph
        let z4 = directed_cycle(4).unwrap();
        assert_eq!(
            FilteredComplex::relative(&z4, &[0, 2], 4, RelativeOptions::default()).unwrap_err(),
            Error::NotConvex(0, 2)
        );
        let c = cone(&z4);
        assert!(matches!(
            FilteredComplex::relative(
                &c.graph,
                &[4, 5, 6, 7],
                4,
                RelativeOptions {
                    require_no_entry: true
                }
            ),
            Err(Error::EdgeIntoSubgraph(..))
        ));
    }

    #[test]
    fn identity_chain_map() {
        let g = directed_cycle(3).unwrap();
        let c = FilteredComplex::reachability(&g, 4);
        let m = c.chain_map(&GraphMap::identity(&g), &c).unwrap();
        for (k, mat) in m.iter().enumerate() {
            for (j, col) in mat.columns().iter().enumerate() {
                assert_eq!(col, &vec![(j, 1)], "degree {k}");
            }
        }
    }
}
