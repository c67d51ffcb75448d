//! Reachability homology and the comparison with the limit page.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::engine::SpectralSequence;
use crate::chains::FilteredComplex;
use crate::digraph::DiGraph;
use crate::homalg::{homology_of_sparse_pair, CoefficientRing, HomologyGroup, Ring, SparseMatrix};
use crate::with_ring;

/// `k ↦ H_k(RC(G))` for `k ≤ k_max`. Degrees up to `k_max + 1` are built in
/// full, which is possible because every step of a trail is at most the
/// diameter.
pub fn reachability_homology(
    g: &DiGraph,
    k_max: usize,
    ring: Ring,
) -> BTreeMap<usize, HomologyGroup> {
    let diameter = g.metric().diameter();
    let l = if diameter == 0 {
        0
    } else {
        (k_max as u32 + 1) * diameter
    };
    let c = FilteredComplex::reachability_to_degree(g, l, k_max + 1);
    with_ring!(ring, k => rh_of(&c, &k, k_max))
}

fn rh_of<R: CoefficientRing>(
    c: &FilteredComplex,
    ring: &R,
    k_max: usize,
) -> BTreeMap<usize, HomologyGroup> {
    (0..=k_max)
        .map(|k| {
            let h = if k >= c.degree_count() {
                HomologyGroup::trivial()
            } else {
                let next = if k + 1 < c.degree_count() {
                    c.boundary(k + 1).clone()
                } else {
                    SparseMatrix::zero(c.cells(k).len(), 0)
                };
                homology_of_sparse_pair(ring, c.boundary(k), &next).expect("d∘d = 0")
            };
            (k, h)
        })
        .collect()
}

/// The limit page summed along one total degree, next to `RH_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct DegreeComparison {
    pub n: usize,
    pub limit: HomologyGroup,
    pub reachability: HomologyGroup,
    /// Free ranks coincide (over a field this is full equality).
    pub ranks_agree: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceReport {
    pub l_max: u32,
    /// The page standing in for `E^∞`.
    pub infinity_page: u32,
    /// Per `(p, q)`: the first page from which the entry stays constant on
    /// every page where it is exact.
    pub stable_from: BTreeMap<(i64, i64), u32>,
    /// The largest of `stable_from`.
    pub stabilization_page: u32,
    /// First page whose exact entries are those of a point: `R` at `(0,0)`
    /// and zero elsewhere.
    pub first_trivial_page: Option<u32>,
    /// Limit entries that are exact, keyed by `(p, q)`.
    pub limit: BTreeMap<(i64, i64), HomologyGroup>,
    /// Total degrees untouched by the truncation.
    pub degrees: Vec<DegreeComparison>,
}

pub fn convergence_report(g: &DiGraph, l_max: u32, ring: Ring) -> ConvergenceReport {
    let c = FilteredComplex::reachability(g, l_max);
    with_ring!(ring, k => report_of(&SpectralSequence::new(&k, c), g, ring))
}

fn report_of<R: CoefficientRing>(
    ss: &SpectralSequence<R>,
    g: &DiGraph,
    ring: Ring,
) -> ConvergenceReport {
    let top = ss.infinity_page();
    let pages: Vec<_> = (0..=top).map(|r| ss.page(r, false)).collect();
    let mut stable_from = BTreeMap::new();
    let mut limit = BTreeMap::new();
    for (p, n) in ss.window() {
        let q = n as i64 - p;
        let exact: Vec<u32> = (0..=top).filter(|&r| ss.is_exact(r, p, n)).collect();
        let last = *exact.last().expect("page 0 is exact");
        let value = pages[last as usize].group(p, q);
        let mut from = last;
        for &r in exact.iter().rev() {
            if pages[r as usize].group(p, q) != value {
                break;
            }
            from = r;
        }
        stable_from.insert((p, q), from);
        if last == top {
            limit.insert((p, q), value);
        }
    }
    let stabilization_page = stable_from.values().copied().max().unwrap_or(0);
    let first_trivial_page = pages
        .iter()
        .find(|page| {
            page.entries.values().filter(|e| e.exact).all(|e| {
                if (e.p, e.q) == (0, 0) {
                    e.group == HomologyGroup::free(1)
                } else {
                    e.group.is_trivial()
                }
            })
        })
        .map(|page| page.r);
    let complete: Vec<usize> = (0..=ss.l_max() as usize)
        .take_while(|&n| ss.degree_complete(n))
        .collect();
    let rh = complete
        .last()
        .map(|&k| reachability_homology(g, k, ring))
        .unwrap_or_default();
    let degrees = complete
        .iter()
        .map(|&n| {
            let parts: Vec<HomologyGroup> = limit
                .iter()
                .filter(|((p, q), _)| p + q == n as i64)
                .map(|(_, h)| h.clone())
                .collect();
            let limit = HomologyGroup::sum(&parts);
            let reachability = rh[&n].clone();
            let ranks_agree = limit.free_rank == reachability.free_rank;
            DegreeComparison {
                n,
                limit,
                reachability,
                ranks_agree,
            }
        })
        .collect();
    ConvergenceReport {
        l_max: ss.l_max(),
        infinity_page: top,
        stable_from,
        stabilization_page,
        first_trivial_page,
        limit,
        degrees,
    }
}
