//! Magnitude chain complexes (the associated graded of the length filtration),
//! their endpoint decomposition and magnitude homology.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::complex::FilteredComplex;
use super::trail::Trail;
use crate::digraph::DiGraph;
use crate::homalg::{homology_of_sparse_pair, CoefficientRing, HomologyGroup, Ring, SparseMatrix};
use crate::with_ring;

/// `MC_{*,l}`: bases per degree `0..=l+1` and differentials `d_k: MC_k → MC_{k−1}`.
#[derive(Clone, Debug)]
pub struct MagnitudeComplex {
    pub length: u32,
    pub bases: Vec<Vec<Trail>>,
    pub differentials: Vec<SparseMatrix<i64>>,
}

impl MagnitudeComplex {
    pub fn homology<R: CoefficientRing>(&self, ring: &R, k: usize) -> HomologyGroup {
        let top = self.bases.len();
        let empty = |r: usize, c: usize| SparseMatrix::zero(r, c);
        let dk = if k < top {
            self.differentials[k].clone()
        } else {
            empty(0, 0)
        };
        let dk1 = if k + 1 < top {
            self.differentials[k + 1].clone()
        } else {
            empty(self.bases.get(k).map_or(0, Vec::len), 0)
        };
        homology_of_sparse_pair(ring, &dk, &dk1).expect("magnitude differentials compose to zero")
    }
}

/// Slices `MC_{*,l}` out of a reachability complex truncated at length `≥ l`.
pub fn magnitude_slice(c: &FilteredComplex, l: u32) -> MagnitudeComplex {
    assert!(l <= c.l_max(), "length beyond truncation");
    let top = (l as usize + 2).min(c.degree_count());
    let bases = (0..top)
        .map(|k| c.cells(k)[c.level_range(k, l)].to_vec())
        .collect();
    let differentials = (0..top).map(|k| c.magnitude_differential(k, l)).collect();
    MagnitudeComplex {
        length: l,
        bases,
        differentials,
    }
}

pub fn magnitude_complex(g: &DiGraph, l: u32) -> MagnitudeComplex {
    magnitude_slice(&FilteredComplex::reachability(g, l), l)
}

/// The summands of `MC_{*,l}` spanned by trails from `a` to `b`; the
/// magnitude differential preserves both endpoints.
pub fn endpoint_decomposition(g: &DiGraph, l: u32) -> BTreeMap<(usize, usize), MagnitudeComplex> {
    endpoint_blocks(&magnitude_complex(g, l))
}

pub fn endpoint_blocks(mc: &MagnitudeComplex) -> BTreeMap<(usize, usize), MagnitudeComplex> {
    let top = mc.bases.len();
    // per endpoint pair and degree: positions in the full basis
    let mut members: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    for (k, basis) in mc.bases.iter().enumerate() {
        for (i, t) in basis.iter().enumerate() {
            members
                .entry((t.first(), t.last()))
                .or_insert_with(|| alloc::vec![Vec::new(); top])[k]
                .push(i);
        }
    }
    let mut out = BTreeMap::new();
    for (key, idx) in members {
        let mut local: Vec<BTreeMap<usize, usize>> = Vec::with_capacity(top);
        for list in &idx {
            local.push(list.iter().enumerate().map(|(p, &i)| (i, p)).collect());
        }
        let bases: Vec<Vec<Trail>> = idx
            .iter()
            .enumerate()
            .map(|(k, list)| list.iter().map(|&i| mc.bases[k][i].clone()).collect())
            .collect();
        let mut differentials = Vec::with_capacity(top);
        differentials.push(SparseMatrix::zero(0, idx[0].len()));
        for k in 1..top {
            let cols = idx[k]
                .iter()
                .map(|&j| {
                    mc.differentials[k]
                        .column(j)
                        .iter()
                        .map(|&(i, v)| (*local[k - 1].get(&i).expect("endpoints preserved"), v))
                        .collect()
                })
                .collect();
            differentials.push(SparseMatrix::new(idx[k - 1].len(), cols));
        }
        out.insert(
            key,
            MagnitudeComplex {
                length: mc.length,
                bases,
                differentials,
            },
        );
    }
    out
}

/// `(k, l) ↦ MH_{k,l}` for all `l ≤ l_max`, `k ≤ l`.
pub type MagnitudeTable = BTreeMap<(usize, u32), HomologyGroup>;

pub fn magnitude_homology(g: &DiGraph, l_max: u32, ring: Ring) -> MagnitudeTable {
    let c = FilteredComplex::reachability(g, l_max);
    with_ring!(ring, r => magnitude_homology_of(&c, &r))
}

/// Magnitude homology of an (absolute or relative) complex, summed over
/// endpoint blocks.
pub fn magnitude_homology_of<R: CoefficientRing>(c: &FilteredComplex, ring: &R) -> MagnitudeTable {
    let mut out = MagnitudeTable::new();
    for l in 0..=c.l_max() {
        let mc = magnitude_slice(c, l);
        let blocks = endpoint_blocks(&mc);
        for k in 0..=l as usize {
            let groups: Vec<HomologyGroup> = blocks.values().map(|b| b.homology(ring, k)).collect();
            out.insert((k, l), HomologyGroup::sum(&groups));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{bidirected_cycle, directed_cycle};
    use crate::homalg::Rationals;

    #[test]
    fn cycle_table() {
        let t = magnitude_homology(&directed_cycle(4).unwrap(), 9, Ring::Integers);
        for ((k, l), g) in &t {
            let expected = (0..=2).any(|i| {
                (*k, *l) == (2 * i, 4 * i as u32) || (*k, *l) == (2 * i + 1, 4 * i as u32 + 1)
            });
            assert_eq!(
                g,
                &if expected {
                    HomologyGroup::free(4)
                } else {
                    HomologyGroup::trivial()
                },
                "({k},{l})"
            );
        }
    }

    #[test]
    fn bicycle_mu() {
        for m in 3..=5u32 {
            let t = magnitude_homology(
                &bidirected_cycle(m as usize, 1).unwrap(),
                m,
                Ring::Rationals,
            );
            assert_eq!(t[&(2, m)], HomologyGroup::free(1));
        }
    }

    #[test]
    fn endpoint_blocks_partition() {
        let g = bidirected_cycle(3, 2).unwrap();
        for l in 0..=5 {
            let mc = magnitude_complex(&g, l);
            let blocks = endpoint_decomposition(&g, l);
            for k in 0..mc.bases.len() {
                let total: usize = blocks.values().map(|b| b.bases[k].len()).sum();
                assert_eq!(total, mc.bases[k].len());
            }
        }
        let m = 4;
        let blocks = endpoint_decomposition(&bidirected_cycle(m, 1).unwrap(), m as u32);
        for ((a, b), block) in &blocks {
            let ranks: Vec<usize> = (0..block.bases.len())
                .map(|k| block.homology(&Rationals, k).free_rank)
                .collect();
            if (*a, *b) == (0, m) {
                assert_eq!(ranks.iter().sum::<usize>(), 1);
                assert_eq!(ranks[2], 1);
            } else {
                assert!(ranks.iter().all(|&r| r == 0), "({a},{b})");
            }
        }
    }
}
