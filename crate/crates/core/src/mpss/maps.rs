//! Maps of spectral sequences induced by graph maps and maps of pairs.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::engine::{apply_sparse, SpectralSequence};
use crate::chains::{FilteredComplex, RelativeOptions};
use crate::digraph::{r_homotopy_gap, GraphMap};
use crate::homalg::{is_isomorphism, CoefficientRing, Matrix, Rat, Ring, SparseMatrix};
use crate::with_ring;
use crate::Error;

#[derive(Clone, Debug, PartialEq)]
pub struct PageMapEntry {
    pub matrix: Matrix<Rat>,
    pub is_isomorphism: bool,
    /// Both source and target entries are exact.
    pub exact: bool,
}

/// The map induced on page `r`, keyed by `(p, q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PageMap {
    pub r: u32,
    pub entries: BTreeMap<(i64, i64), PageMapEntry>,
}

impl PageMap {
    pub fn get(&self, p: i64, q: i64) -> Option<&PageMapEntry> {
        self.entries.get(&(p, q))
    }
}

/// Pushes the generators of `source` through a chain map (per degree, over
/// the integers) and expresses them in `target`, entry by entry on page `r`.
pub fn page_maps_between<R: CoefficientRing>(
    source: &SpectralSequence<R>,
    target: &SpectralSequence<R>,
    chain_map: &[SparseMatrix<i64>],
    r: u32,
) -> Result<PageMap, Error> {
    let ring = source.ring();
    let mut entries = BTreeMap::new();
    for (p, n) in source.window() {
        let src = source.entry(r, p, n);
        let tgt = target.entry(r, p, n);
        let cols = src
            .representatives
            .iter()
            .map(|v| target.class_of(r, p, n, &apply_sparse(ring, &chain_map[n], v)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::NotWellDefined)?;
        let matrix = Matrix::from_fn(tgt.group.generator_count(), cols.len(), |i, j| {
            cols[j][i].clone()
        });
        let iso = is_isomorphism(ring, &src.group, &tgt.group, &tgt.orders, &matrix);
        let exact = source.is_exact(r, p, n) && target.is_exact(r, p, n);
        entries.insert(
            (p, n as i64 - p),
            PageMapEntry {
                matrix: matrix.map(|x| ring.to_rat(x)),
                is_isomorphism: iso,
                exact,
            },
        );
    }
    Ok(PageMap { r, entries })
}

/// The map `E^r(f): E^r(G) → E^r(H)`.
pub fn induced_page_map(f: &GraphMap, r: u32, l_max: u32, ring: Ring) -> Result<PageMap, Error> {
    let src = FilteredComplex::reachability(f.source(), l_max);
    let tgt = FilteredComplex::reachability(f.target(), l_max);
    let cm = src.chain_map(f, &tgt)?;
    with_ring!(ring, k => page_maps_between(&SpectralSequence::new(&k, src), &SpectralSequence::new(&k, tgt), &cm, r))
}

/// The map `E^r(X, A) → E^r(Y, B)` of a map of pairs with `f(A) ⊆ B`.
pub fn induced_pair_page_map(
    f: &GraphMap,
    a: &[usize],
    b: &[usize],
    r: u32,
    l_max: u32,
    ring: Ring,
) -> Result<PageMap, Error> {
    let src = FilteredComplex::relative(f.source(), a, l_max, RelativeOptions::default())?;
    let tgt = FilteredComplex::relative(f.target(), b, l_max, RelativeOptions::default())?;
    let cm = src.chain_map(f, &tgt)?;
    with_ring!(ring, k => page_maps_between(&SpectralSequence::new(&k, src), &SpectralSequence::new(&k, tgt), &cm, r))
}

/// Whether `f` and `g` induce the same map on every exact entry of page `s`.
/// Fails with [`Error::GapExceeded`] when the maps are not `r_claim`-homotopic.
pub fn r_homotopy_page_agreement(
    f: &GraphMap,
    g: &GraphMap,
    r_claim: u32,
    s: u32,
    l_max: u32,
    ring: Ring,
) -> Result<bool, Error> {
    let gap = r_homotopy_gap(f, g)?;
    if gap.finite().is_none_or(|x| x > r_claim) {
        return Err(Error::GapExceeded {
            gap,
            claim: r_claim,
        });
    }
    let mf = induced_page_map(f, s, l_max, ring)?;
    let mg = induced_page_map(g, s, l_max, ring)?;
    Ok(mf
        .entries
        .iter()
        .all(|(k, e)| !e.exact || e.matrix == mg.entries[k].matrix))
}
