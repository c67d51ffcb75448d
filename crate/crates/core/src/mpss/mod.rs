//! The magnitude-path spectral sequence: pages `E^r_{p,q}` of the length
//! filtration on the reachability complex, their differentials, relative
//! pages, induced maps, bigraded path homology and convergence.
//!
//! Coordinates: `p` is the filtration (length), `n = p + q` the degree, so
//! `E¹_{p,q} = MH_{p+q,p}` and `d^r: E^r_{p,q} → E^r_{p−r,q+r−1}`. Internally
//! entries are addressed by `(p, n)`; public tables use `(p, q)`.

mod convergence;
mod engine;
mod maps;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

pub use convergence::{
    convergence_report, reachability_homology, ConvergenceReport, DegreeComparison,
};
pub use engine::{EntryData, SpectralSequence};
pub use maps::{
    induced_page_map, induced_pair_page_map, page_maps_between, r_homotopy_page_agreement, PageMap,
    PageMapEntry,
};

use crate::chains::{rc_boundary, BoundaryMode, FilteredComplex, RelativeOptions, Trail};
use crate::digraph::DiGraph;
use crate::homalg::{presented_homology, CoefficientRing, HomologyGroup, Matrix, Rat, Ring};
use crate::with_ring;
use crate::Error;

/// A chain as a list of `(trail vertices, coefficient)`.
pub type Chain<T> = Vec<(Vec<usize>, T)>;

#[derive(Clone, Debug, PartialEq)]
pub struct PageEntry {
    pub p: i64,
    pub q: i64,
    pub group: HomologyGroup,
    pub exact: bool,
    /// One chain per generator, when requested.
    pub representatives: Option<Vec<Chain<Rat>>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Page {
    pub r: u32,
    pub l_max: u32,
    /// Every bidegree of the window `0 ≤ p+q ≤ p ≤ ℓ_max`, zero entries
    /// included.
    pub entries: BTreeMap<(i64, i64), PageEntry>,
    /// `d^r` out of `(p, q)` toward `(p−r, q+r−1)` on the chosen generators.
    pub differentials: BTreeMap<(i64, i64), Matrix<Rat>>,
}

impl Page {
    pub fn get(&self, p: i64, q: i64) -> Option<&PageEntry> {
        self.entries.get(&(p, q))
    }

    /// The group at `(p, q)`; trivial outside the window.
    pub fn group(&self, p: i64, q: i64) -> HomologyGroup {
        self.get(p, q)
            .map_or_else(HomologyGroup::trivial, |e| e.group.clone())
    }

    pub fn rank(&self, p: i64, q: i64) -> usize {
        self.get(p, q).map_or(0, |e| e.group.free_rank)
    }

    pub fn is_exact(&self, p: i64, q: i64) -> bool {
        self.get(p, q).is_none_or(|e| e.exact)
    }

    /// Entries with a nontrivial group.
    pub fn nonzero(&self) -> impl Iterator<Item = &PageEntry> {
        self.entries.values().filter(|e| !e.group.is_trivial())
    }
}

impl<R: CoefficientRing> SpectralSequence<R> {
    /// Every entry and differential of page `r` in the window.
    pub fn page(&self, r: u32, representatives: bool) -> Page {
        let mut ws = engine::Workspace::default();
        let mut entries = BTreeMap::new();
        let mut differentials = BTreeMap::new();
        for (p, n) in self.window() {
            let q = n as i64 - p;
            let data = self.entry_with(&mut ws, r, p, n, representatives);
            let representatives = representatives.then(|| {
                data.representatives
                    .iter()
                    .map(|v| dense_to_chain(self.ring(), self.complex(), n, v))
                    .collect()
            });
            entries.insert(
                (p, q),
                PageEntry {
                    p,
                    q,
                    group: data.group,
                    exact: self.is_exact(r, p, n),
                    representatives,
                },
            );
            let d = self.differential_with(&mut ws, r, p, n);
            differentials.insert((p, q), d.map(|x| self.ring().to_rat(x)));
        }
        Page {
            r,
            l_max: self.l_max(),
            entries,
            differentials,
        }
    }

    /// Whether `d^r` out of `(p, n)` is computed exactly.
    pub fn differential_exact(&self, r: u32, p: i64, n: usize) -> bool {
        self.is_exact(r, p, n) && (n == 0 || self.is_exact(r, p - r as i64, n - 1))
    }

    /// `H(E^r, d^r)` at `(p, n)`, from the presented entries and matrices.
    pub fn page_homology(&self, r: u32, p: i64, n: usize) -> HomologyGroup {
        let ring = self.ring();
        let mut ws = engine::Workspace::default();
        let mid = self.entry_with(&mut ws, r, p, n, false);
        let out_p = p - r as i64;
        let out = if n == 0 {
            None
        } else {
            Some(self.entry_with(&mut ws, r, out_p, n - 1, false))
        };
        let d_out = self.differential_with(&mut ws, r, p, n);
        let d_in = if n + 1 < self.complex().degree_count() {
            self.differential_with(&mut ws, r, p + r as i64, n + 1)
        } else {
            Matrix::zeros(ring, mid.orders.len(), 0)
        };
        let out_orders = out.map(|o| o.orders).unwrap_or_default();
        presented_homology(ring, &mid.orders, &d_in, &d_out, &out_orders).expect("d^r ∘ d^r = 0")
    }

    /// Converts a chain given by trail vertices into a dense vector over the
    /// degree-`n` cells.
    pub fn dense_chain(
        &self,
        n: usize,
        chain: &[(Vec<usize>, R::Elem)],
    ) -> Result<Vec<R::Elem>, Error> {
        let ring = self.ring();
        let c = self.complex();
        if n >= c.degree_count() {
            return Err(Error::DimensionMismatch("degree beyond truncation".into()));
        }
        let mut v = alloc::vec![ring.zero(); c.cells(n).len()];
        for (t, x) in chain {
            if t.len() != n + 1 {
                return Err(Error::InvalidTrail(alloc::format!(
                    "{t:?} has the wrong degree"
                )));
            }
            let i = c
                .index_of(n, t)
                .ok_or_else(|| Error::InvalidTrail(alloc::format!("{t:?} is not a cell")))?;
            v[i] = ring.add(&v[i], x);
        }
        Ok(v)
    }
}

fn dense_to_chain<R: CoefficientRing>(
    ring: &R,
    c: &FilteredComplex,
    n: usize,
    v: &[R::Elem],
) -> Chain<Rat> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !ring.is_zero(x))
        .map(|(i, x)| (c.cells(n)[i].vertices().to_vec(), ring.to_rat(x)))
        .collect()
}

/// Page `r` of `G` over `ring` with the complex truncated at length `ℓ_max`.
pub fn compute_page(g: &DiGraph, r: u32, l_max: u32, ring: Ring) -> Page {
    compute_pages(g, &[r], l_max, ring, false)
        .pop()
        .expect("one page")
}

/// Several pages sharing one complex.
pub fn compute_pages(
    g: &DiGraph,
    rs: &[u32],
    l_max: u32,
    ring: Ring,
    representatives: bool,
) -> Vec<Page> {
    let c = FilteredComplex::reachability(g, l_max);
    with_ring!(ring, k => {
        let ss = SpectralSequence::new(&k, c);
        rs.iter().map(|&r| ss.page(r, representatives)).collect()
    })
}

/// Page `r` of the pair `(X, A)`; `A` must be convex.
pub fn relative_page(
    x: &DiGraph,
    a: &[usize],
    r: u32,
    l_max: u32,
    ring: Ring,
) -> Result<Page, Error> {
    let c = FilteredComplex::relative(x, a, l_max, RelativeOptions::default())?;
    Ok(with_ring!(ring, k => SpectralSequence::new(&k, c).page(r, false)))
}

/// `PH_{k,ℓ} = E²_{ℓ,k−ℓ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BigradedPH {
    pub l_max: u32,
    /// `(k, ℓ) ↦ (group, exact)`.
    pub table: BTreeMap<(usize, u32), (HomologyGroup, bool)>,
}

impl BigradedPH {
    pub fn get(&self, k: usize, l: u32) -> HomologyGroup {
        self.table
            .get(&(k, l))
            .map_or_else(HomologyGroup::trivial, |e| e.0.clone())
    }

    /// Ordinary path homology `PH_k = PH_{k,k}`.
    pub fn ordinary(&self, k: usize) -> HomologyGroup {
        self.get(k, k as u32)
    }
}

pub fn bigraded_path_homology(g: &DiGraph, l_max: u32, ring: Ring) -> BigradedPH {
    bigraded_from_page(&compute_page(g, 2, l_max, ring))
}

pub fn bigraded_from_page(page: &Page) -> BigradedPH {
    let table = page
        .entries
        .values()
        .map(|e| {
            (
                ((e.p + e.q) as usize, e.p as u32),
                (e.group.clone(), e.exact),
            )
        })
        .collect();
    BigradedPH {
        l_max: page.l_max,
        table,
    }
}

/// The image of a magnitude class under `d¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct D1Image<T> {
    /// The magnitude cycle of length `p−1` produced by the recipe.
    pub chain: Chain<T>,
    /// Its coordinates on the generators of `E¹_{p−1,q}`.
    pub class: Vec<T>,
}

/// `d¹` of the class of a magnitude cycle of length `p` and degree `p+q`:
/// regard the cycle as a reachability chain, apply the full differential,
/// discard the terms of length at most `p−2`, and take the class of what
/// remains. Fails with [`Error::NotACycle`] unless the input is a magnitude
/// cycle of length `p`.
pub fn d1_on_class<R: CoefficientRing>(
    ss: &SpectralSequence<R>,
    chain: &[(Vec<usize>, R::Elem)],
    p: i64,
    q: i64,
) -> Result<D1Image<R::Elem>, Error> {
    let ring = ss.ring();
    let c = ss.complex();
    let n =
        usize::try_from(p + q).map_err(|_| Error::InvalidParameters("negative degree".into()))?;
    if p < 1 || p > c.l_max() as i64 {
        return Err(Error::InvalidParameters(
            "length outside the truncation".into(),
        ));
    }
    if n == 0 {
        return Err(Error::InvalidParameters(
            "degree 0 carries only length 0".into(),
        ));
    }
    let d = c.metric();
    let mode = BoundaryMode::Reachability;
    let mut magnitude_image: BTreeMap<Vec<usize>, R::Elem> = BTreeMap::new();
    let mut kept: BTreeMap<Vec<usize>, R::Elem> = BTreeMap::new();
    for (verts, x) in chain {
        let t = Trail::new(verts.clone(), d)?;
        if t.degree() != n || t.length() as i64 != p {
            return Err(Error::NotACycle);
        }
        for (face, s) in rc_boundary(&t, d, mode) {
            if c.index_of(n - 1, face.vertices()).is_none() {
                // faces removed in a relative complex
                continue;
            }
            let coeff = ring.mul(&ring.from_i64(s), x);
            let len = face.length() as i64;
            let target = if len == p {
                &mut magnitude_image
            } else if len == p - 1 {
                &mut kept
            } else {
                continue;
            };
            let e = target
                .entry(face.vertices().to_vec())
                .or_insert_with(|| ring.zero());
            *e = ring.add(e, &coeff);
        }
    }
    if magnitude_image.values().any(|x| !ring.is_zero(x)) {
        return Err(Error::NotACycle);
    }
    let image: Chain<R::Elem> = kept.into_iter().filter(|(_, x)| !ring.is_zero(x)).collect();
    let dense = ss.dense_chain(n - 1, &image)?;
    let class = ss.class_of(1, p - 1, n - 1, &dense)?;
    Ok(D1Image {
        chain: image,
        class,
    })
}

#[cfg(test)]
mod tests;
