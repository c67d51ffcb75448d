//! Künneth comparisons for box products and the Eilenberg–Zilber pairing on
//! pages.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::paths::ez_map;
use super::tensor::{tensor_page, TensorGenerator};
use crate::chains::{magnitude_homology, FilteredComplex};
use crate::digraph::{box_product, DiGraph};
use crate::homalg::{is_isomorphism, CoefficientRing, HomologyGroup, Matrix, Rat, Ring};
use crate::mpss::{compute_pages, Page, PageMapEntry, SpectralSequence};
use crate::with_ring;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KunnethLevel {
    /// `MH_{k,ℓ}`.
    Magnitude,
    /// Ordinary path homology `PH_k`.
    OrdinaryPath,
    /// `PH_{k,ℓ}`, i.e. page 2.
    BigradedPath,
    Page(u32),
}

/// One bidegree: the product side, the tensor term and the Tor term.
#[derive(Clone, Debug, PartialEq)]
pub struct KunnethLine {
    /// `(k, ℓ)` for homology levels, `(p, q)` for pages.
    pub index: (i64, i64),
    pub product: HomologyGroup,
    pub tensor: HomologyGroup,
    pub tor: HomologyGroup,
    /// `product ≅ tensor ⊕ tor`.
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct KunnethReport {
    pub level: KunnethLevel,
    pub ring: Ring,
    pub lines: Vec<KunnethLine>,
    /// Flatness hypotheses that failed; when nonempty nothing is asserted.
    pub hypothesis_failures: Vec<String>,
}

impl KunnethReport {
    /// `Some(all lines hold)` when the hypotheses are met.
    pub fn verdict(&self) -> Option<bool> {
        self.hypothesis_failures
            .is_empty()
            .then(|| self.lines.iter().all(|l| l.holds))
    }
}

fn line(
    index: (i64, i64),
    product: HomologyGroup,
    tensor: Vec<HomologyGroup>,
    tor: Vec<HomologyGroup>,
) -> KunnethLine {
    let tensor = HomologyGroup::sum(&tensor);
    let tor = HomologyGroup::sum(&tor);
    let holds = product == tensor.direct_sum(&tor);
    KunnethLine {
        index,
        product,
        tensor,
        tor,
        holds,
    }
}

/// Compares an invariant of `G□H` with the Künneth formula in the factors,
/// over bidegrees the truncation at `ℓ_max` computes exactly.
pub fn kunneth_check(
    g: &DiGraph,
    h: &DiGraph,
    level: KunnethLevel,
    ring: Ring,
    l_max: u32,
) -> KunnethReport {
    let gh = box_product(g, h).graph;
    let mut lines = Vec::new();
    let mut hypothesis_failures = Vec::new();
    match level {
        KunnethLevel::Magnitude => {
            let (a, b, c) = (
                magnitude_homology(g, l_max, ring),
                magnitude_homology(h, l_max, ring),
                magnitude_homology(&gh, l_max, ring),
            );
            let get = |t: &BTreeMap<(usize, u32), HomologyGroup>, k: i64, l: i64| {
                if k < 0 || l < 0 {
                    return HomologyGroup::trivial();
                }
                t.get(&(k as usize, l as u32)).cloned().unwrap_or_default()
            };
            for (&(k, l), direct) in &c {
                let (k, l) = (k as i64, l as i64);
                let mut tensor = Vec::new();
                let mut tor = Vec::new();
                for l1 in 0..=l {
                    for k1 in 0..=k {
                        tensor.push(get(&a, k1, l1).tensor(&get(&b, k - k1, l - l1)));
                        tor.push(get(&a, k1, l1).tor(&get(&b, k - 1 - k1, l - l1)));
                    }
                }
                lines.push(line((k, l), direct.clone(), tensor, tor));
            }
        }
        KunnethLevel::OrdinaryPath => {
            let pages: Vec<Page> = [g, h, &gh]
                .iter()
                .map(|x| compute_pages(x, &[2], l_max, ring, false).remove(0))
                .collect();
            let ph = |page: &Page, k: i64| {
                if k < 0 {
                    HomologyGroup::trivial()
                } else {
                    page.group(k, 0)
                }
            };
            for k in 0..l_max as i64 {
                if !pages[2].is_exact(k, 0) {
                    continue;
                }
                let tensor = (0..=k)
                    .map(|i| ph(&pages[0], i).tensor(&ph(&pages[1], k - i)))
                    .collect();
                let tor = (0..k)
                    .map(|i| ph(&pages[0], i).tor(&ph(&pages[1], k - 1 - i)))
                    .collect();
                lines.push(line((k, k), ph(&pages[2], k), tensor, tor));
            }
        }
        KunnethLevel::BigradedPath | KunnethLevel::Page(_) => {
            let r = if let KunnethLevel::Page(r) = level {
                r
            } else {
                2
            };
            let rs: Vec<u32> = (1..=r.max(1)).collect();
            let pg = compute_pages(g, &rs, l_max, ring, false);
            let ph = compute_pages(h, &rs, l_max, ring, false);
            let product = compute_pages(&gh, &[r], l_max, ring, false).remove(0);
            if r >= 1 && !ring.is_field() {
                for (name, pages) in [("left", &pg), ("right", &ph)] {
                    for page in pages.iter() {
                        if let Some(e) = page
                            .entries
                            .values()
                            .find(|e| e.exact && !e.group.is_free())
                        {
                            hypothesis_failures.push(format!(
                                "{name} factor has torsion {} on page {} at ({},{})",
                                e.group, page.r, e.p, e.q
                            ));
                        }
                    }
                }
            }
            let (left, right) = if r == 0 {
                let rest = compute_pages(g, &[0], l_max, ring, false).remove(0);
                (rest, compute_pages(h, &[0], l_max, ring, false).remove(0))
            } else {
                (pg[r as usize - 1].clone(), ph[r as usize - 1].clone())
            };
            let t = tensor_page(&left, &right);
            for (&(p, q), e) in &product.entries {
                let te = &t.entries[&(p, q)];
                if !e.exact || !te.exact {
                    continue;
                }
                let index = if level == KunnethLevel::BigradedPath {
                    (p + q, p)
                } else {
                    (p, q)
                };
                lines.push(line(
                    index,
                    e.group.clone(),
                    vec![te.group.clone()],
                    Vec::new(),
                ));
            }
        }
    }
    KunnethReport {
        level,
        ring,
        lines,
        hypothesis_failures,
    }
}

/// `∇^r: (E^r(G) ⊗ E^r(H))_{p,q} → E^r(G□H)_{p,q}` on generators.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingReport {
    pub r: u32,
    pub entries: BTreeMap<(i64, i64), PageMapEntry>,
    /// `∇^r` commutes with `d^r⊗` and `d^r` on every bidegree.
    pub commutes: bool,
}

/// The map on pages induced by the Eilenberg–Zilber map. Factor entries must
/// be free (always true over a field).
pub fn ez_pairing_on_page(
    g: &DiGraph,
    h: &DiGraph,
    r: u32,
    ring: Ring,
    l_max: u32,
) -> Result<PairingReport, Error> {
    with_ring!(ring, k => pairing(&k, g, h, r, l_max))
}

fn pairing<R: CoefficientRing>(
    ring: &R,
    g: &DiGraph,
    h: &DiGraph,
    r: u32,
    l_max: u32,
) -> Result<PairingReport, Error> {
    let bx = box_product(g, h);
    let nh = h.vertex_count();
    let sg = SpectralSequence::new(ring, FilteredComplex::reachability(g, l_max));
    let sh = SpectralSequence::new(ring, FilteredComplex::reachability(h, l_max));
    let sp = SpectralSequence::new(ring, FilteredComplex::reachability(&bx.graph, l_max));
    let (pg, ph, pp) = (sg.page(r, false), sh.page(r, false), sp.page(r, false));
    if pg
        .entries
        .values()
        .chain(ph.entries.values())
        .any(|e| !e.group.is_free())
    {
        return Err(Error::InvalidParameters(
            "the pairing needs torsion-free factor pages".into(),
        ));
    }
    let tp = tensor_page(&pg, &ph);
    // representatives of factor generators, per (p, n)
    let reps =
        |ss: &SpectralSequence<R>, p: i64, q: i64| ss.entry(r, p, (p + q) as usize).representatives;
    let mut gcache: BTreeMap<(i64, i64), Vec<Vec<R::Elem>>> = BTreeMap::new();
    let mut hcache: BTreeMap<(i64, i64), Vec<Vec<R::Elem>>> = BTreeMap::new();
    let mut entries = BTreeMap::new();
    let mut matrices: BTreeMap<(i64, i64), Matrix<R::Elem>> = BTreeMap::new();
    for (&(p, q), te) in &tp.entries {
        let n = (p + q) as usize;
        let width = sp.complex().cells(n).len();
        let mut cols = Vec::with_capacity(te.generators.len());
        for TensorGenerator {
            left,
            left_index,
            right,
            right_index,
        } in &te.generators
        {
            let a = &gcache
                .entry(*left)
                .or_insert_with(|| reps(&sg, left.0, left.1))[*left_index];
            let b = &hcache
                .entry(*right)
                .or_insert_with(|| reps(&sh, right.0, right.1))[*right_index];
            let (na, nb) = ((left.0 + left.1) as usize, (right.0 + right.1) as usize);
            let mut chain = vec![ring.zero(); width];
            for (i, x) in a.iter().enumerate().filter(|(_, x)| !ring.is_zero(x)) {
                let xi = sg.complex().cells(na)[i].vertices();
                for (j, y) in b.iter().enumerate().filter(|(_, y)| !ring.is_zero(y)) {
                    let eta = sh.complex().cells(nb)[j].vertices();
                    let xy = ring.mul(x, y);
                    for (t, s) in ez_map(xi, eta, nh) {
                        let c = sp
                            .complex()
                            .index_of(n, &t)
                            .expect("shuffles of cells are cells");
                        chain[c] = ring.add_mul(&chain[c], &ring.from_i64(s), &xy);
                    }
                }
            }
            cols.push(sp.class_of(r, p, n, &chain)?);
        }
        let target = pp.group(p, q);
        let m = Matrix::from_fn(target.generator_count(), cols.len(), |i, j| {
            cols[j][i].clone()
        });
        let iso = is_isomorphism(
            ring,
            &te.group,
            &target,
            &vec![None; target.generator_count()],
            &m,
        );
        let exact = te.exact && pp.is_exact(p, q);
        entries.insert(
            (p, q),
            PageMapEntry {
                matrix: m.map(|x| ring.to_rat(x)),
                is_isomorphism: iso,
                exact,
            },
        );
        matrices.insert((p, q), m);
    }
    // d ∘ ∇ = ∇ ∘ d⊗, compared in the coefficient ring
    let from_rat = |m: &Matrix<Rat>| m.map(|x| rat_in(ring, x));
    let ri = r as i64;
    let commutes = matrices.iter().all(|(&(p, q), m)| {
        let Some(m_target) = matrices.get(&(p - ri, q + ri - 1)) else {
            return true;
        };
        let dp = sp.differential(r, p, (p + q) as usize);
        let dt = from_rat(&tp.differentials[&(p, q)]);
        let lhs = dp.mul_in(ring, m).expect("shapes");
        let rhs = m_target.mul_in(ring, &dt).expect("shapes");
        lhs == rhs
    });
    Ok(PairingReport {
        r,
        entries,
        commutes,
    })
}

/// A matrix entry produced from elements of `ring` back as an element.
fn rat_in<R: CoefficientRing>(ring: &R, x: &Rat) -> R::Elem {
    let num = ring.from_int(x.numer());
    let den = ring.from_int(x.denom());
    ring.exact_div(&num, &den).expect("integral entry")
}
