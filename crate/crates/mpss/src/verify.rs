//! Verification suites: closed-form and structural claims about directed
//! cycles, bi-directed cycles, spheres, box products, pushouts and homotopic
//! maps, each checked by direct computation.

use std::collections::HashMap;
use std::fmt::Display;

use mpss_core::chains::{
    magnitude_homology, magnitude_slice, op_complex, FilteredComplex, OpComplex, Trail,
};
use mpss_core::digraph::{
    bicycle_base, bicycle_collapse, bidirected_cycle, cone, directed_cycle, induced_subgraph,
    is_cofibration, point, pushout, sphere, suspension, DiGraph, GraphMap,
};
use mpss_core::homalg::{
    homology_of_sparse_pair, invariant_factors_dense, HomologyGroup, Int, Integers, Matrix, Ring,
    SparseMatrix,
};
use mpss_core::mpss::{
    compute_page, compute_pages, convergence_report, d1_on_class, induced_page_map,
    induced_pair_page_map, r_homotopy_page_agreement, reachability_homology, Page,
    SpectralSequence,
};
use mpss_core::products::{ez_pairing_on_page, kunneth_check, KunnethLevel};
use mpss_core::Error;
use rayon::prelude::*;

/// The outcome of one claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The statement being checked.
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, claim: &str, outcome: Result<String, String>) -> Self {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        Check {
            name: name.into(),
            claim: claim.to_string(),
            passed,
            detail,
        }
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {}: {}", self.name, self.claim);
        if !self.detail.is_empty() {
            s.push_str(&format!(" [{}]", self.detail));
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Cycles,
    Bicycles,
    Spheres,
    Kunneth,
    Excision,
    Mv,
    Homotopy,
}

pub fn run(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Cycles => [
            cycle_magnitude(),
            cycle_pages(),
            d1_cycle(),
            ordered_partitions(),
            ordered_partition_blocks(),
            cycle_reachability(),
        ]
        .concat(),
        Suite::Bicycles => [bicycles(), d1_bicycle(), bicycle_reachability()].concat(),
        Suite::Spheres => spheres(),
        Suite::Kunneth => kunneth(),
        Suite::Excision => excision(),
        Suite::Mv => mayer_vietoris(),
        Suite::Homotopy => homotopy(),
    }
}

const RINGS: [Ring; 2] = [Ring::Rationals, Ring::Integers];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl Display) -> String {
    e.to_string()
}

fn cycle(m: usize) -> DiGraph {
    directed_cycle(m).expect("m >= 1")
}

fn bicycle(m: usize, n: usize) -> DiGraph {
    bidirected_cycle(m, n).expect("valid bi-directed cycle")
}

fn ring_cases<T: Copy + Send + Sync>(items: &[T]) -> Vec<(T, Ring)> {
    items.iter().flat_map(|&x| RINGS.map(|r| (x, r))).collect()
}

/// Exact entries of a page must match `expected(p, q)`.
fn compare_page(
    page: &Page,
    expected: impl Fn(i64, i64) -> HomologyGroup,
) -> Result<usize, String> {
    let mut checked = 0;
    for e in page.entries.values().filter(|e| e.exact) {
        let want = expected(e.p, e.q);
        ensure(e.group == want, || {
            format!(
                "E^{} at ({},{}) is {}, expected {want}",
                page.r, e.p, e.q, e.group
            )
        })?;
        checked += 1;
    }
    Ok(checked)
}

fn free_if(on: bool, rank: usize) -> HomologyGroup {
    if on {
        HomologyGroup::free(rank)
    } else {
        HomologyGroup::trivial()
    }
}

/// `(k, ℓ)` is `(2i, mi)` or `(2i+1, mi+1)`.
fn on_cycle_line(m: usize, k: i64, l: i64) -> bool {
    let m = m as i64;
    if k % 2 == 0 {
        l == m * (k / 2)
    } else {
        l == m * (k / 2) + 1
    }
}

pub fn cycle_magnitude() -> Vec<Check> {
    let claim = "MH(Z_m) is free of rank m exactly in bidegrees (2i, mi) and (2i+1, mi+1)";
    ring_cases(&[2usize, 3, 4, 5, 6])
        .par_iter()
        .map(|&(m, ring)| {
            let l_max = 2 * m as u32 + 1;
            let table = magnitude_homology(&cycle(m), l_max, ring);
            let outcome = (|| {
                let mut checked = 0;
                for l in 0..=l_max {
                    for k in 0..=l as usize {
                        let got = table.get(&(k, l)).cloned().unwrap_or_default();
                        let want = free_if(on_cycle_line(m, k as i64, l as i64), m);
                        ensure(got == want, || {
                            format!("MH_{{{k},{l}}} is {got}, expected {want}")
                        })?;
                        checked += 1;
                    }
                }
                Ok(format!("{checked} bidegrees, l <= {l_max}"))
            })();
            Check::new(format!("MH(Z_{m}) over {ring}"), claim, outcome)
        })
        .collect()
}

pub fn cycle_pages() -> Vec<Check> {
    let claim =
        "PH(Z_m) is free of rank 1 exactly in bidegrees (2i, mi) and (2i+1, mi+1) for m >= 3 \
                 and a single R for m = 2; E^2 = ... = E^{m-1} and E^m is a single R at (0,0)";
    ring_cases(&[2usize, 3, 4, 5, 6])
        .par_iter()
        .map(|&(m, ring)| {
            let l_max = 2 * m as u32 + 1;
            let rs: Vec<u32> = (2..=m.max(2) as u32).collect();
            let pages = compute_pages(&cycle(m), &rs, l_max, ring, false);
            let outcome = (|| {
                let e2 = &pages[0];
                let ph = compare_page(e2, |p, q| {
                    let k = p + q;
                    free_if(
                        if m >= 3 {
                            on_cycle_line(m, k, p)
                        } else {
                            (p, q) == (0, 0)
                        },
                        1,
                    )
                })?;
                for page in pages.iter().take(pages.len() - 1).skip(1) {
                    for e in page
                        .entries
                        .values()
                        .filter(|e| e.exact && e2.is_exact(e.p, e.q))
                    {
                        let base = e2.group(e.p, e.q);
                        ensure(e.group == base, || {
                            format!(
                                "E^{} at ({},{}) is {}, E^2 has {base}",
                                page.r, e.p, e.q, e.group
                            )
                        })?;
                    }
                }
                let last = pages.last().expect("page m");
                compare_page(last, |p, q| free_if((p, q) == (0, 0), 1))?;
                Ok(format!("{ph} exact entries on E^2, pages 2..={m}"))
            })();
            Check::new(format!("pages of Z_{m} over {ring}"), claim, outcome)
        })
        .collect()
}

/// Coordinates of a single-tuple chain on the page-1 generators.
fn e1_class(ss: &SpectralSequence<Integers>, p: i64, tuple: &[usize]) -> Result<Vec<Int>, String> {
    let n = tuple.len() - 1;
    let chain = ss
        .dense_chain(n, &[(tuple.to_vec(), Int::from(1i64))])
        .map_err(err)?;
    ss.class_of(1, p, n, &chain).map_err(err)
}

fn columns_matrix(cols: &[Vec<Int>], rows: usize) -> Matrix<Int> {
    Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
}

fn is_unimodular(m: &Matrix<Int>) -> bool {
    m.rows() == m.cols() && {
        let f = invariant_factors_dense(&Integers, m);
        f.len() == m.rows() && f.iter().all(Int::is_unit)
    }
}

/// The triangle trail and its expected image as signed edge coefficients.
type MuCase = (Vec<usize>, Vec<((usize, usize), i64)>);

/// `d¹` on vertex, edge and (optionally) triangle classes of `g` against the
/// incidence rule `d¹(λ_ab) = κ_b − κ_a`, `d¹(κ) = 0`.
fn d1_case(name: &str, g: &DiGraph, l_max: u32, mu: Option<MuCase>) -> Check {
    let claim = "d1(kappa_x) = 0, d1(lambda_ab) = kappa_b - kappa_a, and d1(mu) is the stated combination of \
                 edge classes, as matrices in the vertex, edge and mu bases";
    let outcome = (|| {
        let ss = SpectralSequence::new(&Integers, FilteredComplex::reachability(g, l_max));
        let edges: Vec<(usize, usize)> = g.proper_edges().collect();
        let nv = g.vertex_count();
        let kappa = (0..nv)
            .map(|v| e1_class(&ss, 0, &[v]))
            .collect::<Result<Vec<_>, _>>()?;
        let lambda = edges
            .iter()
            .map(|&(a, b)| e1_class(&ss, 1, &[a, b]))
            .collect::<Result<Vec<_>, _>>()?;
        let k = columns_matrix(&kappa, ss.group(1, 0, 0).generator_count());
        let l = columns_matrix(&lambda, ss.group(1, 1, 1).generator_count());
        ensure(is_unimodular(&k), || {
            "vertex classes are not a basis of E^1_{0,0}".into()
        })?;
        ensure(is_unimodular(&l), || {
            "edge classes are not a basis of E^1_{1,0}".into()
        })?;
        let d0 = ss.differential(1, 0, 0);
        ensure(d0.is_zero_in(&Integers), || {
            "d1 on E^1_{0,0} is nonzero".into()
        })?;
        let incidence = Matrix::from_fn(nv, edges.len(), |v, e| {
            Int::from(i64::from(v == edges[e].1) - i64::from(v == edges[e].0))
        });
        let lhs = ss
            .differential(1, 1, 1)
            .mul_in(&Integers, &l)
            .map_err(err)?;
        let rhs = k.mul_in(&Integers, &incidence).map_err(err)?;
        ensure(lhs == rhs, || {
            "page differential disagrees with the incidence rule".into()
        })?;
        for (e, &(a, b)) in edges.iter().enumerate() {
            let image = d1_on_class(&ss, &[(vec![a, b], Int::from(1i64))], 1, 0).map_err(err)?;
            ensure(image.class == rhs.column(e), || {
                format!("recipe gives the wrong d1 of edge {a}->{b}")
            })?;
        }
        let mut detail = format!("{nv} vertices, {} edges", edges.len());
        if let Some((tuple, combo)) = mu {
            let p = Trail::new(tuple.clone(), &g.metric())
                .map_err(err)?
                .length() as i64;
            let n = tuple.len() - 1;
            let q = n as i64 - p;
            ensure(
                e1_class(&ss, p, &tuple)?.iter().any(|x| !x.is_zero()),
                || "mu is zero on E^1".into(),
            )?;
            let image = d1_on_class(&ss, &[(tuple.clone(), Int::from(1i64))], p, q).map_err(err)?;
            let coeffs: Vec<Int> = edges
                .iter()
                .map(|e| Int::from(combo.iter().find(|(f, _)| f == e).map_or(0, |(_, c)| *c)))
                .collect();
            // for m > 2 the target E^1_{m-1,2-m} is zero
            let want = if combo.is_empty() {
                vec![Int::from(0i64); image.class.len()]
            } else {
                l.mul_vec_in(&Integers, &coeffs)
            };
            ensure(image.class == want, || {
                format!(
                    "d1(mu) has coordinates {:?}, expected {want:?}",
                    image.class
                )
            })?;
            let src = e1_class(&ss, p, &tuple)?;
            let via_page = ss.differential(1, p, n).mul_vec_in(&Integers, &src);
            ensure(via_page == want, || {
                "page differential disagrees on mu".into()
            })?;
            detail.push_str(&format!(", mu = {tuple:?} at ({p},{q})"));
        }
        Ok(detail)
    })();
    Check::new(format!("d1 classes on {name}"), claim, outcome)
}

pub fn d1_cycle() -> Vec<Check> {
    vec![d1_case("Z_4", &cycle(4), 4, None)]
}

pub fn d1_bicycle() -> Vec<Check> {
    vec![
        d1_case(
            "C_{4,1}",
            &bicycle(4, 1),
            4,
            Some((vec![0, 2, 4], Vec::new())),
        ),
        d1_case(
            "C_{2,1}",
            &bicycle(2, 1),
            4,
            Some((vec![0, 1, 2], vec![((0, 1), 1), ((1, 2), 1), ((0, 2), -1)])),
        ),
    ]
}

/// Class coordinates of `v ∈ 𝒪𝒫_k` in `H_k`, over the integers.
/// `H_k` of `c` after adding `extra` as one more boundary; fails when `extra` is not a cycle.
fn op_homology_mod(
    c: &OpComplex,
    k: usize,
    extra: Vec<(usize, i64)>,
) -> Result<HomologyGroup, String> {
    let rows = c.bases[k].len();
    let mut columns = if k + 1 < c.bases.len() {
        c.differentials[k + 1].columns().to_vec()
    } else {
        Vec::new()
    };
    columns.push(extra.into_iter().filter(|e| e.1 != 0).collect());
    homology_of_sparse_pair(
        &Integers,
        &c.differentials[k],
        &SparseMatrix::new(rows, columns),
    )
    .map_err(|_| "not a cycle".to_string())
}

fn op_vector(c: &OpComplex, k: usize, tuple: &[usize]) -> Result<Vec<(usize, i64)>, String> {
    let i = c.bases[k]
        .iter()
        .position(|p| p == tuple)
        .ok_or_else(|| format!("{tuple:?} is not a partition"))?;
    Ok(vec![(i, 1)])
}

pub fn ordered_partitions() -> Vec<Check> {
    let claim = "H_k(OP(l, m)) is R generated by (1, m-1, ..., 1, m-1) = (m-1, 1, ..., m-1, 1) for (k, l) = (2i, mi), \
                 R generated by (1, m-1, ..., 1) for (2i+1, mi+1), and zero otherwise";
    [3usize, 4, 5]
        .par_iter()
        .map(|&m| {
            let outcome = (|| {
                let l_top = 3 * m as i64 + 1;
                for l in 0..=l_top {
                    let c = op_complex(l, m).map_err(err)?;
                    for k in 0..c.bases.len() {
                        let h = c.homology_in(Ring::Integers, k);
                        let on = on_cycle_line(m, k as i64, l);
                        ensure(h == free_if(on, 1), || format!("H_{k}(OP({l},{m})) is {h}"))?;
                        if !on {
                            continue;
                        }
                        let alternating = |first: usize, second: usize| -> Vec<usize> {
                            (0..k)
                                .map(|j| if j % 2 == 0 { first } else { second })
                                .collect()
                        };
                        // a cycle generates H_k = Z exactly when killing it leaves nothing
                        let g = op_vector(&c, k, &alternating(1, m - 1))?;
                        let rest = op_homology_mod(&c, k, g.clone())?;
                        ensure(rest.is_trivial(), || {
                            format!("generator fails at l={l}, k={k}")
                        })?;
                        if k % 2 == 0 && k > 0 {
                            let other = op_vector(&c, k, &alternating(m - 1, 1))?;
                            let mut diff = g;
                            diff.extend(other.into_iter().map(|(i, v)| (i, -v)));
                            diff.sort_unstable();
                            let rest = op_homology_mod(&c, k, diff)?;
                            ensure(rest == HomologyGroup::free(1), || {
                                format!("the two generator forms differ at l={l}, k={k}")
                            })?;
                        }
                    }
                }
                Ok(format!("l <= {l_top}"))
            })();
            Check::new(format!("OP(l, {m})"), claim, outcome)
        })
        .collect()
}

/// Trail of `Z_m` starting at `x` with the given step lengths.
fn walk(x: usize, m: usize, parts: &[usize]) -> Vec<usize> {
    let mut out = vec![x];
    let mut at = x;
    for &a in parts {
        at = (at + a) % m;
        out.push(at);
    }
    out
}

pub fn ordered_partition_blocks() -> Vec<Check> {
    let claim = "MC_{*,l}(Z_m) is the direct sum over start vertices of m copies of OP(l, m) with equal differential \
                 matrices";
    [3usize, 4, 5]
        .par_iter()
        .map(|&m| {
            let outcome = (|| {
                let l_top = 3 * m as u32 + 1;
                let c = FilteredComplex::reachability(&cycle(m), l_top);
                for l in 0..=l_top {
                    let mc = magnitude_slice(&c, l);
                    let op = op_complex(l as i64, m).map_err(err)?;
                    let top = mc.bases.len().max(op.bases.len());
                    for k in 0..top {
                        let mc_len = mc.bases.get(k).map_or(0, Vec::len);
                        let op_len = op.bases.get(k).map_or(0, Vec::len);
                        ensure(mc_len == m * op_len, || {
                            format!("MC_{{{k},{l}}} has {mc_len} cells, OP has {op_len}")
                        })?;
                    }
                    for k in 1..mc.bases.len().min(op.bases.len()) {
                        let index: HashMap<&[usize], usize> = mc.bases[k - 1]
                            .iter()
                            .enumerate()
                            .map(|(i, t)| (t.vertices(), i))
                            .collect();
                        let column_of: HashMap<&[usize], usize> = mc.bases[k]
                            .iter()
                            .enumerate()
                            .map(|(i, t)| (t.vertices(), i))
                            .collect();
                        for x in 0..m {
                            for (j, parts) in op.bases[k].iter().enumerate() {
                                let tuple = walk(x, m, parts);
                                let col = column_of[tuple.as_slice()];
                                let mut want: Vec<(usize, i64)> = op.differentials[k]
                                    .column(j)
                                    .iter()
                                    .map(|&(i, s)| {
                                        (index[walk(x, m, &op.bases[k - 1][i]).as_slice()], s)
                                    })
                                    .collect();
                                want.sort_unstable();
                                let mut got = mc.differentials[k].column(col).to_vec();
                                got.sort_unstable();
                                ensure(got == want, || {
                                    format!("block {x} differs at l={l}, k={k}, {parts:?}")
                                })?;
                            }
                        }
                    }
                }
                Ok(format!("l <= {l_top}"))
            })();
            Check::new(format!("MC(Z_{m}) blocks"), claim, outcome)
        })
        .collect()
}

fn reachability_case(name: String, g: &DiGraph) -> Check {
    let claim = "reachability homology is a single R in degree 0";
    let rh = reachability_homology(g, 3, Ring::Integers);
    let outcome = rh
        .iter()
        .try_for_each(|(&k, h)| {
            let want = free_if(k == 0, 1);
            ensure(*h == want, || format!("RH_{k} is {h}"))
        })
        .map(|()| "degrees 0..=3 over Z".to_string());
    Check::new(name, claim, outcome)
}

pub fn cycle_reachability() -> Vec<Check> {
    (2..=6usize)
        .into_par_iter()
        .map(|m| reachability_case(format!("RH(Z_{m})"), &cycle(m)))
        .collect()
}

const BICYCLES: [(usize, usize); 5] = [(3, 1), (3, 2), (2, 2), (4, 3), (5, 2)];

pub fn bicycle_reachability() -> Vec<Check> {
    BICYCLES
        .par_iter()
        .map(|&(m, n)| reachability_case(format!("RH(C_{{{m},{n}}})"), &bicycle(m, n)))
        .collect()
}

pub fn bicycles() -> Vec<Check> {
    let mut checks: Vec<Check> = ring_cases(&BICYCLES)
        .par_iter()
        .map(|&((m, n), ring)| {
            let big = m.max(n);
            let claim = "PH(C_{m,n}) is R in bidegrees (0,0), (1,0) and (M, 2-M) with M = max(m,n), only (0,0) when \
                         M <= 2";
            let l_max = 2 * big as u32 + 1;
            let page = compute_page(&bicycle(m, n), 2, l_max, ring);
            let b = big as i64;
            let outcome = compare_page(&page, |p, q| {
                let on = (p, q) == (0, 0) || (b > 2 && ((p, q) == (1, 0) || (p, q) == (b, 2 - b)));
                free_if(on, 1)
            })
            .map(|c| format!("{c} exact entries, l <= {l_max}"));
            Check::new(format!("PH(C_{{{m},{n}}}) over {ring}"), claim, outcome)
        })
        .collect();
    checks.extend(BICYCLES.par_iter().map(|&(m, n)| {
        let big = m.max(n) as u32;
        let claim = "the first page equal to that of a point is page max(m,n), and the limit page has the ranks of \
                     reachability homology";
        let rep = convergence_report(&bicycle(m, n), 2 * big + 1, Ring::Rationals);
        let outcome = ensure(rep.first_trivial_page == Some(big), || {
            format!("first trivial page {:?}", rep.first_trivial_page)
        })
        .and_then(|()| ensure(rep.degrees.iter().all(|d| d.ranks_agree), || "limit and RH ranks differ".into()))
        .map(|()| format!("{} complete degrees", rep.degrees.len()));
        Check::new(format!("convergence of C_{{{m},{n}}}"), claim, outcome)
    }).collect::<Vec<_>>());
    checks.extend(
        BICYCLES
            .par_iter()
            .map(|&(m, n)| {
                let claim = "the collapse C_{m,n} -> C_{M,1} induces an isomorphism on page 2";
                let big = m.max(n) as u32;
                let outcome = bicycle_collapse(m, n)
                    .and_then(|f| induced_page_map(&f, 2, 2 * big + 1, Ring::Integers))
                    .map_err(err)
                    .and_then(|map| {
                        let exact: Vec<_> = map.entries.iter().filter(|(_, e)| e.exact).collect();
                        match exact.iter().find(|(_, e)| !e.is_isomorphism) {
                            Some((k, _)) => Err(format!("not an isomorphism at {k:?}")),
                            None => Ok(format!("{} exact entries over Z", exact.len())),
                        }
                    });
                Check::new(format!("collapse of C_{{{m},{n}}}"), claim, outcome)
            })
            .collect::<Vec<_>>(),
    );
    checks
}

/// `PH_{k,ℓ}` with one copy of `R` removed at `(0,0)`.
fn reduced(page: &Page, p: i64, q: i64) -> HomologyGroup {
    let mut g = page.group(p, q);
    if (p, q) == (0, 0) {
        g.free_rank -= 1;
    }
    g
}

pub fn spheres() -> Vec<Check> {
    let claim = "PH(S^n) is R at (0,0) and at (n,n) and zero elsewhere";
    let mut checks: Vec<Check> = [
        (0usize, Ring::Integers),
        (1, Ring::Integers),
        (2, Ring::Integers),
        (3, Ring::Integers),
        (2, Ring::Rationals),
        (3, Ring::Rationals),
    ]
    .par_iter()
    .map(|&(n, ring)| {
        let s = sphere(n).expect("sphere");
        let page = compute_page(&s, 2, n as u32 + 3, ring);
        let outcome = compare_page(&page, |p, q| {
            let k = p + q;
            let mut rank =
                usize::from((k, p) == (0, 0)) + usize::from((k, p) == (n as i64, n as i64));
            if n > 0 && (k, p) == (0, 0) {
                rank = 1;
            }
            free_if(rank > 0, rank)
        })
        .map(|c| format!("{c} exact entries, l <= {}", n + 3));
        Check::new(format!("PH(S^{n}) over {ring}"), claim, outcome)
    })
    .collect();
    let shift_claim = "reduced PH_{k,l}(SX) is reduced PH_{k-1,l-1}(X)";
    let corpus: Vec<(&str, DiGraph)> = vec![
        ("S^0", sphere(0).unwrap()),
        ("S^1", sphere(1).unwrap()),
        ("Z_3", cycle(3)),
    ];
    checks.extend(
        corpus
            .par_iter()
            .map(|(name, x)| {
                let l_max = (2 * x.metric().diameter() + 1).max(3);
                let px = compute_page(x, 2, l_max, Ring::Integers);
                let ps = compute_page(&suspension(x), 2, l_max + 1, Ring::Integers);
                let outcome = (|| {
                    let mut checked = 0;
                    for e in ps.entries.values().filter(|e| e.exact) {
                        let (k, l) = (e.p + e.q, e.p);
                        let want = if k == 0 || l == 0 {
                            HomologyGroup::trivial()
                        } else {
                            let (p, q) = (l - 1, (k - 1) - (l - 1));
                            if !px.is_exact(p, q) {
                                continue;
                            }
                            reduced(&px, p, q)
                        };
                        let got = reduced(&ps, e.p, e.q);
                        ensure(got == want, || {
                            format!("reduced PH_{{{k},{l}}}(SX) is {got}, expected {want}")
                        })?;
                        checked += 1;
                    }
                    Ok(format!("{checked} bidegrees over Z"))
                })();
                Check::new(format!("suspension of {name}"), shift_claim, outcome)
            })
            .collect::<Vec<_>>(),
    );
    checks
}

/// A pushout `X ∪_A •` with the data needed for excision and Mayer–Vietoris.
struct Square {
    name: String,
    x: DiGraph,
    a: Vec<usize>,
    sub: DiGraph,
    glued: DiGraph,
    g: GraphMap,
    base: usize,
    l_max: u32,
}

fn collapse_square(name: String, x: DiGraph, a: Vec<usize>, l_max: u32) -> Result<Square, Error> {
    let (sub, i) = induced_subgraph(&x, &a)?;
    let po = pushout(&i, &GraphMap::constant(&sub, &point(), 0)?)?;
    Ok(Square {
        name,
        x,
        a,
        sub,
        glued: po.graph,
        g: po.g,
        base: po.j.apply(0),
        l_max,
    })
}

fn squares() -> Vec<Square> {
    let mut out: Vec<Square> = [
        ("S^0", sphere(0).unwrap()),
        ("S^1", sphere(1).unwrap()),
        ("Z_3", cycle(3)),
    ]
    .into_iter()
    .map(|(name, x)| {
        let c = cone(&x);
        let a: Vec<usize> = (0..c.base_count()).collect();
        collapse_square(format!("C{name} / {name}"), c.graph, a, 5).expect("cone pushout")
    })
    .collect();
    out.push(
        collapse_square(
            "C_{4,3} / A_{4,3}".into(),
            bicycle(4, 3),
            bicycle_base(4, 3),
            6,
        )
        .expect("pushout"),
    );
    out
}

pub fn excision() -> Vec<Check> {
    let claim =
        "the pushout map induces an isomorphism E^r(X, A) -> E^r(X u_A Y, Y) on every exact entry";
    let squares = squares();
    let cases: Vec<(&Square, Ring, u32)> = squares
        .iter()
        .flat_map(|s| {
            RINGS
                .into_iter()
                .flat_map(move |ring| [1, 2].map(|r| (s, ring, r)))
        })
        .collect();
    let mut checks = vec![];
    for s in &squares {
        let outcome = is_cofibration(&s.a, &s.x)
            .map_err(err)
            .and_then(|v| ensure(v.is_cofibration(), || "not a cofibration".into()))
            .and_then(|()| {
                let expected = s.x.vertex_count() - s.a.len() + 1;
                ensure(s.glued.vertex_count() == expected, || {
                    "pushout has the wrong size".into()
                })
            })
            .map(|()| String::new());
        checks.push(Check::new(
            format!("cofibration {}", s.name),
            "A -> X is a cofibration",
            outcome,
        ));
    }
    checks.extend(
        cases
            .par_iter()
            .map(|&(s, ring, r)| {
                let outcome = induced_pair_page_map(&s.g, &s.a, &[s.base], r, s.l_max, ring)
                    .map_err(err)
                    .and_then(|map| {
                        let exact: Vec<_> = map.entries.iter().filter(|(_, e)| e.exact).collect();
                        match exact.iter().find(|(_, e)| !e.is_isomorphism) {
                            Some((k, _)) => Err(format!("not an isomorphism at {k:?}")),
                            None => Ok(format!("{} exact entries, l <= {}", exact.len(), s.l_max)),
                        }
                    });
                Check::new(
                    format!("excision {} E^{r} over {ring}", s.name),
                    claim,
                    outcome,
                )
            })
            .collect::<Vec<_>>(),
    );
    checks
}

pub fn mayer_vietoris() -> Vec<Check> {
    let ses = "rank MH(A) + rank MH(X u_A Y) = rank MH(X) + rank MH(Y) in every bidegree";
    let les =
        "the long exact sequence of PH along each line k - l = const has alternating rank sum zero";
    squares()
        .par_iter()
        .flat_map(|s| {
            let ring = Ring::Rationals;
            let y = point();
            let graphs = [&s.sub, &s.x, &y, &s.glued];
            let mh: Vec<_> = graphs
                .iter()
                .map(|g| magnitude_homology(g, s.l_max, ring))
                .collect();
            let rank =
                |i: usize, k: usize, l: u32| mh[i].get(&(k, l)).map_or(0, |h| h.free_rank) as i64;
            let ses_outcome = (|| {
                for l in 0..=s.l_max {
                    for k in 0..=l as usize {
                        let (a, x, y, p) =
                            (rank(0, k, l), rank(1, k, l), rank(2, k, l), rank(3, k, l));
                        ensure(a + p == x + y, || {
                            format!("MH_{{{k},{l}}}: {a} + {p} != {x} + {y}")
                        })?;
                    }
                }
                Ok(format!("l <= {}", s.l_max))
            })();
            let pages: Vec<Page> = graphs
                .iter()
                .map(|g| compute_page(g, 2, s.l_max, ring))
                .collect();
            // Along a line q = k - l the sequence ends at p = -q and the connecting map lowers p by one.
            // The partial alternating sum ending at A_p is the rank of the image of P_{p+1} in A_p, so it
            // vanishes wherever that entry of the glued graph is exact and zero.
            let les_outcome = (|| {
                let mut checkpoints = 0;
                for q in -(s.l_max as i64)..=0 {
                    let mut sum = 0i64;
                    for p in -q..=s.l_max as i64 {
                        if !pages.iter().all(|pg| pg.is_exact(p, q)) {
                            break;
                        }
                        let r: Vec<i64> = pages.iter().map(|pg| pg.rank(p, q) as i64).collect();
                        let sign = if (p + q) % 2 == 0 { 1 } else { -1 };
                        sum += sign * (r[0] - r[1] - r[2] + r[3]);
                        let next = pages[3].get(p + 1, q);
                        if next.is_some_and(|e| e.exact && e.group.is_trivial()) {
                            ensure(sum == 0, || {
                                format!("partial sum {sum} through p = {p} on q = {q}")
                            })?;
                            checkpoints += 1;
                        }
                    }
                }
                Ok(format!("{checkpoints} checkpoints, l <= {}", s.l_max))
            })();
            vec![
                Check::new(format!("MV ranks {}", s.name), ses, ses_outcome),
                Check::new(format!("PH exact sequence {}", s.name), les, les_outcome),
            ]
        })
        .collect()
}

pub fn kunneth() -> Vec<Check> {
    let corpus: Vec<(&str, DiGraph)> = vec![
        ("Z_3", cycle(3)),
        ("S^1", sphere(1).unwrap()),
        ("C_{2,1}", bicycle(2, 1)),
        ("point", point()),
    ];
    let l_max = 6;
    let mut cases = Vec::new();
    for i in 0..corpus.len() {
        for j in i..corpus.len() {
            for (level, ring) in [
                (KunnethLevel::Page(1), Ring::Rationals),
                (KunnethLevel::Page(2), Ring::Rationals),
                (KunnethLevel::Magnitude, Ring::Integers),
                (KunnethLevel::OrdinaryPath, Ring::Integers),
                (KunnethLevel::BigradedPath, Ring::Integers),
                (KunnethLevel::Page(2), Ring::Integers),
            ] {
                cases.push((i, j, Some((level, ring))));
            }
            cases.push((i, j, None));
        }
    }
    cases
        .par_iter()
        .flat_map(|&(i, j, what)| {
            let ((gn, g), (hn, h)) = (&corpus[i], &corpus[j]);
            match what {
                Some((level, ring)) => {
                    let claim = match level {
                        KunnethLevel::Magnitude => "MH(G box H) = (MH(G) (x) MH(H)) + Tor(MH(G), MH(H)[-1])",
                        KunnethLevel::OrdinaryPath => "PH(G box H) = (PH(G) (x) PH(H)) + Tor(PH(G), PH(H)[-1])",
                        KunnethLevel::BigradedPath => "PH_{*,*}(G box H) = PH_{*,*}(G) (x) PH_{*,*}(H) when flat",
                        KunnethLevel::Page(_) => "E^r(G box H) = E^r(G) (x) E^r(H) entrywise",
                    };
                    let rep = kunneth_check(g, h, level, ring, l_max);
                    let outcome = match rep.verdict() {
                        Some(true) => Ok(format!("{} bidegrees", rep.lines.len())),
                        Some(false) => {
                            let bad = rep.lines.iter().find(|l| !l.holds).expect("a failing line");
                            Err(format!(
                                "at {:?}: product {}, tensor {}, tor {}",
                                bad.index, bad.product, bad.tensor, bad.tor
                            ))
                        }
                        None => Ok(format!("hypotheses fail, nothing asserted: {}", rep.hypothesis_failures.join("; "))),
                    };
                    vec![Check::new(format!("Kunneth {level:?} {gn} x {hn} over {ring}"), claim, outcome)]
                }
                None => [1, 2]
                    .into_iter()
                    .map(|r| {
                        let claim = "the Eilenberg-Zilber pairing is a map of pages and an isomorphism on exact entries";
                        let outcome = ez_pairing_on_page(g, h, r, Ring::Rationals, l_max).map_err(err).and_then(|rep| {
                            ensure(rep.commutes, || "pairing does not commute with the differentials".into())?;
                            let exact: Vec<_> = rep.entries.iter().filter(|(_, e)| e.exact).collect();
                            match exact.iter().find(|(_, e)| !e.is_isomorphism) {
                                Some((k, _)) => Err(format!("not an isomorphism at {k:?}")),
                                None => Ok(format!("{} exact entries", exact.len())),
                            }
                        });
                        Check::new(format!("pairing E^{r} {gn} x {hn} over Q"), claim, outcome)
                    })
                    .collect(),
            }
        })
        .collect()
}

pub fn homotopy() -> Vec<Check> {
    let corpus: Vec<(&str, DiGraph)> = vec![
        ("point", point()),
        ("S^0", sphere(0).unwrap()),
        ("Z_3", cycle(3)),
        ("S^1", sphere(1).unwrap()),
        ("C_{2,1}", bicycle(2, 1)),
    ];
    let claim = "1-homotopic maps of the cone induce the same map on page 2";
    let mut checks: Vec<Check> = corpus
        .par_iter()
        .map(|(name, x)| {
            let c = cone(x);
            let fold = c.fold_map();
            let outcome = (|| {
                let id = GraphMap::identity(&c.graph);
                let apex = GraphMap::constant(&c.graph, &c.graph, c.apex).map_err(err)?;
                for (f, g, what) in [
                    (&id, &fold, "identity and fold"),
                    (&apex, &fold, "apex and fold"),
                ] {
                    let same =
                        r_homotopy_page_agreement(f, g, 1, 2, 5, Ring::Integers).map_err(err)?;
                    ensure(same, || format!("{what} differ on page 2"))?;
                }
                Ok("identity ~ fold ~ apex, l <= 5".to_string())
            })();
            Check::new(format!("cone of {name}"), claim, outcome)
        })
        .collect();
    let z3 = cycle(3);
    let gap = (|| {
        let c0 = GraphMap::constant(&z3, &z3, 0).map_err(err)?;
        let c2 = GraphMap::constant(&z3, &z3, 2).map_err(err)?;
        match r_homotopy_page_agreement(&c0, &c2, 1, 2, 5, Ring::Integers) {
            Err(Error::GapExceeded { gap, .. }) => Ok(format!("gap {gap} reported")),
            other => Err(format!("expected a gap error, got {other:?}")),
        }
    })();
    checks.push(Check::new(
        "gap of constant maps on Z_3",
        "maps at distance 2 are not 1-homotopic",
        gap,
    ));
    let contraction = (|| {
        let f = GraphMap::new(cycle(4), z3.clone(), vec![0, 1, 2, 2]).map_err(err)?;
        let map = induced_page_map(&f, 2, 9, Ring::Integers).map_err(err)?;
        for (k, e) in map.entries.iter().filter(|(k, e)| e.exact && k.1 == 0) {
            ensure(e.is_isomorphism, || {
                format!("ordinary path homology differs at {k:?}")
            })?;
        }
        let off: Vec<_> = map
            .entries
            .iter()
            .filter(|(k, e)| e.exact && k.1 != 0 && !e.is_isomorphism)
            .collect();
        ensure(!off.is_empty(), || {
            "no bigraded entry distinguishes the graphs".into()
        })?;
        Ok(format!("not an isomorphism at {:?}", off[0].0))
    })();
    checks.push(Check::new(
        "contraction Z_4 -> Z_3",
        "the contraction is an isomorphism on ordinary path homology but not on bigraded path homology",
        contraction,
    ));
    checks
}
