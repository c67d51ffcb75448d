//! Acceptance suite: one test per criterion, each printing a single PASS/FAIL line.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use mpss::verify::{self, Check};
use mpss_core::chains::{
    enumerate_trails, magnitude_homology, rc_boundary, BoundaryMode, FilteredComplex, Trail,
};
use mpss_core::digraph::DiGraph;
use mpss_core::homalg::{CoefficientRing, Integers, Matrix, Rat, Rationals, Ring};
use mpss_core::mpss::{convergence_report, SpectralSequence};
use mpss_core::products::BoxContext;

/// Prints the verdict line for a criterion, lists failures, and fails the test on any.
fn criterion(id: u32, title: &str, checks: Vec<Check>) {
    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let status = if failed.is_empty() { "PASS" } else { "FAIL" };
    println!(
        "{status} criterion {id}: {title} ({} checks, {} failed)",
        checks.len(),
        failed.len()
    );
    for c in &failed {
        println!("  {}", c.line());
    }
    assert!(failed.is_empty(), "criterion {id} failed");
}

fn check(name: impl Into<String>, claim: &str, outcome: Result<String, String>) -> Check {
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

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

#[test]
fn criterion_01_directed_cycle_magnitude_homology() {
    criterion(
        1,
        "magnitude homology of directed cycles",
        verify::cycle_magnitude(),
    );
}

#[test]
fn criterion_02_directed_cycle_path_homology_and_pages() {
    criterion(
        2,
        "bigraded path homology and pages of directed cycles",
        verify::cycle_pages(),
    );
}

#[test]
fn criterion_03_first_differential_on_named_classes() {
    criterion(
        3,
        "d1 on vertex, edge and triangle classes",
        [verify::d1_cycle(), verify::d1_bicycle()].concat(),
    );
}

#[test]
fn criterion_04_ordered_partitions() {
    criterion(
        4,
        "ordered partition homology and block decomposition",
        [
            verify::ordered_partitions(),
            verify::ordered_partition_blocks(),
        ]
        .concat(),
    );
}

#[test]
fn criterion_05_bidirected_cycles() {
    criterion(5, "bi-directed cycles", verify::bicycles());
}

#[test]
fn criterion_06_spheres() {
    criterion(6, "spheres and suspension shift", verify::spheres());
}

#[test]
fn criterion_07_excision() {
    criterion(7, "excision on relative pages", verify::excision());
}

#[test]
fn criterion_08_mayer_vietoris() {
    criterion(
        8,
        "split short exact sequence and path homology long exact sequence",
        verify::mayer_vietoris(),
    );
}

#[test]
fn criterion_09_kunneth() {
    criterion(
        9,
        "Kunneth theorems on the product corpus",
        verify::kunneth(),
    );
}

const SAMPLES: usize = 50;

fn random_graphs() -> Vec<DiGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d70_7373);
    (0..SAMPLES)
        .map(|_| {
            let n = rng.gen_range(1..=6usize);
            let density = rng.gen_range(0.2..0.7);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != b)
                .collect();
            let edges = edges
                .into_iter()
                .filter(|_| rng.gen_bool(density))
                .collect::<Vec<_>>();
            DiGraph::new(n, edges).expect("valid random digraph")
        })
        .collect()
}

fn truncation(g: &DiGraph, cap: u32) -> u32 {
    (2 * g.metric().diameter() + 1).min(cap)
}

fn compose_is_zero(a: &Matrix<Rat>, b: &Matrix<Rat>) -> bool {
    a.cols() != b.rows()
        || a.rows() == 0
        || b.cols() == 0
        || a.mul_in(&Rationals, b).unwrap().is_zero_in(&Rationals)
}

fn boundaries_square(g: &DiGraph) -> Result<(), String> {
    let c = FilteredComplex::reachability(g, truncation(g, 5));
    for k in 2..c.degree_count() {
        let prod = c
            .boundary(k - 1)
            .to_ring(&Integers)
            .mul_in(&Integers, &c.boundary(k).to_ring(&Integers))
            .map_err(|e| e.to_string())?;
        ensure(prod.is_zero(), || format!("d_{} d_{k} is not zero", k - 1))?;
    }
    Ok(())
}

fn page_differentials_square(g: &DiGraph) -> Result<(), String> {
    let ss = SpectralSequence::new(
        &Rationals,
        FilteredComplex::reachability(g, truncation(g, 5)),
    );
    for r in 0..=5u32 {
        let page = ss.page(r, false);
        let ri = r as i64;
        for (&(p, q), d) in &page.differentials {
            let t = (p - ri, q + ri - 1);
            let (Some(e1), Some(e2)) = (page.get(p, q), page.get(t.0, t.1)) else {
                continue;
            };
            if !(e1.exact && e2.exact) {
                continue;
            }
            if let Some(d2) = page.differentials.get(&t) {
                ensure(compose_is_zero(d2, d), || {
                    format!("d^{r} d^{r} is not zero at ({p},{q})")
                })?;
            }
        }
    }
    Ok(())
}

fn vanishing_and_diagonal(g: &DiGraph) -> Result<(), String> {
    let diam = g.metric().diameter();
    for (&(k, l), h) in &magnitude_homology(g, truncation(g, 6), Ring::Integers) {
        if l < k as u32 || l > k as u32 * diam {
            ensure(h.is_trivial(), || {
                format!("MH_{{{k},{l}}} = {h} outside the vanishing region")
            })?;
        }
        if l == k as u32 {
            ensure(h.is_free(), || {
                format!("diagonal MH_{{{k},{l}}} = {h} has torsion")
            })?;
        }
    }
    Ok(())
}

fn recurrence_in<R: CoefficientRing>(ring: &R, g: &DiGraph) -> Result<(), String> {
    let ss = SpectralSequence::new(ring, FilteredComplex::reachability(g, truncation(g, 4)));
    for r in 0..=4 {
        for (p, n) in ss.window() {
            if ss.is_exact(r + 1, p, n) {
                let (lhs, rhs) = (ss.page_homology(r, p, n), ss.group(r + 1, p, n));
                ensure(lhs == rhs, || {
                    format!("H(E^{r}) at ({p},{n}) is {lhs} but E^{} is {rhs}", r + 1)
                })?;
            }
        }
    }
    Ok(())
}

fn limit_matches_reachability(g: &DiGraph) -> Result<(), String> {
    let rep = convergence_report(g, truncation(g, 5), Ring::Rationals);
    for d in &rep.degrees {
        ensure(d.ranks_agree, || {
            format!(
                "degree {}: limit {} vs reachability {}",
                d.n, d.limit, d.reachability
            )
        })?;
    }
    Ok(())
}

type Chain = BTreeMap<Vec<usize>, i64>;

fn ez_identities(g: &DiGraph, h: &DiGraph) -> Result<(), String> {
    let ctx = BoxContext::new(g, h);
    let dp = ctx.graph().metric();
    let (tg, th) = (enumerate_trails(g, 2, 3), enumerate_trails(h, 2, 3));
    for xi in tg.values().flatten() {
        for eta in th.values().flatten() {
            let image = ctx.ez(xi, eta);
            for (t, _) in &image {
                let length = Trail::new(t.vertices().to_vec(), &dp)
                    .map_err(|e| e.to_string())?
                    .length();
                ensure(
                    t.length() == xi.length() + eta.length() && length == t.length(),
                    || {
                        format!(
                            "shuffle of {:?} and {:?} has the wrong length",
                            xi.vertices(),
                            eta.vertices()
                        )
                    },
                )?;
            }
            let mut back: BTreeMap<(Vec<usize>, Vec<usize>), i64> = BTreeMap::new();
            for (t, s) in &image {
                for ((a, b), c) in ctx.aw(t) {
                    *back
                        .entry((a.vertices().to_vec(), b.vertices().to_vec()))
                        .or_default() += s * c;
                }
            }
            back.retain(|_, c| *c != 0);
            let id: BTreeMap<_, _> = [((xi.vertices().to_vec(), eta.vertices().to_vec()), 1)]
                .into_iter()
                .collect();
            ensure(back == id, || {
                format!(
                    "AW(EZ) is not the identity on {:?} x {:?}",
                    xi.vertices(),
                    eta.vertices()
                )
            })?;
            let mut lhs = Chain::new();
            for (t, s) in &image {
                for (f, c) in rc_boundary(t, &dp, BoundaryMode::Reachability) {
                    *lhs.entry(f.vertices().to_vec()).or_default() += s * c;
                }
            }
            let mut rhs = Chain::new();
            let sign = if xi.degree() % 2 == 0 { 1 } else { -1 };
            for (f, c) in rc_boundary(xi, &g.metric(), BoundaryMode::Reachability) {
                for (t, s) in ctx.ez(&f, eta) {
                    *rhs.entry(t.vertices().to_vec()).or_default() += s * c;
                }
            }
            for (f, c) in rc_boundary(eta, &h.metric(), BoundaryMode::Reachability) {
                for (t, s) in ctx.ez(xi, &f) {
                    *rhs.entry(t.vertices().to_vec()).or_default() += sign * s * c;
                }
            }
            lhs.retain(|_, c| *c != 0);
            rhs.retain(|_, c| *c != 0);
            ensure(lhs == rhs, || {
                format!(
                    "EZ is not a chain map on {:?} x {:?}",
                    xi.vertices(),
                    eta.vertices()
                )
            })?;
        }
    }
    Ok(())
}

fn over_sample(
    name: &str,
    claim: &str,
    graphs: &[DiGraph],
    f: impl Fn(&DiGraph) -> Result<(), String>,
) -> Check {
    let outcome = graphs
        .iter()
        .enumerate()
        .try_for_each(|(i, g)| {
            f(g).map_err(|e| format!("sample {i} ({} vertices): {e}", g.vertex_count()))
        })
        .map(|()| format!("{} graphs", graphs.len()));
    check(name, claim, outcome)
}

#[test]
fn criterion_10_structural_properties() {
    let graphs = random_graphs();
    let mut checks = vec![
        over_sample(
            "d d = 0",
            "the reachability boundary squares to zero",
            &graphs,
            boundaries_square,
        ),
        over_sample(
            "page differentials",
            "d^r d^r = 0 on exact entries for r <= 5",
            &graphs,
            page_differentials_square,
        ),
        over_sample(
            "vanishing and diagonal",
            "MH vanishes outside k <= l <= k diam and is free on the diagonal",
            &graphs,
            vanishing_and_diagonal,
        ),
        over_sample(
            "recurrence over Q",
            "H(E^r, d^r) = E^(r+1) on exact entries",
            &graphs,
            |g| recurrence_in(&Rationals, g),
        ),
        over_sample(
            "recurrence over Z",
            "H(E^r, d^r) = E^(r+1) on exact entries",
            &graphs,
            |g| recurrence_in(&Integers, g),
        ),
        over_sample(
            "limit page",
            "the limit page has the ranks of reachability homology",
            &graphs,
            limit_matches_reachability,
        ),
    ];
    let pairs: Vec<(DiGraph, DiGraph)> = graphs
        .iter()
        .filter(|g| g.vertex_count() <= 3)
        .cloned()
        .collect::<Vec<_>>()
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    let ez = pairs
        .iter()
        .enumerate()
        .try_for_each(|(i, (g, h))| ez_identities(g, h).map_err(|e| format!("pair {i}: {e}")))
        .map(|()| {
            format!(
                "{} pairs, trails of degree <= 2 and length <= 3",
                pairs.len()
            )
        });
    checks.push(check(
        "Eilenberg-Zilber",
        "AW EZ = Id and EZ is a chain map",
        ez,
    ));
    checks.extend(verify::cycle_reachability());
    checks.extend(verify::bicycle_reachability());
    checks.extend(verify::homotopy());
    criterion(
        10,
        "structural properties, reachability, homotopy invariance",
        checks,
    );
}
