//! Structural invariants on random small digraphs.

use std::collections::BTreeMap;

use proptest::prelude::*;

use mpss_core::chains::{
    enumerate_trails, magnitude_homology, rc_boundary, BoundaryMode, FilteredComplex, Trail,
};
use mpss_core::digraph::DiGraph;
use mpss_core::homalg::{Integers, Matrix, Rat, Rationals, Ring};
use mpss_core::mpss::{convergence_report, SpectralSequence};
use mpss_core::products::BoxContext;

fn digraph(max_vertices: usize) -> impl Strategy<Value = DiGraph> {
    (1..=max_vertices).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges = (0..n * n)
                .filter(|&i| bits[i] && i / n != i % n)
                .map(|i| (i / n, i % n));
            DiGraph::new(n, edges).unwrap()
        })
    })
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn boundaries_square_to_zero(g in digraph(6)) {
        let c = FilteredComplex::reachability(&g, truncation(&g, 5));
        for k in 2..c.degree_count() {
            let prod = c.boundary(k - 1).to_ring(&Integers).mul_in(&Integers, &c.boundary(k).to_ring(&Integers)).unwrap();
            prop_assert!(prod.is_zero());
        }
    }

    #[test]
    fn page_differentials_square_to_zero(g in digraph(6)) {
        let ss = SpectralSequence::new(&Rationals, FilteredComplex::reachability(&g, truncation(&g, 5)));
        for r in 0..=5u32 {
            let page = ss.page(r, false);
            let ri = r as i64;
            for (&(p, q), d) in &page.differentials {
                let t = (p - ri, q + ri - 1);
                let (Some(e1), Some(e2)) = (page.get(p, q), page.get(t.0, t.1)) else { continue };
                if !(e1.exact && e2.exact) { continue; }
                if let Some(d2) = page.differentials.get(&t) {
                    prop_assert!(compose_is_zero(d2, d), "r={} ({},{})", r, p, q);
                }
            }
        }
    }

    #[test]
    fn pages_are_homology_of_the_previous_page(g in digraph(5)) {
        for ring in [Ring::Integers, Ring::Rationals] {
            let c = FilteredComplex::reachability(&g, truncation(&g, 4));
            match ring {
                Ring::Integers => check_recurrence(&SpectralSequence::new(&Integers, c))?,
                _ => check_recurrence(&SpectralSequence::new(&Rationals, c))?,
            }
        }
    }

    #[test]
    fn reduction_matches_subquotients(g in digraph(4)) {
        let c = FilteredComplex::reachability(&g, truncation(&g, 4));
        let fast = SpectralSequence::new(&Integers, c.clone());
        let slow = SpectralSequence::generic(&Integers, c);
        for r in 0..=4 {
            for (p, n) in fast.window() {
                prop_assert_eq!(fast.group(r, p, n), slow.group(r, p, n));
            }
        }
    }

    #[test]
    fn magnitude_homology_vanishing_and_diagonal(g in digraph(6)) {
        let diam = g.metric().diameter();
        let table = magnitude_homology(&g, truncation(&g, 6), Ring::Integers);
        for (&(k, l), h) in &table {
            if l < k as u32 || l > k as u32 * diam {
                prop_assert!(h.is_trivial(), "MH_{},{} = {}", k, l, h);
            }
            if l == k as u32 {
                prop_assert!(h.is_free());
            }
        }
    }

    #[test]
    fn limit_page_matches_reachability(g in digraph(5)) {
        let rep = convergence_report(&g, truncation(&g, 5), Ring::Rationals);
        for d in &rep.degrees {
            prop_assert!(d.ranks_agree, "degree {}: {} vs {}", d.n, d.limit, d.reachability);
        }
    }

    #[test]
    fn eilenberg_zilber_identities(g in digraph(3), h in digraph(3)) {
        let ctx = BoxContext::new(&g, &h);
        let dp = ctx.graph().metric();
        let tg = enumerate_trails(&g, 2, 3);
        let th = enumerate_trails(&h, 2, 3);
        for xi in tg.values().flatten() {
            for eta in th.values().flatten() {
                let image = ctx.ez(xi, eta);
                for (t, _) in &image {
                    prop_assert_eq!(t.length(), xi.length() + eta.length());
                    prop_assert_eq!(Trail::new(t.vertices().to_vec(), &dp).unwrap().length(), t.length());
                }
                // Δ∘∇ = Id
                let mut back: BTreeMap<(Vec<usize>, Vec<usize>), i64> = BTreeMap::new();
                for (t, s) in &image {
                    for ((a, b), c) in ctx.aw(t) {
                        prop_assert!(a.length() + b.length() <= t.length());
                        *back.entry((a.vertices().to_vec(), b.vertices().to_vec())).or_default() += s * c;
                    }
                }
                back.retain(|_, c| *c != 0);
                let expected: BTreeMap<_, _> = [((xi.vertices().to_vec(), eta.vertices().to_vec()), 1)].into_iter().collect();
                prop_assert_eq!(back, expected);
                // ∂∇ = ∇∂⊗
                let mut lhs: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
                for (t, s) in &image {
                    for (f, c) in rc_boundary(t, &dp, BoundaryMode::Reachability) {
                        *lhs.entry(f.vertices().to_vec()).or_default() += s * c;
                    }
                }
                let mut rhs: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
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
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}

fn check_recurrence<R: mpss_core::homalg::CoefficientRing>(
    ss: &SpectralSequence<R>,
) -> Result<(), TestCaseError> {
    for r in 0..=4 {
        for (p, n) in ss.window() {
            if ss.is_exact(r + 1, p, n) {
                prop_assert_eq!(
                    ss.page_homology(r, p, n),
                    ss.group(r + 1, p, n),
                    "r={} ({},{})",
                    r,
                    p,
                    n
                );
            }
        }
    }
    Ok(())
}
