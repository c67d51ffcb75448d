//! Sparsity-aware invariant factors: eliminate unit pivots in place, then run
//! a dense Smith form on whatever is left.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::group::HomologyGroup;
use super::int::Int;
use super::matrix::{Matrix, SparseMatrix};
use super::ring::CoefficientRing;
use super::snf::invariant_factors_dense;
use crate::Error;

/// Rank of `m` together with its invariant factors that are not units.
pub fn sparse_invariants<R: CoefficientRing>(
    ring: &R,
    m: &SparseMatrix<R::Elem>,
) -> (usize, Vec<R::Elem>) {
    let nrows = m.rows();
    let ncols = m.cols();
    let mut rows: Vec<Vec<(usize, R::Elem)>> = vec![Vec::new(); nrows];
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (j, c) in m.columns().iter().enumerate() {
        for (i, v) in c {
            if !ring.is_zero(v) {
                rows[*i].push((j, v.clone()));
                col_rows[j].insert(*i);
            }
        }
    }
    // columns were visited in order, so rows are already sorted by column
    let mut unit_rank = 0;
    loop {
        let mut order: Vec<usize> = (0..ncols).filter(|&j| !col_rows[j].is_empty()).collect();
        order.sort_by_key(|&j| (col_rows[j].len(), j));
        let mut progress = false;
        for j in order {
            let mut best: Option<usize> = None;
            for &i in &col_rows[j] {
                let v = entry(&rows[i], j).expect("indexed entry");
                if !ring.is_unit(v) {
                    continue;
                }
                if best.is_none_or(|b| rows[i].len() < rows[b].len()) {
                    best = Some(i);
                }
            }
            let Some(pi) = best else { continue };
            let pivot_row = core::mem::take(&mut rows[pi]);
            for (c, _) in &pivot_row {
                col_rows[*c].remove(&pi);
            }
            let inv = ring
                .unit_inverse(entry(&pivot_row, j).expect("pivot"))
                .expect("unit");
            let others: Vec<usize> = col_rows[j].iter().copied().collect();
            for i in others {
                let f = ring.mul(entry(&rows[i], j).expect("indexed entry"), &inv);
                let old = core::mem::take(&mut rows[i]);
                let merged = merge_sub(ring, &old, &f, &pivot_row);
                for (c, _) in &old {
                    col_rows[*c].remove(&i);
                }
                for (c, _) in &merged {
                    col_rows[*c].insert(i);
                }
                rows[i] = merged;
            }
            unit_rank += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let live_rows: Vec<usize> = (0..nrows).filter(|&i| !rows[i].is_empty()).collect();
    if live_rows.is_empty() {
        return (unit_rank, Vec::new());
    }
    let live_cols: Vec<usize> = (0..ncols).filter(|&j| !col_rows[j].is_empty()).collect();
    let mut col_pos = vec![usize::MAX; ncols];
    for (k, &j) in live_cols.iter().enumerate() {
        col_pos[j] = k;
    }
    let mut dense = Matrix::zeros(ring, live_rows.len(), live_cols.len());
    for (a, &i) in live_rows.iter().enumerate() {
        for (c, v) in &rows[i] {
            dense.set(a, col_pos[*c], v.clone());
        }
    }
    let inv = invariant_factors_dense(ring, &dense);
    let rank = unit_rank + inv.len();
    (rank, inv.into_iter().filter(|d| !ring.is_unit(d)).collect())
}

fn entry<T>(row: &[(usize, T)], c: usize) -> Option<&T> {
    row.binary_search_by_key(&c, |(k, _)| *k)
        .ok()
        .map(|p| &row[p].1)
}

/// `a − f·b` on sorted sparse rows.
fn merge_sub<R: CoefficientRing>(
    ring: &R,
    a: &[(usize, R::Elem)],
    f: &R::Elem,
    b: &[(usize, R::Elem)],
) -> Vec<(usize, R::Elem)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() || y < b.len() {
        let ka = a.get(x).map(|e| e.0).unwrap_or(usize::MAX);
        let kb = b.get(y).map(|e| e.0).unwrap_or(usize::MAX);
        if ka < kb {
            out.push(a[x].clone());
            x += 1;
        } else if kb < ka {
            out.push((kb, ring.neg(&ring.mul(f, &b[y].1))));
            y += 1;
        } else {
            let v = ring.sub(&a[x].1, &ring.mul(f, &b[y].1));
            if !ring.is_zero(&v) {
                out.push((ka, v));
            }
            x += 1;
            y += 1;
        }
    }
    out
}

/// `ker d_k / im d_{k+1}` for integer differentials `d_k: C_k → C_{k−1}` and
/// `d_{k+1}: C_{k+1} → C_k`, computed over `ring`. Fails unless the
/// composite vanishes.
pub fn homology_of_sparse_pair<R: CoefficientRing>(
    ring: &R,
    d_k: &SparseMatrix<i64>,
    d_k1: &SparseMatrix<i64>,
) -> Result<HomologyGroup, Error> {
    if d_k.cols() != d_k1.rows() {
        return Err(Error::DimensionMismatch(
            "differentials do not compose".into(),
        ));
    }
    let a = d_k.to_ring(ring);
    let b = d_k1.to_ring(ring);
    if !a.mul_in(ring, &b)?.is_zero() {
        return Err(Error::NonzeroComposition);
    }
    let (rank_k, _) = sparse_invariants(ring, &a);
    let (rank_k1, factors) = sparse_invariants(ring, &b);
    let free = d_k.cols() - rank_k - rank_k1;
    let torsion: Vec<Int> = factors
        .iter()
        .filter_map(|d| ring.torsion_order(d))
        .collect();
    Ok(HomologyGroup::with_cyclic(free, torsion))
}

/// Dense-matrix form of [`homology_of_sparse_pair`].
pub fn homology_of_pair<R: CoefficientRing>(
    ring: &R,
    d_k: &Matrix<Int>,
    d_k_plus_1: &Matrix<Int>,
) -> Result<HomologyGroup, Error> {
    let to_sparse = |m: &Matrix<Int>| -> Result<SparseMatrix<i64>, Error> {
        let small = Matrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j).to_i64());
        if (0..m.rows()).any(|i| (0..m.cols()).any(|j| small.get(i, j).is_none())) {
            return Err(Error::DimensionMismatch(
                "differential entries exceed 64 bits".into(),
            ));
        }
        Ok(SparseMatrix::from_dense_i64(
            &small.map(|v| v.expect("checked")),
        ))
    };
    homology_of_sparse_pair(ring, &to_sparse(d_k)?, &to_sparse(d_k_plus_1)?)
}
