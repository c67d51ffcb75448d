//! Independent oracles: exact rational linear algebra, a brute-force metric,
//! brute-force magnitude chains and path homology built from the definitions.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use mpss_core::digraph::DiGraph;

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Row-reduces in place and returns the pivot columns.
fn row_reduce(m: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = Q::one() / m[row][c].clone();
        for x in m[row].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = m[row].clone();
        for (i, r) in m.iter_mut().enumerate() {
            if i != row && !r[c].is_zero() {
                let f = r[c].clone();
                for (x, p) in r.iter_mut().zip(&pivot_row) {
                    *x = x.clone() - p.clone() * f.clone();
                }
            }
        }
        pivots.push(c);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<Q>], cols: usize) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m, cols).len()
}

/// A basis of `{x : M x = 0}` for `M` given by rows.
pub fn nullspace(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut m = rows.to_vec();
    let pivots = row_reduce(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// All-pairs distances by Floyd–Warshall (`None` = unreachable).
pub fn distances(g: &DiGraph) -> Vec<Vec<Option<u32>>> {
    let n = g.vertex_count();
    let mut d = vec![vec![None; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for (u, v) in g.edges() {
        if u != v {
            d[u][v] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

fn tuples(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| (0..n).map(move |v| [t.clone(), vec![v]].concat()))
            .collect();
    }
    out
}

/// Trails of degree `k` and length exactly `l`, by brute force over tuples.
pub fn trails(g: &DiGraph, k: usize, l: u32) -> Vec<Vec<usize>> {
    let d = distances(g);
    tuples(g.vertex_count(), k + 1)
        .into_iter()
        .filter(|t| {
            let mut total = 0;
            for w in t.windows(2) {
                if w[0] == w[1] {
                    return false;
                }
                match d[w[0]][w[1]] {
                    Some(s) => total += s,
                    None => return false,
                }
            }
            total == l
        })
        .collect()
}

/// Matrix (rows over degree `k−1`) of the magnitude differential on
/// trails of length `l`.
fn mc_differential(g: &DiGraph, k: usize, l: u32) -> (Vec<Vec<Q>>, usize) {
    let d = distances(g);
    let src = trails(g, k, l);
    let tgt = trails(g, k - 1, l);
    let mut rows = vec![vec![Q::zero(); src.len()]; tgt.len()];
    for (j, t) in src.iter().enumerate() {
        for i in 1..k {
            let (a, b, c) = (t[i - 1], t[i], t[i + 1]);
            if a == c {
                continue;
            }
            if d[a][c] == Some(d[a][b].unwrap() + d[b][c].unwrap()) {
                let mut face = t.clone();
                face.remove(i);
                let row = tgt.iter().position(|x| *x == face).unwrap();
                rows[row][j] += q(if i % 2 == 0 { 1 } else { -1 });
            }
        }
    }
    (rows, src.len())
}

/// `rank MH_{k,l}` over ℚ.
pub fn mh_rank(g: &DiGraph, k: usize, l: u32) -> usize {
    let dim = trails(g, k, l).len();
    let out = if k == 0 {
        0
    } else {
        let (m, c) = mc_differential(g, k, l);
        rank(&m, c)
    };
    let (m, c) = mc_differential(g, k + 1, l);
    dim - out - rank(&m, c)
}

/// Allowed elementary paths of degree `k`: consecutive vertices joined by
/// edges.
fn allowed(g: &DiGraph, k: usize) -> Vec<Vec<usize>> {
    tuples(g.vertex_count(), k + 1)
        .into_iter()
        .filter(|t| t.windows(2).all(|w| w[0] != w[1] && g.has_edge(w[0], w[1])))
        .collect()
}

/// Boundary of a combination of allowed `k`-paths as a map from regular
/// `(k−1)`-tuples to coefficients.
fn path_boundary(paths: &[Vec<usize>], v: &[Q]) -> std::collections::BTreeMap<Vec<usize>, Q> {
    let mut out = std::collections::BTreeMap::new();
    for (p, x) in paths.iter().zip(v) {
        if x.is_zero() || p.len() < 2 {
            continue;
        }
        for i in 0..p.len() {
            let mut face = p.clone();
            face.remove(i);
            if face.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let s = if i % 2 == 0 { x.clone() } else { -x.clone() };
            *out.entry(face).or_insert_with(Q::zero) += s;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `Ω_k`: combinations of allowed paths whose boundary is allowed.
fn omega(g: &DiGraph, k: usize) -> (Vec<Vec<usize>>, Vec<Vec<Q>>) {
    let a = allowed(g, k);
    if k == 0 {
        let basis = (0..a.len())
            .map(|i| (0..a.len()).map(|j| q((i == j) as i64)).collect())
            .collect();
        return (a, basis);
    }
    let lower: std::collections::BTreeSet<Vec<usize>> = allowed(g, k - 1).into_iter().collect();
    // coordinates of the boundary on non-allowed faces must vanish
    let mut bad: Vec<Vec<usize>> = Vec::new();
    let mut cols: Vec<std::collections::BTreeMap<Vec<usize>, Q>> = Vec::new();
    for i in 0..a.len() {
        let mut e = vec![Q::zero(); a.len()];
        e[i] = Q::one();
        let b = path_boundary(&a, &e);
        for f in b.keys() {
            if !lower.contains(f) && !bad.contains(f) {
                bad.push(f.clone());
            }
        }
        cols.push(b);
    }
    let rows: Vec<Vec<Q>> = bad
        .iter()
        .map(|f| {
            cols.iter()
                .map(|c| c.get(f).cloned().unwrap_or_else(Q::zero))
                .collect()
        })
        .collect();
    let basis = if rows.is_empty() {
        (0..a.len())
            .map(|i| (0..a.len()).map(|j| q((i == j) as i64)).collect())
            .collect()
    } else {
        nullspace(&rows, a.len())
    };
    (a, basis)
}

/// Rank of `∂: Ω_k → A_{k−1}`.
fn omega_boundary_rank(g: &DiGraph, k: usize) -> usize {
    if k == 0 {
        return 0;
    }
    let (a, basis) = omega(g, k);
    let lower = allowed(g, k - 1);
    let rows: Vec<Vec<Q>> = basis
        .iter()
        .map(|v| {
            let b = path_boundary(&a, v);
            lower
                .iter()
                .map(|f| b.get(f).cloned().unwrap_or_else(Q::zero))
                .collect()
        })
        .collect();
    // rank of the transpose equals rank
    rank(&rows, lower.len())
}

/// Ordinary (GLMY) path homology rank over ℚ.
pub fn path_homology_rank(g: &DiGraph, k: usize) -> usize {
    let (_, basis) = omega(g, k);
    basis.len() - omega_boundary_rank(g, k) - omega_boundary_rank(g, k + 1)
}

/// Reachability homology rank over ℚ in degree `k`, from every tuple.
pub fn rh_rank(g: &DiGraph, k: usize) -> usize {
    let d = distances(g);
    let reg = |m: usize| -> Vec<Vec<usize>> {
        tuples(g.vertex_count(), m + 1)
            .into_iter()
            .filter(|t| {
                t.windows(2)
                    .all(|w| w[0] != w[1] && d[w[0]][w[1]].is_some())
            })
            .collect()
    };
    let boundary_rank = |m: usize| -> usize {
        if m == 0 {
            return 0;
        }
        let src = reg(m);
        let tgt = reg(m - 1);
        let mut rows = vec![vec![Q::zero(); src.len()]; tgt.len()];
        for (j, t) in src.iter().enumerate() {
            for i in 0..t.len() {
                let mut face = t.clone();
                face.remove(i);
                if face.windows(2).any(|w| w[0] == w[1]) {
                    continue;
                }
                let row = tgt.iter().position(|x| *x == face).unwrap();
                rows[row][j] += q(if i % 2 == 0 { 1 } else { -1 });
            }
        }
        rank(&rows, src.len())
    };
    reg(k).len() - boundary_rank(k) - boundary_rank(k + 1)
}
