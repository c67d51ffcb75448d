//! Dense Smith normal form over any [`CoefficientRing`].

use alloc::vec::Vec;

use super::matrix::Matrix;
use super::ring::CoefficientRing;

/// `u · m · v = d` with `d` diagonal, `d[i][i] | d[i+1][i+1]`, and `u`, `v`
/// invertible. `u_inv` is kept alongside `u` so callers can lift classes.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    pub d: Matrix<T>,
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub v: Matrix<T>,
    pub rank: usize,
}

impl<T: Clone> SmithForm<T> {
    /// The nonzero diagonal entries.
    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

type TransformPair<E> = (Matrix<E>, Matrix<E>);

struct Work<'a, R: CoefficientRing> {
    ring: &'a R,
    a: Matrix<R::Elem>,
    /// The row transform and its inverse, when requested.
    u: Option<TransformPair<R::Elem>>,
    v: Option<Matrix<R::Elem>>,
}

impl<R: CoefficientRing> Work<'_, R> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some((u, ui)) = &mut self.u {
            u.swap_rows(i, j);
            ui.swap_cols(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    /// row_i += c · row_t
    fn add_row(&mut self, i: usize, t: usize, c: &R::Elem) {
        let r = self.ring;
        add_row_multiple(r, &mut self.a, i, t, c);
        if let Some((u, ui)) = &mut self.u {
            add_row_multiple(r, u, i, t, c);
            // inverse: col_t -= c · col_i
            let nc = r.neg(c);
            add_col_multiple(r, ui, t, i, &nc);
        }
    }

    /// col_j += c · col_t
    fn add_col(&mut self, j: usize, t: usize, c: &R::Elem) {
        add_col_multiple(self.ring, &mut self.a, j, t, c);
        if let Some(v) = &mut self.v {
            add_col_multiple(self.ring, v, j, t, c);
        }
    }

    fn scale_row(&mut self, t: usize, c: &R::Elem, c_inv: &R::Elem) {
        let r = self.ring;
        for j in 0..self.a.cols() {
            let x = r.mul(self.a.get(t, j), c);
            self.a.set(t, j, x);
        }
        if let Some((u, ui)) = &mut self.u {
            for j in 0..u.cols() {
                let x = r.mul(u.get(t, j), c);
                u.set(t, j, x);
            }
            for i in 0..ui.rows() {
                let x = r.mul(ui.get(i, t), c_inv);
                ui.set(i, t, x);
            }
        }
    }
}

pub(crate) fn add_row_multiple<R: CoefficientRing>(
    r: &R,
    m: &mut Matrix<R::Elem>,
    i: usize,
    t: usize,
    c: &R::Elem,
) {
    if r.is_zero(c) {
        return;
    }
    for j in 0..m.cols() {
        let s = m.get(t, j);
        if r.is_zero(s) {
            continue;
        }
        let x = r.add_mul(m.get(i, j), c, s);
        m.set(i, j, x);
    }
}

pub(crate) fn add_col_multiple<R: CoefficientRing>(
    r: &R,
    m: &mut Matrix<R::Elem>,
    j: usize,
    t: usize,
    c: &R::Elem,
) {
    if r.is_zero(c) {
        return;
    }
    for i in 0..m.rows() {
        let s = m.get(i, t);
        if r.is_zero(s) {
            continue;
        }
        let x = r.add_mul(m.get(i, j), c, s);
        m.set(i, j, x);
    }
}

/// Smith normal form with transforms.
pub fn smith_normal_form<R: CoefficientRing>(ring: &R, m: &Matrix<R::Elem>) -> SmithForm<R::Elem> {
    let (a, u, v, rank) = run(ring, m, true);
    let (u, u_inv) = u.expect("tracked");
    SmithForm {
        d: a,
        u,
        u_inv,
        v: v.expect("tracked"),
        rank,
    }
}

/// Invariant factors only (no transforms): the nonzero diagonal of the
/// Smith form.
pub fn invariant_factors_dense<R: CoefficientRing>(ring: &R, m: &Matrix<R::Elem>) -> Vec<R::Elem> {
    let (a, _, _, rank) = run(ring, m, false);
    (0..rank).map(|i| a.get(i, i).clone()).collect()
}

#[allow(clippy::type_complexity)]
fn run<R: CoefficientRing>(
    ring: &R,
    m: &Matrix<R::Elem>,
    track: bool,
) -> (
    Matrix<R::Elem>,
    Option<(Matrix<R::Elem>, Matrix<R::Elem>)>,
    Option<Matrix<R::Elem>>,
    usize,
) {
    let rows = m.rows();
    let cols = m.cols();
    let mut w = Work {
        ring,
        a: m.clone(),
        u: track.then(|| (Matrix::identity(ring, rows), Matrix::identity(ring, rows))),
        v: track.then(|| Matrix::identity(ring, cols)),
    };
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest-norm pivot, ties to the lowest row then column
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = w.a.get(i, j);
                if ring.is_zero(x) {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if ring.norm_cmp(x, w.a.get(bi, bj)) == core::cmp::Ordering::Less {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut restart = false;
            for i in t + 1..rows {
                if ring.is_zero(w.a.get(i, t)) {
                    continue;
                }
                let (q, r) = ring.div_rem(w.a.get(i, t), w.a.get(t, t));
                w.add_row(i, t, &ring.neg(&q));
                if !ring.is_zero(&r) {
                    w.swap_rows(t, i);
                    restart = true;
                }
            }
            for j in t + 1..cols {
                if ring.is_zero(w.a.get(t, j)) {
                    continue;
                }
                let (q, r) = ring.div_rem(w.a.get(t, j), w.a.get(t, t));
                w.add_col(j, t, &ring.neg(&q));
                if !ring.is_zero(&r) {
                    w.swap_cols(t, j);
                    restart = true;
                }
            }
            if restart {
                continue;
            }
            if !ring.is_field() {
                let piv = w.a.get(t, t).clone();
                let mut bad = None;
                'scan: for i in t + 1..rows {
                    for j in t + 1..cols {
                        let x = w.a.get(i, j);
                        if !ring.is_zero(x) && ring.exact_div(x, &piv).is_none() {
                            bad = Some(i);
                            break 'scan;
                        }
                    }
                }
                if let Some(i) = bad {
                    w.add_row(t, i, &ring.one());
                    continue;
                }
            }
            break;
        }
        let piv = w.a.get(t, t).clone();
        let (c, c_inv) = normalizing_unit(ring, &piv);
        if c != ring.one() {
            w.scale_row(t, &c, &c_inv);
        }
        t += 1;
    }
    (w.a, w.u, w.v, t)
}

/// A unit `c` (and its inverse) with `c·a` in normal form: positive over
/// the integers, one over a field.
pub(crate) fn normalizing_unit<R: CoefficientRing>(ring: &R, a: &R::Elem) -> (R::Elem, R::Elem) {
    if ring.is_field() {
        let inv = ring.unit_inverse(a).expect("nonzero pivot");
        return (inv, a.clone());
    }
    let r = ring.to_rat(a);
    if r.numer().is_negative() {
        let m = ring.neg(&ring.one());
        (m.clone(), m)
    } else {
        (ring.one(), ring.one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::{Int, Integers, Rationals};
    use alloc::vec;

    fn zm(rows: Vec<Vec<i64>>) -> Matrix<Int> {
        let c = rows[0].len();
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Int::from).collect())
                .collect(),
            c,
        )
        .unwrap()
    }

    fn check(m: &Matrix<Int>) -> SmithForm<Int> {
        let z = Integers;
        let s = smith_normal_form(&z, m);
        let prod = s.u.mul_in(&z, m).unwrap().mul_in(&z, &s.v).unwrap();
        assert_eq!(prod, s.d);
        let id = s.u.mul_in(&z, &s.u_inv).unwrap();
        assert_eq!(id, Matrix::identity(&z, m.rows()));
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        for w in diag.windows(2) {
            assert!(w[1].checked_exact_div(&w[0]).is_some());
        }
        s
    }

    #[test]
    fn two_by_two() {
        let s = check(&zm(vec![vec![2, 4], vec![6, 8]]));
        assert_eq!(s.diagonal(), vec![Int::from(2), Int::from(4)]);
    }

    #[test]
    fn zero_and_scalar() {
        let s = check(&zm(vec![vec![0, 0], vec![0, 0]]));
        assert_eq!(s.rank, 0);
        assert_eq!(s.u, Matrix::identity(&Integers, 2));
        let s = check(&zm(vec![vec![5]]));
        assert_eq!(s.diagonal(), vec![Int::from(5)]);
    }

    #[test]
    fn divisibility_fix_up() {
        // diag(2,3) must become diag(1,6)
        let s = check(&zm(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(s.diagonal(), vec![Int::from(1), Int::from(6)]);
        let s = check(&zm(vec![vec![4, 6, 0], vec![6, 9, 3], vec![2, -1, 7]]));
        assert_eq!(s.rank, 3);
    }

    #[test]
    fn field_rank() {
        let q = Rationals;
        let m = zm(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]).map(|v| q.from_int(v));
        assert_eq!(invariant_factors_dense(&q, &m).len(), 2);
    }
}
