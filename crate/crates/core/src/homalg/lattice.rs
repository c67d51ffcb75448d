//! Submodules of `R^n` given by generators: echelon bases, saturated kernels,
//! subquotients `span(Z)/span(B)` with coordinates, and induced maps.

use alloc::vec;
use alloc::vec::Vec;

use super::group::HomologyGroup;
use super::matrix::Matrix;
use super::ring::CoefficientRing;
use super::snf::{invariant_factors_dense, normalizing_unit, smith_normal_form};
use crate::Error;

type Vector<R> = Vec<<R as CoefficientRing>::Elem>;

/// `x -= c·y` on the index range `from..`.
fn axpy<R: CoefficientRing>(ring: &R, x: &mut [R::Elem], c: &R::Elem, y: &[R::Elem], from: usize) {
    if ring.is_zero(c) {
        return;
    }
    for k in from..x.len() {
        if ring.is_zero(&y[k]) {
            continue;
        }
        x[k] = ring.sub(&x[k], &ring.mul(c, &y[k]));
    }
}

struct Column<R: CoefficientRing> {
    v: Vector<R>,
    t: Option<Vector<R>>,
}

/// Column-style Euclidean elimination. Returns pivot columns (with pivot row)
/// and the transforms of the columns that became zero.
#[allow(clippy::type_complexity)]
fn eliminate<R: CoefficientRing>(
    ring: &R,
    nrows: usize,
    mut active: Vec<Column<R>>,
) -> (Vec<(usize, Column<R>)>, Vec<Vector<R>>) {
    let mut pivots = Vec::new();
    for i in 0..nrows {
        loop {
            let idx: Vec<usize> = (0..active.len())
                .filter(|&c| !ring.is_zero(&active[c].v[i]))
                .collect();
            if idx.is_empty() {
                break;
            }
            let mut best = idx[0];
            for &c in &idx[1..] {
                if ring.norm_cmp(&active[c].v[i], &active[best].v[i]) == core::cmp::Ordering::Less {
                    best = c;
                }
            }
            if idx.len() == 1 {
                let mut col = active.swap_remove(best);
                let (u, _) = normalizing_unit(ring, &col.v[i]);
                if u != ring.one() {
                    for x in col.v.iter_mut() {
                        *x = ring.mul(x, &u);
                    }
                    if let Some(t) = &mut col.t {
                        for x in t.iter_mut() {
                            *x = ring.mul(x, &u);
                        }
                    }
                }
                pivots.push((i, col));
                break;
            }
            let piv = active[best].v.clone();
            let piv_t = active[best].t.clone();
            for &c in &idx {
                if c == best {
                    continue;
                }
                let (q, _) = ring.div_rem(&active[c].v[i], &piv[i]);
                axpy(ring, &mut active[c].v, &q, &piv, i);
                if let (Some(t), Some(pt)) = (&mut active[c].t, &piv_t) {
                    axpy(ring, t, &q, pt, 0);
                }
            }
        }
    }
    let zeros = active.into_iter().filter_map(|c| c.t).collect();
    (pivots, zeros)
}

/// Echelon basis of a submodule of `R^n`: basis vector `j` vanishes above
/// its pivot row, and pivot rows strictly increase.
#[derive(Clone, Debug)]
pub struct Echelon<R: CoefficientRing> {
    ring: R,
    ambient: usize,
    basis: Vec<Vector<R>>,
    pivots: Vec<usize>,
}

impl<R: CoefficientRing> Echelon<R> {
    pub fn new(ring: &R, ambient: usize, gens: Vec<Vector<R>>) -> Self {
        for g in &gens {
            assert_eq!(g.len(), ambient, "generator length");
        }
        let cols = gens
            .into_iter()
            .map(|v| Column::<R> { v, t: None })
            .collect();
        let (piv, _) = eliminate(ring, ambient, cols);
        let (pivots, basis) = piv.into_iter().map(|(i, c)| (i, c.v)).unzip();
        Echelon {
            ring: ring.clone(),
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<R>] {
        &self.basis
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is outside the span.
    pub fn coords(&self, v: &[R::Elem]) -> Option<Vector<R>> {
        let r = &self.ring;
        let mut w = v.to_vec();
        let mut c = Vec::with_capacity(self.basis.len());
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if r.is_zero(&w[p]) {
                c.push(r.zero());
                continue;
            }
            let q = r.exact_div(&w[p], &b[p])?;
            axpy(r, &mut w, &q, b, p);
            c.push(q);
        }
        if w.iter().all(|x| r.is_zero(x)) {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[R::Elem]) -> bool {
        self.coords(v).is_some()
    }

    /// Combination of basis vectors with the given coefficients.
    pub fn combine(&self, c: &[R::Elem]) -> Vector<R> {
        let r = &self.ring;
        let mut out = vec![r.zero(); self.ambient];
        for (b, x) in self.basis.iter().zip(c) {
            let nx = r.neg(x);
            axpy(r, &mut out, &nx, b, 0);
        }
        out
    }
}

/// A saturated basis of `{x : m·x = 0}` given the columns of `m`.
pub fn kernel_of_columns<R: CoefficientRing>(
    ring: &R,
    nrows: usize,
    columns: Vec<Vector<R>>,
) -> Vec<Vector<R>> {
    let n = columns.len();
    let cols = columns
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            let mut t = vec![ring.zero(); n];
            t[j] = ring.one();
            Column::<R> { v, t: Some(t) }
        })
        .collect();
    let (_, zeros) = eliminate(ring, nrows, cols);
    zeros
}

pub fn kernel<R: CoefficientRing>(ring: &R, m: &Matrix<R::Elem>) -> Vec<Vector<R>> {
    kernel_of_columns(ring, m.rows(), m.columns())
}

#[derive(Clone, Debug)]
enum Slot<T> {
    Free(usize),
    Torsion(usize, T),
}

/// The quotient `span(Z)/span(B)` inside `R^ambient`.
#[derive(Clone, Debug)]
pub struct Subquotient<R: CoefficientRing> {
    ring: R,
    z: Echelon<R>,
    b_gens: Vec<Vector<R>>,
    u: Matrix<R::Elem>,
    slots: Vec<Slot<R::Elem>>,
    lifts: Vec<Vector<R>>,
    group: HomologyGroup,
}

impl<R: CoefficientRing> Subquotient<R> {
    /// Fails with [`Error::ContainmentFailure`] unless span(B) ⊆ span(Z).
    pub fn new(
        ring: &R,
        ambient: usize,
        z_gens: Vec<Vector<R>>,
        b_gens: Vec<Vector<R>>,
    ) -> Result<Self, Error> {
        let z = Echelon::new(ring, ambient, z_gens);
        Self::from_echelon(ring, z, b_gens)
    }

    pub fn from_echelon(ring: &R, z: Echelon<R>, b_gens: Vec<Vector<R>>) -> Result<Self, Error> {
        let zr = z.rank();
        let mut bc = Vec::with_capacity(b_gens.len());
        for b in &b_gens {
            if b.len() != z.ambient() {
                return Err(Error::DimensionMismatch("boundary generator length".into()));
            }
            bc.push(z.coords(b).ok_or(Error::ContainmentFailure)?);
        }
        let bmat = Matrix::from_fn(zr, bc.len(), |i, j| bc[j][i].clone());
        let snf = smith_normal_form(ring, &bmat);
        let diag = snf.diagonal();
        let mut free = Vec::new();
        let mut tors = Vec::new();
        for (i, d) in diag.iter().enumerate() {
            if !ring.is_unit(d) {
                tors.push(Slot::Torsion(i, d.clone()));
            }
        }
        for i in snf.rank..zr {
            free.push(Slot::Free(i));
        }
        let group = HomologyGroup::from_invariants(ring, zr, &diag);
        let mut slots = free;
        slots.extend(tors);
        let lifts = slots
            .iter()
            .map(|s| {
                let i = match s {
                    Slot::Free(i) | Slot::Torsion(i, _) => *i,
                };
                let c: Vector<R> = (0..zr).map(|k| snf.u_inv.get(k, i).clone()).collect();
                z.combine(&c)
            })
            .collect();
        Ok(Subquotient {
            ring: ring.clone(),
            z,
            b_gens,
            u: snf.u,
            slots,
            lifts,
            group,
        })
    }

    pub fn group(&self) -> &HomologyGroup {
        &self.group
    }

    pub fn ambient(&self) -> usize {
        self.z.ambient()
    }

    /// Ambient representatives of the quotient generators (free first, then
    /// torsion in invariant-factor order).
    pub fn lifts(&self) -> &[Vector<R>] {
        &self.lifts
    }

    pub fn cycles(&self) -> &Echelon<R> {
        &self.z
    }

    pub fn boundary_generators(&self) -> &[Vector<R>] {
        &self.b_gens
    }

    /// Torsion orders per generator slot (`None` for free slots).
    pub fn slot_orders(&self) -> Vec<Option<R::Elem>> {
        self.slots
            .iter()
            .map(|s| match s {
                Slot::Free(_) => None,
                Slot::Torsion(_, d) => Some(d.clone()),
            })
            .collect()
    }

    /// Class coordinates of an element of span(Z); torsion coordinates are
    /// reduced to canonical residues.
    pub fn coordinates(&self, v: &[R::Elem]) -> Result<Vector<R>, Error> {
        let r = &self.ring;
        let c = self.z.coords(v).ok_or(Error::ContainmentFailure)?;
        let w = self.u.mul_vec_in(r, &c);
        Ok(self
            .slots
            .iter()
            .map(|s| match s {
                Slot::Free(i) => w[*i].clone(),
                Slot::Torsion(i, d) => canonical_residue(r, &w[*i], d),
            })
            .collect())
    }

    pub fn is_zero_class(&self, v: &[R::Elem]) -> Result<bool, Error> {
        Ok(self.coordinates(v)?.iter().all(|x| self.ring.is_zero(x)))
    }
}

pub(crate) fn canonical_residue<R: CoefficientRing>(ring: &R, a: &R::Elem, d: &R::Elem) -> R::Elem {
    let (_, r) = ring.div_rem(a, d);
    if ring.is_zero(&r) {
        return r;
    }
    // prefer the non-negative representative over the integers
    let rr = ring.to_rat(&r);
    if rr.numer().is_negative() {
        let dd = ring.to_rat(d);
        if dd.numer().is_negative() {
            ring.sub(&r, d)
        } else {
            ring.add(&r, d)
        }
    } else {
        r
    }
}

/// A map between subquotients on their chosen generators.
#[derive(Clone, Debug)]
pub struct InducedMap<T> {
    pub matrix: Matrix<T>,
    pub is_isomorphism: bool,
}

/// The map `span(Z_s)/span(B_s) → span(Z_t)/span(B_t)` induced by an ambient
/// matrix; fails if the ambient map does not preserve Z or B.
pub fn induced_subquotient_map<R: CoefficientRing>(
    ring: &R,
    source: &Subquotient<R>,
    target: &Subquotient<R>,
    ambient_map: &Matrix<R::Elem>,
) -> Result<InducedMap<R::Elem>, Error> {
    if ambient_map.cols() != source.ambient() || ambient_map.rows() != target.ambient() {
        return Err(Error::DimensionMismatch("ambient map".into()));
    }
    for zb in source.cycles().basis() {
        if !target.cycles().contains(&ambient_map.mul_vec_in(ring, zb)) {
            return Err(Error::NotWellDefined);
        }
    }
    for b in source.boundary_generators() {
        if !target.is_zero_class(&ambient_map.mul_vec_in(ring, b))? {
            return Err(Error::NotWellDefined);
        }
    }
    let mut columns = Vec::with_capacity(source.lifts().len());
    for l in source.lifts() {
        columns.push(target.coordinates(&ambient_map.mul_vec_in(ring, l))?);
    }
    let rows = target.group().generator_count();
    let matrix = Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone());
    let is_isomorphism = is_isomorphism(
        ring,
        source.group(),
        target.group(),
        &target.slot_orders(),
        &matrix,
    );
    Ok(InducedMap {
        matrix,
        is_isomorphism,
    })
}

/// Decides whether a map of presented modules is bijective. The target is
/// `⊕ R/(orders[i])` (free where `None`); the map is given on generators.
/// Equal invariants plus surjectivity suffice for finitely generated modules.
pub fn is_isomorphism<R: CoefficientRing>(
    ring: &R,
    source: &HomologyGroup,
    target: &HomologyGroup,
    target_orders: &[Option<R::Elem>],
    matrix: &Matrix<R::Elem>,
) -> bool {
    if source != target {
        return false;
    }
    let g = target_orders.len();
    if g == 0 {
        return true;
    }
    let mut cols = matrix.columns();
    for (i, o) in target_orders.iter().enumerate() {
        if let Some(d) = o {
            let mut c = vec![ring.zero(); g];
            c[i] = d.clone();
            cols.push(c);
        }
    }
    let m = Matrix::from_fn(g, cols.len(), |i, j| cols[j][i].clone());
    let inv = invariant_factors_dense(ring, &m);
    inv.len() == g && inv.iter().all(|d| ring.is_unit(d))
}

/// Homology at `M` of `L → M → N` for presented modules `M = R^g/⊕(mid_orders)`
/// and `N = R^h/⊕(out_orders)` (`None` marks a free slot), with the maps
/// given on generators.
pub fn presented_homology<R: CoefficientRing>(
    ring: &R,
    mid_orders: &[Option<R::Elem>],
    d_in: &Matrix<R::Elem>,
    d_out: &Matrix<R::Elem>,
    out_orders: &[Option<R::Elem>],
) -> Result<HomologyGroup, Error> {
    let g = mid_orders.len();
    if d_in.rows() != g || d_out.cols() != g || d_out.rows() != out_orders.len() {
        return Err(Error::DimensionMismatch("presented complex".into()));
    }
    let h = out_orders.len();
    let mut cols = d_out.columns();
    for (i, o) in out_orders.iter().enumerate() {
        if let Some(d) = o {
            let mut c = vec![ring.zero(); h];
            c[i] = d.clone();
            cols.push(c);
        }
    }
    let z: Vec<Vector<R>> = kernel_of_columns(ring, h, cols)
        .into_iter()
        .map(|mut v| {
            v.truncate(g);
            v
        })
        .collect();
    let mut b = d_in.columns();
    for (i, o) in mid_orders.iter().enumerate() {
        if let Some(d) = o {
            let mut c = vec![ring.zero(); g];
            c[i] = d.clone();
            b.push(c);
        }
    }
    Ok(Subquotient::new(ring, g, z, b)?.group().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::{Int, Integers, Rationals};

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| Int::from(x)).collect()
    }

    #[test]
    fn kernel_is_saturated() {
        let z = Integers;
        // x + 2y + 3z = 0
        let k = kernel_of_columns(&z, 1, vec![iv(&[1]), iv(&[2]), iv(&[3])]);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!((&(&v[0] + &(&Int::from(2) * &v[1])) + &(&Int::from(3) * &v[2])).is_zero());
        }
        // (1,1,-1) is in the kernel and must be an integer combination
        let e = Echelon::new(&z, 3, k);
        assert!(e.contains(&iv(&[1, 1, -1])));
    }

    #[test]
    fn subquotient_examples() {
        let z = Integers;
        let s = Subquotient::new(&z, 2, vec![iv(&[1, 0]), iv(&[0, 1])], vec![]).unwrap();
        assert_eq!(s.group(), &HomologyGroup::free(2));

        let q = Rationals;
        let one = |x: i64| q.from_i64(x);
        let s = Subquotient::new(
            &q,
            2,
            vec![vec![one(1), one(0)], vec![one(0), one(1)]],
            vec![vec![one(1), one(1)]],
        )
        .unwrap();
        assert_eq!(s.group(), &HomologyGroup::free(1));

        let s = Subquotient::new(&z, 2, vec![iv(&[2, 0]), iv(&[0, 1])], vec![iv(&[0, 1])]).unwrap();
        assert_eq!(s.group(), &HomologyGroup::free(1));
        assert_eq!(s.coordinates(&iv(&[4, 7])).unwrap(), iv(&[2]));

        let s = Subquotient::new(&z, 1, vec![iv(&[1])], vec![iv(&[2])]).unwrap();
        assert_eq!(s.group(), &HomologyGroup::with_cyclic(0, [Int::from(2)]));
        assert_eq!(s.coordinates(&iv(&[3])).unwrap(), iv(&[1]));
        assert_eq!(s.coordinates(&iv(&[-3])).unwrap(), iv(&[1]));

        let err = Subquotient::new(&z, 2, vec![iv(&[1, 0])], vec![iv(&[0, 1])]);
        assert!(matches!(err, Err(Error::ContainmentFailure)));
    }

    #[test]
    fn induced_maps() {
        let z = Integers;
        let s = Subquotient::new(&z, 2, vec![iv(&[1, 0]), iv(&[0, 1])], vec![iv(&[0, 2])]).unwrap();
        let id = Matrix::identity(&z, 2);
        let m = induced_subquotient_map(&z, &s, &s, &id).unwrap();
        assert!(m.is_isomorphism);
        let zero = Matrix::zeros(&z, 2, 2);
        let m = induced_subquotient_map(&z, &s, &s, &zero).unwrap();
        assert!(!m.is_isomorphism);
        // multiplication by 3 is invertible on Z/2 but not on Z
        let three = Matrix::from_fn(2, 2, |i, j| if i == j { Int::from(3) } else { Int::ZERO });
        let m = induced_subquotient_map(&z, &s, &s, &three).unwrap();
        assert!(!m.is_isomorphism);
        // a map that does not preserve B
        let swap = Matrix::from_fn(2, 2, |i, j| if i != j { Int::ONE } else { Int::ZERO });
        assert!(matches!(
            induced_subquotient_map(&z, &s, &s, &swap),
            Err(Error::NotWellDefined)
        ));
    }
}
