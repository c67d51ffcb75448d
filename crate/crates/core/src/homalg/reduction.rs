//! Filtration-respecting column reduction of a filtered chain complex.
//!
//! Cells in each degree are ordered compatibly with the filtration. Reducing
//! the boundary columns left to right yields a filtered basis in which the
//! complex splits into essential cells and pairs `τ ↦ σ = dτ`. Each basis
//! vector has a leading cell, distinct for distinct vectors, so any chain can
//! be decomposed by back substitution. Over the integers the reduction only
//! succeeds when every pivot is a unit; then the basis change is unimodular.

use alloc::vec;
use alloc::vec::Vec;

use super::matrix::SparseMatrix;
use super::ring::CoefficientRing;
use crate::Error;

/// Per-degree input: filtration value of each cell (non-decreasing) and the
/// boundary `C_n → C_{n−1}` (empty rows for degree 0).
#[derive(Clone, Debug)]
pub struct FilteredBoundary {
    pub filtrations: Vec<Vec<u32>>,
    pub boundaries: Vec<SparseMatrix<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellRole {
    /// Unpaired cycle.
    Essential,
    /// Boundary `σ` paired with the negative cell `partner` one degree up.
    Positive { partner: usize },
    /// Cell whose reduced boundary has leading cell `low` one degree down.
    Negative { low: usize },
}

#[derive(Clone, Debug)]
pub struct ReducedDegree<T> {
    pub roles: Vec<CellRole>,
    /// Adapted basis vector led by each cell, as sorted `(cell, coeff)`.
    pub basis: Vec<Vec<(usize, T)>>,
    pub lead: Vec<T>,
}

#[derive(Clone, Debug)]
pub struct FilteredReduction<R: CoefficientRing> {
    ring: R,
    filtrations: Vec<Vec<u32>>,
    degrees: Vec<ReducedDegree<R::Elem>>,
}

type SparseVec<T> = Vec<(usize, T)>;

fn sub_scaled<R: CoefficientRing>(
    ring: &R,
    a: &[(usize, R::Elem)],
    f: &R::Elem,
    b: &[(usize, R::Elem)],
) -> SparseVec<R::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() || y < b.len() {
        let ka = a.get(x).map_or(usize::MAX, |e| e.0);
        let kb = b.get(y).map_or(usize::MAX, |e| e.0);
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

impl<R: CoefficientRing> FilteredReduction<R> {
    pub fn new(ring: &R, data: &FilteredBoundary) -> Result<Self, Error> {
        let top = data.filtrations.len();
        let mut roles: Vec<Vec<Option<CellRole>>> = data
            .filtrations
            .iter()
            .map(|f| vec![None; f.len()])
            .collect();
        let mut basis: Vec<Vec<SparseVec<R::Elem>>> = data
            .filtrations
            .iter()
            .map(|f| vec![Vec::new(); f.len()])
            .collect();
        let mut lead: Vec<Vec<R::Elem>> = data
            .filtrations
            .iter()
            .map(|f| vec![ring.one(); f.len()])
            .collect();
        for n in (1..top).rev() {
            let d = &data.boundaries[n];
            let cells = data.filtrations[n].len();
            if d.cols() != cells || d.rows() != data.filtrations[n - 1].len() {
                return Err(Error::DimensionMismatch("boundary shape".into()));
            }
            let mut pivot_of_row: Vec<Option<usize>> = vec![None; d.rows()];
            let mut r_cols: Vec<SparseVec<R::Elem>> = vec![Vec::new(); cells];
            let mut v_cols: Vec<SparseVec<R::Elem>> = vec![Vec::new(); cells];
            for j in 0..cells {
                v_cols[j] = vec![(j, ring.one())];
                if matches!(roles[n][j], Some(CellRole::Positive { .. })) {
                    // already known to reduce to zero
                    continue;
                }
                let mut r: SparseVec<R::Elem> = d
                    .column(j)
                    .iter()
                    .map(|(i, v)| (*i, ring.from_i64(*v)))
                    .filter(|(_, v)| !ring.is_zero(v))
                    .collect();
                let mut v = v_cols[j].clone();
                while let Some((low, x)) = r.last().cloned() {
                    match pivot_of_row[low] {
                        Some(k) => {
                            let pk = &r_cols[k].last().expect("pivot column nonzero").1;
                            let f = ring.exact_div(&x, pk).ok_or(Error::NonUnitPivot)?;
                            r = sub_scaled(ring, &r, &f, &r_cols[k]);
                            v = sub_scaled(ring, &v, &f, &v_cols[k]);
                        }
                        None => {
                            if !ring.is_unit(&x) {
                                return Err(Error::NonUnitPivot);
                            }
                            pivot_of_row[low] = Some(j);
                            break;
                        }
                    }
                }
                if let Some((low, x)) = r.last().cloned() {
                    roles[n][j] = Some(CellRole::Negative { low });
                    roles[n - 1][low] = Some(CellRole::Positive { partner: j });
                    lead[n - 1][low] = x;
                    basis[n - 1][low] = r.clone();
                }
                r_cols[j] = r;
                v_cols[j] = v;
            }
            for j in 0..cells {
                match roles[n][j] {
                    Some(CellRole::Positive { .. }) => {}
                    Some(CellRole::Negative { .. }) | None => {
                        basis[n][j] = core::mem::take(&mut v_cols[j]);
                    }
                    Some(CellRole::Essential) => unreachable!("essential cells are assigned last"),
                }
            }
        }
        if top > 0 {
            for j in 0..data.filtrations[0].len() {
                if roles[0][j].is_none() {
                    basis[0][j] = vec![(j, ring.one())];
                }
            }
        }
        let degrees = roles
            .into_iter()
            .zip(basis)
            .zip(lead)
            .map(|((r, b), l)| ReducedDegree {
                roles: r
                    .into_iter()
                    .map(|x| x.unwrap_or(CellRole::Essential))
                    .collect(),
                basis: b,
                lead: l,
            })
            .collect();
        Ok(FilteredReduction {
            ring: ring.clone(),
            filtrations: data.filtrations.clone(),
            degrees,
        })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, n: usize) -> Option<&ReducedDegree<R::Elem>> {
        self.degrees.get(n)
    }

    pub fn filtration(&self, n: usize, cell: usize) -> u32 {
        self.filtrations[n][cell]
    }

    pub fn filtrations(&self, n: usize) -> &[u32] {
        self.filtrations.get(n).map_or(&[], |v| v.as_slice())
    }

    /// Filtration gap of the pair a cell belongs to, `None` if essential.
    pub fn gap(&self, n: usize, cell: usize) -> Option<u32> {
        let f = self.filtrations[n][cell];
        match self.degrees[n].roles[cell] {
            CellRole::Essential => None,
            CellRole::Positive { partner } => Some(self.filtrations[n + 1][partner] - f),
            CellRole::Negative { low } => Some(f - self.filtrations[n - 1][low]),
        }
    }

    /// Coefficients of a chain (dense over the cells of degree `n`) in the
    /// adapted basis.
    pub fn decompose(&self, n: usize, chain: &[R::Elem]) -> Result<Vec<R::Elem>, Error> {
        let r = &self.ring;
        let deg = &self.degrees[n];
        if chain.len() != deg.roles.len() {
            return Err(Error::DimensionMismatch("chain length".into()));
        }
        let mut c = chain.to_vec();
        let mut out = vec![r.zero(); c.len()];
        for idx in (0..c.len()).rev() {
            if r.is_zero(&c[idx]) {
                continue;
            }
            let q = r
                .exact_div(&c[idx], &deg.lead[idx])
                .ok_or(Error::NonUnitPivot)?;
            for (i, v) in &deg.basis[idx] {
                c[*i] = r.sub(&c[*i], &r.mul(&q, v));
            }
            out[idx] = q;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homalg::{Int, Integers, Rationals};

    /// Filled triangle with vertices at filtration 0, edges at 1,1,2 and the
    /// face at 3.
    fn triangle() -> FilteredBoundary {
        FilteredBoundary {
            filtrations: vec![vec![0, 0, 0], vec![1, 1, 2], vec![3]],
            boundaries: vec![
                SparseMatrix::zero(0, 3),
                SparseMatrix::new(
                    3,
                    vec![
                        vec![(0, -1), (1, 1)],
                        vec![(1, -1), (2, 1)],
                        vec![(0, -1), (2, 1)],
                    ],
                ),
                SparseMatrix::new(3, vec![vec![(0, 1), (1, 1), (2, -1)]]),
            ],
        }
    }

    #[test]
    fn triangle_pairs() {
        let red = FilteredReduction::new(&Integers, &triangle()).unwrap();
        let d0 = red.degree(0).unwrap();
        assert_eq!(d0.roles[0], CellRole::Essential);
        assert_eq!(d0.roles[1], CellRole::Positive { partner: 0 });
        assert_eq!(d0.roles[2], CellRole::Positive { partner: 1 });
        let d1 = red.degree(1).unwrap();
        assert_eq!(d1.roles[2], CellRole::Positive { partner: 0 });
        assert_eq!(red.gap(1, 2), Some(1));
        assert_eq!(red.gap(0, 1), Some(1));
        // the boundary of the face decomposes as exactly one basis vector
        let chain: Vec<Int> = [1, 1, -1].iter().map(|&v| Int::from(v)).collect();
        let c = red.decompose(1, &chain).unwrap();
        assert_eq!(c.iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn non_unit_pivot_detected() {
        let data = FilteredBoundary {
            filtrations: vec![vec![0], vec![0]],
            boundaries: vec![
                SparseMatrix::zero(0, 1),
                SparseMatrix::new(1, vec![vec![(0, 2)]]),
            ],
        };
        assert!(matches!(
            FilteredReduction::new(&Integers, &data),
            Err(Error::NonUnitPivot)
        ));
        assert!(FilteredReduction::new(&Rationals, &data).is_ok());
    }
}
