//! Complexes of ordered partitions with an upper bound on the parts.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::homalg::{homology_of_sparse_pair, HomologyGroup, Ring, SparseMatrix};
use crate::with_ring;
use crate::Error;

/// `𝒪𝒫(l, m)`: in degree `k` the ordered partitions of `l` into `k` parts,
/// each part below `m`, listed lexicographically.
#[derive(Clone, Debug)]
pub struct OpComplex {
    pub l: i64,
    pub m: usize,
    pub bases: Vec<Vec<Vec<usize>>>,
    /// `d_k: 𝒪𝒫_k → 𝒪𝒫_{k−1}`; zero for `k ≤ 1`.
    pub differentials: Vec<SparseMatrix<i64>>,
}

fn partitions(l: usize, k: usize, m: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k == 0 {
        if l == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for a in 1..m.min(l + 1) {
        // the remaining k−1 parts need between k−1 and (k−1)(m−1)
        let rest = l - a;
        if rest < k - 1 || rest > (k - 1) * (m - 1) {
            continue;
        }
        prefix.push(a);
        partitions(rest, k - 1, m, prefix, out);
        prefix.pop();
    }
}

pub fn op_complex(l: i64, m: usize) -> Result<OpComplex, Error> {
    if m < 2 {
        return Err(Error::InvalidParameters(
            "ordered partition bound needs m >= 2".into(),
        ));
    }
    if l < 0 {
        return Ok(OpComplex {
            l,
            m,
            bases: vec![Vec::new()],
            differentials: vec![SparseMatrix::zero(0, 0)],
        });
    }
    let lu = l as usize;
    let top = lu + 1;
    let bases: Vec<Vec<Vec<usize>>> = (0..=top)
        .map(|k| {
            let mut out = Vec::new();
            partitions(lu, k, m, &mut Vec::new(), &mut out);
            out
        })
        .collect();
    let index: Vec<BTreeMap<&[usize], usize>> = bases
        .iter()
        .map(|b| {
            b.iter()
                .enumerate()
                .map(|(i, p)| (p.as_slice(), i))
                .collect()
        })
        .collect();
    let mut differentials = Vec::with_capacity(bases.len());
    for k in 0..bases.len() {
        let rows = if k == 0 { 0 } else { bases[k - 1].len() };
        if k <= 1 {
            differentials.push(SparseMatrix::zero(rows, bases[k].len()));
            continue;
        }
        let cols = bases[k]
            .iter()
            .map(|p| {
                let mut col: Vec<(usize, i64)> = (1..k)
                    .filter(|&i| p[i - 1] + p[i] < m)
                    .map(|i| {
                        let mut q = p[..i - 1].to_vec();
                        q.push(p[i - 1] + p[i]);
                        q.extend_from_slice(&p[i + 1..]);
                        (index[k - 1][q.as_slice()], if i % 2 == 0 { 1 } else { -1 })
                    })
                    .collect();
                col.sort_unstable_by_key(|e| e.0);
                col
            })
            .collect();
        differentials.push(SparseMatrix::new(rows, cols));
    }
    Ok(OpComplex {
        l,
        m,
        bases,
        differentials,
    })
}

impl OpComplex {
    pub fn homology_in(&self, ring: Ring, k: usize) -> HomologyGroup {
        let top = self.bases.len();
        if k >= top {
            return HomologyGroup::trivial();
        }
        let dk = &self.differentials[k];
        let dk1 = if k + 1 < top {
            self.differentials[k + 1].clone()
        } else {
            SparseMatrix::zero(self.bases[k].len(), 0)
        };
        with_ring!(ring, r => homology_of_sparse_pair(&r, dk, &dk1)).expect("d∘d = 0")
    }
}

/// `k ↦ H_k(𝒪𝒫(l, m))` for every degree carrying cells.
pub fn op_homology(l: i64, m: usize, ring: Ring) -> Result<BTreeMap<usize, HomologyGroup>, Error> {
    let c = op_complex(l, m)?;
    Ok((0..c.bases.len())
        .map(|k| (k, c.homology_in(ring, k)))
        .collect())
}
