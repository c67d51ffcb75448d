//! Tensor products of pages with the signed Leibniz differential.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::homalg::{HomologyGroup, Matrix, Rat};
use crate::mpss::Page;

/// A tensor generator `a ⊗ b`: bidegree `(p, q)` and generator index on each
/// side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorGenerator {
    pub left: (i64, i64),
    pub left_index: usize,
    pub right: (i64, i64),
    pub right_index: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TensorEntry {
    pub p: i64,
    pub q: i64,
    /// `⊕ E^r(G)_{p₁,q₁} ⊗ E^r(H)_{p₂,q₂}` over the splittings of `(p, q)`.
    pub group: HomologyGroup,
    pub exact: bool,
    /// All products of generators, splitting by splitting.
    pub generators: Vec<TensorGenerator>,
}

/// `E^r(G) ⊗ E^r(H)`. Matrices act on the product generators and describe
/// `d⊗(a⊗b) = da⊗b + (−1)^{|a|} a⊗db`; they are meaningful over a field or
/// when all factors are free.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorPage {
    pub r: u32,
    pub l_max: u32,
    pub entries: BTreeMap<(i64, i64), TensorEntry>,
    pub differentials: BTreeMap<(i64, i64), Matrix<Rat>>,
}

impl TensorPage {
    pub fn group(&self, p: i64, q: i64) -> HomologyGroup {
        self.entries
            .get(&(p, q))
            .map_or_else(HomologyGroup::trivial, |e| e.group.clone())
    }
}

/// Splittings `((p₁,q₁),(p₂,q₂))` of `(p, q)` inside the page windows.
pub(crate) fn splittings(p: i64, q: i64) -> Vec<((i64, i64), (i64, i64))> {
    let n = p + q;
    let mut out = Vec::new();
    for p1 in 0..=p {
        for n1 in 0..=p1.min(n) {
            let (p2, n2) = (p - p1, n - n1);
            if n2 <= p2 {
                out.push(((p1, n1 - p1), (p2, n2 - p2)));
            }
        }
    }
    out
}

pub fn tensor_page(left: &Page, right: &Page) -> TensorPage {
    assert_eq!(left.r, right.r, "pages must share r");
    let r = left.r as i64;
    let l_max = left.l_max.min(right.l_max);
    let mut entries = BTreeMap::new();
    for p in 0..=l_max as i64 {
        for n in 0..=p {
            let q = n - p;
            let mut generators = Vec::new();
            let mut parts = Vec::new();
            let mut exact = true;
            for (a, b) in splittings(p, q) {
                let (ga, gb) = (left.group(a.0, a.1), right.group(b.0, b.1));
                exact &= left.is_exact(a.0, a.1) && right.is_exact(b.0, b.1);
                for i in 0..ga.generator_count() {
                    for j in 0..gb.generator_count() {
                        generators.push(TensorGenerator {
                            left: a,
                            left_index: i,
                            right: b,
                            right_index: j,
                        });
                    }
                }
                parts.push(ga.tensor(&gb));
            }
            entries.insert(
                (p, q),
                TensorEntry {
                    p,
                    q,
                    group: HomologyGroup::sum(&parts),
                    exact,
                    generators,
                },
            );
        }
    }
    let mut differentials = BTreeMap::new();
    for (&(p, q), e) in &entries {
        let target = entries.get(&(p - r, q + r - 1));
        let index: BTreeMap<TensorGenerator, usize> = target
            .map(|t| {
                t.generators
                    .iter()
                    .enumerate()
                    .map(|(i, g)| (*g, i))
                    .collect()
            })
            .unwrap_or_default();
        let rows = index.len();
        let mut m = Matrix::filled(rows, e.generators.len(), Rat::zero());
        if rows > 0 {
            for (col, g) in e.generators.iter().enumerate() {
                let sign = if (g.left.0 + g.left.1) % 2 == 0 {
                    Rat::one()
                } else {
                    Rat::one().neg()
                };
                let da = &left.differentials[&g.left];
                let a_target = (g.left.0 - r, g.left.1 + r - 1);
                for i in 0..da.rows() {
                    let x = da.get(i, g.left_index);
                    if !x.is_zero() {
                        let t = TensorGenerator {
                            left: a_target,
                            left_index: i,
                            ..*g
                        };
                        let row = index[&t];
                        m.set(row, col, m.get(row, col).add(x));
                    }
                }
                let db = &right.differentials[&g.right];
                let b_target = (g.right.0 - r, g.right.1 + r - 1);
                for j in 0..db.rows() {
                    let x = db.get(j, g.right_index);
                    if !x.is_zero() {
                        let t = TensorGenerator {
                            right: b_target,
                            right_index: j,
                            ..*g
                        };
                        let row = index[&t];
                        m.set(row, col, m.get(row, col).add(&sign.mul(x)));
                    }
                }
            }
        }
        differentials.insert((p, q), m);
    }
    TensorPage {
        r: left.r,
        l_max,
        entries,
        differentials,
    }
}
