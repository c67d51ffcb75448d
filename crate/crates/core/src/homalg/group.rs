//! Finitely generated modules over the supported rings, recorded as free rank
//! plus invariant factors.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::int::Int;
use super::matrix::Matrix;
use super::ring::{CoefficientRing, Integers};
use super::snf::invariant_factors_dense;

/// `R^free_rank ⊕ ⊕ ℤ/torsion[i]` with `torsion[i] | torsion[i+1]`, every
/// entry greater than one. Over a field the torsion list is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl HomologyGroup {
    pub fn trivial() -> Self {
        HomologyGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Builds from a free rank and arbitrary cyclic orders (units dropped),
    /// normalizing to invariant-factor form.
    pub fn with_cyclic(free_rank: usize, orders: impl IntoIterator<Item = Int>) -> Self {
        let mut t: Vec<Int> = orders
            .into_iter()
            .map(|d| d.abs())
            .filter(|d| !d.is_one())
            .collect();
        if t.iter().any(Int::is_zero) {
            let zeros = t.iter().filter(|d| d.is_zero()).count();
            t.retain(|d| !d.is_zero());
            return HomologyGroup::with_cyclic(free_rank + zeros, t);
        }
        HomologyGroup {
            free_rank,
            torsion: normalize_torsion(t),
        }
    }

    /// From a Smith diagonal: `generators` slots of which the given factors
    /// are the nonzero diagonal entries of the relation matrix.
    pub fn from_invariants<R: CoefficientRing>(
        ring: &R,
        generators: usize,
        factors: &[R::Elem],
    ) -> Self {
        let free = generators - factors.len();
        let torsion: Vec<Int> = factors
            .iter()
            .filter_map(|d| ring.torsion_order(d))
            .collect();
        HomologyGroup {
            free_rank: free,
            torsion: normalize_torsion(torsion),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Number of generators in the invariant-factor presentation.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut t = self.torsion.clone();
        t.extend(other.torsion.iter().cloned());
        HomologyGroup::with_cyclic(self.free_rank + other.free_rank, t)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut t = Vec::new();
        for d in &self.torsion {
            for _ in 0..other.free_rank {
                t.push(d.clone());
            }
        }
        for e in &other.torsion {
            for _ in 0..self.free_rank {
                t.push(e.clone());
            }
        }
        for d in &self.torsion {
            for e in &other.torsion {
                t.push(d.gcd(e));
            }
        }
        HomologyGroup::with_cyclic(self.free_rank * other.free_rank, t)
    }

    pub fn tor(&self, other: &Self) -> Self {
        let mut t = Vec::new();
        for d in &self.torsion {
            for e in &other.torsion {
                t.push(d.gcd(e));
            }
        }
        HomologyGroup::with_cyclic(0, t)
    }

    pub fn sum<'a>(groups: impl IntoIterator<Item = &'a HomologyGroup>) -> Self {
        groups
            .into_iter()
            .fold(HomologyGroup::trivial(), |acc, g| acc.direct_sum(g))
    }

    pub fn torsion_string(&self) -> String {
        let parts: Vec<String> = self.torsion.iter().map(|d| alloc::format!("{d}")).collect();
        parts.join(";")
    }
}

fn normalize_torsion(t: Vec<Int>) -> Vec<Int> {
    if t.len() <= 1 {
        return t;
    }
    if t.windows(2)
        .all(|w| w[1].checked_exact_div(&w[0]).is_some())
    {
        return t;
    }
    let n = t.len();
    let m = Matrix::from_fn(n, n, |i, j| if i == j { t[i].clone() } else { Int::ZERO });
    invariant_factors_dense(&Integers, &m)
        .into_iter()
        .filter(|d| !d.is_one())
        .collect()
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut first = true;
        if self.free_rank > 0 {
            if self.free_rank == 1 {
                write!(f, "R")?;
            } else {
                write!(f, "R^{}", self.free_rank)?;
            }
            first = false;
        }
        for d in &self.torsion {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "Z/{d}")?;
            first = false;
        }
        Ok(())
    }
}
