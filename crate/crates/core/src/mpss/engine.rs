//! The spectral sequence of a length-filtered complex.
//!
//! Two interchangeable routes compute the same pages:
//!
//! * `Reduction` runs one filtration-respecting column reduction. Every page
//!   is then read off the pairing: `E^r_{p,n}` is spanned by the essential
//!   cells of filtration `p` and the paired cells whose gap is at least `r`,
//!   and `d^r` sends a negative cell of gap exactly `r` to its partner. Over
//!   the integers this needs unit pivots.
//! * `Generic` builds each entry as the subquotient
//!   `Z^r_{p,n} / (Z^{r−1}_{p−1,n} + d Z^{r−1}_{p+r−1,n+1})` inside `F_p C_n`
//!   with Smith normal form, so torsion appears where it must.
//!
//! Both routes expose generators, class coordinates and representatives in
//! the same shape, so maps and recurrences are written once.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::chains::FilteredComplex;
use crate::homalg::{
    kernel_of_columns, CellRole, CoefficientRing, FilteredReduction, HomologyGroup, Matrix,
    Subquotient,
};
use crate::Error;

type Vector<R> = Vec<<R as CoefficientRing>::Elem>;

enum Route<R: CoefficientRing> {
    Reduction(FilteredReduction<R>),
    Generic,
}

/// One entry of a page with everything needed to compute maps into it.
#[derive(Clone, Debug)]
pub struct EntryData<R: CoefficientRing> {
    pub group: HomologyGroup,
    /// Torsion order per generator (`None` for free generators).
    pub orders: Vec<Option<R::Elem>>,
    /// A chain (dense over the degree-`n` cells) per generator.
    pub representatives: Vec<Vector<R>>,
}

pub struct SpectralSequence<R: CoefficientRing> {
    ring: R,
    complex: FilteredComplex,
    route: Route<R>,
    diameter: u32,
}

impl<R: CoefficientRing> SpectralSequence<R> {
    /// Uses the reduction route when it applies and falls back to
    /// subquotients otherwise.
    pub fn new(ring: &R, complex: FilteredComplex) -> Self {
        let route = match FilteredReduction::new(ring, &complex.filtered_boundary()) {
            Ok(red) => Route::Reduction(red),
            Err(_) => Route::Generic,
        };
        let diameter = complex.metric().diameter();
        SpectralSequence {
            ring: ring.clone(),
            complex,
            route,
            diameter,
        }
    }

    /// Forces the subquotient route.
    pub fn generic(ring: &R, complex: FilteredComplex) -> Self {
        let diameter = complex.metric().diameter();
        SpectralSequence {
            ring: ring.clone(),
            complex,
            route: Route::Generic,
            diameter,
        }
    }

    pub fn uses_reduction(&self) -> bool {
        matches!(self.route, Route::Reduction(_))
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn complex(&self) -> &FilteredComplex {
        &self.complex
    }

    pub fn l_max(&self) -> u32 {
        self.complex.l_max()
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// The page that equals `E^∞` on exact entries.
    pub fn infinity_page(&self) -> u32 {
        self.l_max() + 1
    }

    /// Bidegrees `(p, n)` that can carry cells: `0 ≤ n ≤ p ≤ ℓ_max`.
    pub fn window(&self) -> Vec<(i64, usize)> {
        let l = self.l_max() as i64;
        (0..=l)
            .flat_map(|p| (0..=p as usize).map(move |n| (p, n)))
            .collect()
    }

    /// Whether degrees `n−1..=n+1` are untouched by the length truncation.
    pub fn degree_complete(&self, n: usize) -> bool {
        (n as u64 + 1) * self.diameter as u64 <= self.l_max() as u64
    }

    /// Whether `E^r_{p,n}` of the truncated complex equals the untruncated one.
    pub fn is_exact(&self, r: u32, p: i64, n: usize) -> bool {
        r == 0 || p + r as i64 - 1 <= self.l_max() as i64 || self.degree_complete(n)
    }

    fn in_window(&self, p: i64, n: usize) -> bool {
        p >= 0 && n < self.complex.degree_count() && (n as i64) <= p
    }

    pub fn entry(&self, r: u32, p: i64, n: usize) -> EntryData<R> {
        self.entry_with(&mut Workspace::default(), r, p, n, true)
    }

    pub fn group(&self, r: u32, p: i64, n: usize) -> HomologyGroup {
        self.entry_with(&mut Workspace::default(), r, p, n, false)
            .group
    }

    /// Matrix of `d^r: E^r_{p,n} → E^r_{p−r,n−1}` on the chosen generators.
    pub fn differential(&self, r: u32, p: i64, n: usize) -> Matrix<R::Elem> {
        self.differential_with(&mut Workspace::default(), r, p, n)
    }

    /// Class of a chain (dense over degree-`n` cells) in `E^r_{p,n}`.
    pub fn class_of(
        &self,
        r: u32,
        p: i64,
        n: usize,
        chain: &[R::Elem],
    ) -> Result<Vector<R>, Error> {
        self.class_with(&mut Workspace::default(), r, p, n, chain)
    }

    pub(crate) fn entry_with(
        &self,
        ws: &mut Workspace<R>,
        r: u32,
        p: i64,
        n: usize,
        reps: bool,
    ) -> EntryData<R> {
        if !self.in_window(p, n) {
            return EntryData {
                group: HomologyGroup::trivial(),
                orders: Vec::new(),
                representatives: Vec::new(),
            };
        }
        match &self.route {
            Route::Reduction(red) => {
                let cells = basis_cells(&self.complex, red, r, p, n);
                let width = self.complex.cells(n).len();
                let representatives = if reps {
                    let deg = red.degree(n).expect("degree in range");
                    cells
                        .iter()
                        .map(|&c| {
                            let mut v = vec![self.ring.zero(); width];
                            for (i, x) in &deg.basis[c] {
                                v[*i] = x.clone();
                            }
                            v
                        })
                        .collect()
                } else {
                    Vec::new()
                };
                EntryData {
                    group: HomologyGroup::free(cells.len()),
                    orders: vec![None; cells.len()],
                    representatives,
                }
            }
            Route::Generic => {
                let width = self.complex.cells(n).len();
                let sq = self.subquotient(ws, r, p, n);
                let representatives = if reps {
                    sq.lifts()
                        .iter()
                        .map(|l| {
                            let mut v = l.clone();
                            v.resize(width, self.ring.zero());
                            v
                        })
                        .collect()
                } else {
                    Vec::new()
                };
                EntryData {
                    group: sq.group().clone(),
                    orders: sq.slot_orders(),
                    representatives,
                }
            }
        }
    }

    pub(crate) fn differential_with(
        &self,
        ws: &mut Workspace<R>,
        r: u32,
        p: i64,
        n: usize,
    ) -> Matrix<R::Elem> {
        let ring = &self.ring;
        let src = self.entry_with(ws, r, p, n, false).group.generator_count();
        let tp = p - r as i64;
        if n == 0 || !self.in_window(tp, n - 1) {
            let rows = if n == 0 {
                0
            } else {
                self.entry_with(ws, r, tp, n - 1, false)
                    .group
                    .generator_count()
            };
            return Matrix::zeros(ring, rows, src);
        }
        match &self.route {
            Route::Reduction(red) => {
                let source = basis_cells(&self.complex, red, r, p, n);
                let target = basis_cells(&self.complex, red, r, tp, n - 1);
                let mut m = Matrix::zeros(ring, target.len(), source.len());
                let roles = &red.degree(n).expect("degree in range").roles;
                for (j, &c) in source.iter().enumerate() {
                    if let CellRole::Negative { low } = roles[c] {
                        if red.gap(n, c) == Some(r) {
                            let i = target
                                .binary_search(&low)
                                .expect("partner lies on the target basis");
                            m.set(i, j, ring.one());
                        }
                    }
                }
                m
            }
            Route::Generic => {
                let lifts = self.subquotient(ws, r, p, n).lifts().to_vec();
                let target = self.subquotient(ws, r, tp, n - 1);
                let amb = target.ambient();
                let d = self.complex.boundary(n);
                let cols: Vec<Vector<R>> = lifts
                    .iter()
                    .map(|l| {
                        let image = apply_sparse(ring, d, l);
                        assert!(
                            image[amb..].iter().all(|x| ring.is_zero(x)),
                            "d^r lowers filtration by r"
                        );
                        target
                            .coordinates(&image[..amb])
                            .expect("image is an r-cycle")
                    })
                    .collect();
                Matrix::from_fn(target.group().generator_count(), cols.len(), |i, j| {
                    cols[j][i].clone()
                })
            }
        }
    }

    pub(crate) fn class_with(
        &self,
        ws: &mut Workspace<R>,
        r: u32,
        p: i64,
        n: usize,
        chain: &[R::Elem],
    ) -> Result<Vector<R>, Error> {
        let ring = &self.ring;
        if n >= self.complex.degree_count() || chain.len() != self.complex.cells(n).len() {
            return Err(Error::DimensionMismatch("chain length".into()));
        }
        if !self.in_window(p, n) {
            return if chain.iter().all(|x| ring.is_zero(x)) {
                Ok(Vec::new())
            } else {
                Err(Error::NotInCycleSpace)
            };
        }
        match &self.route {
            Route::Reduction(red) => {
                let coeffs = red.decompose(n, chain)?;
                let roles = &red.degree(n).expect("degree in range").roles;
                for (c, x) in coeffs.iter().enumerate() {
                    if ring.is_zero(x) {
                        continue;
                    }
                    let f = red.filtration(n, c) as i64;
                    if f > p {
                        return Err(Error::NotInCycleSpace);
                    }
                    if let CellRole::Negative { low } = roles[c] {
                        if red.filtration(n - 1, low) as i64 > p - r as i64 {
                            return Err(Error::NotInCycleSpace);
                        }
                    }
                }
                Ok(basis_cells(&self.complex, red, r, p, n)
                    .into_iter()
                    .map(|c| coeffs[c].clone())
                    .collect())
            }
            Route::Generic => {
                let sq = self.subquotient(ws, r, p, n);
                let amb = sq.ambient();
                if chain[amb..].iter().any(|x| !ring.is_zero(x))
                    || !sq.cycles().contains(&chain[..amb])
                {
                    return Err(Error::NotInCycleSpace);
                }
                sq.coordinates(&chain[..amb])
            }
        }
    }

    /// `Z^r_{p,n}`: chains of `F_p C_n` whose boundary lies in `F_{p−r}`.
    fn cycles(&self, ws: &mut Workspace<R>, r: u32, p: i64, n: usize) -> Vec<Vector<R>> {
        if let Some(z) = ws.z.get(&(r, p, n)) {
            return z.clone();
        }
        let ring = &self.ring;
        let amb = self.complex.level_end(n, p);
        let (lo, hi) = if n == 0 {
            (0, 0)
        } else {
            (
                self.complex.level_end(n - 1, p - r as i64),
                self.complex.level_end(n - 1, p),
            )
        };
        let z = if r == 0 || lo == hi {
            unit_vectors(ring, amb, amb)
        } else {
            let d = self.complex.boundary(n);
            let cols = (0..amb)
                .map(|j| {
                    let mut c = vec![ring.zero(); hi - lo];
                    for &(i, v) in d.column(j) {
                        if (lo..hi).contains(&i) {
                            c[i - lo] = ring.from_i64(v);
                        }
                    }
                    c
                })
                .collect();
            kernel_of_columns(ring, hi - lo, cols)
        };
        ws.z.insert((r, p, n), z.clone());
        z
    }

    fn subquotient<'w>(
        &self,
        ws: &'w mut Workspace<R>,
        r: u32,
        p: i64,
        n: usize,
    ) -> &'w Subquotient<R> {
        if !ws.sq.contains_key(&(r, p, n)) {
            let sq = self.build_subquotient(ws, r, p, n);
            ws.sq.insert((r, p, n), sq);
        }
        &ws.sq[&(r, p, n)]
    }

    fn build_subquotient(&self, ws: &mut Workspace<R>, r: u32, p: i64, n: usize) -> Subquotient<R> {
        let ring = &self.ring;
        let amb = self.complex.level_end(n, p);
        let z = self.cycles(ws, r, p, n);
        let mut b = if r == 0 {
            unit_vectors(ring, self.complex.level_end(n, p - 1), amb)
        } else {
            let mut lower = self.cycles(ws, r - 1, p - 1, n);
            for v in &mut lower {
                v.resize(amb, ring.zero());
            }
            lower
        };
        if r > 0 && n + 1 < self.complex.degree_count() {
            let d = self.complex.boundary(n + 1);
            for v in self.cycles(ws, r - 1, p + r as i64 - 1, n + 1) {
                let image = apply_sparse(ring, d, &v);
                assert!(
                    image[amb..].iter().all(|x| ring.is_zero(x)),
                    "boundaries of deep cycles lie in F_p"
                );
                b.push(image[..amb].to_vec());
            }
        }
        Subquotient::new(ring, amb, z, b).expect("B^r lies in Z^r")
    }
}

/// Scratch caches for the subquotient route, shared across one page.
pub(crate) struct Workspace<R: CoefficientRing> {
    z: BTreeMap<(u32, i64, usize), Vec<Vector<R>>>,
    sq: BTreeMap<(u32, i64, usize), Subquotient<R>>,
}

impl<R: CoefficientRing> Default for Workspace<R> {
    fn default() -> Self {
        Workspace {
            z: BTreeMap::new(),
            sq: BTreeMap::new(),
        }
    }
}

/// Cells spanning `E^r_{p,n}` on the reduction route, ascending.
fn basis_cells<R: CoefficientRing>(
    c: &FilteredComplex,
    red: &FilteredReduction<R>,
    r: u32,
    p: i64,
    n: usize,
) -> Vec<usize> {
    if p < 0 || p > c.l_max() as i64 || n >= red.top_degree() {
        return Vec::new();
    }
    c.level_range(n, p as u32)
        .filter(|&cell| red.gap(n, cell).is_none_or(|g| g >= r))
        .collect()
}

fn unit_vectors<R: CoefficientRing>(ring: &R, count: usize, len: usize) -> Vec<Vector<R>> {
    (0..count)
        .map(|i| {
            let mut v = vec![ring.zero(); len];
            v[i] = ring.one();
            v
        })
        .collect()
}

/// `M v` for a prefix `v` of the columns of an integer matrix.
pub(crate) fn apply_sparse<R: CoefficientRing>(
    ring: &R,
    d: &crate::homalg::SparseMatrix<i64>,
    v: &[R::Elem],
) -> Vector<R> {
    let mut out = vec![ring.zero(); d.rows()];
    for (j, x) in v.iter().enumerate() {
        if ring.is_zero(x) {
            continue;
        }
        for &(i, s) in d.column(j) {
            out[i] = ring.add_mul(&out[i], &ring.from_i64(s), x);
        }
    }
    out
}
