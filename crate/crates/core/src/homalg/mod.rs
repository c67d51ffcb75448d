//! Exact linear algebra over ℤ, ℚ and 𝔽_p: Smith normal form, homology of
//! pairs of differentials, subquotients with induced maps, and filtered
//! column reduction.

mod group;
mod int;
mod lattice;
mod matrix;
mod rational;
mod reduction;
mod ring;
mod snf;
mod sparse;

pub use group::HomologyGroup;
pub use int::Int;
pub use lattice::{
    induced_subquotient_map, is_isomorphism, kernel, kernel_of_columns, presented_homology,
    Echelon, InducedMap, Subquotient,
};
pub use matrix::{Matrix, SparseMatrix};
pub use rational::Rat;
pub use reduction::{CellRole, FilteredBoundary, FilteredReduction, ReducedDegree};
pub use ring::{CoefficientRing, Fp, Integers, PrimeField, Rationals, Ring};
pub use snf::{invariant_factors_dense, smith_normal_form, SmithForm};
pub use sparse::{homology_of_pair, homology_of_sparse_pair, sparse_invariants};
