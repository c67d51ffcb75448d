//! Magnitude-path spectral sequences of finite directed graphs.
//!
//! The crate computes every page of the spectral sequence of the
//! length-filtered reachability complex of a digraph: magnitude homology on
//! the first page, bigraded path homology on the second, and all later
//! pages with their differentials. Coefficients are ℤ, ℚ or 𝔽_p with exact
//! arithmetic throughout.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod chains;
pub mod digraph;
mod error;
pub mod homalg;
pub mod mpss;
pub mod products;

pub use error::Error;
