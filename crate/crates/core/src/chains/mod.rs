//! Chain complexes built from trails: the length-filtered reachability
//! complex (absolute and relative), magnitude chains with their endpoint
//! decomposition, and the ordered-partition complexes that model the
//! magnitude chains of directed cycles.

mod complex;
mod magnitude;
mod op;
mod trail;

pub use complex::{ComplexBundle, ComplexMode, FilteredComplex, RelativeOptions};
pub use magnitude::{
    endpoint_blocks, endpoint_decomposition, magnitude_complex, magnitude_homology,
    magnitude_homology_of, magnitude_slice, MagnitudeComplex, MagnitudeTable,
};
pub use op::{op_complex, op_homology, OpComplex};
pub use trail::{enumerate_trails, rc_boundary, BoundaryMode, GradedBasis, Trail};
