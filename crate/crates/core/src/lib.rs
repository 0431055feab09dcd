//! Symmetric squares of finite simplicial sets and bounds for symmetrized
//! topological complexity.
//!
//! Given a finite ordered simplicial complex `X`, the crate builds the
//! simplicial sets `X × X` and `SP²(X) = (X × X)/swap` together with the
//! image `dX` of the diagonal, computes mod-2 cohomology rings with the
//! Alexander–Whitney cup product, and turns cup-lengths into lower bounds
//! for `TC` and `TC^Σ`. The dimension–connectivity formula supplies the
//! upper bound.
//!
//! ```
//! use symtc::{bounds_report, Generator, SimplicialSet};
//!
//! let circle = SimplicialSet::from_complex(&Generator::Sphere(1).generate());
//! let report = bounds_report(&circle, "sphere:1", 0).unwrap();
//! assert_eq!(report.interval, [2, 2]);
//! ```

pub mod bounds;
pub mod cohomology;
pub mod complex;
pub mod error;
pub mod f2;
pub mod sset;
pub mod sym_square;

pub use bounds::{
    bounds_report, connectivity_check, cup_length, lower_bound_sigma_kernel,
    lower_bound_sigma_relative, lower_bound_tc, upper_bound_sigma, Analysis, BoundKind,
    BoundsReport, Connectivity, GradedSubspace,
};
pub use cohomology::{Class, CochainComplex, CohomologyRing, InducedMap};
pub use complex::{Complex, Generator};
pub use error::{Error, Result};
pub use f2::{BitVec, F2Matrix, Subspace};
pub use sset::{Degeneracy, SSetMap, Simplex, SimplicialSet, Subcomplex};
pub use sym_square::{product_with_swap, symmetric_square, EquivariantPair, ProductSquare};
