//! Exact linear algebra over the two-element field.
//!
//! Everything is dense and bit-packed; elimination always picks the leftmost
//! pivot column and the topmost available row, so bases are reproducible.

mod bitvec;
mod matrix;
mod subspace;

pub use bitvec::BitVec;
pub use matrix::F2Matrix;
pub use subspace::{quotient_basis, Echelon, Subspace};
