//! Exact homological algebra for modules over Morita rings `(A N; M B)` with
//! zero bimodule pairings.
//!
//! Everything here is `no_std` (with `alloc`). File formats, the command line
//! and thread pools live in the `morita-lab` crate.

#![no_std]
extern crate alloc;

pub mod algebra;
pub mod classes;
pub mod error;
pub mod field;
#[cfg(test)]
mod fixtures;
pub mod homology;
pub mod linalg;
pub mod morita;

pub use error::{Error, Result};
pub use field::{Field, Fp, Q};
pub use linalg::{quotient, Matrix, Rref, Subspace};
