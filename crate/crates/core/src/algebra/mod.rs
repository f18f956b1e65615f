//! Algebras, modules, bimodules.

#[allow(clippy::module_inception)]
pub mod algebra;
pub mod bimodule;
pub mod module;

pub use algebra::{Algebra, BasisElem, BasisKind, Generator, Quiver};
pub use bimodule::{hom_module, hom_module_map, tensor, tensor_map, Bimodule, HomModule, Tensor};
pub use module::{HomSpace, IsoOutcome, ModMap, Module};
