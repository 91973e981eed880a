//! Truncated polynomial algebras k[x_1..x_c]/(x_i^{e_i}) and their
//! finite-dimensional modules.

mod algebra;
mod carlson;
mod decompose;
mod module;
mod resolution;
mod stable;

pub use algebra::{AElem, CIAlgebra};
pub use carlson::{carlson_from_resolution, carlson_module};
pub use decompose::{decompose_indecomposables, decompose_with, end_ring_is_local, DEFAULT_TRIALS};
pub use module::{hom_space, FDModule};
pub use resolution::{is_projective, syzygy_module, AMatrix, MinimalResolution};
pub use stable::stable_hom_dim;

#[cfg(test)]
mod tests;
