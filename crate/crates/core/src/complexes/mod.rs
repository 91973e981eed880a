//! Bounded cochain complexes of graded free modules and of vector spaces.

mod free;
mod les;
mod vector;

pub use free::{
    cone, free_resolution, koszul_complex, piece_basis, piece_matrix, resolve_quotient, ChainMap,
    CohomologyModule, FreeComplex, KoszulTower,
};
pub use les::koszul_les_check;
pub use vector::{induced_rank, VecComplex};

#[cfg(test)]
mod tests;
