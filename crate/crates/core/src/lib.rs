//! Exact computation of supports, local cohomology and cohomology operators
//! for graded modules and complexes over polynomial rings and for modules
//! over truncated polynomial algebras k[x_1..x_c]/(x_i^{e_i}).

pub mod error;
pub mod field;
pub mod poly;
pub mod complexes;
pub mod fdalgebra;
pub mod cohops;
pub mod varieties;
pub mod localcoh;

pub use error::{Error, Result};
