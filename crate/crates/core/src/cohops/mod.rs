//! Eisenbud operators on minimal resolutions over truncated polynomial
//! algebras and the k[χ]-module structure they put on Ext.

mod ext;
mod operators;

pub use ext::{
    ann_to_bound, chi_commutativity_check, default_cap, ext_from_operators, ext_module, ext_to_trivial,
    hilbert_differences, ExtModule, ExtReport, CHI_WEIGHT,
};
pub use operators::{eisenbud_operators, reduce, LiftedResolution, OperatorFamily};

#[cfg(test)]
mod tests;
