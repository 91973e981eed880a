//! Supports as closed sets V(I): annihilator supports, rank varieties,
//! detection by Koszul objects and by Carlson modules, connectivity and
//! the KRS grouping of summands.

mod detection;
mod krs;
mod rank;
mod support;

pub use detection::{
    benson_support_membership, default_zetas, degree_one_class, koszul_detection_membership, BensonOutcome,
    CohomologyClass,
};
pub use krs::{krs_partition, KrsGroup, Summand};
pub use rank::{alpha_ring, free_at_point, generic_operator, minors, operator_at, rank_variety_ideal, span_basis, RankIdeal};
pub use support::{
    connected_components, connectivity, identify, linear_radical, support_of_module, support_of_quotient,
    variety_equal_up_to_radical, ClosedSet, Connectivity, PrimeSpec, Provenance, SupportReport,
};
