//! Local cohomology of multigraded monomial modules by Čech complexes,
//! computed one multidegree at a time, with the localization triangle and
//! fibre-wise supports.

mod cech;
mod module;
mod torsion;
mod triangle;

pub use cech::{
    local_cohomology, local_cohomology_complex, localization_stable, localized_degree, DegreeBox, LocalCohReport,
    DEFAULT_BOX_CAP,
};
pub use module::{Cell, MgComplex, Multidegree, MultigradedModule};
pub use torsion::{torsion_submodule, vector_multidegree, TorsionSubmodule};
pub use triangle::{
    koszul_power_complex, koszul_power_support, localization_triangle, mayer_vietoris_check, support_via_fibers,
    FiberSupport, MvReport, MvRow, PrimeRow, TriangleReport,
};
