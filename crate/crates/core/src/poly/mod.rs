//! Polynomial rings, Gröbner bases for ideals and free-module submodules,
//! and the ideal operations built on them.

mod groebner;
mod ideal;
mod module;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use groebner::{buchberger, syzygies, vector_degree, GroebnerBasis, ModuleGb};
pub use ideal::{in_variable_prime, minimal_hitting_sets, monomial_poly, Ideal};
pub use module::{
    minimal_generators, module_annihilator, same_submodule, submodule_colon,
    submodule_intersection, PolyMatrix,
};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use ring::{Grading, Ring, RingSpec};
