use crate::error::{Error, Result};
use crate::field::{DenseMatrix, Scalar};

use super::algebra::CIAlgebra;
use super::module::FDModule;
use super::resolution::MinimalResolution;

/// Carlson module L_ζ ⊂ Ω^d k for a class ζ ∈ Ext^d(k, k), given by its
/// values on the generators of F_d in the minimal resolution of k.
///
/// L_ζ is the image under d_d of the kernel of ζ: F_d → k, a submodule of
/// F_{d−1}; it has codimension one in Ω^d k.
pub fn carlson_module(alg: &CIAlgebra, degree: usize, class: &[Scalar]) -> Result<FDModule> {
    let k = FDModule::trivial(alg);
    let res = MinimalResolution::new(&k, degree)?;
    carlson_from_resolution(&res, degree, class)
}

pub fn carlson_from_resolution(res: &MinimalResolution, degree: usize, class: &[Scalar]) -> Result<FDModule> {
    let alg = res.algebra();
    let f = alg.field();
    if res.module.dim() != 1 || res.module.actions().iter().any(|x| !x.is_zero()) {
        return Err(Error::Precondition("Carlson modules are built from the resolution of k".into()));
    }
    if degree > res.len() {
        return Err(Error::Precondition("resolution too short for this degree".into()));
    }
    let b = res.betti[degree];
    if class.len() != b {
        return Err(Error::DimensionMismatch(format!(
            "class has {} entries, Ext^{degree}(k,k) has dimension {b}",
            class.len()
        )));
    }
    // The minimal resolution of k has zero coboundaries, so ζ is zero as a
    // class exactly when its cocycle vector is zero.
    if class.iter().all(Scalar::is_zero) {
        return Err(Error::ZeroClass);
    }
    if degree == 0 {
        return Ok(FDModule::zero(alg));
    }
    let n = alg.dim();
    // ζ on F_d: e_j·m ↦ ζ_j when m = 1, else 0
    let mut zeta = DenseMatrix::zeros(f, 1, b * n);
    for (j, c) in class.iter().enumerate() {
        zeta[(0, j * n)] = c.clone();
    }
    let ker = zeta.kernel_basis();
    let d = res.differential(degree).linear(alg);
    let images: Vec<Vec<Scalar>> = ker.iter().map(|v| d.mul_vec(v)).collect::<Result<_>>()?;
    let free = FDModule::free(alg, res.betti[degree - 1]);
    let (l, _) = free.submodule(&images)?;
    let omega_dim = d.rank();
    if l.dim() + 1 != omega_dim {
        return Err(Error::Invariant(format!(
            "dim L_ζ = {} but dim Ω^{degree} k = {omega_dim}",
            l.dim()
        )));
    }
    Ok(l)
}
