use crate::error::Result;
use crate::field::{span_rank, DenseMatrix, Scalar};

use super::module::{hom_space, FDModule};
use super::resolution::MinimalResolution;

/// dim Hom_A(M, N) minus the dimension of the maps factoring through the
/// projective cover P(N) → N.
pub fn stable_hom_dim(m: &FDModule, n: &FDModule) -> Result<usize> {
    let hom = hom_space(m, n)?;
    if hom.is_empty() {
        return Ok(0);
    }
    let res = MinimalResolution::new(n, 0)?;
    let pi = res.augmentation();
    let p = FDModule::free(n.algebra(), res.betti[0]);
    let through: Vec<Vec<Scalar>> = hom_space(m, &p)?
        .iter()
        .map(|psi| flatten(&pi.mul(psi).expect("shapes")))
        .collect();
    let len = m.dim() * n.dim();
    Ok(hom.len() - span_rank(m.algebra().field(), len, &through))
}

fn flatten(m: &DenseMatrix) -> Vec<Scalar> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}
