use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{DenseMatrix, Field, Scalar};

use super::module::{hom_space, FDModule};

/// Random endomorphisms tried per module before it is declared indecomposable.
pub const DEFAULT_TRIALS: usize = 64;

/// Largest End_A(M) (as |k|^dim) that is enumerated exhaustively.
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

fn random_combination(basis: &[DenseMatrix], field: Field, rng: &mut ChaCha8Rng) -> DenseMatrix {
    let p = field.characteristic();
    let mut acc = DenseMatrix::zeros(field, basis[0].rows(), basis[0].cols());
    for b in basis {
        let c = field.from_i64(rng.gen_range(0..p) as i64);
        acc = acc.add(&b.scale(&c)).expect("same shape");
    }
    acc
}

/// Fitting splitting of M along ψ = φ − λ: M = ker ψ^N ⊕ im ψ^N.
type Split = (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>);

fn fitting_split(m: &FDModule, phi: &DenseMatrix, field: Field) -> Option<Split> {
    let n = m.dim();
    let lambdas: Vec<Scalar> = field
        .elements()
        .expect("finite field")
        .into_iter()
        .take(257)
        .collect();
    for l in lambdas {
        let psi = phi.sub(&DenseMatrix::identity(field, n).scale(&l)).expect("square");
        let pw = psi.pow(n as u32);
        let r = pw.rank();
        if r > 0 && r < n {
            return Some((pw.kernel_basis(), pw.column_space()));
        }
    }
    None
}

/// Split M into indecomposable summands by Fitting decompositions of random
/// endomorphisms. Deterministic for a fixed seed.
pub fn decompose_indecomposables(m: &FDModule, seed: u64) -> Result<Vec<FDModule>> {
    decompose_with(m, seed, DEFAULT_TRIALS)
}

pub fn decompose_with(m: &FDModule, seed: u64, trials: usize) -> Result<Vec<FDModule>> {
    let field = m.algebra().field();
    if !field.is_finite() {
        return Err(Error::Precondition("decomposition needs a finite field".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    split(m, &mut rng, trials, &mut out)?;
    Ok(out)
}

fn split(m: &FDModule, rng: &mut ChaCha8Rng, trials: usize, out: &mut Vec<FDModule>) -> Result<()> {
    if m.dim() <= 1 {
        if m.dim() == 1 {
            out.push(m.clone());
        }
        return Ok(());
    }
    let field = m.algebra().field();
    let end = hom_space(m, m)?;
    if end.len() > 1 {
        for _ in 0..trials {
            let phi = random_combination(&end, field, rng);
            if let Some((w, u)) = fitting_split(m, &phi, field) {
                let (a, _) = m.submodule(&w)?;
                let (b, _) = m.submodule(&u)?;
                split(&a, rng, trials, out)?;
                split(&b, rng, trials, out)?;
                return Ok(());
            }
        }
    }
    out.push(m.clone());
    Ok(())
}

fn nilpotent_or_unit(phi: &DenseMatrix) -> bool {
    let n = phi.rows();
    let r = phi.rank();
    r == n || phi.pow(n as u32).is_zero()
}

/// End_A(M) is local iff every endomorphism is nilpotent or invertible.
/// Exhaustive when End has at most 2^16 elements, otherwise checked on
/// `DEFAULT_TRIALS` seeded random elements.
pub fn end_ring_is_local(m: &FDModule, seed: u64) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    let field = m.algebra().field();
    let p = field.characteristic();
    if p == 0 {
        return Err(Error::Precondition("locality test needs a finite field".into()));
    }
    let end = hom_space(m, m)?;
    let size = (p as f64).powi(end.len() as i32);
    if size <= EXHAUSTIVE_LIMIT as f64 {
        let total = p.pow(end.len() as u32);
        for code in 0..total {
            let mut c = code;
            let mut acc = DenseMatrix::zeros(field, m.dim(), m.dim());
            for b in &end {
                let coef = field.from_i64((c % p) as i64);
                c /= p;
                acc = acc.add(&b.scale(&coef)).expect("same shape");
            }
            if !nilpotent_or_unit(&acc) {
                return Ok(false);
            }
        }
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..DEFAULT_TRIALS {
        if !nilpotent_or_unit(&random_combination(&end, field, &mut rng)) {
            return Ok(false);
        }
    }
    Ok(true)
}
