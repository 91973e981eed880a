use crate::error::{Error, Result};
use crate::field::{DenseMatrix, Scalar};
use crate::poly::{PolyMatrix, Ring};

use super::algebra::{AElem, CIAlgebra};
use super::module::FDModule;

/// Matrix over A: `entries[i][j]` is the (i, j) entry, columns are images of
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<AElem>>,
}

impl AMatrix {
    /// k-linear matrix of the map A^cols → A^rows.
    pub fn linear(&self, alg: &CIAlgebra) -> DenseMatrix {
        let n = alg.dim();
        let f = alg.field();
        let mut out = DenseMatrix::zeros(f, self.rows * n, self.cols * n);
        for j in 0..self.cols {
            for m in 0..n {
                for i in 0..self.rows {
                    for (b, c) in self.entries[i][j].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        if let Some(k) = alg.mul_index(b, m) {
                            let r = i * n + k;
                            out[(r, j * n + m)] = &out[(r, j * n + m)] + c;
                        }
                    }
                }
            }
        }
        out
    }

    /// Entries as canonical polynomials over k[x_1..x_c].
    pub fn to_poly(&self, alg: &CIAlgebra, ring: &Ring) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(ring, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, alg.to_poly(ring, &self.entries[i][j]));
            }
        }
        m
    }
}

/// Minimal free resolution … → F_1 → F_0 → M with F_n = A^{b_n}.
#[derive(Clone, Debug)]
pub struct MinimalResolution {
    pub module: FDModule,
    /// Images in M of the generators of F_0.
    pub generators: Vec<Vec<Scalar>>,
    pub betti: Vec<usize>,
    /// `diffs[n − 1]` is d_n: F_n → F_{n−1}, a b_{n−1} × b_n matrix over A.
    pub diffs: Vec<AMatrix>,
}

/// Vectors among `candidates` completing a basis of span(`base`) ∪ candidates,
/// preferring earlier candidates.
fn complement(len: usize, base: &[Vec<Scalar>], candidates: &[Vec<Scalar>], field: crate::field::Field) -> Vec<Vec<Scalar>> {
    if candidates.is_empty() {
        return vec![];
    }
    let mut cols = base.to_vec();
    cols.extend(candidates.iter().cloned());
    let r = DenseMatrix::from_columns(field, len, &cols).rref();
    r.pivots
        .iter()
        .filter(|&&p| p >= base.len())
        .map(|&p| cols[p].clone())
        .collect()
}

/// Minimal generators of a submodule K of a module with the given action
/// matrices, chosen as kernel-basis vectors spanning K modulo rad K.
fn minimal_submodule_generators(
    actions: &[DenseMatrix],
    ambient: usize,
    basis: &[Vec<Scalar>],
    field: crate::field::Field,
) -> Result<Vec<Vec<Scalar>>> {
    let mut rad = Vec::new();
    for x in actions {
        for v in basis {
            rad.push(x.mul_vec(v)?);
        }
    }
    Ok(complement(ambient, &rad, basis, field))
}

impl MinimalResolution {
    /// Resolve `m` up to F_len (so `len` differentials).
    pub fn new(m: &FDModule, len: usize) -> Result<MinimalResolution> {
        let alg = m.algebra().clone();
        let f = alg.field();
        let n = alg.dim();
        let std: Vec<Vec<Scalar>> = (0..m.dim())
            .map(|i| {
                let mut e = vec![f.zero(); m.dim()];
                e[i] = f.one();
                e
            })
            .collect();
        let generators = minimal_submodule_generators(m.actions(), m.dim(), &std, f)?;
        let b0 = generators.len();
        // ε: F_0 → M, column (j, mono) = x^mono · g_j
        let mut eps = DenseMatrix::zeros(f, m.dim(), b0 * n);
        for (j, g) in generators.iter().enumerate() {
            for mono in 0..n {
                let v = m.monomial_action(&alg.monomial(mono)).mul_vec(g)?;
                for (i, s) in v.into_iter().enumerate() {
                    eps[(i, j * n + mono)] = s;
                }
            }
        }
        let mut betti = vec![b0];
        let mut diffs = Vec::new();
        let mut current = eps;
        for _ in 0..len {
            let b = *betti.last().expect("nonempty");
            let free = FDModule::free(&alg, b);
            let ker = if current.rows() == 0 {
                (0..b * n)
                    .map(|i| {
                        let mut e = vec![f.zero(); b * n];
                        e[i] = f.one();
                        e
                    })
                    .collect()
            } else {
                current.kernel_basis()
            };
            let gens = minimal_submodule_generators(free.actions(), b * n, &ker, f)?;
            let entries: Vec<Vec<AElem>> = (0..b)
                .map(|i| gens.iter().map(|g| g[i * n..(i + 1) * n].to_vec()).collect())
                .collect();
            for row in &entries {
                for e in row {
                    if !e[0].is_zero() {
                        return Err(Error::Invariant("non-minimal differential entry".into()));
                    }
                }
            }
            let d = AMatrix {
                rows: b,
                cols: gens.len(),
                entries,
            };
            current = d.linear(&alg);
            betti.push(gens.len());
            diffs.push(d);
        }
        Ok(MinimalResolution {
            module: m.clone(),
            generators,
            betti,
            diffs,
        })
    }

    pub fn algebra(&self) -> &CIAlgebra {
        self.module.algebra()
    }

    pub fn len(&self) -> usize {
        self.diffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diffs.is_empty()
    }

    /// d_n for 1 ≤ n ≤ len.
    pub fn differential(&self, n: usize) -> &AMatrix {
        &self.diffs[n - 1]
    }

    /// ε: F_0 → M as a k-linear matrix.
    pub fn augmentation(&self) -> DenseMatrix {
        let alg = self.algebra();
        let n = alg.dim();
        let m = &self.module;
        let mut eps = DenseMatrix::zeros(alg.field(), m.dim(), self.betti[0] * n);
        for (j, g) in self.generators.iter().enumerate() {
            for mono in 0..n {
                let v = m
                    .monomial_action(&alg.monomial(mono))
                    .mul_vec(g)
                    .expect("shape");
                for (i, s) in v.into_iter().enumerate() {
                    eps[(i, j * n + mono)] = s;
                }
            }
        }
        eps
    }

    /// Rank bookkeeping: dim ker(d_n) = rank(d_{n+1}) at every stage, and
    /// ε is onto with kernel the image of d_1.
    pub fn is_exact(&self) -> bool {
        let alg = self.algebra();
        let eps = self.augmentation();
        if eps.rank() != self.module.dim() {
            return false;
        }
        let mut prev = eps;
        for d in &self.diffs {
            let lin = d.linear(alg);
            let kernel_dim = prev.cols() - prev.rank();
            if lin.rank() != kernel_dim || !prev.mul(&lin).map(|m| m.is_zero()).unwrap_or(false) {
                return false;
            }
            prev = lin;
        }
        true
    }
}

/// Ω^n M: the image of d_n inside F_{n−1} (Ω^0 M = M).
pub fn syzygy_module(m: &FDModule, n: usize) -> Result<FDModule> {
    if n == 0 {
        return Ok(m.clone());
    }
    let res = MinimalResolution::new(m, n)?;
    let alg = m.algebra();
    let d = res.differential(n).linear(alg);
    let free = FDModule::free(alg, res.betti[n - 1]);
    Ok(free.submodule(&d.columns())?.0)
}

/// True iff M is free (equivalently Ω¹M = 0).
pub fn is_projective(m: &FDModule) -> Result<bool> {
    let res = MinimalResolution::new(m, 1)?;
    Ok(res.betti[1] == 0)
}
